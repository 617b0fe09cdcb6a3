#ifndef GUARD_MAPBIJ_TREE_HPP
#define GUARD_MAPBIJ_TREE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "edge_set.hpp"
#include "map.hpp"

namespace mapbij
{

using Permutation = std::vector<HalfEdge>;

// sigma on external half-edges, sigma*alpha on internal ones.
Permutation motion_function(CombinatorialMap const &map, EdgeSet tree);

// Linear order on half-edges given by the tour of a tree from the root.
class GTOrder
{
public:
  GTOrder(CombinatorialMap const &map, std::vector<HalfEdge> tour);

  std::vector<HalfEdge> const &tour() const { return _tour; }
  int rank(HalfEdge h) const { return _rank[h]; }
  int edge_rank(int e) const { return _edge_rank[e]; }
  bool less(HalfEdge a, HalfEdge b) const { return _rank[a] < _rank[b]; }

  // The two half-edges of e, smaller first.
  std::array<HalfEdge, 2> ordered(int e) const { return _ordered[e]; }

  // Least edge of a non-empty set, or -1.
  int min_edge(EdgeSet edges) const;
  HalfEdge min_half_edge(EdgeSet edges) const;

  std::vector<int> edges_in_order() const;

private:
  std::vector<HalfEdge> _tour;
  std::vector<int> _rank;
  std::vector<int> _edge_rank;
  std::vector<std::array<HalfEdge, 2>> _ordered;
};

GTOrder gt_order(CombinatorialMap const &map, EdgeSet tree);

// A spanning tree hung from the root vertex.
struct RootedTree
{
  std::vector<int> parent;
  std::vector<int> parent_edge;
  std::vector<int> depth;
  std::vector<int> enter;
  std::vector<int> leave;

  bool is_ancestor(int a, int b) const
  { return enter[a] <= enter[b] && leave[b] <= leave[a]; }
};

RootedTree rooted_tree(CombinatorialMap const &map, EdgeSet tree);

EdgeSet fundamental_cycle(CombinatorialMap const &map, EdgeSet tree, int e);

EdgeSet fundamental_cocycle(CombinatorialMap const &map, EdgeSet tree, int e);

struct Activities
{
  EdgeSet internal_active;
  EdgeSet external_active;

  int internal_count() const { return internal_active.size(); }
  int external_count() const { return external_active.size(); }
  EdgeSet active() const { return internal_active | external_active; }
};

Activities activities(CombinatorialMap const &map, EdgeSet tree);
Activities activities(CombinatorialMap const &map, EdgeSet tree, GTOrder const &order);

bool external_active_iff_ancestor(CombinatorialMap const &map, EdgeSet tree, int e);

// Vertices sorted by the rank of the half-edge leading to their father,
// the root vertex last.
std::vector<int> postfix_order(CombinatorialMap const &map, EdgeSet tree);

EdgeSet delta(CombinatorialMap const &map, Subgraph subgraph);

struct TreeInterval
{
  EdgeSet tree;
  EdgeSet lower;
  EdgeSet upper;
  Activities activity;

  std::uint64_t size() const
  { return std::uint64_t{1} << activity.active().size(); }

  bool contains(Subgraph s) const
  { return lower.subset_of(s) && s.subset_of(upper); }

  std::vector<Subgraph> members() const;
};

TreeInterval tree_interval(CombinatorialMap const &map, EdgeSet tree);

} // namespace mapbij

#endif // GUARD_MAPBIJ_TREE_HPP
