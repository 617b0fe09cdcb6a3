#ifndef GUARD_MAPBIJ_GRAPH_UTIL_HPP
#define GUARD_MAPBIJ_GRAPH_UTIL_HPP

#include <vector>

#include "edge_set.hpp"
#include "map.hpp"

namespace mapbij
{

class DisjointSets
{
public:
  explicit DisjointSets(int n);

  int find(int x);
  bool unite(int x, int y);
  bool same(int x, int y) { return find(x) == find(y); }
  int count() const { return _count; }

private:
  std::vector<int> _parent;
  int _count;
};

DisjointSets components_of(CombinatorialMap const &map, EdgeSet edges);

int component_count(CombinatorialMap const &map, EdgeSet edges);

bool is_connected_subgraph(CombinatorialMap const &map, EdgeSet edges);

bool is_forest(CombinatorialMap const &map, EdgeSet edges);

bool is_spanning_tree(CombinatorialMap const &map, EdgeSet edges);

void require_spanning_tree(CombinatorialMap const &map, EdgeSet tree);

// True when u and v are joined by a path using only `edges`.
bool joined_by(CombinatorialMap const &map, EdgeSet edges, int u, int v);

// Edges with both ends in `vertices` (a loop counts once).
int inner_edge_count(CombinatorialMap const &map, VertexSet vertices);

} // namespace mapbij

#endif // GUARD_MAPBIJ_GRAPH_UTIL_HPP
