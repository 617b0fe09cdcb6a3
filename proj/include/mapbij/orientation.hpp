#ifndef GUARD_MAPBIJ_ORIENTATION_HPP
#define GUARD_MAPBIJ_ORIENTATION_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "edge_set.hpp"
#include "map.hpp"
#include "tree.hpp"

namespace mapbij
{

// One bit per edge: set when the tail is the edge's second half-edge
// (the one with the larger token).
class Orientation
{
public:
  Orientation() = default;
  Orientation(int num_edges, EdgeSet reversed)
    : _num_edges(num_edges), _reversed(reversed)
  {}

  static Orientation from_tails(CombinatorialMap const &map,
                                std::vector<HalfEdge> const &tails);

  int num_edges() const { return _num_edges; }
  EdgeSet reversed() const { return _reversed; }

  HalfEdge tail(CombinatorialMap const &map, int e) const
  { return map.edge_half_edges(e)[_reversed.contains(e) ? 1 : 0]; }
  HalfEdge head(CombinatorialMap const &map, int e) const
  { return map.edge_half_edges(e)[_reversed.contains(e) ? 0 : 1]; }
  int origin(CombinatorialMap const &map, int e) const
  { return map.vertex_of(tail(map, e)); }
  int end(CombinatorialMap const &map, int e) const
  { return map.vertex_of(head(map, e)); }
  bool is_tail(CombinatorialMap const &map, HalfEdge h) const
  { return tail(map, map.edge_of(h)) == h; }

  Orientation flipped(EdgeSet edges) const
  { return Orientation(_num_edges, _reversed ^ edges); }
  Orientation reversed_all() const
  { return flipped(EdgeSet::full(_num_edges)); }

  void set_tail(CombinatorialMap const &map, HalfEdge h);

  auto operator<=>(Orientation const &) const = default;

private:
  int _num_edges = 0;
  EdgeSet _reversed;
};

using OutdegreeSequence = std::vector<int>;

OutdegreeSequence outdegree_sequence(CombinatorialMap const &map, Orientation const &o);

// Sum of delta over U minus the number of edges inside U.
int excess(CombinatorialMap const &map, OutdegreeSequence const &delta, VertexSet u);

struct SequenceClass
{
  bool outdegree = false;
  bool v0_connected = false;
  bool strongly_connected = false;
};

SequenceClass classify_sequence(CombinatorialMap const &map, OutdegreeSequence const &delta);

bool is_outdegree_sequence(CombinatorialMap const &map, OutdegreeSequence const &delta);
bool is_v0_connected_sequence(CombinatorialMap const &map, OutdegreeSequence const &delta);
bool is_strongly_connected_sequence(CombinatorialMap const &map, OutdegreeSequence const &delta);

VertexSet reachable_set(CombinatorialMap const &map, Orientation const &o, int from);
VertexSet coreachable_set(CombinatorialMap const &map, Orientation const &o, int to);

bool reachable(CombinatorialMap const &map, Orientation const &o, int u, int v);
bool reachable_by_excess(CombinatorialMap const &map, Orientation const &o, int u, int v);

struct OrientationClass
{
  bool acyclic = false;
  bool strongly_connected = false;
  bool v0_connected = false;
};

OrientationClass classify(CombinatorialMap const &map, Orientation const &o);

bool is_acyclic(CombinatorialMap const &map, Orientation const &o);

struct DirectedCycle
{
  EdgeSet edges;

  auto operator<=>(DirectedCycle const &) const = default;
};

// Arcs of the cut all run from source_side to sink_side.
struct DirectedCocycle
{
  EdgeSet edges;
  VertexSet source_side;
  VertexSet sink_side;

  auto operator<=>(DirectedCocycle const &) const = default;
};

std::vector<DirectedCycle> enumerate_directed_cycles(CombinatorialMap const &map,
                                                     Orientation const &o);

std::vector<DirectedCocycle> enumerate_directed_cocycles(CombinatorialMap const &map,
                                                         Orientation const &o);

bool is_directed_cycle(CombinatorialMap const &map, Orientation const &o, EdgeSet edges);
bool is_directed_cocycle(CombinatorialMap const &map, Orientation const &o, EdgeSet edges);

Orientation flip(CombinatorialMap const &map, Orientation const &o, EdgeSet edges);

// A directed cycle of o through e made of edges where o and other disagree.
DirectedCycle disagreement_cycle(CombinatorialMap const &map, Orientation const &o,
                                 Orientation const &other, int e);

// Whether the least half-edge of the set is a tail (resp. head) of o.
bool is_tail_min(CombinatorialMap const &map, Orientation const &o,
                 GTOrder const &order, EdgeSet edges);
bool is_head_min(CombinatorialMap const &map, Orientation const &o,
                 GTOrder const &order, EdgeSet edges);

} // namespace mapbij

#endif // GUARD_MAPBIJ_ORIENTATION_HPP
