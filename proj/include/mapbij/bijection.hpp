#ifndef GUARD_MAPBIJ_BIJECTION_HPP
#define GUARD_MAPBIJ_BIJECTION_HPP

#include <array>
#include <optional>
#include <vector>

#include "edge_set.hpp"
#include "map.hpp"
#include "orientation.hpp"

namespace mapbij
{

Orientation phi_tree(CombinatorialMap const &map, EdgeSet tree);

EdgeSet construct_tree(CombinatorialMap const &map, Orientation const &o);

Orientation phi(CombinatorialMap const &map, Subgraph subgraph);

enum class PsiBranch
{
  TailCycle,       // (a)
  TailCocycle,     // (b)
  TailOther,       // (c)
  HeadCocycle,     // (a')
  HeadCycle,       // (b')
  HeadOther        // (c')
};

struct PsiTrace
{
  Subgraph subgraph;
  EdgeSet tree;
  std::vector<HalfEdge> visits;
  std::vector<PsiBranch> branches;  // per edge, in visit order
  std::array<int, 6> branch_counts{};
  // The directed cycle that made branch (a) fire first, if it ever did.
  std::optional<DirectedCycle> first_tail_cycle;

  int count(PsiBranch b) const { return branch_counts[static_cast<int>(b)]; }
};

PsiTrace psi_trace(CombinatorialMap const &map, Orientation const &o);

Subgraph psi(CombinatorialMap const &map, Orientation const &o);

bool is_minimal(CombinatorialMap const &map, Orientation const &o);

// A tail-min directed cycle found while running psi, if o is not minimal.
std::optional<DirectedCycle> minimality_witness(CombinatorialMap const &map,
                                                Orientation const &o);

OutdegreeSequence gamma(CombinatorialMap const &map, Subgraph forest);

// Some orientation with the given outdegrees.
Orientation orientation_with_outdegrees(CombinatorialMap const &map,
                                        OutdegreeSequence const &delta);

Orientation minimal_orientation(CombinatorialMap const &map, OutdegreeSequence const &delta);

Subgraph gamma_inverse(CombinatorialMap const &map, OutdegreeSequence const &delta);

struct RootComponentPartition
{
  std::vector<VertexSet> blocks;
  std::vector<int> linking_edges;
};

RootComponentPartition root_components(CombinatorialMap const &map, Orientation const &o);

RootComponentPartition root_strong_components(CombinatorialMap const &map,
                                              Orientation const &o);

// Least edges of directed cocycles, in the order of the tree delta(psi(o)).
EdgeSet head_min_cocycle_minima(CombinatorialMap const &map, Orientation const &o);
EdgeSet cocycle_minima(CombinatorialMap const &map, Orientation const &o);

bool is_bipolar(CombinatorialMap const &map, Orientation const &o);

} // namespace mapbij

#endif // GUARD_MAPBIJ_BIJECTION_HPP
