#ifndef GUARD_MAPBIJ_SANDPILE_HPP
#define GUARD_MAPBIJ_SANDPILE_HPP

#include <vector>

#include "edge_set.hpp"
#include "map.hpp"
#include "orientation.hpp"

namespace mapbij
{

// Grains per vertex; the root vertex is the map's root vertex.
using SandpileConfig = std::vector<int>;

// Edges joining u and v (u != v).
int multiplicity(CombinatorialMap const &map, int u, int v);

// Non-loop edges at v.
int proper_degree(CombinatorialMap const &map, int v);

bool is_stable(CombinatorialMap const &map, SandpileConfig const &config);

SandpileConfig topple(CombinatorialMap const &map, SandpileConfig const &config, int v,
                      bool allow_stable = false);

struct RecurrenceResult
{
  bool recurrent = false;
  std::vector<int> firing_order;
};

RecurrenceResult check_recurrence(CombinatorialMap const &map, SandpileConfig const &config);

bool is_recurrent(CombinatorialMap const &map, SandpileConfig const &config);

int level(CombinatorialMap const &map, SandpileConfig const &config);

SandpileConfig lambda(CombinatorialMap const &map, EdgeSet tree);

EdgeSet upsilon(CombinatorialMap const &map, SandpileConfig const &config);

OutdegreeSequence sandpile_to_outdegree(CombinatorialMap const &map,
                                        SandpileConfig const &config);

// Stable configurations with a saturated root that pass the recurrence test.
std::vector<SandpileConfig> enumerate_recurrent(CombinatorialMap const &map);

} // namespace mapbij

#endif // GUARD_MAPBIJ_SANDPILE_HPP
