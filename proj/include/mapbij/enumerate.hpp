#ifndef GUARD_MAPBIJ_ENUMERATE_HPP
#define GUARD_MAPBIJ_ENUMERATE_HPP

#include <vector>

#include "edge_set.hpp"
#include "map.hpp"
#include "orientation.hpp"

namespace mapbij
{

constexpr int default_edge_cap = 16;

// All objects in increasing bit order over edge indices.
std::vector<Subgraph> enumerate_subgraphs(CombinatorialMap const &map,
                                          int max_edges = default_edge_cap);

std::vector<Orientation> enumerate_orientations(CombinatorialMap const &map,
                                                int max_edges = default_edge_cap);

std::vector<EdgeSet> enumerate_spanning_trees(CombinatorialMap const &map,
                                              int max_edges = default_edge_cap);

} // namespace mapbij

#endif // GUARD_MAPBIJ_ENUMERATE_HPP
