#ifndef GUARD_MAPBIJ_LITERALS_HPP
#define GUARD_MAPBIJ_LITERALS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "edge_set.hpp"
#include "map.hpp"
#include "orientation.hpp"

namespace mapbij
{

// "a,b'" names edges by either half-edge; "-" or "" is the empty set.
EdgeSet parse_edge_list(CombinatorialMap const &map, std::string_view text);

// "a,b,c'" lists the tail of every edge exactly once.
Orientation parse_orientation(CombinatorialMap const &map, std::string_view text);

// "a=2,a'=1,b'=0": one value per vertex, named by any of its half-edges.
std::vector<int> parse_vertex_values(CombinatorialMap const &map, std::string_view text);

std::string format_edge_list(CombinatorialMap const &map, EdgeSet edges);
std::string format_orientation(CombinatorialMap const &map, Orientation const &o);
std::string format_vertex_values(CombinatorialMap const &map, std::vector<int> const &values);
std::string format_vertex_set(CombinatorialMap const &map, VertexSet vertices);

} // namespace mapbij

#endif // GUARD_MAPBIJ_LITERALS_HPP
