#ifndef GUARD_MAPBIJ_TESTS_SUPPORT_HPP
#define GUARD_MAPBIJ_TESTS_SUPPORT_HPP

#include <string>

#include "mapbij/literals.hpp"
#include "mapbij/map.hpp"
#include "mapbij/map_io.hpp"
#include "mapbij/orientation.hpp"

#ifndef MAPBIJ_DATA_DIR
#define MAPBIJ_DATA_DIR "data"
#endif

namespace test
{

inline mapbij::CombinatorialMap data_map(std::string const &name)
{
  return mapbij::load_map(std::string(MAPBIJ_DATA_DIR) + "/" + name + ".map");
}

inline mapbij::EdgeSet edges(mapbij::CombinatorialMap const &m, std::string const &text)
{
  return mapbij::parse_edge_list(m, text);
}

inline mapbij::Orientation orient(mapbij::CombinatorialMap const &m, std::string const &text)
{
  return mapbij::parse_orientation(m, text);
}

inline std::vector<int> values(mapbij::CombinatorialMap const &m, std::string const &text)
{
  return mapbij::parse_vertex_values(m, text);
}

inline int vertex(mapbij::CombinatorialMap const &m, std::string const &token)
{
  return m.vertex_of(*m.find_token(token));
}

inline int edge(mapbij::CombinatorialMap const &m, std::string const &token)
{
  return m.edge_of(*m.find_token(token));
}

inline mapbij::HalfEdge half(mapbij::CombinatorialMap const &m, std::string const &token)
{
  return *m.find_token(token);
}

} // namespace test

#endif // GUARD_MAPBIJ_TESTS_SUPPORT_HPP
