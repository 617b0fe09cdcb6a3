#include "mapbij/enumerate.hpp"

#include "mapbij/error.hpp"
#include "mapbij/graph_util.hpp"

namespace mapbij
{

namespace
{

std::uint64_t count_for(CombinatorialMap const &map, int max_edges)
{
  if (map.num_edges() > max_edges || map.num_edges() >= 63)
    fail(ErrorKind::CapExceeded, "map has " + std::to_string(map.num_edges()) +
                                     " edges, cap is " + std::to_string(max_edges));
  return std::uint64_t{1} << map.num_edges();
}

} // namespace

std::vector<Subgraph> enumerate_subgraphs(CombinatorialMap const &map, int max_edges)
{
  std::uint64_t n = count_for(map, max_edges);
  std::vector<Subgraph> res;
  res.reserve(n);
  for (std::uint64_t bits = 0; bits < n; ++bits)
    res.emplace_back(bits);
  return res;
}

std::vector<Orientation> enumerate_orientations(CombinatorialMap const &map, int max_edges)
{
  std::uint64_t n = count_for(map, max_edges);
  std::vector<Orientation> res;
  res.reserve(n);
  for (std::uint64_t bits = 0; bits < n; ++bits)
    res.emplace_back(map.num_edges(), EdgeSet(bits));
  return res;
}

std::vector<EdgeSet> enumerate_spanning_trees(CombinatorialMap const &map, int max_edges)
{
  std::uint64_t n = count_for(map, max_edges);
  int want = map.num_vertices() - 1;
  std::vector<EdgeSet> res;
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    EdgeSet s(bits);
    if (s.size() == want && is_connected_subgraph(map, s))
      res.push_back(s);
  }
  return res;
}

} // namespace mapbij
