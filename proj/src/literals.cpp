#include "mapbij/literals.hpp"

#include <charconv>

#include "mapbij/error.hpp"

namespace mapbij
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text)
{
  std::vector<std::string_view> items;
  text = trim(text);
  if (text.empty() || text == "-")
    return items;
  for (;;) {
    auto comma = text.find(',');
    items.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  return items;
}

HalfEdge lookup(CombinatorialMap const &map, std::string_view token)
{
  auto h = map.find_token(token);
  if (!h)
    fail(ErrorKind::InvalidArgument, "unknown half-edge '" + std::string(token) + "'");
  return *h;
}

} // namespace

EdgeSet parse_edge_list(CombinatorialMap const &map, std::string_view text)
{
  EdgeSet edges;
  for (auto item : split(text)) {
    int e = map.edge_of(lookup(map, item));
    if (edges.contains(e))
      fail(ErrorKind::InvalidArgument, "edge '" + map.edge_name(e) + "' listed twice");
    edges.insert(e);
  }
  return edges;
}

Orientation parse_orientation(CombinatorialMap const &map, std::string_view text)
{
  std::vector<HalfEdge> tails;
  for (auto item : split(text))
    tails.push_back(lookup(map, item));
  return Orientation::from_tails(map, tails);
}

std::vector<int> parse_vertex_values(CombinatorialMap const &map, std::string_view text)
{
  std::vector<int> values(map.num_vertices(), 0);
  std::vector<bool> given(map.num_vertices(), false);
  for (auto item : split(text)) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorKind::InvalidArgument, "expected name=value, got '" + std::string(item) + "'");
    int v = map.vertex_of(lookup(map, trim(item.substr(0, eq))));
    std::string_view num = trim(item.substr(eq + 1));
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size())
      fail(ErrorKind::InvalidArgument, "bad number '" + std::string(num) + "'");
    if (given[v])
      fail(ErrorKind::InvalidArgument, "vertex '" + map.vertex_name(v) + "' given twice");
    given[v] = true;
    values[v] = value;
  }
  for (int v = 0; v < map.num_vertices(); ++v) {
    if (!given[v])
      fail(ErrorKind::InvalidArgument, "no value for vertex '" + map.vertex_name(v) + "'");
  }
  return values;
}

std::string format_edge_list(CombinatorialMap const &map, EdgeSet edges)
{
  if (edges.empty())
    return "-";
  std::string out;
  edges.for_each([&](int e) {
    if (!out.empty())
      out += ',';
    out += map.edge_name(e);
  });
  return out;
}

std::string format_orientation(CombinatorialMap const &map, Orientation const &o)
{
  std::string out;
  for (int e = 0; e < map.num_edges(); ++e) {
    if (e)
      out += ',';
    out += map.token(o.tail(map, e));
  }
  return out;
}

std::string format_vertex_values(CombinatorialMap const &map, std::vector<int> const &values)
{
  std::string out;
  for (int v = 0; v < map.num_vertices(); ++v) {
    if (v)
      out += ',';
    out += map.vertex_name(v) + "=" + std::to_string(values[v]);
  }
  return out;
}

std::string format_vertex_set(CombinatorialMap const &map, VertexSet vertices)
{
  std::string out;
  vertices.for_each([&](int v) {
    if (!out.empty())
      out += ',';
    out += map.vertex_name(v);
  });
  return out;
}

} // namespace mapbij
