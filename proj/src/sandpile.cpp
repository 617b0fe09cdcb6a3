#include "mapbij/sandpile.hpp"

#include "mapbij/bijection.hpp"
#include "mapbij/error.hpp"
#include "mapbij/graph_util.hpp"
#include "mapbij/tree.hpp"

namespace mapbij
{

namespace
{

void check_size(CombinatorialMap const &map, SandpileConfig const &config)
{
  if (static_cast<int>(config.size()) != map.num_vertices())
    fail(ErrorKind::InvalidArgument, "configuration size differs from vertex count");
  for (int g : config) {
    if (g < 0)
      fail(ErrorKind::InvalidArgument, "negative grain count");
  }
}

void require_recurrent(CombinatorialMap const &map, SandpileConfig const &config)
{
  if (!is_recurrent(map, config))
    fail(ErrorKind::NotRecurrent, "configuration is not recurrent");
}

} // namespace

int multiplicity(CombinatorialMap const &map, int u, int v)
{
  int count = 0;
  for (int e = 0; e < map.num_edges(); ++e) {
    auto [a, b] = map.endpoints(e);
    if (a != b && ((a == u && b == v) || (a == v && b == u)))
      ++count;
  }
  return count;
}

int proper_degree(CombinatorialMap const &map, int v)
{
  int count = 0;
  for (int e = 0; e < map.num_edges(); ++e) {
    auto [a, b] = map.endpoints(e);
    if (a != b && (a == v || b == v))
      ++count;
  }
  return count;
}

bool is_stable(CombinatorialMap const &map, SandpileConfig const &config)
{
  check_size(map, config);
  for (int v = 0; v < map.num_vertices(); ++v) {
    if (v != map.root_vertex() && config[v] >= map.degree(v))
      return false;
  }
  return true;
}

SandpileConfig topple(CombinatorialMap const &map, SandpileConfig const &config, int v,
                      bool allow_stable)
{
  check_size(map, config);
  if (!allow_stable && v != map.root_vertex() && config[v] < map.degree(v))
    fail(ErrorKind::VertexStable, "vertex '" + map.vertex_name(v) + "' is stable");

  SandpileConfig next = config;
  for (int e = 0; e < map.num_edges(); ++e) {
    auto [a, b] = map.endpoints(e);
    if (a == b)
      continue;
    if (a == v) {
      --next[v];
      ++next[b];
    } else if (b == v) {
      --next[v];
      ++next[a];
    }
  }
  return next;
}

RecurrenceResult check_recurrence(CombinatorialMap const &map, SandpileConfig const &config)
{
  RecurrenceResult res;
  int root = map.root_vertex();
  if (!is_stable(map, config) || config[root] != map.degree(root))
    return res;

  int nv = map.num_vertices();
  std::vector<bool> fired(nv, false);
  SandpileConfig current = topple(map, config, root, true);
  fired[root] = true;
  res.firing_order.push_back(root);

  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < nv; ++v) {
      if (!fired[v] && current[v] >= map.degree(v)) {
        current = topple(map, current, v);
        fired[v] = true;
        res.firing_order.push_back(v);
        progress = true;
        break;
      }
    }
  }
  res.recurrent = static_cast<int>(res.firing_order.size()) == nv && current == config;
  return res;
}

bool is_recurrent(CombinatorialMap const &map, SandpileConfig const &config)
{
  return check_recurrence(map, config).recurrent;
}

int level(CombinatorialMap const &map, SandpileConfig const &config)
{
  require_recurrent(map, config);
  int total = 0;
  for (int g : config)
    total += g;
  return total - map.num_edges();
}

SandpileConfig lambda(CombinatorialMap const &map, EdgeSet tree)
{
  Orientation o = phi_tree(map, tree);
  Activities act = activities(map, tree);
  SandpileConfig config(map.num_vertices(), 0);
  for (int e = 0; e < map.num_edges(); ++e) {
    ++config[o.origin(map, e)];
    if (act.external_active.contains(e))
      ++config[o.end(map, e)];
  }
  return config;
}

EdgeSet upsilon(CombinatorialMap const &map, SandpileConfig const &config)
{
  require_recurrent(map, config);

  int n = map.num_half_edges();
  HalfEdge start = map.sigma_inv(map.root());
  EdgeSet tree, visited;
  DisjointSets joined(map.num_vertices());
  std::vector<int> visited_degree(map.num_vertices(), 0);

  HalfEdge h = start;
  int steps = 0;
  do {
    if (++steps > n)
      fail(ErrorKind::Internal, "burning tour exceeded |H| steps");
    int e = map.edge_of(h);
    if (!visited.contains(e)) {
      int u = map.vertex_of(h);
      int v = map.vertex_of(map.alpha(h));
      visited.insert(e);
      ++visited_degree[u];
      ++visited_degree[v];
      if (!joined.same(u, v) && config[v] + visited_degree[v] >= map.degree(v)) {
        tree.insert(e);
        joined.unite(u, v);
      }
    }
    h = tree.contains(e) ? map.sigma_inv(map.alpha(h)) : map.sigma_inv(h);
  } while (h != start);

  if (!is_spanning_tree(map, tree))
    fail(ErrorKind::Internal, "burning tour did not yield a spanning tree");
  return tree;
}

OutdegreeSequence sandpile_to_outdegree(CombinatorialMap const &map,
                                        SandpileConfig const &config)
{
  return gamma(map, upsilon(map, config));
}

std::vector<SandpileConfig> enumerate_recurrent(CombinatorialMap const &map)
{
  int nv = map.num_vertices();
  int root = map.root_vertex();
  std::vector<SandpileConfig> res;
  SandpileConfig config(nv, 0);
  config[root] = map.degree(root);

  // Odometer over 0 <= grains(v) < deg(v) for v != root.
  for (;;) {
    if (is_recurrent(map, config))
      res.push_back(config);
    int v = 0;
    for (; v < nv; ++v) {
      if (v == root)
        continue;
      if (++config[v] < map.degree(v))
        break;
      config[v] = 0;
    }
    if (v == nv)
      break;
  }
  return res;
}

} // namespace mapbij
