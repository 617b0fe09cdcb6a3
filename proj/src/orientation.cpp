#include "mapbij/orientation.hpp"

#include <algorithm>

#include "mapbij/error.hpp"
#include "mapbij/graph_util.hpp"

namespace mapbij
{

namespace
{

constexpr int max_subset_vertices = 24;

struct Arc
{
  int edge;
  int to;
};

std::vector<std::vector<Arc>> out_arcs(CombinatorialMap const &map, Orientation const &o)
{
  std::vector<std::vector<Arc>> adj(map.num_vertices());
  for (int e = 0; e < map.num_edges(); ++e)
    adj[o.origin(map, e)].push_back({e, o.end(map, e)});
  return adj;
}

void check_subset_cap(CombinatorialMap const &map)
{
  if (map.num_vertices() > max_subset_vertices)
    fail(ErrorKind::CapExceeded, "too many vertices for subset enumeration");
}

bool induced_connected(CombinatorialMap const &map, VertexSet side)
{
  if (side.empty())
    return false;
  DisjointSets ds(map.num_vertices());
  for (int e = 0; e < map.num_edges(); ++e) {
    auto [a, b] = map.endpoints(e);
    if (side.contains(a) && side.contains(b))
      ds.unite(a, b);
  }
  int root = side.lowest();
  bool ok = true;
  side.for_each([&](int v) { ok = ok && ds.same(root, v); });
  return ok;
}

} // namespace

Orientation Orientation::from_tails(CombinatorialMap const &map,
                                    std::vector<HalfEdge> const &tails)
{
  Orientation o(map.num_edges(), EdgeSet());
  EdgeSet seen;
  for (HalfEdge h : tails) {
    int e = map.edge_of(h);
    if (seen.contains(e))
      fail(ErrorKind::InvalidArgument, "edge '" + map.edge_name(e) + "' oriented twice");
    seen.insert(e);
    o.set_tail(map, h);
  }
  if (seen != map.all_edges())
    fail(ErrorKind::InvalidArgument, "orientation does not cover every edge");
  return o;
}

void Orientation::set_tail(CombinatorialMap const &map, HalfEdge h)
{
  int e = map.edge_of(h);
  if (map.edge_half_edges(e)[0] == h)
    _reversed.erase(e);
  else
    _reversed.insert(e);
}

OutdegreeSequence outdegree_sequence(CombinatorialMap const &map, Orientation const &o)
{
  OutdegreeSequence delta(map.num_vertices(), 0);
  for (int e = 0; e < map.num_edges(); ++e)
    ++delta[o.origin(map, e)];
  return delta;
}

int excess(CombinatorialMap const &map, OutdegreeSequence const &delta, VertexSet u)
{
  int sum = 0;
  u.for_each([&](int v) { sum += delta[v]; });
  return sum - inner_edge_count(map, u);
}

SequenceClass classify_sequence(CombinatorialMap const &map, OutdegreeSequence const &delta)
{
  int nv = map.num_vertices();
  if (static_cast<int>(delta.size()) != nv)
    fail(ErrorKind::InvalidArgument, "sequence length differs from vertex count");
  long total = 0;
  for (int d : delta)
    total += d;
  if (total != map.num_edges())
    fail(ErrorKind::SumMismatch, "sequence sums to " + std::to_string(total) +
                                     ", expected " + std::to_string(map.num_edges()));
  check_subset_cap(map);

  SequenceClass res{true, true, true};
  int root = map.root_vertex();
  std::uint64_t full = EdgeSet::full(nv).bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    VertexSet u(bits);
    int exc = excess(map, delta, u);
    if (exc < 0)
      res.outdegree = false;
    if (exc <= 0) {
      res.strongly_connected = false;
      if (u.contains(root))
        res.v0_connected = false;
    }
  }
  res.v0_connected = res.v0_connected && res.outdegree;
  res.strongly_connected = res.strongly_connected && res.outdegree;
  return res;
}

bool is_outdegree_sequence(CombinatorialMap const &map, OutdegreeSequence const &delta)
{
  return classify_sequence(map, delta).outdegree;
}

bool is_v0_connected_sequence(CombinatorialMap const &map, OutdegreeSequence const &delta)
{
  return classify_sequence(map, delta).v0_connected;
}

bool is_strongly_connected_sequence(CombinatorialMap const &map, OutdegreeSequence const &delta)
{
  return classify_sequence(map, delta).strongly_connected;
}

VertexSet reachable_set(CombinatorialMap const &map, Orientation const &o, int from)
{
  auto adj = out_arcs(map, o);
  VertexSet seen = VertexSet::single(from);
  std::vector<int> queue{from};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &arc : adj[queue[i]]) {
      if (!seen.contains(arc.to)) {
        seen.insert(arc.to);
        queue.push_back(arc.to);
      }
    }
  }
  return seen;
}

VertexSet coreachable_set(CombinatorialMap const &map, Orientation const &o, int to)
{
  return reachable_set(map, o.reversed_all(), to);
}

bool reachable(CombinatorialMap const &map, Orientation const &o, int u, int v)
{
  return reachable_set(map, o, u).contains(v);
}

bool reachable_by_excess(CombinatorialMap const &map, Orientation const &o, int u, int v)
{
  check_subset_cap(map);
  OutdegreeSequence delta = outdegree_sequence(map, o);
  std::uint64_t full = EdgeSet::full(map.num_vertices()).bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    VertexSet w(bits);
    if (w.contains(u) && !w.contains(v) && excess(map, delta, w) == 0)
      return false;
  }
  return true;
}

bool is_acyclic(CombinatorialMap const &map, Orientation const &o)
{
  int nv = map.num_vertices();
  std::vector<int> indeg(nv, 0);
  for (int e = 0; e < map.num_edges(); ++e)
    ++indeg[o.end(map, e)];

  auto adj = out_arcs(map, o);
  std::vector<int> queue;
  for (int v = 0; v < nv; ++v) {
    if (indeg[v] == 0)
      queue.push_back(v);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &arc : adj[queue[i]]) {
      if (--indeg[arc.to] == 0)
        queue.push_back(arc.to);
    }
  }
  return static_cast<int>(queue.size()) == nv;
}

OrientationClass classify(CombinatorialMap const &map, Orientation const &o)
{
  OrientationClass c;
  VertexSet all = VertexSet::full(map.num_vertices());
  int root = map.root_vertex();
  c.acyclic = is_acyclic(map, o);
  c.v0_connected = reachable_set(map, o, root) == all;
  c.strongly_connected = c.v0_connected && coreachable_set(map, o, root) == all;
  return c;
}

std::vector<DirectedCycle> enumerate_directed_cycles(CombinatorialMap const &map,
                                                     Orientation const &o)
{
  auto adj = out_arcs(map, o);
  std::vector<DirectedCycle> res;

  // Each cycle is found once, starting from its least edge index.
  for (int first = 0; first < map.num_edges(); ++first) {
    int start = o.origin(map, first);
    int next = o.end(map, first);
    if (start == next) {
      res.push_back({EdgeSet::single(first)});
      continue;
    }

    struct Frame
    {
      int vertex;
      int via;
      std::size_t next;
    };
    VertexSet on_path = VertexSet::single(start) | VertexSet::single(next);
    EdgeSet path = EdgeSet::single(first);
    std::vector<Frame> stack{{next, first, 0}};
    while (!stack.empty()) {
      Frame &top = stack.back();
      if (top.next == adj[top.vertex].size()) {
        on_path.erase(top.vertex);
        path.erase(top.via);
        stack.pop_back();
        continue;
      }
      Arc arc = adj[top.vertex][top.next++];
      if (arc.edge <= first)
        continue;
      if (arc.to == start) {
        res.push_back({path | EdgeSet::single(arc.edge)});
        continue;
      }
      if (on_path.contains(arc.to))
        continue;
      on_path.insert(arc.to);
      path.insert(arc.edge);
      stack.push_back({arc.to, arc.edge, 0});
    }
  }

  std::sort(res.begin(), res.end());
  return res;
}

std::vector<DirectedCocycle> enumerate_directed_cocycles(CombinatorialMap const &map,
                                                         Orientation const &o)
{
  check_subset_cap(map);
  int nv = map.num_vertices();
  std::vector<DirectedCocycle> res;
  if (nv < 2)
    return res;

  VertexSet all = VertexSet::full(nv);
  // Sides containing vertex 0 enumerate each bipartition once.
  for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (nv - 1)) - 1; ++rest) {
    VertexSet side(1 | (rest << 1));
    VertexSet other = all - side;
    if (!induced_connected(map, side) || !induced_connected(map, other))
      continue;

    EdgeSet cut;
    bool outward = true, inward = true;
    for (int e = 0; e < map.num_edges(); ++e) {
      bool from_side = side.contains(o.origin(map, e));
      bool to_side = side.contains(o.end(map, e));
      if (from_side == to_side)
        continue;
      cut.insert(e);
      (from_side ? inward : outward) = false;
    }
    if (outward)
      res.push_back({cut, side, other});
    else if (inward)
      res.push_back({cut, other, side});
  }

  std::sort(res.begin(), res.end());
  return res;
}

bool is_directed_cycle(CombinatorialMap const &map, Orientation const &o, EdgeSet edges)
{
  if (edges.empty() || !edges.subset_of(map.all_edges()))
    return false;

  int nv = map.num_vertices();
  std::vector<int> in(nv, 0), out(nv, 0);
  DisjointSets ds(nv);
  edges.for_each([&](int e) {
    ++out[o.origin(map, e)];
    ++in[o.end(map, e)];
    ds.unite(o.origin(map, e), o.end(map, e));
  });

  int comp = -1;
  for (int v = 0; v < nv; ++v) {
    if (in[v] != out[v] || in[v] > 1)
      return false;
    if (in[v] == 0)
      continue;
    if (comp < 0)
      comp = ds.find(v);
    else if (ds.find(v) != comp)
      return false;
  }
  return true;
}

bool is_directed_cocycle(CombinatorialMap const &map, Orientation const &o, EdgeSet edges)
{
  if (edges.empty() || !edges.subset_of(map.all_edges()))
    return false;

  DisjointSets ds = components_of(map, map.all_edges() - edges);
  if (ds.count() != 2)
    return false;

  int source_comp = -1;
  bool ok = true;
  edges.for_each([&](int e) {
    int a = ds.find(o.origin(map, e));
    int b = ds.find(o.end(map, e));
    if (a == b)
      ok = false;
    else if (source_comp < 0)
      source_comp = a;
    else if (a != source_comp)
      ok = false;
  });
  return ok;
}

Orientation flip(CombinatorialMap const &map, Orientation const &o, EdgeSet edges)
{
  if (!is_directed_cycle(map, o, edges) && !is_directed_cocycle(map, o, edges))
    fail(ErrorKind::NotDirected, "edge set is neither a directed cycle nor a directed cocycle");
  return o.flipped(edges);
}

DirectedCycle disagreement_cycle(CombinatorialMap const &map, Orientation const &o,
                                 Orientation const &other, int e)
{
  if (outdegree_sequence(map, o) != outdegree_sequence(map, other))
    fail(ErrorKind::OutdegreeMismatch, "orientations have different outdegree sequences");
  EdgeSet diff = o.reversed() ^ other.reversed();
  if (!diff.contains(e))
    fail(ErrorKind::SameOrientationOnEdge, "orientations agree on '" + map.edge_name(e) + "'");

  int target = o.origin(map, e);
  if (map.is_loop(e))
    return {EdgeSet::single(e)};

  // Walk along unused disagreeing arcs until the origin of e comes back,
  // cutting out any closed detour so the path stays simple.
  auto adj = out_arcs(map, o);
  EdgeSet used = EdgeSet::single(e);
  std::vector<int> path_edges;
  std::vector<int> path_vertices{o.end(map, e)};
  while (path_vertices.back() != target) {
    int v = path_vertices.back();
    int chosen = -1;
    for (auto const &arc : adj[v]) {
      if (diff.contains(arc.edge) && !used.contains(arc.edge)) {
        chosen = arc.edge;
        break;
      }
    }
    if (chosen < 0)
      fail(ErrorKind::Internal, "disagreement walk got stuck");
    used.insert(chosen);
    int w = o.end(map, chosen);
    auto it = std::find(path_vertices.begin(), path_vertices.end(), w);
    if (it != path_vertices.end()) {
      std::size_t keep = static_cast<std::size_t>(it - path_vertices.begin());
      path_vertices.resize(keep + 1);
      path_edges.resize(keep);
    } else {
      path_vertices.push_back(w);
      path_edges.push_back(chosen);
    }
  }

  DirectedCycle c{EdgeSet::single(e)};
  for (int f : path_edges)
    c.edges.insert(f);
  return c;
}

bool is_tail_min(CombinatorialMap const &map, Orientation const &o,
                 GTOrder const &order, EdgeSet edges)
{
  HalfEdge h = order.min_half_edge(edges);
  return h >= 0 && o.is_tail(map, h);
}

bool is_head_min(CombinatorialMap const &map, Orientation const &o,
                 GTOrder const &order, EdgeSet edges)
{
  HalfEdge h = order.min_half_edge(edges);
  return h >= 0 && !o.is_tail(map, h);
}

} // namespace mapbij
