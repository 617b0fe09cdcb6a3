#include "mapbij/tree.hpp"

#include <algorithm>
#include <limits>

#include "mapbij/error.hpp"
#include "mapbij/graph_util.hpp"

namespace mapbij
{

Permutation motion_function(CombinatorialMap const &map, EdgeSet tree)
{
  require_spanning_tree(map, tree);

  int n = map.num_half_edges();
  Permutation t(n);
  for (HalfEdge h = 0; h < n; ++h)
    t[h] = tree.contains(map.edge_of(h)) ? map.face_step(h) : map.sigma(h);

  int length = 0;
  HalfEdge h = map.root();
  do {
    h = t[h];
    ++length;
  } while (h != map.root() && length <= n);
  if (length != n)
    fail(ErrorKind::Internal, "motion function is not a single cycle");

  return t;
}

GTOrder::GTOrder(CombinatorialMap const &map, std::vector<HalfEdge> tour)
  : _tour(std::move(tour)),
    _rank(map.num_half_edges(), -1),
    _edge_rank(map.num_edges(), std::numeric_limits<int>::max()),
    _ordered(map.num_edges())
{
  for (int i = 0; i < static_cast<int>(_tour.size()); ++i)
    _rank[_tour[i]] = i;

  for (int e = 0; e < map.num_edges(); ++e) {
    auto hs = map.edge_half_edges(e);
    if (_rank[hs[1]] < _rank[hs[0]])
      std::swap(hs[0], hs[1]);
    _ordered[e] = hs;
    _edge_rank[e] = _rank[hs[0]];
  }
}

int GTOrder::min_edge(EdgeSet edges) const
{
  int best = -1;
  edges.for_each([&](int e) {
    if (best < 0 || _edge_rank[e] < _edge_rank[best])
      best = e;
  });
  return best;
}

HalfEdge GTOrder::min_half_edge(EdgeSet edges) const
{
  int e = min_edge(edges);
  return e < 0 ? -1 : _ordered[e][0];
}

std::vector<int> GTOrder::edges_in_order() const
{
  std::vector<int> res(_edge_rank.size());
  for (int e = 0; e < static_cast<int>(res.size()); ++e)
    res[e] = e;
  std::sort(res.begin(), res.end(),
            [&](int a, int b) { return _edge_rank[a] < _edge_rank[b]; });
  return res;
}

GTOrder gt_order(CombinatorialMap const &map, EdgeSet tree)
{
  Permutation t = motion_function(map, tree);
  std::vector<HalfEdge> tour;
  HalfEdge h = map.root();
  do {
    tour.push_back(h);
    h = t[h];
  } while (h != map.root());
  return GTOrder(map, std::move(tour));
}

RootedTree rooted_tree(CombinatorialMap const &map, EdgeSet tree)
{
  require_spanning_tree(map, tree);

  int nv = map.num_vertices();
  RootedTree rt;
  rt.parent.assign(nv, -1);
  rt.parent_edge.assign(nv, -1);
  rt.depth.assign(nv, 0);
  rt.enter.assign(nv, -1);
  rt.leave.assign(nv, -1);

  std::vector<std::vector<int>> adj(nv);
  tree.for_each([&](int e) {
    auto ends = map.endpoints(e);
    adj[ends[0]].push_back(e);
    adj[ends[1]].push_back(e);
  });

  int clock = 0;
  int root = map.root_vertex();
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  rt.enter[root] = clock++;
  while (!stack.empty()) {
    auto &[v, next] = stack.back();
    if (next == adj[v].size()) {
      rt.leave[v] = clock++;
      stack.pop_back();
      continue;
    }
    int e = adj[v][next++];
    int w = map.other_endpoint(e, v);
    if (rt.enter[w] >= 0)
      continue;
    rt.parent[w] = v;
    rt.parent_edge[w] = e;
    rt.depth[w] = rt.depth[v] + 1;
    rt.enter[w] = clock++;
    stack.push_back({w, 0});
  }
  return rt;
}

EdgeSet fundamental_cycle(CombinatorialMap const &map, EdgeSet tree, int e)
{
  if (tree.contains(e))
    fail(ErrorKind::EdgeInTree, "edge '" + map.edge_name(e) + "' is in the tree");

  RootedTree rt = rooted_tree(map, tree);
  EdgeSet cycle = EdgeSet::single(e);
  auto [u, v] = map.endpoints(e);
  while (u != v) {
    if (rt.depth[u] < rt.depth[v])
      std::swap(u, v);
    cycle.insert(rt.parent_edge[u]);
    u = rt.parent[u];
  }
  return cycle;
}

EdgeSet fundamental_cocycle(CombinatorialMap const &map, EdgeSet tree, int e)
{
  if (!tree.contains(e))
    fail(ErrorKind::EdgeNotInTree, "edge '" + map.edge_name(e) + "' is not in the tree");

  RootedTree rt = rooted_tree(map, tree);
  auto [u, v] = map.endpoints(e);
  int child = rt.parent_edge[u] == e ? u : v;

  EdgeSet cut;
  for (int f = 0; f < map.num_edges(); ++f) {
    auto [a, b] = map.endpoints(f);
    if (rt.is_ancestor(child, a) != rt.is_ancestor(child, b))
      cut.insert(f);
  }
  return cut;
}

Activities activities(CombinatorialMap const &map, EdgeSet tree, GTOrder const &order)
{
  Activities act;
  for (int e = 0; e < map.num_edges(); ++e) {
    if (tree.contains(e)) {
      if (order.min_edge(fundamental_cocycle(map, tree, e)) == e)
        act.internal_active.insert(e);
    } else {
      if (order.min_edge(fundamental_cycle(map, tree, e)) == e)
        act.external_active.insert(e);
    }
  }
  return act;
}

Activities activities(CombinatorialMap const &map, EdgeSet tree)
{
  return activities(map, tree, gt_order(map, tree));
}

bool external_active_iff_ancestor(CombinatorialMap const &map, EdgeSet tree, int e)
{
  if (tree.contains(e))
    fail(ErrorKind::EdgeInTree, "edge '" + map.edge_name(e) + "' is in the tree");

  GTOrder order = gt_order(map, tree);
  RootedTree rt = rooted_tree(map, tree);
  auto [h1, h2] = order.ordered(e);
  return rt.is_ancestor(map.vertex_of(h1), map.vertex_of(h2));
}

std::vector<int> postfix_order(CombinatorialMap const &map, EdgeSet tree)
{
  GTOrder order = gt_order(map, tree);
  RootedTree rt = rooted_tree(map, tree);

  int nv = map.num_vertices();
  std::vector<int> key(nv, map.num_half_edges());
  for (int v = 0; v < nv; ++v) {
    if (rt.parent_edge[v] < 0)
      continue;
    auto hs = map.edge_half_edges(rt.parent_edge[v]);
    HalfEdge at_v = map.vertex_of(hs[0]) == v ? hs[0] : hs[1];
    key[v] = order.rank(at_v);
  }

  std::vector<int> res(nv);
  for (int v = 0; v < nv; ++v)
    res[v] = v;
  std::sort(res.begin(), res.end(), [&](int a, int b) { return key[a] < key[b]; });
  return res;
}

EdgeSet delta(CombinatorialMap const &map, Subgraph subgraph)
{
  int n = map.num_half_edges();
  EdgeSet all = map.all_edges();
  subgraph = subgraph & all;

  EdgeSet tree, visited;
  HalfEdge h = map.root();
  int steps = 0;
  do {
    if (++steps > n)
      fail(ErrorKind::Internal, "subgraph-to-tree tour exceeded |H| steps");

    int e = map.edge_of(h);
    if (!visited.contains(e)) {
      auto [u, v] = map.endpoints(e);
      EdgeSet unvisited = all - visited;
      if (subgraph.contains(e)) {
        EdgeSet pool = (subgraph & unvisited) - EdgeSet::single(e);
        bool on_cycle = u == v || joined_by(map, pool, u, v);
        if (!on_cycle)
          tree.insert(e);
      } else {
        EdgeSet pool = all - (unvisited - subgraph);
        bool on_cocycle = u != v && !joined_by(map, pool, u, v);
        if (on_cocycle)
          tree.insert(e);
      }
      visited.insert(e);
    }
    h = tree.contains(e) ? map.face_step(h) : map.sigma(h);
  } while (h != map.root());

  if (!is_spanning_tree(map, tree))
    fail(ErrorKind::Internal, "subgraph-to-tree procedure did not yield a spanning tree");
  return tree;
}

std::vector<Subgraph> TreeInterval::members() const
{
  std::vector<int> act = activity.active().elements();
  std::vector<Subgraph> res;
  res.reserve(size());
  for (std::uint64_t mask = 0; mask < size(); ++mask) {
    EdgeSet flip;
    for (std::size_t i = 0; i < act.size(); ++i) {
      if ((mask >> i) & 1U)
        flip.insert(act[i]);
    }
    res.push_back(tree ^ flip);
  }
  return res;
}

TreeInterval tree_interval(CombinatorialMap const &map, EdgeSet tree)
{
  TreeInterval iv;
  iv.tree = tree;
  iv.activity = activities(map, tree);
  iv.lower = tree - iv.activity.internal_active;
  iv.upper = tree | iv.activity.external_active;
  return iv;
}

} // namespace mapbij
