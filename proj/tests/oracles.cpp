#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

using mapbij::BivariatePolynomial;
using mapbij::CombinatorialMap;
using mapbij::Orientation;

namespace oracle
{

namespace
{

int find(std::vector<int> &parent, int x)
{
  while (parent[x] != x)
    x = parent[x] = parent[parent[x]];
  return x;
}

bool has(Mask m, int e)
{
  return (m >> e) & 1U;
}

Mask full(int n)
{
  return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

BivariatePolynomial monomial(int i, int j)
{
  BivariatePolynomial p;
  p.add(i, j, 1);
  return p;
}

BivariatePolynomial times(BivariatePolynomial const &p, int di, int dj)
{
  BivariatePolynomial r;
  for (auto const &[ex, c] : p.terms())
    r.add(ex.first + di, ex.second + dj, c);
  return r;
}

BivariatePolynomial tutte_rec(int n, Edges edges)
{
  if (edges.empty())
    return monomial(0, 0);
  auto [u, v] = edges.back();
  edges.pop_back();
  if (u == v)
    return times(tutte_rec(n, edges), 0, 1);
  Edges contracted;
  for (auto [a, b] : edges) {
    a = a == v ? u : a;
    b = b == v ? u : b;
    contracted.push_back({a, b});
  }
  BivariatePolynomial c = tutte_rec(n, contracted);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : edges)
    parent[find(parent, a)] = find(parent, b);
  bool bridge = find(parent, u) != find(parent, v);
  if (bridge)
    return times(c, 1, 0);
  BivariatePolynomial d = tutte_rec(n, edges);
  d += c;
  return d;
}

} // namespace

Edges edge_list(CombinatorialMap const &map)
{
  Edges res;
  for (int e = 0; e < map.num_edges(); ++e) {
    auto hs = map.edge_half_edges(e);
    res.push_back({map.vertex_of(hs[0]), map.vertex_of(hs[1])});
  }
  return res;
}

int component_count(int num_vertices, Edges const &edges, Mask subset)
{
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  int count = num_vertices;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!has(subset, static_cast<int>(e)))
      continue;
    int a = find(parent, edges[e][0]), b = find(parent, edges[e][1]);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

bool is_spanning_tree(CombinatorialMap const &map, Mask subset)
{
  return std::popcount(subset) == map.num_vertices() - 1 &&
         component_count(map.num_vertices(), edge_list(map), subset) == 1;
}

std::vector<Mask> spanning_trees(CombinatorialMap const &map)
{
  std::vector<Mask> res;
  for (Mask s = 0; s <= full(map.num_edges()); ++s) {
    if (is_spanning_tree(map, s))
      res.push_back(s);
  }
  return res;
}

BivariatePolynomial tutte(CombinatorialMap const &map)
{
  return tutte_rec(map.num_vertices(), edge_list(map));
}

Mask fundamental_cycle(CombinatorialMap const &map, Mask tree, int e)
{
  if (has(tree, e))
    throw std::logic_error("edge in tree");
  Mask res = Mask{1} << e;
  for (int f = 0; f < map.num_edges(); ++f) {
    if (has(tree, f) && is_spanning_tree(map, (tree & ~(Mask{1} << f)) | (Mask{1} << e)))
      res |= Mask{1} << f;
  }
  return res;
}

Mask fundamental_cocycle(CombinatorialMap const &map, Mask tree, int e)
{
  if (!has(tree, e))
    throw std::logic_error("edge not in tree");
  Mask res = Mask{1} << e;
  for (int f = 0; f < map.num_edges(); ++f) {
    if (!has(tree, f) && is_spanning_tree(map, (tree & ~(Mask{1} << e)) | (Mask{1} << f)))
      res |= Mask{1} << f;
  }
  return res;
}

std::vector<int> tour(CombinatorialMap const &map, Mask tree)
{
  auto const &sigma = map.sigma_array();
  auto const &alpha = map.alpha_array();
  std::vector<int> res;
  int h = map.root();
  do {
    res.push_back(h);
    h = has(tree, map.edge_of(h)) ? sigma[alpha[h]] : sigma[h];
  } while (h != map.root() && static_cast<int>(res.size()) <= map.num_half_edges());
  return res;
}

bool minimal(CombinatorialMap const &map, Orientation const &o, Mask tree)
{
  std::vector<int> rank(map.num_half_edges());
  auto t = tour(map, tree);
  for (std::size_t i = 0; i < t.size(); ++i)
    rank[t[i]] = static_cast<int>(i);
  for (Mask c : directed_cycles(map, o)) {
    int least = -1;
    for (int h = 0; h < map.num_half_edges(); ++h) {
      if (has(c, map.edge_of(h)) && (least < 0 || rank[h] < rank[least]))
        least = h;
    }
    if (o.tail(map, map.edge_of(least)) == least)
      return false;
  }
  return true;
}

std::vector<int> tour_edge_order(CombinatorialMap const &map, Mask tree)
{
  auto const &sigma = map.sigma_array();
  auto const &alpha = map.alpha_array();
  std::vector<int> order;
  std::vector<bool> seen(map.num_edges(), false);
  int h = map.root();
  for (int step = 0; step < map.num_half_edges(); ++step) {
    int e = map.edge_of(h);
    if (!seen[e]) {
      seen[e] = true;
      order.push_back(e);
    }
    h = has(tree, e) ? sigma[alpha[h]] : sigma[h];
  }
  if (h != map.root() || static_cast<int>(order.size()) != map.num_edges())
    throw std::logic_error("tour is not a single cycle");
  return order;
}

Activity activity(CombinatorialMap const &map, Mask tree)
{
  std::vector<int> order = tour_edge_order(map, tree);
  std::vector<int> rank(map.num_edges());
  for (std::size_t i = 0; i < order.size(); ++i)
    rank[order[i]] = static_cast<int>(i);
  Activity res;
  for (int e = 0; e < map.num_edges(); ++e) {
    bool internal = has(tree, e);
    Mask f = internal ? fundamental_cocycle(map, tree, e) : fundamental_cycle(map, tree, e);
    bool least = true;
    for (int g = 0; g < map.num_edges(); ++g) {
      if (has(f, g) && rank[g] < rank[e])
        least = false;
    }
    if (least)
      (internal ? res.internal : res.external) |= Mask{1} << e;
  }
  return res;
}

Mask delta(CombinatorialMap const &map, Mask subgraph)
{
  std::vector<Mask> hits;
  for (Mask t : spanning_trees(map)) {
    Activity a = activity(map, t);
    Mask lower = t & ~a.internal, upper = t | a.external;
    if ((lower & ~subgraph) == 0 && (subgraph & ~upper) == 0)
      hits.push_back(t);
  }
  if (hits.size() != 1)
    throw std::logic_error("subgraph lies in " + std::to_string(hits.size()) + " intervals");
  return hits[0];
}

std::vector<std::array<int, 2>> arcs(CombinatorialMap const &map, Orientation const &o)
{
  std::vector<std::array<int, 2>> res;
  for (int e = 0; e < map.num_edges(); ++e) {
    int tail = o.tail(map, e);
    res.push_back({map.vertex_of(tail), map.vertex_of(map.alpha_array()[tail])});
  }
  return res;
}

std::set<Mask> directed_cycles(CombinatorialMap const &map, Orientation const &o)
{
  auto a = arcs(map, o);
  int nv = map.num_vertices();
  std::set<Mask> res;
  for (Mask c = 1; c <= full(map.num_edges()); ++c) {
    std::vector<int> out(nv, 0), in(nv, 0);
    Edges sub;
    for (int e = 0; e < map.num_edges(); ++e) {
      if (!has(c, e))
        continue;
      ++out[a[e][0]];
      ++in[a[e][1]];
    }
    bool simple = true;
    int touched = 0;
    for (int v = 0; v < nv; ++v) {
      if (out[v] != in[v] || out[v] > 1)
        simple = false;
      touched += out[v] > 0;
    }
    if (!simple)
      continue;
    // A union of disjoint cycles has more components among touched vertices.
    if (component_count(nv, a, c) == nv - touched + 1)
      res.insert(c);
  }
  return res;
}

std::set<Mask> directed_cocycles(CombinatorialMap const &map, Orientation const &o)
{
  auto a = arcs(map, o);
  int nv = map.num_vertices();
  Mask all = full(map.num_edges());
  int base = component_count(nv, a, all);
  std::set<Mask> res;
  for (Mask c = 1; c <= all; ++c) {
    if (component_count(nv, a, all & ~c) <= base)
      continue;
    bool minimal = true;
    for (int e = 0; e < map.num_edges() && minimal; ++e) {
      if (has(c, e) && component_count(nv, a, (all & ~c) | (Mask{1} << e)) > base)
        minimal = false;
    }
    if (!minimal)
      continue;
    // Both sides of a minimal cut; the side holding the tail of the first edge.
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < map.num_edges(); ++e) {
      if (!has(c, e))
        parent[find(parent, a[e][0])] = find(parent, a[e][1]);
    }
    int first = std::countr_zero(c);
    int side = find(parent, a[first][0]);
    bool directed = true;
    for (int e = 0; e < map.num_edges(); ++e) {
      if (has(c, e) && find(parent, a[e][0]) != side)
        directed = false;
    }
    if (directed)
      res.insert(c);
  }
  return res;
}

std::vector<std::vector<bool>> reachability(CombinatorialMap const &map, Orientation const &o)
{
  int nv = map.num_vertices();
  std::vector<std::vector<bool>> r(nv, std::vector<bool>(nv, false));
  for (int v = 0; v < nv; ++v)
    r[v][v] = true;
  for (auto [u, v] : arcs(map, o))
    r[u][v] = true;
  for (int k = 0; k < nv; ++k) {
    for (int i = 0; i < nv; ++i) {
      for (int j = 0; j < nv; ++j) {
        if (r[i][k] && r[k][j])
          r[i][j] = true;
      }
    }
  }
  return r;
}

bool recurrent(CombinatorialMap const &map, std::vector<int> const &config)
{
  int nv = map.num_vertices();
  int root = map.root_vertex();
  Edges edges = edge_list(map);
  std::vector<int> deg(nv, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < nv; ++v) {
    if (v != root && config[v] >= deg[v])
      return false;
  }
  if (config[root] != deg[root])
    return false;
  auto fire = [&](std::vector<int> &c, int v) {
    for (auto [a, b] : edges) {
      if (a == b)
        continue;
      if (a == v) {
        --c[v];
        ++c[b];
      } else if (b == v) {
        --c[v];
        ++c[a];
      }
    }
  };
  std::vector<int> rest;
  for (int v = 0; v < nv; ++v) {
    if (v != root)
      rest.push_back(v);
  }
  do {
    std::vector<int> c = config;
    fire(c, root);
    bool ok = true;
    for (int v : rest) {
      if (c[v] < deg[v]) {
        ok = false;
        break;
      }
      fire(c, v);
    }
    if (ok && c == config)
      return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

std::vector<Orientation> orientations(CombinatorialMap const &map)
{
  std::vector<Orientation> res;
  for (Mask m = 0; m <= full(map.num_edges()); ++m)
    res.emplace_back(map.num_edges(), mapbij::EdgeSet(m));
  return res;
}

std::set<std::vector<int>> outdegree_sequences(CombinatorialMap const &map)
{
  std::set<std::vector<int>> res;
  for (auto const &o : orientations(map)) {
    std::vector<int> d(map.num_vertices(), 0);
    for (auto [u, v] : arcs(map, o))
      ++d[u];
    res.insert(d);
  }
  return res;
}

} // namespace oracle
