#include "mapbij/bijection.hpp"

#include <algorithm>

#include "mapbij/error.hpp"
#include "mapbij/graph_util.hpp"
#include "mapbij/tree.hpp"

namespace mapbij
{

Orientation phi_tree(CombinatorialMap const &map, EdgeSet tree)
{
  GTOrder order = gt_order(map, tree);
  Orientation o(map.num_edges(), EdgeSet());
  for (int e = 0; e < map.num_edges(); ++e) {
    auto [h1, h2] = order.ordered(e);
    o.set_tail(map, tree.contains(e) ? h1 : h2);
  }
  return o;
}

EdgeSet construct_tree(CombinatorialMap const &map, Orientation const &o)
{
  int n = map.num_half_edges();
  EdgeSet tree, visited;
  HalfEdge h = map.root();
  int steps = 0;
  do {
    if (++steps > n)
      fail(ErrorKind::Internal, "tree construction exceeded |H| steps");
    int e = map.edge_of(h);
    if (!visited.contains(e)) {
      if (o.is_tail(map, h))
        tree.insert(e);
      visited.insert(e);
    }
    h = tree.contains(e) ? map.face_step(h) : map.sigma(h);
  } while (h != map.root());

  if (!is_spanning_tree(map, tree))
    fail(ErrorKind::Internal, "orientation is not of the form O_T");
  return tree;
}

Orientation phi(CombinatorialMap const &map, Subgraph subgraph)
{
  subgraph = subgraph & map.all_edges();
  EdgeSet tree = delta(map, subgraph);
  GTOrder order = gt_order(map, tree);
  EdgeSet diff = subgraph ^ tree;

  Orientation o(map.num_edges(), EdgeSet());
  for (int e = 0; e < map.num_edges(); ++e) {
    auto [h1, h2] = order.ordered(e);
    bool forward = tree.contains(e)
                     ? !fundamental_cocycle(map, tree, e).intersects(diff)
                     : fundamental_cycle(map, tree, e).intersects(diff);
    o.set_tail(map, forward ? h1 : h2);
  }
  return o;
}

PsiTrace psi_trace(CombinatorialMap const &map, Orientation const &o)
{
  int n = map.num_half_edges();
  int m = map.num_edges();

  std::vector<EdgeSet> cycles, cocycles;
  for (auto const &c : enumerate_directed_cycles(map, o))
    cycles.push_back(c.edges);
  for (auto const &d : enumerate_directed_cocycles(map, o))
    cocycles.push_back(d.edges);

  std::vector<int> visit_time(m, -1);
  std::vector<HalfEdge> first_half(m, -1);
  EdgeSet visited;

  auto e_first = [&](EdgeSet x) {
    int best = -1;
    (x & visited).for_each([&](int e) {
      if (best < 0 || visit_time[e] < visit_time[best])
        best = e;
    });
    return best;
  };
  auto tail_first = [&](EdgeSet x) { return o.is_tail(map, first_half[e_first(x)]); };

  // Every same-e_first member either holds e or is separated from x by a
  // visited edge of its own.
  auto tight = [&](EdgeSet x, std::vector<EdgeSet> const &family, int e) {
    int ef = e_first(x);
    for (EdgeSet y : family) {
      if (!y.intersects(visited) || e_first(y) != ef || y.contains(e))
        continue;
      EdgeSet d = x ^ y;
      if (!d.intersects(visited) || !y.contains(e_first(d)))
        return false;
    }
    return true;
  };

  PsiTrace trace;
  std::vector<std::pair<EdgeSet, bool>> first_checks;
  HalfEdge h = map.root();
  int clock = 0;
  do {
    if (static_cast<int>(trace.visits.size()) >= n)
      fail(ErrorKind::Internal, "orientation-to-subgraph tour exceeded |H| steps");
    trace.visits.push_back(h);

    int e = map.edge_of(h);
    if (!visited.contains(e)) {
      PsiBranch branch;
      if (o.is_tail(map, h)) {
        auto cyc = std::find_if(cycles.begin(), cycles.end(), [&](EdgeSet c) {
          return c.contains(e) && !c.intersects(visited);
        });
        auto cocyc = std::find_if(cocycles.begin(), cocycles.end(), [&](EdgeSet d) {
          return d.contains(e) && d.intersects(visited) && !tail_first(d) &&
                 tight(d, cocycles, e);
        });
        if (cyc != cycles.end() && cocyc != cocycles.end())
          fail(ErrorKind::Internal, "edge lies in a directed cycle and a directed cocycle");

        if (cyc != cycles.end()) {
          branch = PsiBranch::TailCycle;
          trace.subgraph.insert(e);
          if (!trace.first_tail_cycle)
            trace.first_tail_cycle = DirectedCycle{*cyc};
        } else if (cocyc != cocycles.end()) {
          branch = PsiBranch::TailCocycle;
          first_checks.push_back({*cocyc, false});
        } else {
          branch = PsiBranch::TailOther;
          trace.subgraph.insert(e);
          trace.tree.insert(e);
        }
      } else {
        auto cocyc = std::find_if(cocycles.begin(), cocycles.end(), [&](EdgeSet d) {
          return d.contains(e) && !d.intersects(visited);
        });
        auto cyc = std::find_if(cycles.begin(), cycles.end(), [&](EdgeSet c) {
          return c.contains(e) && c.intersects(visited) && tail_first(c) &&
                 tight(c, cycles, e);
        });
        if (cyc != cycles.end() && cocyc != cocycles.end())
          fail(ErrorKind::Internal, "edge lies in a directed cycle and a directed cocycle");

        if (cocyc != cocycles.end()) {
          branch = PsiBranch::HeadCocycle;
          trace.tree.insert(e);
        } else if (cyc != cycles.end()) {
          branch = PsiBranch::HeadCycle;
          trace.subgraph.insert(e);
          trace.tree.insert(e);
          first_checks.push_back({*cyc, true});
        } else {
          branch = PsiBranch::HeadOther;
        }
      }

      trace.branches.push_back(branch);
      ++trace.branch_counts[static_cast<int>(branch)];
      visit_time[e] = clock++;
      first_half[e] = h;
      visited.insert(e);
    }
    h = trace.tree.contains(e) ? map.face_step(h) : map.sigma(h);
  } while (h != map.root());

  if (static_cast<int>(trace.visits.size()) != n || !is_spanning_tree(map, trace.tree))
    fail(ErrorKind::Internal, "orientation-to-subgraph procedure did not yield a spanning tree");

  // Visit order and tree order agree on visited sets.
  GTOrder order(map, trace.visits);
  for (auto const &[set, tail] : first_checks) {
    if (is_tail_min(map, o, order, set) != tail)
      fail(ErrorKind::Internal, "first-visited and least half-edges disagree");
  }
  return trace;
}

Subgraph psi(CombinatorialMap const &map, Orientation const &o)
{
  return psi_trace(map, o).subgraph;
}

bool is_minimal(CombinatorialMap const &map, Orientation const &o)
{
  EdgeSet tree = delta(map, psi(map, o));
  GTOrder order = gt_order(map, tree);
  for (auto const &c : enumerate_directed_cycles(map, o)) {
    if (is_tail_min(map, o, order, c.edges))
      return false;
  }
  return true;
}

std::optional<DirectedCycle> minimality_witness(CombinatorialMap const &map,
                                                Orientation const &o)
{
  return psi_trace(map, o).first_tail_cycle;
}

OutdegreeSequence gamma(CombinatorialMap const &map, Subgraph forest)
{
  if (!forest.subset_of(map.all_edges()) || !is_forest(map, forest))
    fail(ErrorKind::NotAForest, "subgraph is not a forest");
  return outdegree_sequence(map, phi(map, forest));
}

Orientation orientation_with_outdegrees(CombinatorialMap const &map,
                                        OutdegreeSequence const &delta)
{
  long total = 0;
  for (int d : delta)
    total += d;
  if (static_cast<int>(delta.size()) != map.num_vertices() || total != map.num_edges() ||
      !is_outdegree_sequence(map, delta))
    fail(ErrorKind::NotAnOutdegreeSequence, "not an outdegree sequence of this graph");

  Orientation o(map.num_edges(), EdgeSet());
  OutdegreeSequence out = outdegree_sequence(map, o);
  int nv = map.num_vertices();

  // Move surplus along directed paths to vertices in deficit.
  for (int v = 0; v < nv; ++v) {
    while (out[v] > delta[v]) {
      std::vector<int> via(nv, -1);
      std::vector<bool> seen(nv, false);
      std::vector<int> queue{v};
      seen[v] = true;
      int found = -1;
      for (std::size_t i = 0; i < queue.size() && found < 0; ++i) {
        int u = queue[i];
        for (int e = 0; e < map.num_edges(); ++e) {
          if (o.origin(map, e) != u)
            continue;
          int w = o.end(map, e);
          if (seen[w])
            continue;
          seen[w] = true;
          via[w] = e;
          if (out[w] < delta[w]) {
            found = w;
            break;
          }
          queue.push_back(w);
        }
      }
      if (found < 0)
        fail(ErrorKind::Internal, "no augmenting path for a valid outdegree sequence");
      EdgeSet path;
      for (int w = found; w != v; w = o.origin(map, via[w]))
        path.insert(via[w]);
      o = o.flipped(path);
      --out[v];
      ++out[found];
    }
  }
  return o;
}

Orientation minimal_orientation(CombinatorialMap const &map, OutdegreeSequence const &delta)
{
  Orientation o = orientation_with_outdegrees(map, delta);
  std::uint64_t limit = std::uint64_t{1} << std::min(map.num_edges(), 62);
  for (std::uint64_t flips = 0; flips <= limit; ++flips) {
    auto witness = minimality_witness(map, o);
    if (!witness)
      return o;
    o = o.flipped(witness->edges);
  }
  fail(ErrorKind::Internal, "cycle flipping did not reach a minimal orientation");
}

Subgraph gamma_inverse(CombinatorialMap const &map, OutdegreeSequence const &delta)
{
  return psi(map, minimal_orientation(map, delta));
}

namespace
{

template<typename Closure>
RootComponentPartition partition_by(CombinatorialMap const &map, Orientation const &o,
                                    Closure closure)
{
  EdgeSet tree = delta(map, psi(map, o));
  GTOrder order = gt_order(map, tree);
  VertexSet all = VertexSet::full(map.num_vertices());

  RootComponentPartition res;
  VertexSet covered = closure(map.root_vertex());
  res.blocks.push_back(covered);
  while (covered != all) {
    EdgeSet leaving;
    for (int e = 0; e < map.num_edges(); ++e) {
      auto [a, b] = map.endpoints(e);
      if (covered.contains(a) != covered.contains(b))
        leaving.insert(e);
    }
    int e = order.min_edge(leaving);
    auto [a, b] = map.endpoints(e);
    int outside = covered.contains(a) ? b : a;
    VertexSet block = closure(outside) - covered;
    res.blocks.push_back(block);
    res.linking_edges.push_back(e);
    covered = covered | block;
  }
  return res;
}

} // namespace

RootComponentPartition root_components(CombinatorialMap const &map, Orientation const &o)
{
  return partition_by(map, o, [&](int v) { return reachable_set(map, o, v); });
}

RootComponentPartition root_strong_components(CombinatorialMap const &map,
                                              Orientation const &o)
{
  if (reachable_set(map, o, map.root_vertex()) != VertexSet::full(map.num_vertices()))
    fail(ErrorKind::NotV0Connected, "orientation is not root-connected");
  return partition_by(map, o, [&](int v) { return coreachable_set(map, o, v); });
}

EdgeSet head_min_cocycle_minima(CombinatorialMap const &map, Orientation const &o)
{
  GTOrder order = gt_order(map, delta(map, psi(map, o)));
  EdgeSet res;
  for (auto const &d : enumerate_directed_cocycles(map, o)) {
    if (is_head_min(map, o, order, d.edges))
      res.insert(order.min_edge(d.edges));
  }
  return res;
}

EdgeSet cocycle_minima(CombinatorialMap const &map, Orientation const &o)
{
  GTOrder order = gt_order(map, delta(map, psi(map, o)));
  EdgeSet res;
  for (auto const &d : enumerate_directed_cocycles(map, o))
    res.insert(order.min_edge(d.edges));
  return res;
}

bool is_bipolar(CombinatorialMap const &map, Orientation const &o)
{
  int v0 = map.root_vertex();
  int v1 = map.vertex_of(map.alpha(map.root()));
  if (v0 == v1 || !is_acyclic(map, o))
    return false;

  int nv = map.num_vertices();
  std::vector<int> in(nv, 0), out(nv, 0);
  for (int e = 0; e < map.num_edges(); ++e) {
    ++out[o.origin(map, e)];
    ++in[o.end(map, e)];
  }
  for (int v = 0; v < nv; ++v) {
    if ((in[v] == 0) != (v == v0))
      return false;
    if ((out[v] == 0) != (v == v1))
      return false;
  }
  return true;
}

} // namespace mapbij
