#include "mapbij/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "mapbij/bijection.hpp"
#include "mapbij/enumerate.hpp"
#include "mapbij/error.hpp"
#include "mapbij/graph_util.hpp"
#include "mapbij/literals.hpp"
#include "mapbij/map_io.hpp"
#include "mapbij/sandpile.hpp"
#include "mapbij/tree.hpp"
#include "mapbij/tutte.hpp"

namespace mapbij
{

std::string_view to_string(CheckStatus status)
{
  switch (status) {
  case CheckStatus::Pass: return "pass";
  case CheckStatus::Fail: return "fail";
  case CheckStatus::Skip: return "skip";
  }
  return "unknown";
}

int VerificationReport::count(CheckStatus status) const
{
  int n = 0;
  for (auto const &m : maps) {
    for (auto const &c : m.checks)
      n += c.status == status;
  }
  for (auto const &c : global_checks)
    n += c.status == status;
  return n;
}

std::vector<std::string> const &operation_names()
{
  static std::vector<std::string> const names{
    "build_map", "parse_map", "serialize_map", "underlying_graph", "dual_map",
    "euler_characteristic", "motion_function", "gt_order", "fundamental_cycle",
    "fundamental_cocycle", "activities", "external_active_iff_ancestor",
    "postfix_order", "tutte_polynomial", "tutte_subgraph_oracle", "forest_expansion",
    "delta", "tree_interval", "outdegree_sequence", "excess", "is_outdegree_sequence",
    "reachable", "classify", "enumerate_directed_cycles", "enumerate_directed_cocycles",
    "flip", "disagreement_cycle", "phi_tree", "construct_tree", "phi", "psi",
    "is_minimal", "gamma", "gamma_inverse", "specialization_census", "root_components",
    "root_strong_components", "is_bipolar", "topple", "is_recurrent", "level", "lambda",
    "upsilon", "sandpile_to_outdegree", "enumerate_subgraphs", "enumerate_orientations",
    "enumerate_spanning_trees", "verify_all"};
  return names;
}

namespace
{

using Witness = std::optional<std::string>;

template<typename T>
std::string join(std::vector<T> const &v)
{
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

std::vector<std::string> coefficients(UnivariatePolynomial const &p, std::size_t min_len)
{
  std::vector<std::string> res;
  for (auto const &c : p.coefficients())
    res.push_back(c.str());
  while (res.size() < min_len)
    res.push_back("0");
  return res;
}

std::vector<std::string> histogram_strings(std::vector<long> const &h, std::size_t min_len)
{
  std::vector<std::string> res;
  for (long x : h)
    res.push_back(std::to_string(x));
  while (res.size() < min_len)
    res.push_back("0");
  while (res.size() > min_len && res.back() == "0")
    res.pop_back();
  return res;
}

void bump(std::vector<long> &h, int k)
{
  if (static_cast<int>(h.size()) <= k)
    h.resize(k + 1, 0);
  ++h[k];
}

// Compares a histogram with a coefficient vector, ignoring trailing zeros.
Witness compare_histogram(std::string const &what, std::vector<long> const &h,
                          UnivariatePolynomial const &p)
{
  std::size_t len = std::max(h.size(), p.coefficients().size());
  auto got = histogram_strings(h, len);
  auto want = coefficients(p, len);
  if (got != want)
    return what + ": histogram " + join(got) + " vs coefficients " + join(want);
  return std::nullopt;
}

// Everything the checks share for one map.
struct Context
{
  CombinatorialMap const &map;
  std::set<std::string> &coverage;
  VerifyOptions const &options;

  std::vector<EdgeSet> trees;
  std::vector<Subgraph> subgraphs;
  std::vector<Orientation> orientations;
  TuttePolynomial tutte;
  std::vector<Orientation> phis;
  std::vector<Subgraph> psis;
  std::vector<OrientationClass> classes;
  std::vector<bool> minimal;

  void touch(std::string const &op) { coverage.insert(op); }

  std::string sub(Subgraph s) const { return "{" + format_edge_list(map, s) + "}"; }
  std::string ori(Orientation const &o) const { return "<" + format_orientation(map, o) + ">"; }
};

Witness check_map_structure(Context &cx)
{
  auto const &m = cx.map;
  cx.touch("underlying_graph");
  cx.touch("dual_map");
  cx.touch("euler_characteristic");
  cx.touch("serialize_map");
  cx.touch("parse_map");

  Graph g = underlying_graph(m);
  DisjointSets ds(g.num_vertices);
  for (auto const &ends : g.endpoints)
    ds.unite(ends[0], ends[1]);
  if (ds.count() != 1)
    return "underlying graph is disconnected";

  int total = 0;
  for (int v = 0; v < m.num_vertices(); ++v)
    total += m.degree(v);
  if (total != m.num_half_edges() || 2 * m.num_edges() != m.num_half_edges())
    return "vertex cycles or edges do not partition the half-edges";
  for (int e = 0; e < m.num_edges(); ++e) {
    if (m.is_loop(e) != (g.endpoints[e][0] == g.endpoints[e][1]))
      return "loop status of " + m.edge_name(e) + " differs in the graph";
  }

  CombinatorialMap d = dual_map(m);
  if (!(dual_map(d) == m))
    return "dual of the dual differs from the map";
  if (euler_characteristic(d) != euler_characteristic(m))
    return "dual has a different Euler characteristic";
  if (d.num_vertices() != num_faces(m))
    return "dual vertices differ from faces";

  std::string text = serialize_map(m);
  if (!(parse_map(text) == m))
    return "serialized map does not parse back: " + text;
  if (serialize_map(parse_map(text)) != text)
    return "serialization is not stable";
  return std::nullopt;
}

Witness check_tutte_expansions(Context &cx)
{
  cx.touch("tutte_polynomial");
  cx.touch("tutte_subgraph_oracle");
  cx.touch("forest_expansion");
  TuttePolynomial sub = tutte_subgraph_oracle(cx.map);
  TuttePolynomial forest = forest_expansion(cx.map);
  if (!(cx.tutte == sub) || !(cx.tutte == forest))
    return "trees: " + cx.tutte.to_string() + "; subgraphs: " + sub.to_string() +
           "; forests: " + forest.to_string();
  return std::nullopt;
}

Witness check_root_independence(Context &cx)
{
  for (HalfEdge h = 0; h < cx.map.num_half_edges(); ++h) {
    TuttePolynomial t = tutte_polynomial(cx.map.with_root(h));
    if (!(t == cx.tutte))
      return "root " + cx.map.token(h) + " gives " + t.to_string();
  }
  return std::nullopt;
}

Witness check_tree_tours(Context &cx)
{
  auto const &m = cx.map;
  for (auto x : {"motion_function", "gt_order", "fundamental_cycle", "fundamental_cocycle",
                 "activities", "external_active_iff_ancestor", "postfix_order", "phi_tree",
                 "construct_tree"})
    cx.touch(x);

  for (EdgeSet tree : cx.trees) {
    std::string at = " for tree " + cx.sub(tree);
    Permutation t = motion_function(m, tree);
    GTOrder order = gt_order(m, tree);
    auto const &tour = order.tour();
    if (static_cast<int>(tour.size()) != m.num_half_edges() || tour[0] != m.root())
      return "tour does not cover every half-edge" + at;
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) {
      if (t[tour[i]] != tour[i + 1])
        return "tour does not follow the motion function" + at;
    }

    Orientation ot = phi_tree(m, tree);
    if (construct_tree(m, ot) != tree)
      return "tree construction does not invert the tree orientation" + at;
    if (phi(m, tree) != ot)
      return "subgraph orientation of a tree differs from its tree orientation" + at;

    Activities act = activities(m, tree, order);
    RootedTree rt = rooted_tree(m, tree);
    std::vector<EdgeSet> fundamental(m.num_edges());
    for (int e = 0; e < m.num_edges(); ++e) {
      bool internal = tree.contains(e);
      fundamental[e] = internal ? fundamental_cocycle(m, tree, e)
                                : fundamental_cycle(m, tree, e);
      bool directed = internal ? is_directed_cocycle(m, ot, fundamental[e])
                               : is_directed_cycle(m, ot, fundamental[e]);
      if (directed != act.active().contains(e))
        return "fundamental set of " + m.edge_name(e) + " directed=" +
               std::to_string(directed) + " but active=" +
               std::to_string(act.active().contains(e)) + at;
      if (!internal &&
          external_active_iff_ancestor(m, tree, e) != act.external_active.contains(e))
        return "ancestor test disagrees for " + m.edge_name(e) + at;
    }

    // Interleaving of half-edges decides fundamental-cycle membership.
    for (int e = 0; e < m.num_edges(); ++e) {
      if (!tree.contains(e))
        continue;
      auto [a1, a2] = order.ordered(e);
      int r1 = order.rank(a1), r2 = order.rank(a2);
      for (int f = 0; f < m.num_edges(); ++f) {
        if (tree.contains(f))
          continue;
        auto [b1, b2] = order.ordered(f);
        int s1 = order.rank(b1), s2 = order.rank(b2);
        bool interleaved = (r1 < s1 && s1 < r2 && r2 < s2) || (s1 < r1 && r1 < s2 && s2 < r2);
        if (interleaved != fundamental[f].contains(e))
          return "interleaving of " + m.edge_name(e) + " and " + m.edge_name(f) +
                 " disagrees with the fundamental cycle" + at;
      }
    }

    std::vector<int> post = postfix_order(m, tree);
    if (post.back() != m.root_vertex())
      return "root vertex is not last in postfix order" + at;
    std::vector<int> pos(m.num_vertices());
    for (int i = 0; i < m.num_vertices(); ++i)
      pos[post[i]] = i;
    for (int e = 0; e < m.num_edges(); ++e) {
      if (m.is_loop(e) || act.external_active.contains(e))
        continue;
      if (pos[ot.end(m, e)] > pos[ot.origin(m, e)])
        return "arc " + m.edge_name(e) + " points to the later endpoint in postfix order" + at;
    }
    (void)rt;
  }
  return std::nullopt;
}

Witness check_tree_intervals(Context &cx)
{
  auto const &m = cx.map;
  cx.touch("tree_interval");
  cx.touch("delta");
  std::vector<int> owner(cx.subgraphs.size(), -1);
  for (std::size_t i = 0; i < cx.trees.size(); ++i) {
    EdgeSet tree = cx.trees[i];
    TreeInterval iv = tree_interval(m, tree);
    auto members = iv.members();
    std::uint64_t expect = std::uint64_t{1}
                           << (iv.activity.internal_count() + iv.activity.external_count());
    if (iv.size() != expect || members.size() != expect)
      return "interval of " + cx.sub(tree) + " has size " + std::to_string(members.size());
    for (Subgraph s : members) {
      if (!iv.contains(s))
        return "member " + cx.sub(s) + " lies outside its bounds";
      if (owner[s.bits()] >= 0)
        return "subgraph " + cx.sub(s) + " lies in the intervals of " +
               cx.sub(cx.trees[owner[s.bits()]]) + " and " + cx.sub(tree);
      owner[s.bits()] = static_cast<int>(i);
      if (delta(m, s) != tree)
        return "subgraph " + cx.sub(s) + " maps to " + cx.sub(delta(m, s)) + " not " +
               cx.sub(tree);
      if (is_connected_subgraph(m, s) != tree.subset_of(s))
        return "connectivity of " + cx.sub(s) + " disagrees with its interval position";
      if (is_forest(m, s) != s.subset_of(tree))
        return "acyclicity of " + cx.sub(s) + " disagrees with its interval position";
    }
  }
  for (std::size_t b = 0; b < owner.size(); ++b) {
    if (owner[b] < 0)
      return "subgraph " + cx.sub(EdgeSet(b)) + " lies in no interval";
  }
  return std::nullopt;
}

Witness check_round_trips(Context &cx)
{
  cx.touch("phi");
  cx.touch("psi");
  for (std::size_t i = 0; i < cx.subgraphs.size(); ++i) {
    Subgraph back = psi(cx.map, cx.phis[i]);
    if (back != cx.subgraphs[i])
      return "psi(phi(" + cx.sub(cx.subgraphs[i]) + ")) = " + cx.sub(back);
  }
  for (std::size_t i = 0; i < cx.orientations.size(); ++i) {
    Orientation back = phi(cx.map, cx.psis[i]);
    if (back != cx.orientations[i])
      return "phi(psi(" + cx.ori(cx.orientations[i]) + ")) = " + cx.ori(back);
  }
  return std::nullopt;
}

Witness check_census(Context &cx, MapReport &report)
{
  cx.touch("specialization_census");
  cx.touch("classify");
  cx.touch("is_minimal");
  Census c = specialization_census(cx.map);
  report.census = c.subgraphs;
  if (!c.consistent())
    return c.violations.front();
  if (c.subgraphs[0][0] != (std::uint64_t{1} << cx.map.num_edges()))
    return "top-left cell is not 2^|E|";
  if (c.subgraphs[2][2] != 0)
    return "bottom-right cell is not zero";
  return std::nullopt;
}

Witness check_minimal(Context &cx)
{
  auto const &m = cx.map;
  for (auto x : {"outdegree_sequence", "gamma", "gamma_inverse", "is_outdegree_sequence",
                 "excess"})
    cx.touch(x);

  std::map<OutdegreeSequence, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cx.orientations.size(); ++i)
    groups[outdegree_sequence(m, cx.orientations[i])].push_back(i);

  for (std::size_t i = 0; i < cx.orientations.size(); ++i) {
    auto const &o = cx.orientations[i];
    PsiTrace trace = psi_trace(m, o);
    bool never_a = trace.count(PsiBranch::TailCycle) == 0;
    if (never_a != cx.minimal[i])
      return "minimality of " + cx.ori(o) + " disagrees with the first psi branch";
    if (trace.first_tail_cycle) {
      GTOrder order = gt_order(m, delta(m, trace.subgraph));
      if (!is_directed_cycle(m, o, trace.first_tail_cycle->edges) ||
          !is_tail_min(m, o, order, trace.first_tail_cycle->edges))
        return "minimality witness of " + cx.ori(o) + " is not a tail-min directed cycle";
    }
  }

  for (auto const &[d, members] : groups) {
    int count = 0;
    std::size_t which = 0;
    for (std::size_t i : members) {
      if (cx.minimal[i]) {
        ++count;
        which = i;
      }
    }
    if (count != 1)
      return std::to_string(count) + " minimal orientations for outdegrees " + join(d);
    if (minimal_orientation(m, d) != cx.orientations[which])
      return "cycle flipping reaches a different orientation for " + join(d);

    SequenceClass sc = classify_sequence(m, d);
    for (std::size_t i : members) {
      if (sc.v0_connected != cx.classes[i].v0_connected ||
          sc.strongly_connected != cx.classes[i].strongly_connected)
        return "excess classification of " + join(d) + " disagrees with " +
               cx.ori(cx.orientations[i]);
    }
  }

  std::set<OutdegreeSequence> images, tree_images, external_images;
  for (Subgraph s : cx.subgraphs) {
    if (!is_forest(m, s))
      continue;
    OutdegreeSequence d = gamma(m, s);
    if (!images.insert(d).second)
      return "two forests share outdegrees " + join(d);
    if (gamma_inverse(m, d) != s)
      return "gamma_inverse(gamma(" + cx.sub(s) + ")) = " + cx.sub(gamma_inverse(m, d));
    if (is_spanning_tree(m, s)) {
      tree_images.insert(d);
      if (activities(m, s).internal_active.empty())
        external_images.insert(d);
    }
  }
  if (images.size() != groups.size())
    return "forests reach " + std::to_string(images.size()) + " of " +
           std::to_string(groups.size()) + " outdegree sequences";
  for (auto const &[d, members] : groups) {
    if (!images.count(d))
      return "outdegrees " + join(d) + " are not reached by a forest";
    SequenceClass sc = classify_sequence(m, d);
    if (sc.v0_connected != (tree_images.count(d) > 0))
      return "trees and root-connected sequences disagree at " + join(d);
    if (sc.strongly_connected != (external_images.count(d) > 0))
      return "external trees and strongly connected sequences disagree at " + join(d);
  }

  // Excess criterion against realised sequences, over all bounded candidates.
  int nv = m.num_vertices();
  OutdegreeSequence cand(nv, 0);
  for (;;) {
    int sum = 0;
    for (int x : cand)
      sum += x;
    if (sum == m.num_edges() && is_outdegree_sequence(m, cand) != (groups.count(cand) > 0))
      return "excess criterion misjudges " + join(cand);
    int v = 0;
    for (; v < nv; ++v) {
      if (++cand[v] <= m.degree(v))
        break;
      cand[v] = 0;
    }
    if (v == nv)
      break;
  }
  return std::nullopt;
}

Witness check_minty(Context &cx)
{
  cx.touch("enumerate_directed_cycles");
  cx.touch("enumerate_directed_cocycles");
  auto const &m = cx.map;
  for (auto const &o : cx.orientations) {
    EdgeSet in_cycle, in_cocycle;
    for (auto const &c : enumerate_directed_cycles(m, o)) {
      if (!is_directed_cycle(m, o, c.edges))
        return "enumerated set " + cx.sub(c.edges) + " is not a directed cycle";
      in_cycle = in_cycle | c.edges;
    }
    for (auto const &d : enumerate_directed_cocycles(m, o)) {
      if (!is_directed_cocycle(m, o, d.edges))
        return "enumerated set " + cx.sub(d.edges) + " is not a directed cocycle";
      in_cocycle = in_cocycle | d.edges;
    }
    if (in_cycle.intersects(in_cocycle) || (in_cycle | in_cocycle) != m.all_edges())
      return "dichotomy fails for " + cx.ori(o);
    if (cx.classes[&o - cx.orientations.data()].acyclic != in_cycle.empty())
      return "acyclicity of " + cx.ori(o) + " disagrees with its cycles";
  }
  return std::nullopt;
}

Witness check_reachability(Context &cx)
{
  cx.touch("reachable");
  auto const &m = cx.map;
  for (auto const &o : cx.orientations) {
    for (int u = 0; u < m.num_vertices(); ++u) {
      for (int v = 0; v < m.num_vertices(); ++v) {
        if (reachable(m, o, u, v) != reachable_by_excess(m, o, u, v))
          return "reachability of " + m.vertex_name(v) + " from " + m.vertex_name(u) +
                 " differs under " + cx.ori(o);
      }
    }
  }
  return std::nullopt;
}

Witness check_flips(Context &cx)
{
  cx.touch("flip");
  cx.touch("disagreement_cycle");
  auto const &m = cx.map;
  std::map<OutdegreeSequence, std::vector<Orientation>> groups;
  for (auto const &o : cx.orientations) {
    OutdegreeSequence d = outdegree_sequence(m, o);
    groups[d].push_back(o);
    for (auto const &c : enumerate_directed_cycles(m, o)) {
      Orientation f = flip(m, o, c.edges);
      if (outdegree_sequence(m, f) != d)
        return "flipping cycle " + cx.sub(c.edges) + " changed outdegrees";
      if (flip(m, f, c.edges) != o)
        return "flipping cycle " + cx.sub(c.edges) + " twice is not the identity";
    }
    for (auto const &c : enumerate_directed_cocycles(m, o)) {
      Orientation f = flip(m, o, c.edges);
      if (flip(m, f, c.edges) != o)
        return "flipping cocycle " + cx.sub(c.edges) + " twice is not the identity";
    }
  }
  for (auto const &[d, members] : groups) {
    for (auto const &a : members) {
      for (auto const &b : members) {
        EdgeSet diff = a.reversed() ^ b.reversed();
        for (int e : diff.elements()) {
          DirectedCycle c = disagreement_cycle(m, a, b, e);
          if (!c.edges.contains(e) || !c.edges.subset_of(diff) ||
              !is_directed_cycle(m, a, c.edges))
            return "bad disagreement cycle " + cx.sub(c.edges) + " between " + cx.ori(a) +
                   " and " + cx.ori(b);
        }
      }
    }
  }
  return std::nullopt;
}

bool recurrent_by_permutations(CombinatorialMap const &m, SandpileConfig const &config)
{
  int root = m.root_vertex();
  if (!is_stable(m, config) || config[root] != m.degree(root))
    return false;
  std::vector<int> rest;
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (v != root)
      rest.push_back(v);
  }
  do {
    SandpileConfig c = topple(m, config, root, true);
    bool ok = true;
    for (int v : rest) {
      if (c[v] < m.degree(v)) {
        ok = false;
        break;
      }
      c = topple(m, c, v);
    }
    if (ok && c == config)
      return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

Witness check_sandpile(Context &cx)
{
  auto const &m = cx.map;
  for (auto x : {"topple", "is_recurrent", "level", "lambda", "upsilon",
                 "sandpile_to_outdegree"})
    cx.touch(x);

  auto fmt = [&](SandpileConfig const &c) { return format_vertex_values(m, c); };
  std::vector<SandpileConfig> recurrent = enumerate_recurrent(m);
  if (cx.tutte.evaluate(1, 1) != recurrent.size() || recurrent.size() != cx.trees.size())
    return std::to_string(recurrent.size()) + " recurrent configurations for " +
           std::to_string(cx.trees.size()) + " trees";

  for (EdgeSet tree : cx.trees) {
    SandpileConfig c = lambda(m, tree);
    RecurrenceResult rr = check_recurrence(m, c);
    if (!rr.recurrent)
      return "configuration " + fmt(c) + " of tree " + cx.sub(tree) + " is not recurrent";
    SandpileConfig replay = c;
    for (std::size_t i = 0; i < rr.firing_order.size(); ++i)
      replay = topple(m, replay, rr.firing_order[i], i == 0);
    if (replay != c)
      return "firing order of " + fmt(c) + " does not return to the start";
    if (level(m, c) != activities(m, tree).external_count())
      return "level of " + fmt(c) + " differs from the external activity of its tree";
    if (upsilon(m, c) != tree)
      return "burning " + fmt(c) + " gives " + cx.sub(upsilon(m, c)) + " not " + cx.sub(tree);
  }

  std::vector<long> levels;
  std::set<OutdegreeSequence> images;
  for (auto const &c : recurrent) {
    EdgeSet tree = upsilon(m, c);
    if (lambda(m, tree) != c)
      return "lambda(upsilon(" + fmt(c) + ")) = " + fmt(lambda(m, tree));
    int lv = level(m, c);
    bump(levels, lv);
    OutdegreeSequence d = sandpile_to_outdegree(m, c);
    if (!images.insert(d).second)
      return "two configurations share outdegrees " + join(d);
    if (!is_v0_connected_sequence(m, d))
      return "image of " + fmt(c) + " is not root-connected";
    if (lv == 0 && d != c)
      return "level-0 configuration " + fmt(c) + " maps to " + join(d);
  }
  if (auto w = compare_histogram("levels", levels, cx.tutte.at_x(1)))
    return w;

  if (m.num_vertices() <= cx.options.brute_force_vertices) {
    int nv = m.num_vertices();
    int root = m.root_vertex();
    SandpileConfig c(nv, 0);
    c[root] = m.degree(root);
    for (;;) {
      if (is_recurrent(m, c) != recurrent_by_permutations(m, c))
        return "greedy and exhaustive recurrence tests disagree on " + fmt(c);
      int v = 0;
      for (; v < nv; ++v) {
        if (v == root)
          continue;
        if (++c[v] < m.degree(v))
          break;
        c[v] = 0;
      }
      if (v == nv)
        break;
    }
  }
  return std::nullopt;
}

Witness check_root_components(Context &cx)
{
  auto const &m = cx.map;
  cx.touch("root_components");
  cx.touch("root_strong_components");
  VertexSet all = VertexSet::full(m.num_vertices());

  std::array<std::vector<long>, 3> comp, strong;
  for (std::size_t i = 0; i < cx.orientations.size(); ++i) {
    auto const &o = cx.orientations[i];
    RootComponentPartition rc = root_components(m, o);
    VertexSet seen;
    for (VertexSet b : rc.blocks) {
      if (b.empty() || b.intersects(seen))
        return "root components of " + cx.ori(o) + " overlap or are empty";
      seen = seen | b;
    }
    if (seen != all || !rc.blocks[0].contains(m.root_vertex()))
      return "root components of " + cx.ori(o) + " do not partition the vertices";
    EdgeSet links;
    for (int e : rc.linking_edges)
      links.insert(e);
    EdgeSet minima = head_min_cocycle_minima(m, o);
    if (links != minima)
      return "linking edges " + cx.sub(links) + " of " + cx.ori(o) +
             " differ from head-min cocycle minima " + cx.sub(minima);

    int k = static_cast<int>(rc.blocks.size()) - 1;
    bump(comp[0], k);
    if (cx.minimal[i])
      bump(comp[1], k);
    if (cx.classes[i].acyclic)
      bump(comp[2], k);

    if (!cx.classes[i].v0_connected)
      continue;
    if (rc.blocks.size() != 1)
      return "root-connected " + cx.ori(o) + " has several root components";
    RootComponentPartition rs = root_strong_components(m, o);
    seen = VertexSet();
    for (VertexSet b : rs.blocks) {
      if (b.empty() || b.intersects(seen))
        return "root-strong components of " + cx.ori(o) + " overlap or are empty";
      seen = seen | b;
    }
    if (seen != all)
      return "root-strong components of " + cx.ori(o) + " do not cover the vertices";
    EdgeSet strong_links;
    for (int e : rs.linking_edges)
      strong_links.insert(e);
    EdgeSet cmin = cocycle_minima(m, o);
    if (strong_links != cmin)
      return "strong linking edges " + cx.sub(strong_links) + " of " + cx.ori(o) +
             " differ from cocycle minima " + cx.sub(cmin);

    int ks = static_cast<int>(rs.blocks.size()) - 1;
    bump(strong[0], ks);
    if (cx.minimal[i])
      bump(strong[1], ks);
    if (cx.classes[i].acyclic)
      bump(strong[2], ks);
  }

  for (int j = 0; j < 3; ++j) {
    int y = 2 - j;
    if (auto w = compare_histogram("root components, y=" + std::to_string(y), comp[j],
                                   cx.tutte.shifted_at_y(y)))
      return w;
    if (auto w = compare_histogram("root-strong components, y=" + std::to_string(y),
                                   strong[j], cx.tutte.at_y(y)))
      return w;
  }
  return std::nullopt;
}

Witness check_bipolar(Context &cx)
{
  cx.touch("is_bipolar");
  auto const &m = cx.map;
  std::set<Orientation> bipolar;
  for (auto const &o : cx.orientations) {
    if (is_bipolar(m, o))
      bipolar.insert(o);
  }
  Integer want = cx.tutte.at_y(0).coefficient(1);
  if (want != bipolar.size())
    return std::to_string(bipolar.size()) + " bipolar orientations, coefficient " + want.str();

  std::set<Orientation> from_trees;
  for (EdgeSet tree : cx.trees) {
    Activities act = activities(m, tree);
    if (act.internal_count() == 1 && act.external_count() == 0)
      from_trees.insert(phi(m, tree));
  }
  if (from_trees != bipolar)
    return "trees with one internal activity do not map onto the bipolar orientations";
  return std::nullopt;
}

Witness check_duality(Context &cx)
{
  auto const &m = cx.map;
  CombinatorialMap d = dual_map(m);
  for (std::size_t i = 0; i < cx.subgraphs.size(); ++i) {
    Subgraph s = cx.subgraphs[i];
    Orientation lhs = cx.phis[i].reversed_all();
    Orientation rhs = phi(d, s.complement(m.num_edges()));
    if (lhs != rhs)
      return "subgraph " + cx.sub(s) + ": reversed orientation " + cx.ori(lhs) +
             " vs dual orientation " + cx.ori(rhs);
  }
  return std::nullopt;
}

} // namespace

MapReport verify_map(NamedMap const &named, VerifyOptions const &options,
                     std::set<std::string> &coverage)
{
  auto start = std::chrono::steady_clock::now();
  auto const &m = named.map;

  MapReport report;
  report.name = named.name;
  report.half_edges = m.num_half_edges();
  report.vertices = m.num_vertices();
  report.edges = m.num_edges();
  report.euler = euler_characteristic(m);
  coverage.insert("build_map");

  auto record = [&](std::string const &check, CheckStatus status, std::string witness) {
    report.checks.push_back({named.name, check, status, std::move(witness)});
  };

  if (m.num_half_edges() > options.max_half_edges) {
    record("size_cap", CheckStatus::Skip,
           std::to_string(m.num_half_edges()) + " half-edges exceed the cap of " +
             std::to_string(options.max_half_edges));
    return report;
  }

  Context cx{m, coverage, options, {}, {}, {}, {}, {}, {}, {}, {}};
  try {
    cx.touch("enumerate_spanning_trees");
    cx.touch("enumerate_subgraphs");
    cx.touch("enumerate_orientations");
    cx.trees = enumerate_spanning_trees(m);
    cx.subgraphs = enumerate_subgraphs(m);
    cx.orientations = enumerate_orientations(m);
    cx.tutte = tutte_polynomial(m);
    report.tutte = cx.tutte.to_string();
    for (Subgraph s : cx.subgraphs)
      cx.phis.push_back(phi(m, s));
    for (auto const &o : cx.orientations) {
      cx.psis.push_back(psi(m, o));
      cx.classes.push_back(classify(m, o));
      cx.minimal.push_back(is_minimal(m, o));
    }
  } catch (std::exception const &err) {
    record("setup", CheckStatus::Fail, err.what());
    return report;
  }

  auto run = [&](std::string const &check, std::function<Witness()> const &fn) {
    try {
      Witness w = fn();
      record(check, w ? CheckStatus::Fail : CheckStatus::Pass, w.value_or(""));
    } catch (std::exception const &err) {
      record(check, CheckStatus::Fail, std::string("exception: ") + err.what());
    }
  };

  run("map_structure", [&] { return check_map_structure(cx); });
  run("tutte_expansions", [&] { return check_tutte_expansions(cx); });
  run("tutte_root_independence", [&] { return check_root_independence(cx); });
  run("tree_tours", [&] { return check_tree_tours(cx); });
  run("tree_intervals", [&] { return check_tree_intervals(cx); });
  run("round_trips", [&] { return check_round_trips(cx); });
  run("census", [&] { return check_census(cx, report); });
  run("minimal_orientations", [&] { return check_minimal(cx); });
  run("minty", [&] { return check_minty(cx); });
  run("reachability", [&] { return check_reachability(cx); });
  run("flips", [&] { return check_flips(cx); });
  run("sandpile", [&] { return check_sandpile(cx); });
  run("root_components", [&] { return check_root_components(cx); });
  run("bipolar", [&] { return check_bipolar(cx); });
  if (report.euler == 0)
    run("duality", [&] { return check_duality(cx); });
  else
    record("duality", CheckStatus::Skip, "map is not planar");

  report.seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_all(std::vector<NamedMap> const &maps, VerifyOptions const &options)
{
  VerificationReport report;
  report.maps.resize(maps.size());
  std::vector<std::set<std::string>> coverage(maps.size());

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(maps.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < maps.size(); i = next++)
      report.maps[i] = verify_map(maps[i], options, coverage[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  for (auto const &c : coverage)
    report.coverage.insert(c.begin(), c.end());
  report.coverage.insert("verify_all");

  if (maps.size() > 1) {
    std::string missing;
    for (auto const &op : operation_names()) {
      if (!report.coverage.count(op))
        missing += (missing.empty() ? "" : ",") + op;
    }
    report.global_checks.push_back({"corpus", "coverage",
                                    missing.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                                    missing.empty() ? "" : "not exercised: " + missing});
  }
  return report;
}

VerificationReport verify_all(NamedMap const &map, VerifyOptions const &options)
{
  return verify_all(std::vector<NamedMap>{map}, options);
}

} // namespace mapbij
