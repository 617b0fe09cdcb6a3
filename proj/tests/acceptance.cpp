#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "mapbij/bijection.hpp"
#include "mapbij/census.hpp"
#include "mapbij/corpus.hpp"
#include "mapbij/enumerate.hpp"
#include "mapbij/graph_util.hpp"
#include "mapbij/sandpile.hpp"
#include "mapbij/tree.hpp"
#include "mapbij/tutte.hpp"
#include "oracles.hpp"

using namespace mapbij;

namespace
{

using Clock = std::chrono::steady_clock;

struct Outcome
{
  bool ok = true;
  std::string note;

  void fail(std::string const &what)
  {
    if (ok)
      note = what;
    ok = false;
  }
};

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome tutte_k3(double &elapsed)
{
  Outcome out;
  auto start = Clock::now();
  auto m = k3_map();
  for (HalfEdge h = 0; h < m.num_half_edges(); ++h) {
    std::string t = tutte_polynomial(m.with_root(h)).to_string();
    if (t != "x^2 + x + y")
      out.fail("root " + m.token(h) + " gives " + t);
  }
  elapsed = seconds_since(start);
  if (elapsed >= 1.0)
    out.fail("took " + std::to_string(elapsed) + " s");
  return out;
}

Outcome expansions(std::vector<NamedMap> const &corpus, double &elapsed)
{
  Outcome out;
  auto start = Clock::now();
  for (auto const &nm : corpus) {
    auto tree = tutte_polynomial(nm.map);
    auto sub = tutte_subgraph_oracle(nm.map);
    auto forest = forest_expansion(nm.map);
    if (!(tree == sub) || !(tree == forest))
      out.fail(nm.name + ": " + tree.to_string() + " / " + sub.to_string() + " / " +
               forest.to_string());
    if (!(tree == oracle::tutte(nm.map)))
      out.fail(nm.name + ": differs from deletion and contraction");
  }
  elapsed = seconds_since(start);
  if (elapsed >= 60.0)
    out.fail("took " + std::to_string(elapsed) + " s");
  return out;
}

Outcome round_trips(std::vector<NamedMap> const &corpus)
{
  Outcome out;
  for (auto const &nm : corpus) {
    auto const &m = nm.map;
    for (Subgraph s : enumerate_subgraphs(m)) {
      if (psi(m, phi(m, s)) != s)
        out.fail(nm.name + ": subgraph " + std::to_string(s.bits()));
    }
    for (auto const &o : enumerate_orientations(m)) {
      if (phi(m, psi(m, o)) != o)
        out.fail(nm.name + ": orientation " + std::to_string(o.reversed().bits()));
    }
  }
  return out;
}

Outcome partition(std::vector<NamedMap> const &corpus)
{
  Outcome out;
  for (auto const &nm : corpus) {
    auto const &m = nm.map;
    std::map<std::uint64_t, int> hits;
    for (EdgeSet t : enumerate_spanning_trees(m)) {
      auto act = oracle::activity(m, t.bits());
      auto members = tree_interval(m, t).members();
      std::size_t want = std::size_t{1} << (std::popcount(act.internal | act.external));
      if (members.size() != want)
        out.fail(nm.name + ": interval size " + std::to_string(members.size()));
      for (Subgraph s : members)
        ++hits[s.bits()];
    }
    if (hits.size() != (std::size_t{1} << m.num_edges()))
      out.fail(nm.name + ": intervals do not cover every subgraph");
    for (auto const &[s, n] : hits) {
      if (n != 1)
        out.fail(nm.name + ": subgraph in " + std::to_string(n) + " intervals");
    }
  }
  return out;
}

Outcome census(std::vector<NamedMap> const &corpus)
{
  Outcome out;
  Table3<std::uint64_t> k3_want{{{8, 4, 2}, {7, 3, 1}, {6, 2, 0}}};
  Census k3 = specialization_census(k3_map());
  if (k3.subgraphs != k3_want || k3.orientations != k3_want)
    out.fail("K3 table differs");
  for (auto const &nm : corpus) {
    Census c = specialization_census(nm.map);
    auto t = oracle::tutte(nm.map);
    if (!c.consistent())
      out.fail(nm.name + ": " + c.violations.front());
    for (int r = 0; r < 3; ++r) {
      for (int k = 0; k < 3; ++k) {
        Integer want = t.evaluate(2 - k, 2 - r);
        if (Integer(c.subgraphs[r][k]) != want || Integer(c.orientations[r][k]) != want)
          out.fail(nm.name + ": cell " + std::to_string(r) + "," + std::to_string(k));
      }
    }
  }
  return out;
}

Outcome minimal(std::vector<NamedMap> const &corpus)
{
  Outcome out;
  for (auto const &nm : corpus) {
    auto const &m = nm.map;
    std::map<OutdegreeSequence, int> count;
    for (auto const &o : enumerate_orientations(m)) {
      bool mine = is_minimal(m, o);
      bool ref = oracle::minimal(m, o, oracle::delta(m, psi(m, o).bits()));
      if (mine != ref)
        out.fail(nm.name + ": minimality disagrees with the definition");
      count[outdegree_sequence(m, o)] += mine;
    }
    for (auto const &[d, n] : count) {
      if (n != 1)
        out.fail(nm.name + ": " + std::to_string(n) + " minimal orientations for one sequence");
    }
    for (Subgraph s : enumerate_subgraphs(m)) {
      if (is_forest(m, s) && gamma_inverse(m, gamma(m, s)) != s)
        out.fail(nm.name + ": forest " + std::to_string(s.bits()));
    }
  }
  return out;
}

Outcome sandpile(std::vector<NamedMap> const &corpus)
{
  Outcome out;
  auto k3 = k3_map();
  std::multiset<int> k3_levels;
  for (auto const &c : enumerate_recurrent(k3))
    k3_levels.insert(level(k3, c));
  if (k3_levels != std::multiset<int>{0, 0, 1})
    out.fail("K3 levels differ");
  for (auto const &nm : corpus) {
    auto const &m = nm.map;
    auto t = oracle::tutte(m);
    auto rec = enumerate_recurrent(m);
    if (Integer(rec.size()) != t.evaluate(1, 1))
      out.fail(nm.name + ": " + std::to_string(rec.size()) + " recurrent configurations");
    std::map<int, long> hist;
    for (auto const &c : rec) {
      int l = level(m, c);
      ++hist[l];
      if (lambda(m, upsilon(m, c)) != c)
        out.fail(nm.name + ": lambda after upsilon");
      if (l == 0 && sandpile_to_outdegree(m, c) != c)
        out.fail(nm.name + ": level-0 configuration moved");
    }
    auto ty = t.at_x(1);
    for (int i = 0; i <= m.num_edges(); ++i) {
      if (Integer(hist[i]) != ty.coefficient(i))
        out.fail(nm.name + ": level histogram at " + std::to_string(i));
    }
    for (EdgeSet tree : enumerate_spanning_trees(m)) {
      if (upsilon(m, lambda(m, tree)) != tree)
        out.fail(nm.name + ": upsilon after lambda");
    }
  }
  return out;
}

Outcome refinements(std::vector<NamedMap> const &corpus)
{
  Outcome out;
  for (auto const &nm : corpus) {
    auto const &m = nm.map;
    auto t = oracle::tutte(m);
    std::array<std::map<int, long>, 3> comp, strong;
    long bipolar = 0;
    for (auto const &o : enumerate_orientations(m)) {
      auto cls = classify(m, o);
      std::array<bool, 3> in{true, is_minimal(m, o), oracle::directed_cycles(m, o).empty()};
      int k = static_cast<int>(root_components(m, o).blocks.size()) - 1;
      int ks = cls.v0_connected
                 ? static_cast<int>(root_strong_components(m, o).blocks.size()) - 1
                 : -1;
      for (int j = 0; j < 3; ++j) {
        if (!in[j])
          continue;
        ++comp[j][k];
        if (cls.v0_connected)
          ++strong[j][ks];
      }
      bipolar += is_bipolar(m, o);
    }
    for (int j = 0; j < 3; ++j) {
      auto shifted = t.shifted_at_y(2 - j);
      auto plain = t.at_y(2 - j);
      for (int i = 0; i <= m.num_edges(); ++i) {
        if (Integer(comp[j][i]) != shifted.coefficient(i))
          out.fail(nm.name + ": root components, y=" + std::to_string(2 - j));
        if (Integer(strong[j][i]) != plain.coefficient(i))
          out.fail(nm.name + ": root-strong components, y=" + std::to_string(2 - j));
      }
    }
    if (Integer(bipolar) != t.at_y(0).coefficient(1))
      out.fail(nm.name + ": " + std::to_string(bipolar) + " bipolar orientations");
  }
  return out;
}

Outcome duality(std::vector<NamedMap> const &corpus, int &planar)
{
  Outcome out;
  planar = 0;
  for (auto const &nm : corpus) {
    auto const &m = nm.map;
    if (euler_characteristic(m) != 0)
      continue;
    ++planar;
    auto d = dual_map(m);
    for (Subgraph s : enumerate_subgraphs(m)) {
      if (phi(m, s).reversed_all() != phi(d, s.complement(m.num_edges())))
        out.fail(nm.name + ": subgraph " + std::to_string(s.bits()));
    }
  }
  return out;
}

bool report(int n, std::string const &title, Outcome const &o, std::string const &extra = "")
{
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
  if (!extra.empty())
    std::cout << " (" << extra << ")";
  if (!o.ok)
    std::cout << " -- " << o.note;
  std::cout << '\n';
  return o.ok;
}

std::string ms(double s)
{
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s * 1000.0 << " ms";
  return out.str();
}

} // namespace

int main()
{
  auto corpus = build_corpus({});
  bool ok = true;
  double t1 = 0, t2 = 0;
  int planar = 0;

  Outcome first = tutte_k3(t1);
  ok &= report(1, "Tutte polynomial of K3 at all six roots", first, ms(t1));
  Outcome second = expansions(corpus, t2);
  ok &= report(2, "tree, subgraph and forest expansions agree on " +
                    std::to_string(corpus.size()) + " maps",
               second, ms(t2));
  ok &= report(3, "subgraph and orientation round trips", round_trips(corpus));
  ok &= report(4, "tree intervals partition the subgraphs", partition(corpus));
  ok &= report(5, "3x3 census matches the Tutte evaluations", census(corpus));
  ok &= report(6, "unique minimal orientation per outdegree sequence", minimal(corpus));
  ok &= report(7, "recurrent configurations and levels", sandpile(corpus));
  ok &= report(8, "root component, root-strong and bipolar counts", refinements(corpus));
  Outcome d = duality(corpus, planar);
  ok &= report(9, "duality on planar maps", d, std::to_string(planar) + " planar maps");
  return ok ? 0 : 1;
}
