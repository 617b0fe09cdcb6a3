#include <doctest.h>

#include <map>
#include <set>

#include "mapbij/corpus.hpp"
#include "mapbij/enumerate.hpp"
#include "mapbij/error.hpp"
#include "mapbij/graph_util.hpp"
#include "mapbij/tree.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mapbij;

namespace
{

std::vector<std::string> cycle_from_root(CombinatorialMap const &m, Permutation const &t)
{
  std::vector<std::string> res;
  HalfEdge h = m.root();
  do {
    res.push_back(m.token(h));
    h = t[h];
  } while (h != m.root() && res.size() <= t.size());
  return res;
}

std::vector<std::string> names(CombinatorialMap const &m, std::vector<int> const &edges)
{
  std::vector<std::string> res;
  for (int e : edges)
    res.push_back(m.edge_name(e));
  return res;
}

std::vector<NamedMap> small_corpus()
{
  CorpusOptions o;
  o.random_count = 20;
  return build_corpus(o);
}

} // namespace

TEST_CASE("motion function")
{
  auto k3 = k3_map();
  CHECK(cycle_from_root(k3, motion_function(k3, test::edges(k3, "a,b"))) ==
        std::vector<std::string>{"a", "b", "c", "b'", "a'", "c'"});

  auto s6 = six_edge_map();
  CHECK(cycle_from_root(s6, motion_function(s6, test::edges(s6, "a,b,d"))) ==
        std::vector<std::string>{"a", "e", "f", "c", "a'", "f'", "b", "c'", "e'", "b'", "d",
                                 "d'"});

  auto se = single_edge_map();
  CHECK(cycle_from_root(se, motion_function(se, EdgeSet(1))) ==
        std::vector<std::string>{"a", "a'"});

  CHECK_THROWS_AS(motion_function(k3, test::edges(k3, "a")), Error);
}

TEST_CASE("tree order")
{
  auto s6 = six_edge_map();
  GTOrder o6 = gt_order(s6, test::edges(s6, "a,b,d"));
  CHECK(names(s6, o6.edges_in_order()) ==
        std::vector<std::string>{"a", "e", "f", "c", "b", "d"});

  auto k3 = k3_map();
  GTOrder o = gt_order(k3, test::edges(k3, "a,b"));
  CHECK(names(k3, o.edges_in_order()) == std::vector<std::string>{"a", "b", "c"});
  CHECK(o.less(test::half(k3, "c"), test::half(k3, "b'")));
  CHECK(o.less(test::half(k3, "b'"), test::half(k3, "a'")));
  CHECK(o.less(test::half(k3, "a'"), test::half(k3, "c'")));

  for (auto const &nm : small_corpus()) {
    for (EdgeSet t : enumerate_spanning_trees(nm.map)) {
      GTOrder g = gt_order(nm.map, t);
      CHECK(g.rank(nm.map.root()) == 0);
      CHECK(g.edges_in_order() == oracle::tour_edge_order(nm.map, t.bits()));
    }
  }
}

TEST_CASE("fundamental sets")
{
  auto k3 = k3_map();
  EdgeSet t = test::edges(k3, "a,b");
  CHECK(fundamental_cycle(k3, t, test::edge(k3, "c")) == test::edges(k3, "a,b,c"));
  CHECK(fundamental_cocycle(k3, t, test::edge(k3, "a")) == test::edges(k3, "a,c"));
  CHECK(fundamental_cocycle(k3, t, test::edge(k3, "b")) == test::edges(k3, "b,c"));
  CHECK_THROWS_AS(fundamental_cycle(k3, t, test::edge(k3, "a")), Error);
  CHECK_THROWS_AS(fundamental_cocycle(k3, t, test::edge(k3, "c")), Error);

  auto loop = single_loop_map();
  CHECK(fundamental_cycle(loop, EdgeSet(), 0) == EdgeSet(1));

  auto b2 = bundle_map(2);
  CHECK(fundamental_cycle(b2, EdgeSet(1), 1) == EdgeSet(0b11));

  for (auto const &nm : small_corpus()) {
    auto const &m = nm.map;
    for (EdgeSet tree : enumerate_spanning_trees(m)) {
      for (int e = 0; e < m.num_edges(); ++e) {
        if (tree.contains(e))
          CHECK(fundamental_cocycle(m, tree, e).bits() ==
                oracle::fundamental_cocycle(m, tree.bits(), e));
        else
          CHECK(fundamental_cycle(m, tree, e).bits() ==
                oracle::fundamental_cycle(m, tree.bits(), e));
      }
    }
  }
}

TEST_CASE("activities")
{
  auto s6 = six_edge_map();
  Activities a6 = activities(s6, test::edges(s6, "a,b,d"));
  CHECK(a6.internal_active == test::edges(s6, "a,d"));
  CHECK(a6.external_active.empty());

  auto k3 = k3_map();
  Activities a = activities(k3, test::edges(k3, "a,b"));
  CHECK(a.internal_active == test::edges(k3, "a,b"));
  CHECK(a.external_active.empty());

  Activities s = activities(single_edge_map(), EdgeSet(1));
  CHECK(s.internal_count() == 1);
  CHECK(s.external_count() == 0);

  CHECK_THROWS_AS(activities(k3, test::edges(k3, "a")), Error);

  for (auto const &nm : small_corpus()) {
    for (EdgeSet tree : enumerate_spanning_trees(nm.map)) {
      Activities got = activities(nm.map, tree);
      oracle::Activity want = oracle::activity(nm.map, tree.bits());
      CHECK(got.internal_active.bits() == want.internal);
      CHECK(got.external_active.bits() == want.external);
    }
  }
}

TEST_CASE("ancestor criterion")
{
  auto k3 = k3_map();
  CHECK_FALSE(external_active_iff_ancestor(k3, test::edges(k3, "a,b"), test::edge(k3, "c")));
  EdgeSet t2 = test::edges(k3, "a,c");
  CHECK(external_active_iff_ancestor(k3, t2, test::edge(k3, "b")) ==
        activities(k3, t2).external_active.contains(test::edge(k3, "b")));
  CHECK(external_active_iff_ancestor(single_loop_map(), EdgeSet(), 0));
  CHECK_THROWS_AS(external_active_iff_ancestor(k3, t2, test::edge(k3, "a")), Error);

  for (auto const &nm : small_corpus()) {
    for (EdgeSet tree : enumerate_spanning_trees(nm.map)) {
      Activities act = activities(nm.map, tree);
      for (int e = 0; e < nm.map.num_edges(); ++e) {
        if (!tree.contains(e))
          CHECK(external_active_iff_ancestor(nm.map, tree, e) ==
                act.external_active.contains(e));
      }
    }
  }
}

TEST_CASE("postfix order")
{
  auto k3 = k3_map();
  CHECK(postfix_order(k3, test::edges(k3, "a,b")) ==
        std::vector<int>{test::vertex(k3, "b'"), test::vertex(k3, "a'"), test::vertex(k3, "a")});

  // Path v0 - v1 - v2 rooted at v0.
  auto path = parse_map("root a\nsigma (a)(a' b)(b')\nalpha (a a')(b b')\n");
  CHECK(postfix_order(path, path.all_edges()) ==
        std::vector<int>{test::vertex(path, "b'"), test::vertex(path, "a'"),
                         test::vertex(path, "a")});

  for (auto const &nm : small_corpus()) {
    for (EdgeSet tree : enumerate_spanning_trees(nm.map))
      CHECK(postfix_order(nm.map, tree).back() == nm.map.root_vertex());
  }
}

TEST_CASE("spanning trees and subgraph counts")
{
  auto k3 = k3_map();
  CHECK(enumerate_subgraphs(k3).size() == 8);
  CHECK(enumerate_orientations(k3).size() == 8);
  CHECK(enumerate_spanning_trees(k3).size() == 3);
  auto loop = single_loop_map();
  CHECK(enumerate_subgraphs(loop).size() == 2);
  CHECK(enumerate_orientations(loop).size() == 2);
  REQUIRE(enumerate_spanning_trees(loop).size() == 1);
  CHECK(enumerate_spanning_trees(loop)[0].empty());
  CHECK(enumerate_spanning_trees(single_edge_map()).size() == 1);
  CHECK(enumerate_spanning_trees(five_tree_map()).size() == 5);

  for (auto const &nm : small_corpus()) {
    std::vector<std::uint64_t> got;
    for (EdgeSet t : enumerate_spanning_trees(nm.map))
      got.push_back(t.bits());
    CHECK(got == oracle::spanning_trees(nm.map));
  }

  auto big = bundle_map(17);
  CHECK_THROWS_AS(enumerate_subgraphs(big), Error);
}

TEST_CASE("graph utilities")
{
  auto k3 = k3_map();
  CHECK(is_forest(k3, test::edges(k3, "a,b")));
  CHECK_FALSE(is_forest(k3, k3.all_edges()));
  CHECK(is_connected_subgraph(k3, test::edges(k3, "a,c")));
  CHECK_FALSE(is_connected_subgraph(k3, test::edges(k3, "a")));
  CHECK(is_spanning_tree(k3, test::edges(k3, "b,c")));
  CHECK_FALSE(is_forest(single_loop_map(), EdgeSet(1)));
}

TEST_CASE("delta")
{
  auto k3 = k3_map();
  for (EdgeSet t : enumerate_spanning_trees(k3))
    CHECK(delta(k3, t) == t);
  CHECK(delta(k3, k3.all_edges()).bits() == oracle::delta(k3, k3.all_edges().bits()));
  CHECK(delta(k3, k3.all_edges()) == test::edges(k3, "b,c"));
  CHECK(delta(k3, EdgeSet()).bits() == oracle::delta(k3, 0));
  CHECK(delta(k3, EdgeSet()) == test::edges(k3, "a,b"));

  for (auto const &nm : small_corpus()) {
    for (Subgraph s : enumerate_subgraphs(nm.map))
      CHECK(delta(nm.map, s).bits() == oracle::delta(nm.map, s.bits()));
  }
}

TEST_CASE("tree intervals")
{
  auto k3 = k3_map();
  TreeInterval iv = tree_interval(k3, test::edges(k3, "a,b"));
  auto members = iv.members();
  std::set<EdgeSet> got(members.begin(), members.end());
  CHECK(got == std::set<EdgeSet>{test::edges(k3, "a,b"), test::edges(k3, "a"),
                                 test::edges(k3, "b"), EdgeSet()});
  CHECK(iv.size() == 4);

  auto s6 = six_edge_map();
  CHECK(tree_interval(s6, test::edges(s6, "a,b,d")).size() == 4);
  CHECK_THROWS_AS(tree_interval(k3, test::edges(k3, "a")), Error);

  for (auto const &nm : small_corpus()) {
    std::map<std::uint64_t, int> hits;
    for (EdgeSet t : enumerate_spanning_trees(nm.map)) {
      TreeInterval i = tree_interval(nm.map, t);
      auto ms = i.members();
      CHECK(ms.size() == i.size());
      for (Subgraph s : ms)
        ++hits[s.bits()];
    }
    CHECK(hits.size() == (std::size_t{1} << nm.map.num_edges()));
    for (auto const &[s, n] : hits)
      CHECK(n == 1);
  }
}
