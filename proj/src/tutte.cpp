#include "mapbij/tutte.hpp"

#include "mapbij/enumerate.hpp"
#include "mapbij/graph_util.hpp"
#include "mapbij/tree.hpp"

namespace mapbij
{

namespace
{

// Adds c * (x-1)^a * y^j, or c * (x-1)^a * (y-1)^b when shift_y is set.
void add_shifted(TuttePolynomial &p, int a, int b, bool shift_y, Integer const &c)
{
  for (int i = 0; i <= a; ++i) {
    Integer cx = binomial(a, i) * (((a - i) % 2) ? -1 : 1);
    if (!shift_y) {
      p.add(i, b, c * cx);
      continue;
    }
    for (int j = 0; j <= b; ++j) {
      Integer cy = binomial(b, j) * (((b - j) % 2) ? -1 : 1);
      p.add(i, j, c * cx * cy);
    }
  }
}

} // namespace

TuttePolynomial tutte_polynomial(CombinatorialMap const &map)
{
  TuttePolynomial p;
  for (EdgeSet tree : enumerate_spanning_trees(map)) {
    Activities act = activities(map, tree);
    p.add(act.internal_count(), act.external_count(), 1);
  }
  return p;
}

TuttePolynomial tutte_subgraph_oracle(CombinatorialMap const &map)
{
  int nv = map.num_vertices();
  std::vector<std::vector<long>> counts;
  for (Subgraph s : enumerate_subgraphs(map)) {
    int c = component_count(map, s);
    int a = c - 1;
    int b = c + s.size() - nv;
    if (static_cast<int>(counts.size()) <= a)
      counts.resize(a + 1);
    if (static_cast<int>(counts[a].size()) <= b)
      counts[a].resize(b + 1, 0);
    ++counts[a][b];
  }

  TuttePolynomial p;
  for (int a = 0; a < static_cast<int>(counts.size()); ++a) {
    for (int b = 0; b < static_cast<int>(counts[a].size()); ++b) {
      if (counts[a][b])
        add_shifted(p, a, b, true, counts[a][b]);
    }
  }
  return p;
}

TuttePolynomial forest_expansion(CombinatorialMap const &map)
{
  TuttePolynomial p;
  for (Subgraph s : enumerate_subgraphs(map)) {
    if (!is_forest(map, s))
      continue;
    EdgeSet tree = delta(map, s);
    int ext = activities(map, tree).external_count();
    add_shifted(p, component_count(map, s) - 1, ext, false, 1);
  }
  return p;
}

} // namespace mapbij
