#include "mapbij/census.hpp"

#include "mapbij/bijection.hpp"
#include "mapbij/enumerate.hpp"
#include "mapbij/graph_util.hpp"
#include "mapbij/tree.hpp"
#include "mapbij/tutte.hpp"

namespace mapbij
{

ClassFlags subgraph_class(CombinatorialMap const &map, Subgraph s)
{
  Activities act = activities(map, delta(map, s));
  ClassFlags f;
  f.row[1] = is_forest(map, s);
  f.row[2] = act.external_active.empty();
  f.col[1] = is_connected_subgraph(map, s);
  f.col[2] = act.internal_active.empty();
  return f;
}

ClassFlags orientation_class(CombinatorialMap const &map, Orientation const &o)
{
  OrientationClass c = classify(map, o);
  ClassFlags f;
  f.row[1] = is_minimal(map, o);
  f.row[2] = c.acyclic;
  f.col[1] = c.v0_connected;
  f.col[2] = c.strongly_connected;
  return f;
}

Census specialization_census(CombinatorialMap const &map)
{
  Census census;
  TuttePolynomial t = tutte_polynomial(map);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c)
      census.tutte[r][c] = t.evaluate(2 - c, 2 - r);
  }

  for (Subgraph s : enumerate_subgraphs(map)) {
    ClassFlags fs = subgraph_class(map, s);
    Orientation o = phi(map, s);
    ClassFlags fo = orientation_class(map, o);
    if (fs != fo)
      census.violations.push_back("class of subgraph " + std::to_string(s.bits()) +
                                  " differs from class of its orientation");
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (fs.row[r] && fs.col[c]) {
          ++census.subgraphs[r][c];
          census.subgraph_members[r][c].push_back(s);
        }
      }
    }
  }

  for (Orientation const &o : enumerate_orientations(map)) {
    ClassFlags fo = orientation_class(map, o);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (fo.row[r] && fo.col[c]) {
          ++census.orientations[r][c];
          census.orientation_members[r][c].push_back(o);
        }
      }
    }
  }

  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      Integer want = census.tutte[r][c];
      if (census.subgraphs[r][c] != want || census.orientations[r][c] != want)
        census.violations.push_back(
          "cell (" + std::to_string(r) + "," + std::to_string(c) + "): subgraphs " +
          std::to_string(census.subgraphs[r][c]) + ", orientations " +
          std::to_string(census.orientations[r][c]) + ", polynomial " + want.str());
    }
  }
  return census;
}

} // namespace mapbij
