#ifndef GUARD_MAPBIJ_CENSUS_HPP
#define GUARD_MAPBIJ_CENSUS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "map.hpp"
#include "orientation.hpp"
#include "polynomial.hpp"

namespace mapbij
{

template<typename T>
using Table3 = std::array<std::array<T, 3>, 3>;

// Rows: any / forest (minimal) / internal (acyclic).
// Columns: any / connected (root-connected) / external (strongly connected).
// Cell (r, c) is compared with T(2 - c, 2 - r).
struct Census
{
  Table3<std::uint64_t> subgraphs{};
  Table3<std::uint64_t> orientations{};
  Table3<Integer> tutte{};
  Table3<std::vector<Subgraph>> subgraph_members;
  Table3<std::vector<Orientation>> orientation_members;
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
};

struct ClassFlags
{
  std::array<bool, 3> row{true, false, false};
  std::array<bool, 3> col{true, false, false};

  bool operator==(ClassFlags const &) const = default;
};

ClassFlags subgraph_class(CombinatorialMap const &map, Subgraph s);
ClassFlags orientation_class(CombinatorialMap const &map, Orientation const &o);

Census specialization_census(CombinatorialMap const &map);

} // namespace mapbij

#endif // GUARD_MAPBIJ_CENSUS_HPP
