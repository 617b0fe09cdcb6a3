#ifndef GUARD_MAPBIJ_EDGE_SET_HPP
#define GUARD_MAPBIJ_EDGE_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace mapbij
{

// Subsets of edges (or vertices) of a map with at most 64 elements.
class EdgeSet
{
public:
  static constexpr int max_size = 64;

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : _bits(bits) {}

  static constexpr EdgeSet full(int n)
  { return EdgeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }

  static constexpr EdgeSet single(int e)
  { return EdgeSet(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return _bits; }
  constexpr bool contains(int e) const { return (_bits >> e) & 1U; }
  constexpr bool empty() const { return _bits == 0; }
  constexpr int size() const { return std::popcount(_bits); }
  constexpr int lowest() const { return _bits ? std::countr_zero(_bits) : -1; }

  constexpr void insert(int e) { _bits |= std::uint64_t{1} << e; }
  constexpr void erase(int e) { _bits &= ~(std::uint64_t{1} << e); }
  constexpr void toggle(int e) { _bits ^= std::uint64_t{1} << e; }

  constexpr bool subset_of(EdgeSet other) const
  { return (_bits & ~other._bits) == 0; }

  constexpr bool intersects(EdgeSet other) const
  { return (_bits & other._bits) != 0; }

  constexpr EdgeSet complement(int n) const
  { return EdgeSet(~_bits & full(n)._bits); }

  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(_bits | o._bits); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(_bits & o._bits); }
  constexpr EdgeSet operator^(EdgeSet o) const { return EdgeSet(_bits ^ o._bits); }
  constexpr EdgeSet operator-(EdgeSet o) const { return EdgeSet(_bits & ~o._bits); }

  constexpr auto operator<=>(EdgeSet const &) const = default;

  std::vector<int> elements() const
  {
    std::vector<int> res;
    for (std::uint64_t b = _bits; b; b &= b - 1)
      res.push_back(std::countr_zero(b));
    return res;
  }

  template<typename F>
  void for_each(F &&f) const
  {
    for (std::uint64_t b = _bits; b; b &= b - 1)
      f(std::countr_zero(b));
  }

private:
  std::uint64_t _bits = 0;
};

using VertexSet = EdgeSet;
using Subgraph = EdgeSet;

} // namespace mapbij

#endif // GUARD_MAPBIJ_EDGE_SET_HPP
