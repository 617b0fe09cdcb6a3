#ifndef GUARD_MAPBIJ_CORPUS_HPP
#define GUARD_MAPBIJ_CORPUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "map.hpp"

namespace mapbij
{

struct NamedMap
{
  std::string name;
  CombinatorialMap map;
};

CombinatorialMap k3_map();
CombinatorialMap six_edge_map();
CombinatorialMap five_tree_map();
CombinatorialMap single_edge_map();
CombinatorialMap single_loop_map();
CombinatorialMap bundle_map(int k);
CombinatorialMap k4_planar_map();
CombinatorialMap k5_toroidal_map();

// Random fixed-point-free alpha and uniform sigma on 2m half-edges,
// 1 <= m <= max_half_edges / 2, resampled until transitive.
CombinatorialMap random_map(std::mt19937_64 &rng, int max_half_edges);

struct CorpusOptions
{
  std::uint64_t seed = 42;
  int random_count = 50;
  int max_half_edges = 12;
};

// Named maps first, then the seeded random maps.
std::vector<NamedMap> build_corpus(CorpusOptions const &options);

} // namespace mapbij

#endif // GUARD_MAPBIJ_CORPUS_HPP
