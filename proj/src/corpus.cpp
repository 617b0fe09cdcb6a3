#include "mapbij/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "mapbij/error.hpp"
#include "mapbij/map_io.hpp"

namespace mapbij
{

CombinatorialMap k3_map()
{
  return parse_map("root a\n"
                   "sigma (a c')(a' b)(b' c)\n"
                   "alpha (a a')(b b')(c c')\n");
}

CombinatorialMap six_edge_map()
{
  return parse_map("root a\n"
                   "sigma (a f' b d)(d')(a' e f c)(e' b' c')\n"
                   "alpha (a a')(b b')(c c')(d d')(e e')(f f')\n");
}

CombinatorialMap five_tree_map()
{
  return parse_map("root a\n"
                   "sigma (a d' c')(a' b)(b' c d)\n"
                   "alpha (a a')(b b')(c c')(d d')\n");
}

CombinatorialMap single_edge_map()
{
  return parse_map("root a\nsigma (a)(a')\nalpha (a a')\n");
}

CombinatorialMap single_loop_map()
{
  return parse_map("root a\nsigma (a a')\nalpha (a a')\n");
}

CombinatorialMap bundle_map(int k)
{
  if (k < 1 || k > 26)
    fail(ErrorKind::InvalidArgument, "bundle size out of range");
  std::string first, second, alpha;
  for (int i = 0; i < k; ++i) {
    std::string t(1, static_cast<char>('a' + i));
    first += (i ? " " : "") + t;
    second = t + "'" + (i ? " " : "") + second;
    alpha += "(" + t + " " + t + "')";
  }
  return parse_map("root a\nsigma (" + first + ")(" + second + ")\nalpha " + alpha + "\n");
}

CombinatorialMap k4_planar_map()
{
  return parse_map("root a\n"
                   "sigma (a b c)(a' e d)(b' d' f)(c' f' e')\n"
                   "alpha (a a')(b b')(c c')(d d')(e e')(f f')\n");
}

CombinatorialMap k5_toroidal_map()
{
  return parse_map("root a\n"
                   "sigma (a b c d)(a' e f g)(b' e' i h)(c' h' f' j)(d' j' g' i')\n"
                   "alpha (a a')(b b')(c c')(d d')(e e')(f f')(g g')(h h')(i i')(j j')\n");
}

CombinatorialMap random_map(std::mt19937_64 &rng, int max_half_edges)
{
  int max_edges = std::min(max_half_edges / 2, 26);
  if (max_edges < 1)
    fail(ErrorKind::InvalidArgument, "random maps need room for one edge");

  int m = std::uniform_int_distribution<int>(1, max_edges)(rng);
  int n = 2 * m;
  std::vector<std::string> tokens;
  for (int i = 0; i < m; ++i) {
    tokens.emplace_back(1, static_cast<char>('a' + i));
    tokens.push_back(tokens.back() + "'");
  }

  for (;;) {
    std::vector<int> halves(n);
    std::iota(halves.begin(), halves.end(), 0);
    std::shuffle(halves.begin(), halves.end(), rng);
    std::vector<HalfEdge> alpha(n);
    for (int i = 0; i < n; i += 2) {
      alpha[halves[i]] = halves[i + 1];
      alpha[halves[i + 1]] = halves[i];
    }

    std::vector<HalfEdge> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);

    HalfEdge root = std::uniform_int_distribution<int>(0, n - 1)(rng);
    try {
      // Rename so that each alpha pair reads x, x'.
      std::vector<std::string> names(n);
      int next = 0;
      for (int h = 0; h < n; ++h) {
        if (names[h].empty()) {
          names[h] = tokens[2 * next];
          names[alpha[h]] = tokens[2 * next + 1];
          ++next;
        }
      }
      return CombinatorialMap(names, sigma, alpha, root);
    } catch (Error const &err) {
      if (err.kind() != ErrorKind::NotTransitive)
        throw;
    }
  }
}

std::vector<NamedMap> build_corpus(CorpusOptions const &options)
{
  std::vector<NamedMap> corpus{
    {"K3", k3_map()},
    {"six_edge", six_edge_map()},
    {"five_trees", five_tree_map()},
    {"single_edge", single_edge_map()},
    {"single_loop", single_loop_map()},
    {"bundle2", bundle_map(2)},
    {"bundle3", bundle_map(3)},
    {"K4", k4_planar_map()},
  };
  corpus.erase(std::remove_if(corpus.begin(), corpus.end(),
                              [&](NamedMap const &nm) {
                                return nm.map.num_half_edges() > options.max_half_edges;
                              }),
               corpus.end());

  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < options.random_count; ++i)
    corpus.push_back({"random" + std::to_string(i), random_map(rng, options.max_half_edges)});
  return corpus;
}

} // namespace mapbij
