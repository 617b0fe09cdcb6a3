#ifndef GUARD_MAPBIJ_MAP_HPP
#define GUARD_MAPBIJ_MAP_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edge_set.hpp"

namespace mapbij
{

using HalfEdge = int;

// Rooted combinatorial map on half-edges 0..|H|-1. Half-edges are indexed in
// lexicographic order of their tokens, so indices do not depend on the order
// in which a map was written down.
class CombinatorialMap
{
public:
  // Validates and sorts; sigma and alpha are index arrays over `tokens`.
  CombinatorialMap(std::vector<std::string> tokens,
                   std::vector<HalfEdge> const &sigma,
                   std::vector<HalfEdge> const &alpha,
                   HalfEdge root);

  int num_half_edges() const { return static_cast<int>(_tokens.size()); }
  int num_vertices() const { return static_cast<int>(_vertices.size()); }
  int num_edges() const { return static_cast<int>(_edges.size()); }

  HalfEdge root() const { return _root; }
  int root_vertex() const { return _vertex_of[_root]; }
  int root_edge() const { return _edge_of[_root]; }

  HalfEdge sigma(HalfEdge h) const { return _sigma[h]; }
  HalfEdge sigma_inv(HalfEdge h) const { return _sigma_inv[h]; }
  HalfEdge alpha(HalfEdge h) const { return _alpha[h]; }
  HalfEdge face_step(HalfEdge h) const { return _sigma[_alpha[h]]; }

  int vertex_of(HalfEdge h) const { return _vertex_of[h]; }
  int edge_of(HalfEdge h) const { return _edge_of[h]; }

  // The sigma-cycle of v, starting at its least half-edge.
  std::vector<HalfEdge> const &vertex_cycle(int v) const { return _vertices[v]; }
  int degree(int v) const { return static_cast<int>(_vertices[v].size()); }

  // Half-edges of e, least token first.
  std::array<HalfEdge, 2> const &edge_half_edges(int e) const { return _edges[e]; }
  std::array<int, 2> endpoints(int e) const
  { return {_vertex_of[_edges[e][0]], _vertex_of[_edges[e][1]]}; }
  int other_endpoint(int e, int v) const;
  bool is_loop(int e) const
  { return _vertex_of[_edges[e][0]] == _vertex_of[_edges[e][1]]; }

  std::string const &token(HalfEdge h) const { return _tokens[h]; }
  std::vector<std::string> const &tokens() const { return _tokens; }
  std::optional<HalfEdge> find_token(std::string_view token) const;

  std::string const &edge_name(int e) const { return _tokens[_edges[e][0]]; }
  std::string const &vertex_name(int v) const { return _tokens[_vertices[v][0]]; }

  std::vector<HalfEdge> const &sigma_array() const { return _sigma; }
  std::vector<HalfEdge> const &alpha_array() const { return _alpha; }

  EdgeSet all_edges() const { return EdgeSet::full(num_edges()); }

  CombinatorialMap with_root(HalfEdge root) const;

  // Equality of the underlying labelled maps, independent of indexing.
  friend bool operator==(CombinatorialMap const &lhs,
                         CombinatorialMap const &rhs);

private:
  std::vector<std::string> _tokens;
  std::vector<HalfEdge> _sigma;
  std::vector<HalfEdge> _sigma_inv;
  std::vector<HalfEdge> _alpha;
  HalfEdge _root;

  std::vector<int> _vertex_of;
  std::vector<int> _edge_of;
  std::vector<std::vector<HalfEdge>> _vertices;
  std::vector<std::array<HalfEdge, 2>> _edges;
};

CombinatorialMap build_map(std::vector<std::string> const &tokens,
                           std::vector<std::vector<std::string>> const &sigma_cycles,
                           std::vector<std::vector<std::string>> const &alpha_pairs,
                           std::string const &root);

struct Graph
{
  int num_vertices = 0;
  std::vector<std::array<int, 2>> endpoints;
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;

  int num_edges() const { return static_cast<int>(endpoints.size()); }
  bool is_loop(int e) const { return endpoints[e][0] == endpoints[e][1]; }
};

Graph underlying_graph(CombinatorialMap const &map);

CombinatorialMap dual_map(CombinatorialMap const &map);

int num_faces(CombinatorialMap const &map);

int euler_characteristic(CombinatorialMap const &map);

inline bool is_planar(CombinatorialMap const &map)
{ return euler_characteristic(map) == 0; }

bool valid_token(std::string_view token);

} // namespace mapbij

#endif // GUARD_MAPBIJ_MAP_HPP
