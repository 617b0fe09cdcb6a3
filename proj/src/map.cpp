#include "mapbij/map.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "mapbij/error.hpp"

namespace mapbij
{

bool valid_token(std::string_view token)
{
  if (token.empty())
    return false;

  for (char c : token) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '\'';
    if (!ok)
      return false;
  }
  return true;
}

CombinatorialMap::CombinatorialMap(std::vector<std::string> tokens,
                                   std::vector<HalfEdge> const &sigma,
                                   std::vector<HalfEdge> const &alpha,
                                   HalfEdge root)
{
  int n = static_cast<int>(tokens.size());
  if (n == 0)
    fail(ErrorKind::InvalidArgument, "a map needs at least one half-edge");
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(alpha.size()) != n)
    fail(ErrorKind::InvalidArgument, "permutation size does not match token count");

  for (auto const &t : tokens) {
    if (!valid_token(t))
      fail(ErrorKind::InvalidToken, "invalid token '" + t + "'");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return tokens[i] < tokens[j]; });
  for (int i = 1; i < n; ++i) {
    if (tokens[order[i]] == tokens[order[i - 1]])
      fail(ErrorKind::DuplicateToken, "token '" + tokens[order[i]] + "' repeated");
  }

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i)
    pos[order[i]] = i;

  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] < 0 || sigma[i] >= n || hit[sigma[i]])
      fail(ErrorKind::InvalidArgument, "sigma is not a permutation");
    hit[sigma[i]] = true;
  }
  for (int i = 0; i < n; ++i) {
    if (alpha[i] < 0 || alpha[i] >= n)
      fail(ErrorKind::AlphaNotInvolution, "alpha is out of range");
    if (alpha[i] == i)
      fail(ErrorKind::AlphaFixedPoint, "alpha fixes '" + tokens[i] + "'");
    if (alpha[alpha[i]] != i)
      fail(ErrorKind::AlphaNotInvolution, "alpha is not an involution at '" +
                                              tokens[i] + "'");
  }
  if (root < 0 || root >= n)
    fail(ErrorKind::UnknownRoot, "root is not a half-edge");

  _tokens.resize(n);
  _sigma.resize(n);
  _alpha.resize(n);
  for (int i = 0; i < n; ++i) {
    _tokens[pos[i]] = std::move(tokens[i]);
    _sigma[pos[i]] = pos[sigma[i]];
    _alpha[pos[i]] = pos[alpha[i]];
  }
  _root = pos[root];

  _sigma_inv.resize(n);
  for (int h = 0; h < n; ++h)
    _sigma_inv[_sigma[h]] = h;

  std::vector<bool> seen(n, false);
  std::vector<HalfEdge> stack{_root};
  seen[_root] = true;
  int reached = 1;
  while (!stack.empty()) {
    HalfEdge h = stack.back();
    stack.pop_back();
    for (HalfEdge g : {_sigma[h], _sigma_inv[h], _alpha[h]}) {
      if (!seen[g]) {
        seen[g] = true;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  if (reached != n)
    fail(ErrorKind::NotTransitive, "sigma and alpha do not act transitively");

  _vertex_of.assign(n, -1);
  _edge_of.assign(n, -1);
  for (HalfEdge h = 0; h < n; ++h) {
    if (_vertex_of[h] < 0) {
      int v = static_cast<int>(_vertices.size());
      _vertices.emplace_back();
      HalfEdge g = h;
      do {
        _vertex_of[g] = v;
        _vertices.back().push_back(g);
        g = _sigma[g];
      } while (g != h);
    }
    if (_edge_of[h] < 0) {
      int e = static_cast<int>(_edges.size());
      _edges.push_back({h, _alpha[h]});
      _edge_of[h] = _edge_of[_alpha[h]] = e;
    }
  }
}

int CombinatorialMap::other_endpoint(int e, int v) const
{
  auto ends = endpoints(e);
  return ends[0] == v ? ends[1] : ends[0];
}

std::optional<HalfEdge> CombinatorialMap::find_token(std::string_view token) const
{
  auto it = std::lower_bound(_tokens.begin(), _tokens.end(), token,
                             [](std::string const &a, std::string_view b) { return a < b; });
  if (it == _tokens.end() || *it != token)
    return std::nullopt;
  return static_cast<HalfEdge>(it - _tokens.begin());
}

CombinatorialMap CombinatorialMap::with_root(HalfEdge root) const
{
  return CombinatorialMap(_tokens, _sigma, _alpha, root);
}

bool operator==(CombinatorialMap const &lhs, CombinatorialMap const &rhs)
{
  // Indices follow sorted tokens, so equal token lists mean equal indexing.
  return lhs._tokens == rhs._tokens && lhs._sigma == rhs._sigma &&
         lhs._alpha == rhs._alpha && lhs._root == rhs._root;
}

CombinatorialMap build_map(std::vector<std::string> const &tokens,
                           std::vector<std::vector<std::string>> const &sigma_cycles,
                           std::vector<std::vector<std::string>> const &alpha_pairs,
                           std::string const &root)
{
  int n = static_cast<int>(tokens.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!valid_token(tokens[i]))
      fail(ErrorKind::InvalidToken, "invalid token '" + tokens[i] + "'");
    if (!index.emplace(tokens[i], i).second)
      fail(ErrorKind::DuplicateToken, "token '" + tokens[i] + "' repeated");
  }

  auto lookup = [&](std::string const &t) {
    auto it = index.find(t);
    if (it == index.end())
      fail(ErrorKind::UnknownToken, "token '" + t + "' is not declared");
    return it->second;
  };

  std::vector<HalfEdge> sigma(n, -1);
  for (auto const &cycle : sigma_cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int h = lookup(cycle[i]);
      if (sigma[h] >= 0)
        fail(ErrorKind::DuplicateToken, "token '" + cycle[i] + "' repeated in sigma");
      sigma[h] = lookup(cycle[(i + 1) % cycle.size()]);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (sigma[i] < 0)
      fail(ErrorKind::MissingToken, "token '" + tokens[i] + "' missing from sigma");
  }

  std::vector<HalfEdge> alpha(n, -1);
  for (auto const &pair : alpha_pairs) {
    if (pair.size() == 1 || (pair.size() == 2 && pair[0] == pair[1]))
      fail(ErrorKind::AlphaFixedPoint, "alpha fixes '" + pair[0] + "'");
    if (pair.size() != 2)
      fail(ErrorKind::AlphaNotInvolution, "alpha cycle of length " +
                                              std::to_string(pair.size()));
    int a = lookup(pair[0]);
    int b = lookup(pair[1]);
    if (alpha[a] >= 0 || alpha[b] >= 0)
      fail(ErrorKind::DuplicateToken, "token repeated in alpha");
    alpha[a] = b;
    alpha[b] = a;
  }
  for (int i = 0; i < n; ++i) {
    if (alpha[i] < 0)
      fail(ErrorKind::AlphaFixedPoint, "alpha fixes '" + tokens[i] + "'");
  }

  auto it = index.find(root);
  if (it == index.end())
    fail(ErrorKind::UnknownRoot, "root '" + root + "' is not a half-edge");

  return CombinatorialMap(tokens, sigma, alpha, it->second);
}

Graph underlying_graph(CombinatorialMap const &map)
{
  Graph g;
  g.num_vertices = map.num_vertices();
  for (int v = 0; v < map.num_vertices(); ++v)
    g.vertex_names.push_back(map.vertex_name(v));
  for (int e = 0; e < map.num_edges(); ++e) {
    g.endpoints.push_back(map.endpoints(e));
    g.edge_names.push_back(map.edge_name(e));
  }
  return g;
}

CombinatorialMap dual_map(CombinatorialMap const &map)
{
  int n = map.num_half_edges();
  std::vector<HalfEdge> phi(n);
  for (HalfEdge h = 0; h < n; ++h)
    phi[h] = map.face_step(h);
  return CombinatorialMap(map.tokens(), phi, map.alpha_array(), map.root());
}

int num_faces(CombinatorialMap const &map)
{
  int n = map.num_half_edges();
  std::vector<bool> seen(n, false);
  int faces = 0;
  for (HalfEdge h = 0; h < n; ++h) {
    if (seen[h])
      continue;
    ++faces;
    for (HalfEdge g = h; !seen[g]; g = map.face_step(g))
      seen[g] = true;
  }
  return faces;
}

int euler_characteristic(CombinatorialMap const &map)
{
  return map.num_vertices() + num_faces(map) - map.num_edges() - 2;
}

} // namespace mapbij
