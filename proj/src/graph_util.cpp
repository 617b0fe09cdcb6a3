#include "mapbij/graph_util.hpp"

#include <numeric>

#include "mapbij/error.hpp"

namespace mapbij
{

DisjointSets::DisjointSets(int n) : _parent(n), _count(n)
{
  std::iota(_parent.begin(), _parent.end(), 0);
}

int DisjointSets::find(int x)
{
  while (_parent[x] != x) {
    _parent[x] = _parent[_parent[x]];
    x = _parent[x];
  }
  return x;
}

bool DisjointSets::unite(int x, int y)
{
  x = find(x);
  y = find(y);
  if (x == y)
    return false;
  _parent[y] = x;
  --_count;
  return true;
}

DisjointSets components_of(CombinatorialMap const &map, EdgeSet edges)
{
  DisjointSets ds(map.num_vertices());
  edges.for_each([&](int e) {
    auto ends = map.endpoints(e);
    ds.unite(ends[0], ends[1]);
  });
  return ds;
}

int component_count(CombinatorialMap const &map, EdgeSet edges)
{
  return components_of(map, edges).count();
}

bool is_connected_subgraph(CombinatorialMap const &map, EdgeSet edges)
{
  return component_count(map, edges) == 1;
}

bool is_forest(CombinatorialMap const &map, EdgeSet edges)
{
  return component_count(map, edges) + edges.size() == map.num_vertices();
}

bool is_spanning_tree(CombinatorialMap const &map, EdgeSet edges)
{
  return edges.size() == map.num_vertices() - 1 && is_connected_subgraph(map, edges);
}

void require_spanning_tree(CombinatorialMap const &map, EdgeSet tree)
{
  if (!tree.subset_of(map.all_edges()) || !is_spanning_tree(map, tree))
    fail(ErrorKind::NotASpanningTree, "edge set is not a spanning tree");
}

bool joined_by(CombinatorialMap const &map, EdgeSet edges, int u, int v)
{
  return components_of(map, edges).same(u, v);
}

int inner_edge_count(CombinatorialMap const &map, VertexSet vertices)
{
  int count = 0;
  for (int e = 0; e < map.num_edges(); ++e) {
    auto ends = map.endpoints(e);
    if (vertices.contains(ends[0]) && vertices.contains(ends[1]))
      ++count;
  }
  return count;
}

} // namespace mapbij
