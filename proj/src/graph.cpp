#include "raagpath/graph.hpp"

#include <algorithm>
#include <numeric>

#include "raagpath/error.hpp"

namespace raagpath {

Graph Graph::make(std::vector<std::string> vertices,
                  std::vector<NamedEdge> const &edges)
{
  std::unordered_map<std::string, VertexId> index;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second)
      throw Error(ErrorKind::DuplicateVertex, vertices[i]);
  }

  std::vector<std::pair<VertexId, VertexId>> ids;
  ids.reserve(edges.size());
  for (auto const &[a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      throw Error(ErrorKind::UnknownEndpoint, a);
    if (ib == index.end())
      throw Error(ErrorKind::UnknownEndpoint, b);
    ids.emplace_back(ia->second, ib->second);
  }
  return make(std::move(vertices), ids);
}

Graph Graph::make(std::vector<std::string> vertices,
                  std::vector<std::pair<VertexId, VertexId>> const &edges)
{
  Graph g;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    if (!g._index.emplace(vertices[i], i).second)
      throw Error(ErrorKind::DuplicateVertex, vertices[i]);
  }
  g._names = std::move(vertices);
  g._adj.resize(g._names.size());

  for (auto [u, v] : edges) {
    if (u >= g.size() || v >= g.size())
      throw Error(ErrorKind::UnknownEndpoint,
                  "vertex id " + std::to_string(std::max(u, v)));
    if (u == v)
      throw Error(ErrorKind::LoopEdge, g._names[u]);
    g._adj[u].push_back(v);
    g._adj[v].push_back(u);
  }

  for (auto &nbrs : g._adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g._edge_count += nbrs.size();
  }
  g._edge_count /= 2;
  return g;
}

std::optional<VertexId> Graph::find(std::string_view name) const
{
  auto it = _index.find(std::string(name));
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

VertexId Graph::id(std::string_view name) const
{
  if (auto v = find(name))
    return *v;
  throw Error(ErrorKind::UnknownVertex, std::string(name));
}

bool Graph::adjacent(VertexId u, VertexId v) const
{
  auto const &nbrs = _adj.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const
{
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(_edge_count);
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v : _adj[u]) {
      if (u < v)
        out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::operator==(Graph const &other) const
{
  return _names == other._names && _adj == other._adj;
}

TotalOrder TotalOrder::identity(std::size_t n)
{
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  return from_sequence(n, std::move(seq));
}

TotalOrder TotalOrder::from_sequence(std::size_t n, std::vector<VertexId> sequence)
{
  if (sequence.size() != n)
    throw Error(ErrorKind::BadParameter, "order must list every vertex once");

  TotalOrder ord;
  ord._rank.assign(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    VertexId v = sequence[r];
    if (v >= n || ord._rank[v] != n)
      throw Error(ErrorKind::BadParameter, "order is not a permutation");
    ord._rank[v] = r;
  }
  ord._sequence = std::move(sequence);
  return ord;
}

TotalOrder TotalOrder::from_names(Graph const &g,
                                  std::vector<std::string> const &names)
{
  std::vector<VertexId> seq;
  seq.reserve(names.size());
  for (auto const &n : names)
    seq.push_back(g.id(n));
  return from_sequence(g.size(), std::move(seq));
}

TotalOrder TotalOrder::restricted(Graph const &parent, Graph const &sub) const
{
  std::vector<VertexId> seq;
  seq.reserve(sub.size());
  for (VertexId v : _sequence) {
    if (auto s = sub.find(parent.name(v)))
      seq.push_back(*s);
  }
  return from_sequence(sub.size(), std::move(seq));
}

void TotalOrder::sort(std::vector<VertexId> &ids) const
{
  std::sort(ids.begin(), ids.end(),
            [this](VertexId a, VertexId b) { return _rank[a] < _rank[b]; });
}

namespace {

std::vector<std::string> numbered(std::string_view prefix, int n, int first = 0)
{
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(std::string(prefix) + std::to_string(first + i));
  return out;
}

} // namespace

Graph standard_graph(Family kind, int p, int q)
{
  std::vector<std::pair<VertexId, VertexId>> edges;

  switch (kind) {
  case Family::Cycle:
    if (p < 3)
      throw Error(ErrorKind::BadParameter, "cycle needs m >= 3");
    for (int i = 0; i + 1 < p; ++i)
      edges.emplace_back(i, i + 1);
    edges.emplace_back(p - 1, 0);
    return Graph::make(numbered("v", p), edges);

  case Family::Path:
    if (p < 1)
      throw Error(ErrorKind::BadParameter, "path needs n >= 1");
    for (int i = 0; i + 1 < p; ++i)
      edges.emplace_back(i, i + 1);
    return Graph::make(numbered("v", p), edges);

  case Family::Complete:
    if (p < 1)
      throw Error(ErrorKind::BadParameter, "complete graph needs n >= 1");
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j)
        edges.emplace_back(i, j);
    return Graph::make(numbered("v", p), edges);

  case Family::CompleteBipartite:
    if (p < 1 || q < 1)
      throw Error(ErrorKind::BadParameter, "K_{a,b} needs a, b >= 1");
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j)
        edges.emplace_back(i, p + j);
    return Graph::make(numbered("v", p + q), edges);

  case Family::Edgeless:
    if (p < 1)
      throw Error(ErrorKind::BadParameter, "edgeless graph needs n >= 1");
    return Graph::make(numbered("v", p), edges);
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

Graph lowerbound_graph(int m)
{
  if (m < 3)
    throw Error(ErrorKind::BadParameter, "lower-bound graph needs m >= 3");

  int const k = (m - 1) / 2;
  bool const even = m % 2 == 0;

  // ids: v0 = 0, u_i = 2i - 1, v_i = 2i, v_{k+1} = 2k + 1
  std::vector<std::string> names{"v0"};
  for (int i = 1; i <= k; ++i) {
    names.push_back("u" + std::to_string(i));
    names.push_back("v" + std::to_string(i));
  }
  if (even)
    names.push_back("v" + std::to_string(k + 1));

  auto u = [](int i) { return VertexId(2 * i - 1); };
  auto v = [](int i) { return VertexId(2 * i); };

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i <= k - 1; ++i) {
    edges.emplace_back(v(i), v(i + 1));
    edges.emplace_back(u(i), u(i + 1));
    edges.emplace_back(v(i), u(i + 1));
    edges.emplace_back(u(i), v(i + 1));
  }
  edges.emplace_back(v(0), u(1));
  edges.emplace_back(v(0), v(1));
  if (even) {
    VertexId last = 2 * k + 1;
    edges.emplace_back(v(k), last);
    edges.emplace_back(u(k), last);
  }
  return Graph::make(std::move(names), edges);
}

Graph complement(Graph const &g)
{
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 0; a < g.size(); ++a)
    for (VertexId b = a + 1; b < g.size(); ++b)
      if (!g.adjacent(a, b))
        edges.emplace_back(a, b);
  return Graph::make(g.names(), edges);
}

VertexSet link(Graph const &g, VertexId v)
{
  if (v >= g.size())
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
  auto nbrs = g.neighbors(v);
  return VertexSet(nbrs.begin(), nbrs.end());
}

Graph induced_subgraph(Graph const &g, VertexSet const &s)
{
  std::vector<VertexId> keep(s.begin(), s.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<VertexId> position(g.size(), VertexId(-1));
  std::vector<std::string> names;
  for (VertexId v : keep) {
    if (v >= g.size())
      throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
    position[v] = VertexId(names.size());
    names.push_back(g.name(v));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v : keep)
    for (VertexId w : g.neighbors(v))
      if (v < w && position[w] != VertexId(-1))
        edges.emplace_back(position[v], position[w]);
  return Graph::make(std::move(names), edges);
}

Graph remove(Graph const &g, VertexSet const &a)
{
  std::vector<bool> drop(g.size(), false);
  for (VertexId v : a) {
    if (v >= g.size())
      throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
    drop[v] = true;
  }
  VertexSet keep;
  for (VertexId v = 0; v < g.size(); ++v)
    if (!drop[v])
      keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> components(Graph const &g)
{
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.size(), false);
  for (VertexId s = 0; s < g.size(); ++s) {
    if (seen[s])
      continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(Graph const &g)
{
  return components(g).size() <= 1;
}

bool is_forest(Graph const &g)
{
  return g.edge_count() + components(g).size() == g.size();
}

VertexSet vertex_set(Graph const &g, std::vector<std::string> const &names)
{
  VertexSet out;
  for (auto const &n : names)
    out.push_back(g.id(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> names_of(Graph const &g, std::span<VertexId const> ids)
{
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (VertexId v : ids)
    out.push_back(g.name(v));
  return out;
}

} // namespace raagpath
