#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raagpath {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids of one graph.
using VertexSet = std::vector<VertexId>;

using NamedEdge = std::pair<std::string, std::string>;

/// Finite simplicial graph with named vertices.
///
/// Vertex ids are positions in the vertex list; that list order is also the
/// graph's default total order. Values are immutable once built.
class Graph
{
public:
  Graph() = default;

  /// Validates distinct names, known endpoints and the absence of loops.
  /// Duplicate edges are merged.
  static Graph make(std::vector<std::string> vertices,
                    std::vector<NamedEdge> const &edges);
  static Graph make(std::vector<std::string> vertices,
                    std::vector<std::pair<VertexId, VertexId>> const &edges);

  std::size_t size() const noexcept { return _names.size(); }
  bool empty() const noexcept { return _names.empty(); }
  std::size_t edge_count() const noexcept { return _edge_count; }

  std::string const &name(VertexId v) const { return _names.at(v); }
  std::vector<std::string> const &names() const noexcept { return _names; }

  std::optional<VertexId> find(std::string_view name) const;

  /// Throws UnknownVertex.
  VertexId id(std::string_view name) const;

  std::span<VertexId const> neighbors(VertexId v) const { return _adj.at(v); }
  std::size_t degree(VertexId v) const { return _adj.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Same vertex names in the same order and the same edge set.
  bool operator==(Graph const &other) const;

private:
  std::vector<std::string> _names;
  std::unordered_map<std::string, VertexId> _index;
  std::vector<std::vector<VertexId>> _adj;
  std::size_t _edge_count = 0;
};

/// A total order on the vertices of one graph (earlier = smaller).
class TotalOrder
{
public:
  TotalOrder() = default;

  static TotalOrder identity(std::size_t n);
  static TotalOrder of(Graph const &g) { return identity(g.size()); }

  /// `sequence` lists every vertex exactly once; throws BadParameter otherwise.
  static TotalOrder from_sequence(std::size_t n, std::vector<VertexId> sequence);
  static TotalOrder from_names(Graph const &g,
                               std::vector<std::string> const &names);

  std::size_t size() const noexcept { return _sequence.size(); }
  bool less(VertexId a, VertexId b) const { return _rank[a] < _rank[b]; }
  std::size_t rank(VertexId v) const { return _rank.at(v); }
  std::vector<VertexId> const &sequence() const noexcept { return _sequence; }

  /// Order inherited by an induced subgraph; vertices are matched by name.
  TotalOrder restricted(Graph const &parent, Graph const &sub) const;

  /// Sorts ids ascending in this order.
  void sort(std::vector<VertexId> &ids) const;

  bool operator==(TotalOrder const &) const = default;

private:
  std::vector<VertexId> _sequence;
  std::vector<std::size_t> _rank;
};

enum class Family { Cycle, Path, Complete, CompleteBipartite, Edgeless };

/// C_m (m >= 3), P_n (n >= 1), K_n (n >= 1), K_{a,b} (a, b >= 1) or the
/// edgeless graph on n >= 1 vertices. Vertices are v0, v1, ...; for K_{a,b}
/// the first a vertices form one side.
Graph standard_graph(Family kind, int p, int q = 0);

inline Graph cycle_graph(int m) { return standard_graph(Family::Cycle, m); }
inline Graph path_graph(int n) { return standard_graph(Family::Path, n); }
inline Graph complete_graph(int n) { return standard_graph(Family::Complete, n); }

/// The graph used for the exponential lower bound on tree size: vertices
/// v0, u1, v1, ..., uk, vk (plus v{k+1} when m = 2k + 2), with an edge
/// between every pair of vertices whose indices differ by exactly one.
Graph lowerbound_graph(int m);

Graph complement(Graph const &g);

/// Neighbors of v.
VertexSet link(Graph const &g, VertexId v);

/// Induced subgraph on s, keeping the parent's vertex order and names.
Graph induced_subgraph(Graph const &g, VertexSet const &s);

/// Induced subgraph on V(g) \ a.
Graph remove(Graph const &g, VertexSet const &a);

/// Connected components, each sorted, ordered by their least vertex.
std::vector<VertexSet> components(Graph const &g);

bool is_connected(Graph const &g);
bool is_forest(Graph const &g);

/// Converts names to a sorted id set; throws UnknownVertex.
VertexSet vertex_set(Graph const &g, std::vector<std::string> const &names);

std::vector<std::string> names_of(Graph const &g, std::span<VertexId const> ids);

} // namespace raagpath
