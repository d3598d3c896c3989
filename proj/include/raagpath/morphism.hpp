#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "raagpath/graph.hpp"

namespace raagpath {

using GraphPtr = std::shared_ptr<Graph const>;

inline GraphPtr share(Graph g) { return std::make_shared<Graph const>(std::move(g)); }

/// A map of graphs: a vertex assignment sending adjacent vertices to
/// adjacent vertices. Edge images are implied.
class GraphMap
{
public:
  GraphMap() = default;

  /// Throws NotAMapOfGraphs when an edge is sent to a non-edge or collapsed.
  static GraphMap make(GraphPtr domain, GraphPtr codomain,
                       std::vector<VertexId> assignment);
  static GraphMap make(GraphPtr domain, GraphPtr codomain,
                       std::map<std::string, std::string> const &assignment);

  Graph const &domain() const { return *_domain; }
  Graph const &codomain() const { return *_codomain; }
  GraphPtr const &domain_ptr() const { return _domain; }
  GraphPtr const &codomain_ptr() const { return _codomain; }

  VertexId operator()(VertexId v) const { return _assignment[v]; }
  std::vector<VertexId> const &assignment() const noexcept { return _assignment; }

  /// Preimage of a codomain vertex, ascending by domain id.
  VertexSet const &fiber(VertexId v) const { return _fibers.at(v); }

  bool is_surjective() const;

  bool operator==(GraphMap const &other) const;

private:
  GraphPtr _domain;
  GraphPtr _codomain;
  std::vector<VertexId> _assignment;
  std::vector<VertexSet> _fibers;
};

/// Locally injective: injective on every link.
bool is_immersion(GraphMap const &f);

/// Surjective on vertices and bijective from each link onto the link of the
/// image.
bool is_covering(GraphMap const &f);

/// Restriction to induced subgraphs `sub_domain` <= domain(f) and
/// `sub_codomain` <= codomain(f), identified by vertex name. Throws
/// NotInduced when either argument is not an induced subgraph and
/// ImageEscapesCodomain when the image leaves `sub_codomain`.
GraphMap restrict(GraphMap const &f, Graph const &sub_domain,
                  Graph const &sub_codomain);

/// Restriction phi(Lambda \ phi^-1(removed), Gamma \ removed).
GraphMap remove_fibers(GraphMap const &f, VertexSet const &removed);

/// g after f.
GraphMap compose(GraphMap const &g, GraphMap const &f);

GraphMap identity_map(GraphPtr g);

/// Name of the vertex at integer position `pos` of the bi-infinite path
/// covering C_m: residue r = pos mod m on sheet s = floor(pos / m) is called
/// v{r} followed by (1 - s) primes written as 'p' for s <= 0, and by s + 1
/// letters 'q' for s > 0.
std::string cover_position_name(long pos, int m);

/// The restriction of the covering of C_m by the bi-infinite path to a
/// segment of n consecutive vertices.
///
/// For n >= m the segment is [m - n, m - 1], which ends at v{m-1}p and has
/// v0p at position 0; for n < m it is [0, n - 1]. This reproduces the
/// labels of the familiar pictures (P_8 = v2pp v3pp v4pp v0p v1p v2p v3p v4p
/// over C_5). The domain vertex list starts with sheet 0 in residue order,
/// followed by the other sheets, nearest first; the path edges follow
/// positions.
GraphMap cycle_to_path_map(int n, int m);

} // namespace raagpath
