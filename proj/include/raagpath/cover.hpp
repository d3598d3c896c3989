#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "raagpath/morphism.hpp"

namespace raagpath {

/// A vertex of the universal cover of a connected graph: a walk from `base`
/// without immediate backtracking. Its projection is the last vertex.
struct Walk
{
  VertexId base = 0;
  std::vector<VertexId> steps;

  VertexId end() const { return steps.empty() ? base : steps.back(); }
  std::size_t length() const { return steps.size(); }

  auto operator<=>(Walk const &) const = default;
  bool operator==(Walk const &) const = default;
};

/// Consecutive vertices adjacent and no subsequence x, y, x.
bool is_walk(Graph const &g, Walk const &w);

/// Free (backtrack) reduction of an arbitrary vertex sequence starting at
/// `base`. Throws BadParameter when two consecutive vertices are not
/// adjacent.
Walk reduce_walk(Graph const &g, VertexId base, std::vector<VertexId> const &sequence);

/// One step in the cover: extends by z, or retracts when z is the previous
/// vertex.
Walk step(Graph const &g, Walk const &w, VertexId z);

/// Neighbors of w in the universal cover: its parent (if any) first, then
/// the extensions in vertex order.
std::vector<Walk> cover_neighbors(Graph const &g, Walk const &w);

/// One walk extends the other by a single step.
bool cover_adjacent(Walk const &a, Walk const &b);

/// "[base>s1>s2]" using vertex names.
std::string walk_name(Graph const &g, Walk const &w);

/// A deck transformation of the universal cover, i.e. a reduced closed walk
/// at the base. The identity is the empty loop.
struct Deck
{
  Walk loop;

  bool is_identity() const { return loop.steps.empty(); }
  auto operator<=>(Deck const &) const = default;
  bool operator==(Deck const &) const = default;
};

Deck identity_deck(VertexId base);

/// The unique deck transformation sending u to t. Throws BaseMismatch and
/// ProjectionMismatch.
Deck deck_from_pair(Graph const &g, Walk const &u, Walk const &t);

/// Throws BaseMismatch.
Walk apply_deck(Graph const &g, Deck const &sigma, Walk const &w);

/// sigma1 after sigma2.
Deck compose(Graph const &g, Deck const &sigma1, Deck const &sigma2);

/// An immersion of a forest realised as an induced subgraph of the
/// universal cover: every domain vertex gets its walk.
struct CoverEmbedding
{
  GraphMap map;
  std::vector<Walk> walks;

  std::optional<VertexId> vertex_of(Walk const &w) const;
  VertexId base() const { return walks.empty() ? 0 : walks.front().base; }

private:
  friend CoverEmbedding make_embedding(GraphMap, std::vector<Walk>);
  std::map<Walk, VertexId> _index;
};

/// Validates the walks against the map and builds the lookup index. Throws
/// ProjectionMismatch, BaseMismatch, or NotInduced when two vertices share a
/// walk or adjacency disagrees with the cover.
CoverEmbedding make_embedding(GraphMap map, std::vector<Walk> walks);

/// Places each tree component by its root walk and propagates along tree
/// edges. Throws NotForest, NotImmersion, RootMismatch, BadParameter (one
/// root per component) and NotInduced.
CoverEmbedding embed_forest(GraphMap const &f, std::vector<VertexId> const &roots,
                            std::vector<Walk> const &root_walks);

/// Connected forest (a tree) rooted at its first vertex, whose walk is the
/// spanning-tree walk from `base` to the root's image. Throws Disconnected
/// when the domain or the codomain is disconnected.
CoverEmbedding embed_forest(GraphMap const &f, VertexId base = 0);

/// Walks of a breadth-first spanning tree of g rooted at `base`, in
/// breadth-first order; the projections list every vertex once.
/// Throws Disconnected and UnknownVertex.
std::vector<Walk> spanning_tree_lift(Graph const &g, VertexId base = 0);

/// Decks moving some embedded vertex onto some element of F over the same
/// vertex. Sorted, duplicate-free. Throws EmptyF.
std::vector<Deck> sigma_set(CoverEmbedding const &e, std::vector<Walk> const &F);

struct Enlargement
{
  CoverEmbedding embedding;  ///< Lambda_1 with its projection
  std::vector<Deck> sigma;
  VertexSet f_vertices;      ///< ids in Lambda_1 of the elements of F present there
};

/// Induced subgraph of the cover on the union of the deck translates of the
/// embedded graph. Walks already present in the embedding keep their names
/// and come first, in their original order; new walks follow in walk order
/// and are named by walk_name. Throws EmptyF.
Enlargement enlarge(CoverEmbedding const &e, std::vector<Walk> const &F);

/// Induced subgraph of the cover on a finite set of walks, as an embedding.
/// `names` overrides walk_name per walk.
CoverEmbedding cover_subgraph(GraphPtr gamma, std::vector<Walk> const &walks,
                              std::map<Walk, std::string> const &names = {});

} // namespace raagpath
