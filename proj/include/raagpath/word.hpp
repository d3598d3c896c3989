#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raagpath/graph.hpp"

namespace raagpath {

/// A generator or its inverse. Letters order generator-major with the
/// positive letter first: v0 < v0^-1 < v1 < v1^-1 < ...
struct Letter
{
  VertexId gen = 0;
  bool inverse = false;

  Letter inv() const { return {gen, !inverse}; }
  std::uint32_t code() const { return 2 * gen + (inverse ? 1 : 0); }

  auto operator<=>(Letter const &o) const { return code() <=> o.code(); }
  bool operator==(Letter const &) const = default;
};

/// A word over the vertices of a graph Gamma, read in G(Gamma): generators
/// commute exactly when their vertices are distinct and NOT adjacent.
using Word = std::vector<Letter>;

using Span = std::pair<std::size_t, std::size_t>;

/// u != v and {u, v} is not an edge. Throws UnknownVertex.
bool commutes(Graph const &g, VertexId u, VertexId v);

Word inverse(Word const &w);
Word concat(Word const &a, Word const &b);

/// Throws GraphMismatch when a letter is not a vertex of g.
void check_word(Graph const &g, Word const &w);

/// A pair i < j of letters v^{+-1}, v^{-+1} such that every letter strictly
/// between commutes with v. The pair with the smallest j is returned (and
/// for that j the nearest i).
std::optional<Span> find_cancellation(Graph const &g, Word const &w);

bool is_reduced(Graph const &g, Word const &w);

/// Cancellation of v whose interior contains no v^{+-1} and no neighbor of v.
/// Throws UnknownVertex.
std::optional<Span> find_innermost_cancellation(Graph const &g, Word const &w,
                                                VertexId v);

/// Deletes cancelling pairs, leftmost first, until reduced.
Word reduce(Graph const &g, Word const &w);

/// Appends one letter to a reduced word, keeping it reduced: either the
/// letter is pushed or its cancelling partner is erased. Returns true when a
/// letter was erased.
bool append_reduced(Graph const &g, Word &reduced, Letter x);

/// Generators occurring in w as written.
VertexSet letter_support(Word const &w);

/// Support and length of the element represented by w.
VertexSet support_elem(Graph const &g, Word const &w);
std::size_t length_elem(Graph const &g, Word const &w);

bool equal_elements(Graph const &g, Word const &w1, Word const &w2);

/// Lexicographically least word among the reduced words representing w.
Word canonical_form(Graph const &g, Word const &w);

/// True when the (reduced) word is its own canonical form: no factor
/// b u a with a < b and a commuting with b and with every letter of u.
bool is_canonical(Graph const &g, Word const &w);

/// Visits every syntactically reduced word of length <= max_length in
/// length-then-lexicographic order. With `canonical_only`, visits only
/// canonical forms, i.e. one word per element. Return false from `visit`
/// to stop.
void enumerate_reduced_words(Graph const &g, std::size_t max_length,
                             std::function<bool(Word const &)> const &visit,
                             bool canonical_only = false);

std::vector<Word> reduced_words(Graph const &g, std::size_t max_length,
                                bool canonical_only = false);

/// Whitespace-separated `name` / `name^-1`. Throws ParseError.
Word parse_word(Graph const &g, std::string_view text);
std::string format_word(Graph const &g, Word const &w);

/// Commutation table for graphs with at most 64 vertices; used by the inner
/// loops of the word engine.
class CommutationMask
{
public:
  explicit CommutationMask(Graph const &g);

  bool commutes(VertexId u, VertexId v) const { return (_rows[u] >> v) & 1u; }
  std::uint64_t row(VertexId v) const { return _rows[v]; }

  static constexpr std::size_t max_vertices = 64;

private:
  std::vector<std::uint64_t> _rows;
};

} // namespace raagpath
