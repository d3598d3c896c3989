#include "raagpath/word.hpp"

#include <algorithm>
#include <cctype>

#include "raagpath/error.hpp"

namespace raagpath {

bool commutes(Graph const &g, VertexId u, VertexId v)
{
  if (u >= g.size() || v >= g.size())
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(std::max(u, v)));
  return u != v && !g.adjacent(u, v);
}

Word inverse(Word const &w)
{
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(it->inv());
  return out;
}

Word concat(Word const &a, Word const &b)
{
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_word(Graph const &g, Word const &w)
{
  for (Letter x : w) {
    if (x.gen >= g.size())
      throw Error(ErrorKind::GraphMismatch,
                  "generator id " + std::to_string(x.gen) + " is not a vertex");
  }
}

namespace {

/// Graph adjacency as a commutation predicate.
struct GraphComm
{
  Graph const &g;
  bool operator()(VertexId u, VertexId v) const { return u != v && !g.adjacent(u, v); }
};

struct MaskComm
{
  CommutationMask const &m;
  bool operator()(VertexId u, VertexId v) const { return m.commutes(u, v); }
};

template <typename Comm>
bool append_with(Comm const &comm, Word &reduced, Letter x)
{
  for (std::size_t k = reduced.size(); k-- > 0;) {
    if (comm(reduced[k].gen, x.gen))
      continue;
    if (reduced[k] == x.inv()) {
      reduced.erase(reduced.begin() + std::ptrdiff_t(k));
      return true;
    }
    break;
  }
  reduced.push_back(x);
  return false;
}

} // namespace

std::optional<Span> find_cancellation(Graph const &g, Word const &w)
{
  check_word(g, w);
  GraphComm comm{g};
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t k = j; k-- > 0;) {
      if (comm(w[k].gen, w[j].gen))
        continue;
      if (w[k] == w[j].inv())
        return Span{k, j};
      break;
    }
  }
  return std::nullopt;
}

bool is_reduced(Graph const &g, Word const &w)
{
  return !find_cancellation(g, w);
}

std::optional<Span> find_innermost_cancellation(Graph const &g, Word const &w,
                                                VertexId v)
{
  if (v >= g.size())
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
  check_word(g, w);

  std::optional<std::size_t> prev;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j].gen != v)
      continue;
    if (prev && w[*prev].inverse != w[j].inverse) {
      bool blocked = false;
      for (std::size_t k = *prev + 1; k < j && !blocked; ++k)
        blocked = g.adjacent(v, w[k].gen);
      if (!blocked)
        return Span{*prev, j};
    }
    prev = j;
  }
  return std::nullopt;
}

bool append_reduced(Graph const &g, Word &reduced, Letter x)
{
  return append_with(GraphComm{g}, reduced, x);
}

Word reduce(Graph const &g, Word const &w)
{
  check_word(g, w);
  // Appending letter by letter deletes, at every step, the cancelling pair
  // with the smallest right end; the prefix stays reduced throughout.
  Word out;
  out.reserve(w.size());
  GraphComm comm{g};
  for (Letter x : w)
    append_with(comm, out, x);
  return out;
}

VertexSet letter_support(Word const &w)
{
  VertexSet out;
  for (Letter x : w)
    out.push_back(x.gen);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet support_elem(Graph const &g, Word const &w)
{
  return letter_support(reduce(g, w));
}

std::size_t length_elem(Graph const &g, Word const &w)
{
  return reduce(g, w).size();
}

bool equal_elements(Graph const &g, Word const &w1, Word const &w2)
{
  return reduce(g, concat(w1, inverse(w2))).empty();
}

Word canonical_form(Graph const &g, Word const &w)
{
  Word rest = reduce(g, w);
  Word out;
  out.reserve(rest.size());
  GraphComm comm{g};
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < rest.size(); ++p) {
      if (!(rest[p] < rest[best]))
        continue;
      bool free_to_front = true;
      for (std::size_t k = 0; k < p && free_to_front; ++k)
        free_to_front = comm(rest[k].gen, rest[p].gen);
      if (free_to_front)
        best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + std::ptrdiff_t(best));
  }
  return out;
}

bool is_canonical(Graph const &g, Word const &w)
{
  GraphComm comm{g};
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t k = j; k-- > 0;) {
      if (!comm(w[k].gen, w[j].gen))
        break;
      if (w[j] < w[k])
        return false;
    }
  }
  return true;
}

namespace {

template <typename Comm>
class ReducedWordDfs
{
public:
  ReducedWordDfs(Comm comm, std::size_t n_letters, bool canonical_only,
                 std::function<bool(Word const &)> const &visit)
    : _comm(comm), _n_letters(n_letters), _canonical(canonical_only), _visit(visit)
  {}

  /// Returns false once the visitor asked to stop.
  bool run(std::size_t max_length)
  {
    for (std::size_t len = 0; len <= max_length; ++len) {
      _word.clear();
      _target = len;
      if (!grow())
        return false;
    }
    return true;
  }

private:
  bool acceptable(Letter a) const
  {
    for (std::size_t k = _word.size(); k-- > 0;) {
      if (!_comm(_word[k].gen, a.gen))
        return !(_word[k] == a.inv());
      if (_canonical && a < _word[k])
        return false;
    }
    return true;
  }

  bool grow()
  {
    if (_word.size() == _target)
      return _visit(_word);
    for (std::uint32_t code = 0; code < _n_letters; ++code) {
      Letter a{code / 2, (code & 1u) != 0};
      if (!acceptable(a))
        continue;
      _word.push_back(a);
      bool go_on = grow();
      _word.pop_back();
      if (!go_on)
        return false;
    }
    return true;
  }

  Comm _comm;
  std::size_t _n_letters;
  bool _canonical;
  std::function<bool(Word const &)> const &_visit;
  Word _word;
  std::size_t _target = 0;
};

} // namespace

void enumerate_reduced_words(Graph const &g, std::size_t max_length,
                             std::function<bool(Word const &)> const &visit,
                             bool canonical_only)
{
  if (g.size() <= CommutationMask::max_vertices) {
    CommutationMask mask(g);
    ReducedWordDfs<MaskComm>(MaskComm{mask}, 2 * g.size(), canonical_only, visit)
      .run(max_length);
  } else {
    ReducedWordDfs<GraphComm>(GraphComm{g}, 2 * g.size(), canonical_only, visit)
      .run(max_length);
  }
}

std::vector<Word> reduced_words(Graph const &g, std::size_t max_length,
                                bool canonical_only)
{
  std::vector<Word> out;
  enumerate_reduced_words(
    g, max_length,
    [&](Word const &w) {
      out.push_back(w);
      return true;
    },
    canonical_only);
  return out;
}

Word parse_word(Graph const &g, std::string_view text)
{
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view token = text.substr(start, i - start);
    bool inv = false;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      auto exponent = token.substr(caret + 1);
      if (exponent == "-1")
        inv = true;
      else if (exponent != "1")
        throw ParseError("exponent must be 1 or -1 in '" + std::string(token) + "'",
                         1, int(start + caret + 2));
      token = token.substr(0, caret);
    }
    auto v = g.find(token);
    if (!v)
      throw ParseError("unknown generator '" + std::string(token) + "'", 1,
                       int(start + 1));
    out.push_back(Letter{*v, inv});
  }
  return out;
}

std::string format_word(Graph const &g, Word const &w)
{
  std::string out;
  for (Letter x : w) {
    if (!out.empty())
      out += ' ';
    out += g.name(x.gen);
    if (x.inverse)
      out += "^-1";
  }
  return out;
}

CommutationMask::CommutationMask(Graph const &g)
{
  if (g.size() > max_vertices)
    throw Error(ErrorKind::BadParameter, "commutation mask supports at most 64 vertices");
  _rows.assign(g.size(), 0);
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = 0; v < g.size(); ++v)
      if (u != v && !g.adjacent(u, v))
        _rows[u] |= std::uint64_t{1} << v;
}

} // namespace raagpath
