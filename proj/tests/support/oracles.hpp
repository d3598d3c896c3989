#pragma once

// Slow, independent reference implementations used to check the library.

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "raagpath/graph.hpp"
#include "raagpath/word.hpp"

namespace oracle {

using namespace raagpath;

inline bool commute(Graph const &g, VertexId a, VertexId b)
{
  return a != b && !g.adjacent(a, b);
}

/// Every word reachable from w by swapping adjacent commuting letters and
/// deleting adjacent inverse pairs.
inline std::set<Word> rewrite_closure(Graph const &g, Word const &w)
{
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Word next;
      if (cur[i] == cur[i + 1].inv()) {
        next = cur;
        next.erase(next.begin() + std::ptrdiff_t(i), next.begin() + std::ptrdiff_t(i + 2));
      } else if (commute(g, cur[i].gen, cur[i + 1].gen)) {
        next = cur;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second)
        todo.push_back(std::move(next));
    }
  }
  return seen;
}

inline bool is_trivial(Graph const &g, Word const &w)
{
  return rewrite_closure(g, w).count(Word{}) > 0;
}

/// Geodesic length: the shortest word in the closure.
inline std::size_t length(Graph const &g, Word const &w)
{
  std::size_t best = w.size();
  for (auto const &x : rewrite_closure(g, w))
    best = std::min(best, x.size());
  return best;
}

/// Generators of a shortest word in the closure.
inline VertexSet support(Graph const &g, Word const &w)
{
  auto closure = rewrite_closure(g, w);
  Word const *best = &*closure.begin();
  for (auto const &x : closure)
    if (x.size() < best->size())
      best = &x;
  VertexSet out;
  for (Letter l : *best)
    out.push_back(l.gen);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// No two letters x^e ... x^-e with everything in between commuting with x.
inline bool is_reduced(Graph const &g, Word const &w)
{
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].gen == w[i].gen) {
        if (w[j] == w[i].inv())
          return false;
        break;
      }
      if (!commute(g, w[i].gen, w[j].gen))
        break;
    }
  return true;
}

/// Every word (reduced or not) of length <= L over all letters.
inline void all_words(std::size_t n_vertices, std::size_t L,
                      std::function<void(Word const &)> const &visit)
{
  Word w;
  std::function<void()> rec = [&] {
    visit(w);
    if (w.size() == L)
      return;
    for (std::uint32_t c = 0; c < 2 * n_vertices; ++c) {
      w.push_back(Letter{c / 2, (c & 1u) != 0});
      rec();
      w.pop_back();
    }
  };
  rec();
}

/// Simple paths from `start`, by plain DFS without pruning.
inline std::vector<std::vector<VertexId>> simple_paths(Graph const &g, VertexId start)
{
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> p{start};
  std::function<void()> rec = [&] {
    out.push_back(p);
    for (VertexId v = 0; v < g.size(); ++v) {
      if (!g.adjacent(p.back(), v) || std::find(p.begin(), p.end(), v) != p.end())
        continue;
      p.push_back(v);
      rec();
      p.pop_back();
    }
  };
  rec();
  return out;
}

inline bool induced(Graph const &g, std::vector<VertexId> const &p)
{
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j]))
        return false;
  return true;
}

/// `rank[v]` is the position of v in the order.
inline bool semi_induced(Graph const &g, std::vector<std::size_t> const &rank,
                         std::vector<VertexId> const &p)
{
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j]) && rank[p[j]] < rank[p[i + 1]])
        return false;
  return true;
}

/// Paths passing `keep` that no one-vertex extension keeps passing.
inline std::vector<std::vector<VertexId>>
maximal_filtered(Graph const &g, VertexId start,
                 std::function<bool(std::vector<VertexId> const &)> const &keep)
{
  auto all = simple_paths(g, start);
  std::set<std::vector<VertexId>> ok;
  for (auto const &p : all)
    if (keep(p))
      ok.insert(p);
  std::vector<std::vector<VertexId>> out;
  for (auto const &p : ok) {
    bool maximal = true;
    for (VertexId v = 0; v < g.size() && maximal; ++v) {
      auto q = p;
      q.push_back(v);
      if (ok.count(q))
        maximal = false;
    }
    if (maximal)
      out.push_back(p);
  }
  return out;
}

inline Word random_word(std::mt19937_64 &rng, std::size_t n_vertices, std::size_t max_len)
{
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> code(0, std::uint32_t(2 * n_vertices - 1));
  Word w(len(rng));
  for (auto &l : w) {
    auto c = code(rng);
    l = Letter{c / 2, (c & 1u) != 0};
  }
  return w;
}

/// Cancels a random available pair (any cancelling pair, not the leftmost)
/// until none remains.
inline Word randomized_reduce(std::mt19937_64 &rng, Graph const &g, Word w)
{
  for (;;) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j] == w[i].inv()) {
          pairs.emplace_back(i, j);
          break;
        }
        if (!commute(g, w[i].gen, w[j].gen))
          break;
      }
    if (pairs.empty())
      return w;
    auto [i, j] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    w.erase(w.begin() + std::ptrdiff_t(j));
    w.erase(w.begin() + std::ptrdiff_t(i));
  }
}

/// All graphs on n <= 4 vertices up to isomorphism, vertices v0 .. v{n-1}.
inline std::vector<Graph> small_graphs_up_to_iso(std::size_t max_n)
{
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        slots.emplace_back(u, v);
    std::set<std::vector<std::pair<VertexId, VertexId>>> canon_seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<VertexId, VertexId>> edges;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1u)
          edges.push_back(slots[b]);
      // canonical form: lexicographically least relabelled edge list
      std::vector<VertexId> perm(n);
      for (VertexId i = 0; i < n; ++i)
        perm[i] = i;
      std::vector<std::pair<VertexId, VertexId>> best;
      bool first = true;
      do {
        std::vector<std::pair<VertexId, VertexId>> e2;
        for (auto [a, b] : edges)
          e2.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
        std::sort(e2.begin(), e2.end());
        if (first || e2 < best) {
          best = e2;
          first = false;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!canon_seen.insert(best).second)
        continue;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i)
        names.push_back("v" + std::to_string(i));
      out.push_back(Graph::make(std::move(names), edges));
    }
  }
  return out;
}

} // namespace oracle
