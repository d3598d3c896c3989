#include "raagpath/paths.hpp"

#include <algorithm>

#include "raagpath/error.hpp"

namespace raagpath {

char const *to_string(PathKind kind)
{
  switch (kind) {
  case PathKind::Any: return "path";
  case PathKind::Induced: return "induced";
  case PathKind::SemiInduced: return "semi-induced";
  }
  return "?";
}

bool is_path(Graph const &g, Path const &p)
{
  if (p.empty())
    return false;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= g.size() || seen[p[i]])
      return false;
    seen[p[i]] = true;
    if (i > 0 && !g.adjacent(p[i - 1], p[i]))
      return false;
  }
  return true;
}

bool is_induced(Graph const &g, Path const &p)
{
  if (!is_path(g, p))
    return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j]))
        return false;
  return true;
}

bool is_semi_induced(Graph const &g, Path const &p, TotalOrder const &ord)
{
  if (!is_path(g, p))
    return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j]) && ord.less(p[j], p[i + 1]))
        return false;
  return true;
}

namespace {

/// Depth-first path growth. `blocked[z]` counts the reasons z may not be
/// appended: membership in the path, or a forbidden chord to a non-final
/// path vertex.
class PathWalker
{
public:
  PathWalker(Graph const &g, PathKind kind, TotalOrder const &ord)
    : _g(g), _kind(kind), _ord(ord), _blocked(g.size(), 0)
  {
    _sorted_nbrs.resize(g.size());
    for (VertexId v = 0; v < g.size(); ++v) {
      auto n = g.neighbors(v);
      _sorted_nbrs[v].assign(n.begin(), n.end());
      ord.sort(_sorted_nbrs[v]);
    }
  }

  void run(VertexId start, bool maximal_only,
           std::function<void(Path const &)> const &visit)
  {
    if (start >= _g.size())
      throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(start));
    _maximal_only = maximal_only;
    _visit = &visit;
    _path.assign(1, start);
    ++_blocked[start];
    grow();
    --_blocked[start];
  }

private:
  void grow()
  {
    VertexId last = _path.back();
    if (!_maximal_only)
      (*_visit)(_path);

    bool extended = false;
    for (VertexId z : _sorted_nbrs[last]) {
      if (_blocked[z])
        continue;
      extended = true;
      seal(last, z, +1);
      _path.push_back(z);
      ++_blocked[z];
      grow();
      --_blocked[z];
      _path.pop_back();
      seal(last, z, -1);
    }
    if (_maximal_only && !extended)
      (*_visit)(_path);
  }

  /// `x` stops being the final vertex once `next` is appended.
  void seal(VertexId x, VertexId next, int delta)
  {
    switch (_kind) {
    case PathKind::Any:
      return;
    case PathKind::Induced:
      for (VertexId u : _g.neighbors(x))
        _blocked[u] += delta;
      return;
    case PathKind::SemiInduced:
      for (VertexId u : _g.neighbors(x))
        if (_ord.less(u, next))
          _blocked[u] += delta;
      return;
    }
  }

  Graph const &_g;
  PathKind _kind;
  TotalOrder const &_ord;
  std::vector<std::vector<VertexId>> _sorted_nbrs;
  std::vector<int> _blocked;
  Path _path;
  bool _maximal_only = true;
  std::function<void(Path const &)> const *_visit = nullptr;
};

std::vector<Path> collect(Graph const &g, PathKind kind, TotalOrder const &ord,
                          VertexId start, bool maximal_only)
{
  std::vector<Path> out;
  PathWalker walker(g, kind, ord);
  walker.run(start, maximal_only, [&](Path const &p) { out.push_back(p); });
  return out;
}

} // namespace

void for_each_maximal_path(Graph const &g, PathKind kind, TotalOrder const &ord,
                           VertexId start,
                           std::function<void(Path const &)> const &visit)
{
  PathWalker(g, kind, ord).run(start, true, visit);
}

void for_each_path(Graph const &g, PathKind kind, TotalOrder const &ord,
                   VertexId start, std::function<void(Path const &)> const &visit)
{
  PathWalker(g, kind, ord).run(start, false, visit);
}

std::vector<Path> maximal_paths_from(Graph const &g, VertexId start)
{
  return collect(g, PathKind::Any, TotalOrder::of(g), start, true);
}

std::vector<Path> maximal_induced_paths_from(Graph const &g, VertexId start)
{
  return collect(g, PathKind::Induced, TotalOrder::of(g), start, true);
}

std::vector<Path> maximal_semi_induced_paths_from(Graph const &g,
                                                  TotalOrder const &ord,
                                                  VertexId start)
{
  return collect(g, PathKind::SemiInduced, ord, start, true);
}

std::vector<Path> induced_paths_from(Graph const &g, VertexId start)
{
  return collect(g, PathKind::Induced, TotalOrder::of(g), start, false);
}

LiftResult lift_path_unchecked(GraphMap const &f, Path const &alpha, VertexId start)
{
  LiftResult out;
  out.prefix.push_back(start);
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    VertexId here = out.prefix.back();
    std::optional<VertexId> next;
    for (VertexId w : f.domain().neighbors(here)) {
      if (f(w) == alpha[i]) {
        next = w;
        break; // an immersion has at most one such neighbor
      }
    }
    if (!next)
      return out;
    out.prefix.push_back(*next);
  }
  out.lift = out.prefix;
  return out;
}

LiftResult lift_path(GraphMap const &f, Path const &alpha, VertexId start)
{
  if (!is_immersion(f))
    throw Error(ErrorKind::NotImmersion, "lift_path needs an immersion");
  if (!is_path(f.codomain(), alpha))
    throw Error(ErrorKind::BadParameter, "not a path in the codomain");
  if (start >= f.domain().size() || f(start) != alpha.front())
    throw Error(ErrorKind::StartMismatch, "start does not lie over alpha[0]");
  return lift_path_unchecked(f, alpha, start);
}

Path LiftFailure::failing_prefix() const
{
  return Path(path.begin(), path.begin() + std::ptrdiff_t(lifted_prefix.size() + 1));
}

std::optional<LiftFailure> LiftReport::first_failure() const
{
  for (auto const &s : starts)
    if (s.failure)
      return s.failure;
  return std::nullopt;
}

LiftReport check_lifting(GraphMap const &f, PathKind kind, TotalOrder const &ord,
                         VertexSet const &F, bool stop_at_first)
{
  if (!is_immersion(f))
    throw Error(ErrorKind::NotImmersion, "lifting properties need an immersion");

  LiftReport report;
  report.kind = kind;
  PathWalker walker(f.codomain(), kind, ord);
  for (VertexId start : F) {
    if (start >= f.domain().size())
      throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(start));
    StartReport sr;
    sr.start = start;
    walker.run(f(start), true, [&](Path const &alpha) {
      if (sr.failure)
        return;
      ++sr.paths_checked;
      auto lifted = lift_path_unchecked(f, alpha, start);
      if (!lifted.lift)
        sr.failure = LiftFailure{start, alpha, std::move(lifted.prefix)};
    });
    if (sr.failure)
      report.holds = false;
    report.starts.push_back(std::move(sr));
    if (stop_at_first && !report.holds)
      break;
  }
  return report;
}

LiftReport has_PL(GraphMap const &f, VertexSet const &F)
{
  return check_lifting(f, PathKind::Any, TotalOrder::of(f.codomain()), F);
}

LiftReport has_IPL(GraphMap const &f, VertexSet const &F)
{
  return check_lifting(f, PathKind::Induced, TotalOrder::of(f.codomain()), F);
}

LiftReport has_SIPL(GraphMap const &f, TotalOrder const &ord, VertexSet const &F)
{
  if (ord.size() != f.codomain().size())
    throw Error(ErrorKind::BadParameter, "order does not cover the codomain");
  return check_lifting(f, PathKind::SemiInduced, ord, F);
}

std::vector<LiftFailure> lift_failures(GraphMap const &f, PathKind kind,
                                       TotalOrder const &ord, VertexSet const &F)
{
  if (!is_immersion(f))
    throw Error(ErrorKind::NotImmersion, "lifting properties need an immersion");
  std::vector<LiftFailure> out;
  PathWalker walker(f.codomain(), kind, ord);
  for (VertexId start : F) {
    walker.run(f(start), true, [&](Path const &alpha) {
      auto lifted = lift_path_unchecked(f, alpha, start);
      if (!lifted.lift)
        out.push_back(LiftFailure{start, alpha, std::move(lifted.prefix)});
    });
  }
  return out;
}

} // namespace raagpath
