#include "raagpath/morphism.hpp"

#include <algorithm>

#include "raagpath/error.hpp"

namespace raagpath {

GraphMap GraphMap::make(GraphPtr domain, GraphPtr codomain,
                        std::vector<VertexId> assignment)
{
  if (assignment.size() != domain->size())
    throw Error(ErrorKind::NotAMapOfGraphs, "assignment is not total");
  for (VertexId x : assignment) {
    if (x >= codomain->size())
      throw Error(ErrorKind::UnknownVertex,
                  "assignment value " + std::to_string(x));
  }
  for (auto [a, b] : domain->edges()) {
    if (!codomain->adjacent(assignment[a], assignment[b])) {
      throw Error(ErrorKind::NotAMapOfGraphs,
                  "edge {" + domain->name(a) + "," + domain->name(b) +
                    "} is not sent to an edge");
    }
  }

  GraphMap f;
  f._fibers.resize(codomain->size());
  for (VertexId v = 0; v < assignment.size(); ++v)
    f._fibers[assignment[v]].push_back(v);
  f._domain = std::move(domain);
  f._codomain = std::move(codomain);
  f._assignment = std::move(assignment);
  return f;
}

GraphMap GraphMap::make(GraphPtr domain, GraphPtr codomain,
                        std::map<std::string, std::string> const &assignment)
{
  std::vector<VertexId> ids(domain->size(), VertexId(-1));
  for (auto const &[from, to] : assignment)
    ids[domain->id(from)] = codomain->id(to);
  for (VertexId v = 0; v < ids.size(); ++v) {
    if (ids[v] == VertexId(-1))
      throw Error(ErrorKind::NotAMapOfGraphs,
                  "no image for " + domain->name(v));
  }
  return make(std::move(domain), std::move(codomain), std::move(ids));
}

bool GraphMap::is_surjective() const
{
  return std::none_of(_fibers.begin(), _fibers.end(),
                      [](VertexSet const &s) { return s.empty(); });
}

bool GraphMap::operator==(GraphMap const &other) const
{
  return *_domain == *other._domain && *_codomain == *other._codomain &&
         _assignment == other._assignment;
}

bool is_immersion(GraphMap const &f)
{
  std::vector<VertexId> seen;
  for (VertexId v = 0; v < f.domain().size(); ++v) {
    seen.clear();
    for (VertexId w : f.domain().neighbors(v))
      seen.push_back(f(w));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      return false;
  }
  return true;
}

bool is_covering(GraphMap const &f)
{
  if (!f.is_surjective() || !is_immersion(f))
    return false;
  // injective on links, so bijective iff the degrees agree
  for (VertexId v = 0; v < f.domain().size(); ++v) {
    if (f.domain().degree(v) != f.codomain().degree(f(v)))
      return false;
  }
  return true;
}

namespace {

std::vector<VertexId> embed_by_name(Graph const &parent, Graph const &sub)
{
  std::vector<VertexId> into(sub.size());
  for (VertexId v = 0; v < sub.size(); ++v) {
    auto p = parent.find(sub.name(v));
    if (!p)
      throw Error(ErrorKind::NotInduced,
                  sub.name(v) + " is not a vertex of the ambient graph");
    into[v] = *p;
  }
  for (VertexId a = 0; a < sub.size(); ++a) {
    for (VertexId b = a + 1; b < sub.size(); ++b) {
      if (sub.adjacent(a, b) != parent.adjacent(into[a], into[b]))
        throw Error(ErrorKind::NotInduced,
                    "adjacency of " + sub.name(a) + ", " + sub.name(b) +
                      " differs from the ambient graph");
    }
  }
  return into;
}

} // namespace

GraphMap restrict(GraphMap const &f, Graph const &sub_domain,
                  Graph const &sub_codomain)
{
  auto dom_into = embed_by_name(f.domain(), sub_domain);
  embed_by_name(f.codomain(), sub_codomain);

  std::vector<VertexId> assignment(sub_domain.size());
  for (VertexId v = 0; v < sub_domain.size(); ++v) {
    auto const &target = f.codomain().name(f(dom_into[v]));
    auto t = sub_codomain.find(target);
    if (!t)
      throw Error(ErrorKind::ImageEscapesCodomain,
                  sub_domain.name(v) + " maps to " + target);
    assignment[v] = *t;
  }
  return GraphMap::make(share(sub_domain), share(sub_codomain),
                        std::move(assignment));
}

GraphMap remove_fibers(GraphMap const &f, VertexSet const &removed)
{
  std::vector<bool> gone(f.codomain().size(), false);
  for (VertexId v : removed)
    gone.at(v) = true;

  VertexSet keep_dom, keep_cod;
  for (VertexId v = 0; v < f.domain().size(); ++v)
    if (!gone[f(v)])
      keep_dom.push_back(v);
  for (VertexId v = 0; v < f.codomain().size(); ++v)
    if (!gone[v])
      keep_cod.push_back(v);

  // both subsets are taken in increasing id order, so ids can be remapped
  // without name lookups
  std::vector<VertexId> cod_pos(f.codomain().size(), VertexId(-1));
  for (VertexId i = 0; i < keep_cod.size(); ++i)
    cod_pos[keep_cod[i]] = i;
  std::vector<VertexId> assignment;
  assignment.reserve(keep_dom.size());
  for (VertexId v : keep_dom)
    assignment.push_back(cod_pos[f(v)]);

  return GraphMap::make(share(induced_subgraph(f.domain(), keep_dom)),
                        share(induced_subgraph(f.codomain(), keep_cod)),
                        std::move(assignment));
}

GraphMap compose(GraphMap const &g, GraphMap const &f)
{
  if (!(f.codomain() == g.domain()))
    throw Error(ErrorKind::GraphMismatch, "codomain of f is not domain of g");
  std::vector<VertexId> assignment(f.domain().size());
  for (VertexId v = 0; v < assignment.size(); ++v)
    assignment[v] = g(f(v));
  return GraphMap::make(f.domain_ptr(), g.codomain_ptr(), std::move(assignment));
}

GraphMap identity_map(GraphPtr g)
{
  std::vector<VertexId> assignment(g->size());
  for (VertexId v = 0; v < assignment.size(); ++v)
    assignment[v] = v;
  return GraphMap::make(g, g, std::move(assignment));
}

std::string cover_position_name(long pos, int m)
{
  long r = ((pos % m) + m) % m;
  long s = (pos - r) / m;
  std::string name = "v" + std::to_string(r);
  if (s <= 0)
    name.append(std::size_t(1 - s), 'p');
  else
    name.append(std::size_t(s + 1), 'q');
  return name;
}

GraphMap cycle_to_path_map(int n, int m)
{
  if (m < 3 || n < 1)
    throw Error(ErrorKind::BadParameter, "cycle_to_path_map needs m >= 3, n >= 1");

  long const first = std::min(0, m - n);
  auto sheet = [m](long pos) { return pos >= 0 ? pos / m : -((-pos + m - 1) / m); };

  std::vector<long> positions;
  for (long p = first; p < first + n; ++p)
    positions.push_back(p);
  // sheet 0 first, then -1, -2, ...; residue order within a sheet
  std::stable_sort(positions.begin(), positions.end(), [&](long a, long b) {
    long sa = sheet(a), sb = sheet(b);
    if (sa != sb)
      return sa > sb;
    return a < b;
  });

  std::vector<std::string> names;
  std::vector<VertexId> id_of(static_cast<std::size_t>(n));
  std::vector<VertexId> assignment;
  for (long p : positions) {
    id_of[std::size_t(p - first)] = VertexId(names.size());
    names.push_back(cover_position_name(p, m));
    assignment.push_back(VertexId(((p % m) + m) % m));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.emplace_back(id_of[i], id_of[i + 1]);

  return GraphMap::make(share(Graph::make(std::move(names), edges)),
                        share(cycle_graph(m)), std::move(assignment));
}

} // namespace raagpath
