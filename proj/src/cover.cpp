#include "raagpath/cover.hpp"

#include <algorithm>
#include <set>

#include "raagpath/error.hpp"

namespace raagpath {

namespace {

/// Vertex preceding the last one, if the walk has at least one step.
std::optional<VertexId> previous(Walk const &w)
{
  if (w.steps.empty())
    return std::nullopt;
  return w.steps.size() == 1 ? w.base : w.steps[w.steps.size() - 2];
}

std::optional<Walk> parent(Walk const &w)
{
  if (w.steps.empty())
    return std::nullopt;
  Walk p = w;
  p.steps.pop_back();
  return p;
}

} // namespace

bool is_walk(Graph const &g, Walk const &w)
{
  if (w.base >= g.size())
    return false;
  VertexId prev2 = VertexId(-1), prev = w.base;
  for (VertexId z : w.steps) {
    if (z >= g.size() || !g.adjacent(prev, z) || z == prev2)
      return false;
    prev2 = prev;
    prev = z;
  }
  return true;
}

Walk reduce_walk(Graph const &g, VertexId base, std::vector<VertexId> const &sequence)
{
  std::vector<VertexId> stack{base};
  VertexId last = base;
  for (VertexId z : sequence) {
    if (!g.adjacent(last, z))
      throw Error(ErrorKind::BadParameter, "walk steps between non-adjacent vertices");
    last = z;
    if (stack.size() >= 2 && stack[stack.size() - 2] == z)
      stack.pop_back();
    else
      stack.push_back(z);
  }
  return Walk{base, std::vector<VertexId>(stack.begin() + 1, stack.end())};
}

Walk step(Graph const &g, Walk const &w, VertexId z)
{
  if (!g.adjacent(w.end(), z))
    throw Error(ErrorKind::BadParameter, "step to a non-neighbor");
  Walk out = w;
  if (previous(w) == z)
    out.steps.pop_back();
  else
    out.steps.push_back(z);
  return out;
}

std::vector<Walk> cover_neighbors(Graph const &g, Walk const &w)
{
  std::vector<Walk> out;
  if (auto p = parent(w))
    out.push_back(*p);
  auto prev = previous(w);
  for (VertexId z : g.neighbors(w.end())) {
    if (prev == z)
      continue;
    Walk child = w;
    child.steps.push_back(z);
    out.push_back(std::move(child));
  }
  return out;
}

bool cover_adjacent(Walk const &a, Walk const &b)
{
  if (a.base != b.base)
    return false;
  Walk const &shorter = a.steps.size() < b.steps.size() ? a : b;
  Walk const &longer = a.steps.size() < b.steps.size() ? b : a;
  return longer.steps.size() == shorter.steps.size() + 1 &&
         std::equal(shorter.steps.begin(), shorter.steps.end(), longer.steps.begin());
}

std::string walk_name(Graph const &g, Walk const &w)
{
  std::string out = "[" + g.name(w.base);
  for (VertexId z : w.steps)
    out += ">" + g.name(z);
  return out + "]";
}

Deck identity_deck(VertexId base)
{
  return Deck{Walk{base, {}}};
}

Deck deck_from_pair(Graph const &g, Walk const &u, Walk const &t)
{
  if (u.base != t.base)
    throw Error(ErrorKind::BaseMismatch, "walks have different bases");
  if (u.end() != t.end())
    throw Error(ErrorKind::ProjectionMismatch, "walks project to different vertices");

  // t followed by u traversed backwards
  std::vector<VertexId> seq = t.steps;
  for (std::size_t i = u.steps.size(); i-- > 0;)
    seq.push_back(i == 0 ? u.base : u.steps[i - 1]);
  return Deck{reduce_walk(g, t.base, seq)};
}

Walk apply_deck(Graph const &g, Deck const &sigma, Walk const &w)
{
  if (sigma.loop.base != w.base)
    throw Error(ErrorKind::BaseMismatch, "deck and walk have different bases");
  std::vector<VertexId> seq = sigma.loop.steps;
  seq.insert(seq.end(), w.steps.begin(), w.steps.end());
  return reduce_walk(g, w.base, seq);
}

Deck compose(Graph const &g, Deck const &sigma1, Deck const &sigma2)
{
  return Deck{apply_deck(g, sigma1, sigma2.loop)};
}

std::optional<VertexId> CoverEmbedding::vertex_of(Walk const &w) const
{
  auto it = _index.find(w);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

CoverEmbedding make_embedding(GraphMap map, std::vector<Walk> walks)
{
  Graph const &dom = map.domain();
  Graph const &gamma = map.codomain();
  if (walks.size() != dom.size())
    throw Error(ErrorKind::BadParameter, "one walk per domain vertex required");

  CoverEmbedding e;
  for (VertexId v = 0; v < walks.size(); ++v) {
    Walk const &w = walks[v];
    if (!is_walk(gamma, w))
      throw Error(ErrorKind::BadParameter, "invalid walk for " + dom.name(v));
    if (w.base != walks.front().base)
      throw Error(ErrorKind::BaseMismatch, "walks must share one base");
    if (w.end() != map(v))
      throw Error(ErrorKind::ProjectionMismatch,
                  "walk of " + dom.name(v) + " does not project to its image");
    if (!e._index.emplace(w, v).second)
      throw Error(ErrorKind::NotInduced, "two vertices share the walk " + walk_name(gamma, w));
  }

  // cover adjacency is exactly the parent relation
  std::size_t parent_links = 0;
  for (VertexId v = 0; v < walks.size(); ++v) {
    if (auto p = parent(walks[v])) {
      auto it = e._index.find(*p);
      if (it == e._index.end())
        continue;
      ++parent_links;
      if (!dom.adjacent(v, it->second))
        throw Error(ErrorKind::NotInduced,
                    dom.name(v) + " and " + dom.name(it->second) +
                      " are adjacent in the cover but not in the domain");
    }
  }
  if (parent_links != dom.edge_count())
    throw Error(ErrorKind::NotInduced, "domain edge not realised in the cover");

  e.map = std::move(map);
  e.walks = std::move(walks);
  return e;
}

CoverEmbedding embed_forest(GraphMap const &f, std::vector<VertexId> const &roots,
                            std::vector<Walk> const &root_walks)
{
  Graph const &dom = f.domain();
  if (!is_forest(dom))
    throw Error(ErrorKind::NotForest, "domain has a cycle");
  if (!is_immersion(f))
    throw Error(ErrorKind::NotImmersion, "embed_forest needs an immersion");
  if (roots.size() != root_walks.size())
    throw Error(ErrorKind::BadParameter, "one walk per root required");

  auto comps = components(dom);
  std::vector<int> comp_of(dom.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c])
      comp_of[v] = int(c);

  std::vector<bool> rooted(comps.size(), false);
  std::vector<std::optional<Walk>> walks(dom.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    VertexId r = roots[i];
    if (r >= dom.size())
      throw Error(ErrorKind::UnknownVertex, "root id " + std::to_string(r));
    if (rooted[comp_of[r]])
      throw Error(ErrorKind::BadParameter, "two roots in one component");
    if (!is_walk(f.codomain(), root_walks[i]))
      throw Error(ErrorKind::BadParameter, "root walk is not a walk");
    if (root_walks[i].end() != f(r))
      throw Error(ErrorKind::RootMismatch, "root walk of " + dom.name(r) +
                                             " does not project to its image");
    rooted[comp_of[r]] = true;

    std::vector<VertexId> queue{r};
    walks[r] = root_walks[i];
    for (std::size_t q = 0; q < queue.size(); ++q) {
      VertexId x = queue[q];
      for (VertexId y : dom.neighbors(x)) {
        if (walks[y])
          continue;
        walks[y] = step(f.codomain(), *walks[x], f(y));
        queue.push_back(y);
      }
    }
  }
  if (std::find(rooted.begin(), rooted.end(), false) != rooted.end())
    throw Error(ErrorKind::BadParameter, "every component needs a root");

  std::vector<Walk> out;
  out.reserve(dom.size());
  for (auto &w : walks)
    out.push_back(std::move(*w));
  return make_embedding(f, std::move(out));
}

std::vector<Walk> spanning_tree_lift(Graph const &g, VertexId base)
{
  if (base >= g.size())
    throw Error(ErrorKind::UnknownVertex, "base id " + std::to_string(base));
  std::vector<std::optional<Walk>> walk_of(g.size());
  std::vector<Walk> out;
  walk_of[base] = Walk{base, {}};
  out.push_back(*walk_of[base]);
  for (std::size_t q = 0; q < out.size(); ++q) {
    Walk const cur = out[q];
    for (VertexId z : g.neighbors(cur.end())) {
      if (walk_of[z])
        continue;
      Walk next = cur;
      next.steps.push_back(z);
      walk_of[z] = next;
      out.push_back(std::move(next));
    }
  }
  if (out.size() != g.size())
    throw Error(ErrorKind::Disconnected, "spanning tree needs a connected graph");
  return out;
}

CoverEmbedding embed_forest(GraphMap const &f, VertexId base)
{
  if (f.domain().empty())
    throw Error(ErrorKind::BadParameter, "empty domain");
  if (!is_connected(f.domain()))
    throw Error(ErrorKind::Disconnected,
                "default placement needs a connected domain; give root walks");
  auto tree = spanning_tree_lift(f.codomain(), base);
  Walk root_walk;
  for (auto const &w : tree)
    if (w.end() == f(0))
      root_walk = w;
  return embed_forest(f, {0}, {root_walk});
}

std::vector<Deck> sigma_set(CoverEmbedding const &e, std::vector<Walk> const &F)
{
  if (F.empty())
    throw Error(ErrorKind::EmptyF, "F must be nonempty");
  Graph const &gamma = e.map.codomain();
  std::set<Deck> out;
  for (auto const &t : F) {
    for (VertexId v : e.map.fiber(t.end()))
      out.insert(deck_from_pair(gamma, e.walks[v], t));
  }
  return {out.begin(), out.end()};
}

CoverEmbedding cover_subgraph(GraphPtr gamma, std::vector<Walk> const &walks,
                              std::map<Walk, std::string> const &names)
{
  std::vector<Walk> unique;
  std::set<Walk> seen;
  for (auto const &w : walks)
    if (seen.insert(w).second)
      unique.push_back(w);

  std::map<Walk, VertexId> index;
  std::vector<std::string> vertex_names;
  std::vector<VertexId> assignment;
  for (VertexId i = 0; i < unique.size(); ++i) {
    index.emplace(unique[i], i);
    auto it = names.find(unique[i]);
    vertex_names.push_back(it != names.end() ? it->second : walk_name(*gamma, unique[i]));
    assignment.push_back(unique[i].end());
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < unique.size(); ++i) {
    if (auto p = parent(unique[i])) {
      if (auto it = index.find(*p); it != index.end())
        edges.emplace_back(it->second, i);
    }
  }

  auto map = GraphMap::make(share(Graph::make(std::move(vertex_names), edges)),
                            std::move(gamma), std::move(assignment));
  return make_embedding(std::move(map), std::move(unique));
}

Enlargement enlarge(CoverEmbedding const &e, std::vector<Walk> const &F)
{
  Graph const &gamma = e.map.codomain();
  Enlargement out;
  out.sigma = sigma_set(e, F);

  std::vector<Walk> walks = e.walks;
  std::map<Walk, std::string> names;
  for (VertexId v = 0; v < e.walks.size(); ++v)
    names.emplace(e.walks[v], e.map.domain().name(v));

  std::set<Walk> extra;
  for (auto const &sigma : out.sigma) {
    for (auto const &w : e.walks) {
      Walk moved = apply_deck(gamma, sigma, w);
      if (!e.vertex_of(moved))
        extra.insert(std::move(moved));
    }
  }
  walks.insert(walks.end(), extra.begin(), extra.end());

  out.embedding = cover_subgraph(e.map.codomain_ptr(), walks, names);
  for (auto const &t : F)
    if (auto v = out.embedding.vertex_of(t))
      out.f_vertices.push_back(*v);
  std::sort(out.f_vertices.begin(), out.f_vertices.end());
  out.f_vertices.erase(std::unique(out.f_vertices.begin(), out.f_vertices.end()),
                       out.f_vertices.end());
  return out;
}

} // namespace raagpath
