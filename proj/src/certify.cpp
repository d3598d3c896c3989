#include "raagpath/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "raagpath/error.hpp"

namespace raagpath {

std::string_view to_string(Verdict v)
{
  switch (v) {
  case Verdict::CertifiedInjective: return "CertifiedInjective";
  case Verdict::CertifiedNonInjective: return "CertifiedNonInjective";
  case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(CdkVerdict v)
{
  return v == CdkVerdict::Injective ? "Injective" : "NonInjective";
}

namespace {

std::vector<std::string> walk_names(Graph const &g, std::vector<Walk> const &ws)
{
  std::vector<std::string> out;
  for (auto const &w : ws)
    out.push_back(walk_name(g, w));
  return out;
}

/// Order on g listing `first` (in the given order) before everything else.
TotalOrder front_loaded(Graph const &g, std::vector<VertexId> const &first)
{
  std::vector<bool> used(g.size(), false);
  std::vector<VertexId> seq = first;
  for (VertexId x : first)
    used[x] = true;
  for (VertexId v = 0; v < g.size(); ++v)
    if (!used[v])
      seq.push_back(v);
  return TotalOrder::from_sequence(g.size(), std::move(seq));
}

/// Recursive link peeling. phi_1 only depends on the removed codomain
/// vertices, so results are memoized by that set of names.
class Peeler
{
public:
  std::optional<std::vector<PeelStep>> run(GraphMap const &phi,
                                           std::vector<std::string> const &removed)
  {
    if (auto it = _memo.find(removed); it != _memo.end())
      return it->second;
    auto out = attempt(phi, removed);
    _memo.emplace(removed, out);
    return out;
  }

private:
  std::optional<std::vector<PeelStep>> attempt(GraphMap const &phi,
                                               std::vector<std::string> const &removed)
  {
    Graph const &gamma = phi.codomain();
    Graph const &lambda = phi.domain();
    if (gamma.empty())
      return std::vector<PeelStep>{};
    for (VertexId v = 0; v < gamma.size(); ++v)
      if (phi.fiber(v).empty())
        return std::nullopt;
    if (gamma.size() == 1)
      return std::vector<PeelStep>{};

    std::vector<VertexId> candidates(lambda.size());
    std::iota(candidates.begin(), candidates.end(), VertexId{0});
    std::stable_sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
      return (phi.fiber(phi(a)).size() != 1) < (phi.fiber(phi(b)).size() != 1);
    });

    for (VertexId vp : candidates) {
      VertexId const v = phi(vp);
      if (lambda.degree(vp) != gamma.degree(v))
        continue;

      std::vector<std::string> next_removed = removed;
      next_removed.push_back(gamma.name(v));
      std::sort(next_removed.begin(), next_removed.end());
      auto rest = run(remove_fibers(phi, {v}), next_removed);
      if (!rest)
        continue;

      // x_i' for each x_i, indexed like gamma.neighbors(v)
      auto link = gamma.neighbors(v);
      std::vector<VertexId> pre(link.size());
      for (VertexId xp : lambda.neighbors(vp)) {
        auto pos = std::lower_bound(link.begin(), link.end(), phi(xp)) - link.begin();
        pre[std::size_t(pos)] = xp;
      }

      auto found = try_orders(phi, vp, v, pre);
      if (!found)
        continue;
      std::vector<PeelStep> out{std::move(*found)};
      out.insert(out.end(), rest->begin(), rest->end());
      return out;
    }
    return std::nullopt;
  }

  std::optional<PeelStep> try_orders(GraphMap const &phi, VertexId vp, VertexId v,
                                     std::vector<VertexId> const &pre)
  {
    Graph const &gamma = phi.codomain();
    Graph const &lambda = phi.domain();
    auto link = gamma.neighbors(v);
    std::size_t const l = link.size();

    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> idx(l);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (l <= full_permutation_limit) {
      do
        orders.push_back(idx);
      while (std::next_permutation(idx.begin(), idx.end()));
    } else {
      orders.push_back(idx);
      std::reverse(idx.begin(), idx.end());
      orders.push_back(idx);
    }

    for (std::size_t k = 0; k < orders.size(); ++k) {
      std::vector<VertexId> xs;
      for (std::size_t i : orders[k])
        xs.push_back(link[i]);
      TotalOrder const ord = front_loaded(gamma, xs);

      PeelStep step;
      step.domain_vertex = lambda.name(vp);
      step.codomain_vertex = gamma.name(v);
      step.permutation = k;
      VertexSet gone{v};
      bool ok = true;
      for (std::size_t i = 0; i < l && ok; ++i) {
        VertexId const xi = link[orders[k][i]];
        VertexId const xpi = pre[orders[k][i]];
        GraphMap phi_i = remove_fibers(phi, gone);
        TotalOrder ord_i = ord.restricted(gamma, phi_i.codomain());
        VertexId start = phi_i.domain().id(lambda.name(xpi));
        auto report = check_lifting(phi_i, PathKind::SemiInduced, ord_i, {start}, true);
        ok = report.holds;
        step.link.push_back(gamma.name(xi));
        step.link_preimages.push_back(lambda.name(xpi));
        step.sipl_paths.push_back(report.starts.empty() ? 0 : report.starts[0].paths_checked);
        gone.insert(std::lower_bound(gone.begin(), gone.end(), xi), xi);
      }
      if (ok)
        return step;
    }
    return std::nullopt;
  }

  std::map<std::vector<std::string>, std::optional<std::vector<PeelStep>>> _memo;
};

/// Roots every component of the forest at its first vertex, placed at the
/// spanning-tree walk of its image.
CoverEmbedding default_embedding(GraphMap const &f, VertexId base)
{
  auto tree = spanning_tree_lift(f.codomain(), base);
  std::vector<Walk> by_end(f.codomain().size());
  for (auto const &w : tree)
    by_end[w.end()] = w;
  std::vector<VertexId> roots;
  std::vector<Walk> root_walks;
  for (auto const &c : components(f.domain())) {
    roots.push_back(c.front());
    root_walks.push_back(by_end[f(c.front())]);
  }
  return embed_forest(f, roots, root_walks);
}

std::optional<NonInjectiveEvidence> ipl_failure(CoverEmbedding const &e,
                                                std::vector<Walk> const &F)
{
  Graph const &gamma = e.map.codomain();
  Enlargement en = enlarge(e, F);
  GraphMap const &phi1 = en.embedding.map;
  auto report = check_lifting(phi1, PathKind::Induced, TotalOrder::of(gamma),
                              en.f_vertices, true);
  auto failure = report.first_failure();
  if (!failure)
    return std::nullopt;

  Graph const &lambda1 = phi1.domain();
  NonInjectiveEvidence ev;
  ev.method = "deck-ipl";
  ev.f_walks = walk_names(gamma, F);
  for (auto const &sigma : en.sigma)
    ev.sigma.push_back(walk_name(gamma, sigma.loop));
  ev.lambda1_vertices = lambda1.size();
  ev.failing_vertex = lambda1.name(failure->start);
  ev.path = names_of(gamma, failure->path);
  ev.lifted_prefix = names_of(lambda1, failure->lifted_prefix);
  ev.witness = conjugated_path_word(failure->failing_prefix());
  ev.witness_text = format_word(gamma, ev.witness);

  VertexSet supp = support_elem(lambda1, phi_star_word(OrderedMap(phi1), ev.witness));
  ev.witness_image_support = names_of(lambda1, supp);
  if (std::binary_search(supp.begin(), supp.end(), failure->start))
    throw Error(ErrorKind::CertificateGap,
                "witness image still contains " + ev.failing_vertex);
  return ev;
}

} // namespace

Certificate certify_injective(GraphMap const &f)
{
  if (!is_immersion(f))
    throw Error(ErrorKind::NotImmersion, "certify_injective needs an immersion");

  Certificate out;
  for (VertexId v = 0; v < f.codomain().size(); ++v) {
    if (!f.fiber(v).empty())
      continue;
    NonInjectiveEvidence ev;
    ev.method = "empty-fiber";
    ev.witness = Word{Letter{v, false}};
    ev.witness_text = format_word(f.codomain(), ev.witness);
    out.verdict = Verdict::CertifiedNonInjective;
    out.noninjective = std::move(ev);
    out.notes.push_back("the image of " + f.codomain().name(v) +
                        " is trivial; the map is not surjective on vertices");
    return out;
  }

  Peeler peeler;
  if (auto trace = peeler.run(f, {})) {
    out.verdict = Verdict::CertifiedInjective;
    out.injective = InjectiveEvidence{std::move(*trace), full_permutation_limit};
  } else {
    out.notes.push_back("no vertex admits a complete peeling with SIPL links");
  }
  return out;
}

Certificate certify_noninjective(GraphMap const &f,
                                 std::optional<std::vector<Walk>> const &F, VertexId base)
{
  if (!is_immersion(f))
    throw Error(ErrorKind::NotImmersion, "certify_noninjective needs an immersion");
  if (!is_forest(f.domain()))
    throw Error(ErrorKind::NotForest, "domain must be a forest");
  if (!f.is_surjective())
    throw Error(ErrorKind::NotSurjective, "map must be surjective on vertices");
  if (!is_connected(f.codomain()))
    throw Error(ErrorKind::Disconnected, "codomain must be connected");

  CoverEmbedding e = default_embedding(f, base);

  std::vector<std::vector<Walk>> candidates;
  if (F) {
    candidates.push_back(*F);
  } else {
    for (auto const &w : e.walks)
      candidates.push_back({w});
    candidates.push_back(spanning_tree_lift(f.codomain(), base));
  }

  Certificate out;
  for (auto const &cand : candidates) {
    if (auto ev = ipl_failure(e, cand)) {
      out.verdict = Verdict::CertifiedNonInjective;
      out.noninjective = std::move(*ev);
      return out;
    }
  }
  out.notes.push_back("every induced path lifts for each tried F (" +
                      std::to_string(candidates.size()) + " sets)");
  return out;
}

Certificate certify(GraphMap const &f, std::size_t bound)
{
  Certificate inj = certify_injective(f);
  if (inj.verdict != Verdict::Unknown)
    return inj;

  std::vector<std::string> notes = inj.notes;
  if (is_forest(f.domain()) && f.is_surjective() && is_connected(f.codomain())) {
    Certificate non = certify_noninjective(f);
    if (non.verdict != Verdict::Unknown)
      return non;
    notes.insert(notes.end(), non.notes.begin(), non.notes.end());
  } else {
    notes.push_back("deck enlargement skipped: needs a forest domain, a surjective "
                    "map and a connected codomain");
  }

  Certificate out;
  out.bound = bound;
  if (auto w = kernel_search(OrderedMap(f), bound)) {
    NonInjectiveEvidence ev;
    ev.method = "kernel-search";
    ev.witness = *w;
    ev.witness_text = format_word(f.codomain(), *w);
    out.verdict = Verdict::CertifiedNonInjective;
    out.noninjective = std::move(ev);
  } else {
    notes.push_back("no kernel word of length <= " + std::to_string(bound));
  }
  out.notes = std::move(notes);
  return out;
}

namespace {

/// Tree for a connected graph: a spanning-tree lift F plus the lifts of all
/// maximal semi-induced paths from every element of F.
std::pair<CoverEmbedding, VertexSet> connected_tree(GraphPtr gamma, TotalOrder const &ord)
{
  Graph const &g = *gamma;
  auto F = spanning_tree_lift(g, 0);
  std::vector<Walk> walks;
  for (auto const &f : F) {
    walks.push_back(f);
    for_each_maximal_path(g, PathKind::SemiInduced, ord, f.end(), [&](Path const &p) {
      Walk w = f;
      for (std::size_t i = 1; i < p.size(); ++i) {
        w = step(g, w, p[i]);
        walks.push_back(w);
      }
    });
  }
  std::sort(walks.begin(), walks.end());
  walks.erase(std::unique(walks.begin(), walks.end()), walks.end());

  CoverEmbedding e = cover_subgraph(std::move(gamma), walks);
  VertexSet fv;
  for (auto const &f : F)
    fv.push_back(*e.vertex_of(f));
  std::sort(fv.begin(), fv.end());
  return {std::move(e), std::move(fv)};
}

std::size_t size_bound(std::size_t m)
{
  return m == 0 ? 0 : m << (m - 1);
}

} // namespace

SynthesizedTree synthesize_sipl_tree(GraphPtr gamma)
{
  TotalOrder ord = TotalOrder::of(*gamma);
  return synthesize_sipl_tree(std::move(gamma), ord);
}

SynthesizedTree synthesize_sipl_tree(GraphPtr gamma, TotalOrder const &ord)
{
  Graph const &g = *gamma;
  if (g.empty())
    throw Error(ErrorKind::EmptyGraph, "cannot synthesize a tree for the empty graph");
  if (ord.size() != g.size())
    throw Error(ErrorKind::BadParameter, "order must cover the graph");

  SynthesizedTree out;
  out.order = ord;
  out.bound = size_bound(g.size());

  auto comps = components(g);
  if (comps.size() == 1) {
    auto [e, fv] = connected_tree(gamma, ord);
    out.tree = e.map.domain_ptr();
    out.map = std::move(e.map);
    out.f_vertices = std::move(fv);
    return out;
  }

  std::vector<std::string> names;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<std::string, std::string> assignment;
  std::vector<VertexId> first_of;
  for (auto const &c : comps) {
    auto sub = share(induced_subgraph(g, c));
    auto [e, fv] = connected_tree(sub, ord.restricted(g, *sub));
    Graph const &t = e.map.domain();
    VertexId const offset = VertexId(names.size());
    first_of.push_back(offset);
    for (VertexId v = 0; v < t.size(); ++v) {
      names.push_back(t.name(v));
      assignment.emplace(t.name(v), sub->name(e.map(v)));
    }
    for (auto [a, b] : t.edges())
      edges.emplace_back(offset + a, offset + b);
    for (VertexId x : fv)
      out.f_vertices.push_back(offset + x);
  }

  auto forest = share(Graph::make(names, edges));
  out.map = GraphMap::make(forest, gamma, assignment);

  // T_1 - b1 - T_2 - b2 - T_3 ..., joined at the first vertex of each tree
  for (std::size_t j = 0; j + 1 < first_of.size(); ++j) {
    VertexId b = VertexId(names.size());
    names.push_back("b" + std::to_string(j + 1));
    edges.emplace_back(first_of[j], b);
    edges.emplace_back(b, first_of[j + 1]);
    out.bridges.push_back(b);
  }
  out.tree = share(Graph::make(std::move(names), edges));
  return out;
}

std::vector<std::string> synthesized_tree_violations(SynthesizedTree const &t)
{
  std::vector<std::string> out;
  Graph const &tree = *t.tree;
  Graph const &gamma = t.map.codomain();
  if (!is_connected(tree) || !is_forest(tree))
    out.push_back("T is not a tree");
  if (t.map.domain() != remove(tree, t.bridges))
    out.push_back("immersion domain is not T minus the bridges");
  if (!is_immersion(t.map)) {
    out.push_back("map is not an immersion");
    return out;
  }
  std::set<VertexId> hit;
  for (VertexId x : t.f_vertices)
    hit.insert(t.map(x));
  if (hit.size() != gamma.size())
    out.push_back("phi(F) misses a vertex of Gamma");
  if (!has_SIPL(t.map, t.order, t.f_vertices).holds)
    out.push_back("SIPL fails for F");
  if (tree.size() > t.bound)
    out.push_back("|V(T)| = " + std::to_string(tree.size()) + " exceeds " +
                  std::to_string(t.bound));
  return out;
}

CdkDecision decide_cycle_into_path(int m, int n)
{
  if (m < 3 || n < 1)
    throw Error(ErrorKind::BadParameter, "need m >= 3 and n >= 1");

  CdkDecision out;
  out.m = m;
  out.n = n;
  GraphMap const phi_n = cycle_to_path_map(n, m);

  if (n >= 2 * m - 2) {
    out.anchor_n = 2 * m - 2;
    GraphMap anchor = cycle_to_path_map(out.anchor_n, m);
    if (restrict(phi_n, anchor.domain(), anchor.codomain()) != anchor)
      throw Error(ErrorKind::CertificateGap, "anchor map is not a restriction");
    out.certificate = certify_injective(anchor);
    if (out.certificate.verdict != Verdict::CertifiedInjective)
      throw Error(ErrorKind::CertificateGap,
                  "peeling failed for the 2m-2 map with m = " + std::to_string(m));
    out.verdict = CdkVerdict::Injective;
  } else {
    out.anchor_n = 2 * m - 3;
    GraphMap anchor = cycle_to_path_map(out.anchor_n, m);
    if (restrict(anchor, phi_n.domain(), phi_n.codomain()) != phi_n)
      throw Error(ErrorKind::CertificateGap, "map is not a restriction of the anchor");
    out.certificate = certify_noninjective(anchor);
    if (out.certificate.verdict != Verdict::CertifiedNonInjective)
      throw Error(ErrorKind::CertificateGap,
                  "no IPL failure for the 2m-3 map with m = " + std::to_string(m));
    out.verdict = CdkVerdict::NonInjective;
  }
  return out;
}

bool LowerBoundCount::matches() const
{
  for (int l = 0; l <= k; ++l) {
    if (std::size_t(l) >= paths_by_length.size() ||
        paths_by_length[std::size_t(l)] != (std::size_t{1} << l))
      return false;
  }
  return endpoints == closed_form && double(endpoints) >= half_power &&
         std::sqrt(double(endpoints)) >= quarter_power;
}

LowerBoundCount lowerbound_count(int m)
{
  if (m < 3)
    throw Error(ErrorKind::BadParameter, "lowerbound_count needs m >= 3");
  Graph const g = lowerbound_graph(m);
  VertexId const v0 = g.id("v0");

  LowerBoundCount out;
  out.m = m;
  out.k = (m - 1) / 2;
  out.closed_form = m % 2 == 1 ? (std::size_t{2} << out.k) - 1
                               : 3 * (std::size_t{1} << out.k) - 1;
  out.half_power = std::pow(2.0, m / 2.0);
  out.quarter_power = std::pow(2.0, m / 4.0);

  std::set<Walk> ends;
  for_each_path(g, PathKind::Induced, TotalOrder::of(g), v0, [&](Path const &p) {
    std::size_t len = p.size() - 1;
    if (out.paths_by_length.size() <= len)
      out.paths_by_length.resize(len + 1, 0);
    ++out.paths_by_length[len];
    Walk w{v0, {}};
    for (std::size_t i = 1; i < p.size(); ++i)
      w = step(g, w, p[i]);
    ends.insert(std::move(w));
  });
  out.endpoints = ends.size();
  return out;
}

} // namespace raagpath
