#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "raagpath/cover.hpp"
#include "raagpath/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace raagpath;

namespace {

Path ids(Graph const &g, std::vector<std::string> const &names)
{
  Path p;
  for (auto const &n : names)
    p.push_back(g.id(n));
  return p;
}

std::vector<std::vector<std::string>> named_paths(Graph const &g, std::vector<Path> const &ps)
{
  std::vector<std::vector<std::string>> out;
  for (auto const &p : ps)
    out.push_back(names_of(g, p));
  return out;
}

std::vector<std::size_t> ranks(TotalOrder const &ord)
{
  std::vector<std::size_t> r(ord.size());
  for (VertexId v = 0; v < ord.size(); ++v)
    r[v] = ord.rank(v);
  return r;
}

/// Ball of radius r around the base walk in the universal cover.
std::vector<Walk> cover_ball(Graph const &g, std::size_t r)
{
  std::vector<Walk> out{Walk{0, {}}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].length() == r)
      continue;
    for (auto const &n : cover_neighbors(g, out[i]))
      if (n.length() > out[i].length())
        out.push_back(n);
  }
  return out;
}

/// A random subtree of the universal cover grown from the base walk.
std::vector<Walk> random_cover_tree(std::mt19937_64 &rng, Graph const &g, std::size_t size)
{
  std::vector<Walk> tree{Walk{0, {}}};
  std::set<Walk> in{tree.front()};
  for (int guard = 0; tree.size() < size && guard < 200; ++guard) {
    auto const &w = tree[std::uniform_int_distribution<std::size_t>(0, tree.size() - 1)(rng)];
    auto nbrs = cover_neighbors(g, w);
    if (nbrs.empty())
      break;
    auto n = nbrs[std::uniform_int_distribution<std::size_t>(0, nbrs.size() - 1)(rng)];
    if (in.insert(n).second)
      tree.push_back(n);
  }
  return tree;
}

std::vector<Graph> connected_small_graphs()
{
  std::vector<Graph> out;
  for (auto &g : oracle::small_graphs_up_to_iso(4))
    if (g.size() >= 2 && is_connected(g))
      out.push_back(g);
  out.push_back(cycle_graph(5));
  out.push_back(standard_graph(Family::CompleteBipartite, 2, 3));
  return out;
}

} // namespace

TEST_CASE("induced and semi-induced predicates on C_5")
{
  auto c5 = cycle_graph(5);
  auto ord = TotalOrder::of(c5);
  Path a1 = ids(c5, {"v0", "v1", "v2", "v3", "v4"});
  Path a2 = ids(c5, {"v0", "v4", "v3", "v2", "v1"});
  CHECK(is_path(c5, a1));
  CHECK_FALSE(is_induced(c5, a1));
  CHECK(is_semi_induced(c5, a1, ord));
  CHECK_FALSE(is_semi_induced(c5, a2, ord));
  CHECK(is_induced(c5, ids(c5, {"v0", "v4", "v3", "v2"})));

  CHECK_FALSE(is_path(c5, Path{}));
  CHECK_FALSE(is_path(c5, ids(c5, {"v0", "v2"})));
  CHECK_FALSE(is_path(c5, ids(c5, {"v0", "v1", "v0"})));
}

TEST_CASE("maximal paths from v0 in C_5")
{
  auto c5 = cycle_graph(5);
  auto ord = TotalOrder::of(c5);
  using N = std::vector<std::vector<std::string>>;
  CHECK(named_paths(c5, maximal_induced_paths_from(c5, 0)) ==
        N{{"v0", "v1", "v2", "v3"}, {"v0", "v4", "v3", "v2"}});
  CHECK(named_paths(c5, maximal_semi_induced_paths_from(c5, ord, 0)) ==
        N{{"v0", "v1", "v2", "v3", "v4"}, {"v0", "v4", "v3", "v2"}});
  CHECK(maximal_paths_from(c5, 0).size() == 2);
  CHECK_THROWS_AS(maximal_induced_paths_from(c5, 9), Error);
}

TEST_CASE("K_{2,3} from v0")
{
  auto g = standard_graph(Family::CompleteBipartite, 2, 3);
  auto ord = TotalOrder::of(g);
  auto ind = maximal_induced_paths_from(g, 0);
  REQUIRE(ind.size() == 3);
  for (auto const &p : ind) {
    CHECK(p.size() == 3);
    CHECK(p.front() == 0);
    CHECK(p.back() == 1);
  }
  CHECK(maximal_semi_induced_paths_from(g, ord, 0).size() == 4);
}

TEST_CASE("K_n has 2^(n-2) maximal semi-induced paths from its least vertex")
{
  for (int n = 3; n <= 10; ++n) {
    auto g = complete_graph(n);
    CHECK(maximal_semi_induced_paths_from(g, TotalOrder::of(g), 0).size() ==
          std::size_t{1} << (n - 2));
  }
}

TEST_CASE("induced paths in the lower-bound graphs double with length")
{
  for (int k = 1; k <= 5; ++k) {
    auto g = lowerbound_graph(2 * k + 1);
    std::map<std::size_t, std::size_t> by_len;
    for (auto const &p : induced_paths_from(g, g.id("v0")))
      ++by_len[p.size() - 1];
    for (int l = 0; l <= k; ++l)
      CHECK(by_len[std::size_t(l)] == std::size_t{1} << l);
  }
}

TEST_CASE("enumeration agrees with the brute-force oracle")
{
  std::mt19937_64 rng(7);
  auto graphs = oracle::small_graphs_up_to_iso(4);
  graphs.push_back(cycle_graph(5));
  graphs.push_back(cycle_graph(6));
  graphs.push_back(standard_graph(Family::CompleteBipartite, 2, 3));
  graphs.push_back(lowerbound_graph(6));
  for (auto const &g : graphs) {
    std::vector<VertexId> seq(g.size());
    for (VertexId v = 0; v < g.size(); ++v)
      seq[v] = v;
    std::shuffle(seq.begin(), seq.end(), rng);
    auto ord = TotalOrder::from_sequence(g.size(), seq);
    auto rk = ranks(ord);
    for (VertexId s = 0; s < g.size(); ++s) {
      auto sorted = [](std::vector<Path> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      CHECK(sorted(maximal_paths_from(g, s)) ==
            oracle::maximal_filtered(g, s, [](Path const &) { return true; }));
      CHECK(sorted(maximal_induced_paths_from(g, s)) ==
            oracle::maximal_filtered(g, s, [&](Path const &p) { return oracle::induced(g, p); }));
      CHECK(sorted(maximal_semi_induced_paths_from(g, ord, s)) ==
            oracle::maximal_filtered(g, s, [&](Path const &p) {
              return oracle::semi_induced(g, rk, p);
            }));

      // induced => semi-induced => path, over one enumeration
      for_each_path(g, PathKind::Any, ord, s, [&](Path const &p) {
        CHECK(is_path(g, p));
        if (is_induced(g, p))
          CHECK(is_semi_induced(g, p, ord));
      });
      for_each_maximal_path(g, PathKind::SemiInduced, ord, s, [&](Path const &p) {
        CHECK(is_semi_induced(g, p, ord));
        for (VertexId z : g.neighbors(p.back())) {
          auto q = p;
          q.push_back(z);
          CHECK_FALSE(is_semi_induced(g, q, ord));
        }
      });
    }
  }
}

TEST_CASE("lifting along the cycle-to-path maps")
{
  auto f = cycle_to_path_map(8, 5);
  auto const &c = f.codomain();
  auto const &p = f.domain();
  auto r = lift_path(f, ids(c, {"v0", "v1", "v2", "v3"}), p.id("v0p"));
  REQUIRE(r.lift);
  CHECK(names_of(p, *r.lift) == std::vector<std::string>{"v0p", "v1p", "v2p", "v3p"});
  CHECK(r.prefix == *r.lift);

  CHECK_THROWS_AS(lift_path(f, ids(c, {"v1", "v2"}), p.id("v0p")), Error);

  for (int m = 3; m <= 10; ++m) {
    auto g = cycle_to_path_map(2 * m - 3, m);
    Path alpha{0};
    for (int j = m - 1; j >= 2; --j)
      alpha.push_back(VertexId(j));
    auto res = lift_path(g, alpha, g.domain().id("v0p"));
    CHECK_FALSE(res.lift);
    CHECK(res.prefix.size() == alpha.size() - 1);
  }

  auto id = identity_map(share(cycle_graph(5)));
  Path a = ids(id.codomain(), {"v2", "v3", "v4", "v0"});
  CHECK(*lift_path(id, a, a.front()).lift == a);
}

TEST_CASE("lifting properties of phi_{8,5}")
{
  auto f = cycle_to_path_map(8, 5);
  auto const &p = f.domain();
  auto ord = TotalOrder::of(f.codomain());
  VertexSet F{p.id("v0p"), p.id("v1p")};
  CHECK(has_SIPL(f, ord, F).holds);
  CHECK(has_IPL(f, F).holds);
  auto pl = has_PL(f, {p.id("v0p")});
  CHECK_FALSE(pl.holds);
  REQUIRE(pl.first_failure());
  CHECK(pl.first_failure()->start == p.id("v0p"));

  auto id = identity_map(share(cycle_graph(6)));
  CHECK(has_IPL(id, {0, 1, 2, 3, 4, 5}).holds);
  CHECK(has_PL(id, {0, 3}).holds);

  auto fold = GraphMap::make(share(path_graph(3)), share(path_graph(2)), std::vector<VertexId>{0, 1, 0});
  CHECK_THROWS_AS(has_IPL(fold, {0}), Error);
}

TEST_CASE("lift failures report a shortest unliftable prefix")
{
  for (int m = 3; m <= 7; ++m) {
    auto f = cycle_to_path_map(2 * m - 3, m);
    auto ord = TotalOrder::of(f.codomain());
    VertexSet all(f.domain().size());
    for (VertexId v = 0; v < all.size(); ++v)
      all[v] = v;
    for (auto const &fail : lift_failures(f, PathKind::Induced, ord, all)) {
      CHECK(is_induced(f.codomain(), fail.path));
      auto pre = fail.failing_prefix();
      CHECK(pre.size() == fail.lifted_prefix.size() + 1);
      Path head(pre.begin(), pre.end() - 1);
      CHECK(lift_path(f, head, fail.start).lift);
      CHECK_FALSE(lift_path(f, pre, fail.start).lift);
    }
  }
}

TEST_CASE("lifts into the universal cover have distinct endpoints")
{
  for (auto const &g0 : {cycle_graph(5), lowerbound_graph(5), complete_graph(4)}) {
    auto gamma = share(g0);
    auto emb = cover_subgraph(gamma, cover_ball(*gamma, 4));
    auto const &f = emb.map;
    auto ord = TotalOrder::of(*gamma);
    VertexId root = *emb.vertex_of(Walk{0, {}});
    std::set<VertexId> ends;
    std::size_t lifted = 0;
    for_each_path(*gamma, PathKind::SemiInduced, ord, 0, [&](Path const &a) {
      auto r = lift_path(f, a, root);
      if (!r.lift)
        return;
      ++lifted;
      CHECK(ends.insert(r.lift->back()).second);
    });
    CHECK(lifted > 1);
  }
}

TEST_CASE("SIPL implies IPL and decomposes over the link")
{
  std::mt19937_64 rng(11);
  auto graphs = connected_small_graphs();
  std::size_t decomposed = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto gamma = share(graphs[std::size_t(trial) % graphs.size()]);
    auto emb = cover_subgraph(gamma, random_cover_tree(rng, *gamma, 4 + std::size_t(trial) % 9));
    auto const &f = emb.map;
    auto const &lam = f.domain();
    auto ord = TotalOrder::of(*gamma);
    VertexSet all(lam.size());
    for (VertexId v = 0; v < all.size(); ++v)
      all[v] = v;
    if (has_SIPL(f, ord, all).holds)
      CHECK(has_IPL(f, all).holds);

    for (VertexId vp = 0; vp < lam.size(); ++vp) {
      VertexId v = f(vp);
      if (lam.degree(vp) != gamma->degree(v))
        continue;
      auto xs = link(*gamma, v);
      ord.sort(xs);
      bool parts = true;
      VertexSet removed{v};
      for (VertexId x : xs) {
        auto sub_cod = remove(*gamma, removed);
        VertexSet removed_dom;
        for (VertexId r : removed)
          for (VertexId w : f.fiber(r))
            removed_dom.push_back(w);
        auto sub_dom = remove(lam, removed_dom);
        auto fi = restrict(f, sub_dom, sub_cod);
        VertexId xp = 0;
        for (VertexId w : lam.neighbors(vp))
          if (f(w) == x)
            xp = w;
        auto oi = ord.restricted(*gamma, sub_cod);
        parts = parts && has_SIPL(fi, oi, {fi.domain().id(lam.name(xp))}).holds;
        removed.push_back(x);
      }
      CHECK(has_SIPL(f, ord, {vp}).holds == parts);
      ++decomposed;
    }
  }
  CHECK(decomposed > 100);
}
