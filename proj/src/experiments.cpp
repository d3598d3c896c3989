#include "raagpath/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

#include "raagpath/error.hpp"

namespace raagpath {

Json ExperimentReport::to_json() const
{
  return Json{{"experiment", id}, {"parameters", parameters}, {"rows", rows}, {"pass", pass}};
}

unsigned worker_count()
{
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (char const *env = std::getenv("RAAGPATH_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1)
      n = std::min(n, unsigned(cap));
  }
  return n;
}

namespace {

/// Runs job(i) for i in [0, count) on the worker pool.
template <typename Job>
void parallel_for(std::size_t count, Job job)
{
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      job(i);
  };
  unsigned const n = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
}

std::vector<std::string> expected_failing_path(int m)
{
  std::vector<std::string> out{"v0"};
  for (int i = m - 1; i >= 2; --i)
    out.push_back("v" + std::to_string(i));
  return out;
}

} // namespace

std::vector<std::pair<int, int>> cdk_threshold_cells(int m_lo, int m_hi)
{
  std::vector<std::pair<int, int>> out;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int n = m; n <= 2 * m + 2; ++n)
      out.emplace_back(m, n);
  return out;
}

ExperimentReport run_cdk_grid(std::pair<int, int> m_range, std::pair<int, int> n_range)
{
  if (m_range.first > m_range.second || n_range.first > n_range.second)
    throw Error(ErrorKind::BadParameter, "empty range");
  std::vector<std::pair<int, int>> cells;
  for (int m = m_range.first; m <= m_range.second; ++m)
    for (int n = n_range.first; n <= n_range.second; ++n)
      cells.emplace_back(m, n);
  return run_cdk_grid(std::move(cells));
}

ExperimentReport run_cdk_grid(std::vector<std::pair<int, int>> cells)
{
  for (auto [m, n] : cells)
    if (m < 3 || n < 1)
      throw Error(ErrorKind::BadParameter, "need m >= 3 and n >= 1");
  std::sort(cells.begin(), cells.end());

  std::vector<Json> rows(cells.size());
  std::vector<char> ok(cells.size(), 0);
  parallel_for(cells.size(), [&](std::size_t i) {
    auto [m, n] = cells[i];
    CdkVerdict const expected = n >= 2 * m - 2 ? CdkVerdict::Injective : CdkVerdict::NonInjective;
    Json row{{"m", m}, {"n", n}, {"expected", std::string(to_string(expected))}};
    try {
      CdkDecision d = decide_cycle_into_path(m, n);
      bool good = d.verdict == expected;
      row["verdict"] = std::string(to_string(d.verdict));
      row["anchor_n"] = d.anchor_n;
      if (d.certificate.noninjective) {
        auto const &path = d.certificate.noninjective->path;
        row["failing_path"] = path;
        row["witness"] = d.certificate.noninjective->witness_text;
        if (n == 2 * m - 3) {
          bool path_ok = path == expected_failing_path(m);
          row["failing_path_expected"] = path_ok;
          good = good && path_ok;
        }
      } else if (d.certificate.injective) {
        row["peeled"] = d.certificate.injective->trace.size();
      }
      row["match"] = good;
      ok[i] = good;
    } catch (Error const &e) {
      row["error"] = e.what();
      row["match"] = false;
    }
    rows[i] = std::move(row);
  });

  ExperimentReport out;
  out.id = "cdk-grid";
  Json list = Json::array();
  for (auto [m, n] : cells)
    list.push_back({m, n});
  out.parameters = Json{{"cells", std::move(list)}};
  out.rows = std::move(rows);
  out.pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  return out;
}

ExperimentReport run_bounds(std::vector<NamedGraph> const &graphs,
                            std::vector<int> const &lowerbound_ms)
{
  ExperimentReport out;
  out.id = "bounds";
  std::vector<std::string> names;
  for (auto const &g : graphs)
    names.push_back(g.name);
  out.parameters = Json{{"graphs", names}, {"lowerbound_m", lowerbound_ms}};

  std::vector<Json> rows(graphs.size() + lowerbound_ms.size());
  std::vector<char> ok(rows.size(), 0);
  parallel_for(rows.size(), [&](std::size_t i) {
    if (i < graphs.size()) {
      auto const &ng = graphs[i];
      Json row{{"kind", "synth"}, {"graph", ng.name}, {"m", ng.graph->size()}};
      try {
        SynthesizedTree t = synthesize_sipl_tree(ng.graph);
        auto bad = synthesized_tree_violations(t);
        row["size"] = t.tree->size();
        row["bound"] = t.bound;
        row["bridges"] = t.bridges.size();
        row["violations"] = bad;
        ok[i] = bad.empty();
      } catch (Error const &e) {
        row["error"] = e.what();
      }
      row["pass"] = ok[i] != 0;
      rows[i] = std::move(row);
    } else {
      int m = lowerbound_ms[i - graphs.size()];
      Json row{{"kind", "lowerbound"}, {"graph", "Gamma_" + std::to_string(m)}};
      try {
        auto c = lowerbound_count(m);
        row.update(lowerbound_to_json(c));
        ok[i] = c.matches();
      } catch (Error const &e) {
        row["error"] = e.what();
      }
      row["pass"] = ok[i] != 0;
      rows[i] = std::move(row);
    }
  });

  out.rows = std::move(rows);
  out.pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  return out;
}

namespace {

Graph disjoint_union(Graph const &a, Graph const &b, std::string const &prefix)
{
  std::vector<std::string> names = a.names();
  for (auto const &n : b.names())
    names.push_back(prefix + n);
  std::vector<std::pair<VertexId, VertexId>> edges = a.edges();
  VertexId const off = VertexId(a.size());
  for (auto [u, v] : b.edges())
    edges.emplace_back(off + u, off + v);
  return Graph::make(std::move(names), edges);
}

} // namespace

std::vector<NamedGraph> standard_bound_graphs()
{
  std::vector<NamedGraph> out;
  out.push_back({"K_1", share(complete_graph(1))});
  for (int m = 3; m <= 7; ++m)
    out.push_back({"C_" + std::to_string(m), share(cycle_graph(m))});
  for (int n = 3; n <= 5; ++n)
    out.push_back({"K_" + std::to_string(n), share(complete_graph(n))});
  out.push_back({"K_2,3", share(standard_graph(Family::CompleteBipartite, 2, 3))});
  out.push_back({"Gamma_9", share(lowerbound_graph(9))});
  out.push_back({"P_5", share(path_graph(5))});
  out.push_back({"2K_1", share(standard_graph(Family::Edgeless, 2))});
  out.push_back({"C_3+P_2", share(disjoint_union(cycle_graph(3), path_graph(2), "w"))});
  out.push_back({"C_4+K_1+P_3",
                 share(disjoint_union(disjoint_union(cycle_graph(4), complete_graph(1), "w"),
                                      path_graph(3), "x"))});
  return out;
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi)
{
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Graph random_connected_graph(Rng &rng, std::size_t n)
{
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("v" + std::to_string(i));
  std::set<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v < n; ++v)
    edges.emplace(VertexId(uniform(rng, 0, v - 1)), v);
  std::bernoulli_distribution extra(0.4);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (extra(rng))
        edges.emplace(u, v);
  return Graph::make(std::move(names),
                     std::vector<std::pair<VertexId, VertexId>>(edges.begin(), edges.end()));
}

std::vector<Walk> random_subtree(Rng &rng, Graph const &g, std::size_t size)
{
  std::vector<Walk> walks{Walk{0, {}}};
  std::set<Walk> have(walks.begin(), walks.end());
  for (std::size_t tries = 0; walks.size() < size && tries < 50 * size; ++tries) {
    Walk const &w = walks[uniform(rng, 0, walks.size() - 1)];
    std::vector<Walk> fresh;
    for (auto &x : cover_neighbors(g, w))
      if (!have.count(x))
        fresh.push_back(std::move(x));
    if (fresh.empty())
      continue;
    Walk pick = fresh[uniform(rng, 0, fresh.size() - 1)];
    have.insert(pick);
    walks.push_back(std::move(pick));
  }
  return walks;
}

Word random_reduced_word(Rng &rng, Graph const &g, std::size_t length)
{
  Word w;
  for (std::size_t tries = 0; w.size() < length && tries < 20 * (length + 1); ++tries) {
    std::uint32_t code = std::uint32_t(uniform(rng, 0, 2 * g.size() - 1));
    append_reduced(g, w, Letter{code / 2, (code & 1u) != 0});
  }
  return w;
}

TotalOrder random_order(Rng &rng, std::size_t n)
{
  std::vector<VertexId> seq(n);
  for (VertexId i = 0; i < n; ++i)
    seq[i] = i;
  std::shuffle(seq.begin(), seq.end(), rng);
  return TotalOrder::from_sequence(n, std::move(seq));
}

std::string describe(Graph const &g)
{
  std::string out = "Gamma{";
  for (auto [u, v] : g.edges())
    out += g.name(u) + "-" + g.name(v) + " ";
  return out + "}";
}

class SuiteRunner
{
public:
  SuiteRunner(PropertySuiteOptions const &opt, PropertySuiteResult &res)
    : _opt(opt), _res(res)
  {}

  void instance(Rng &rng, std::size_t index)
  {
    Graph const gamma = random_connected_graph(rng, uniform(rng, 2, _opt.max_gamma));
    auto gp = share(gamma);
    auto walks = random_subtree(rng, gamma, uniform(rng, 1, _opt.max_tree));
    CoverEmbedding e = cover_subgraph(gp, walks);
    GraphMap const &phi = e.map;
    Graph const &tree = phi.domain();
    TotalOrder const ord = random_order(rng, gamma.size());
    _tag = "instance " + std::to_string(index) + " " + describe(gamma);

    VertexSet F;
    std::bernoulli_distribution coin(0.5);
    for (VertexId v = 0; v < tree.size(); ++v)
      if (coin(rng))
        F.push_back(v);
    if (F.empty())
      F.push_back(VertexId(uniform(rng, 0, tree.size() - 1)));

    // (a) on every singleton with SIPL, and on F itself
    OrderedMap const om(phi);
    for (VertexId v = 0; v < tree.size(); ++v)
      if (has_SIPL(phi, ord, {v}).holds)
        check_survives(om, v);

    // (b)
    for (auto const &fail : lift_failures(phi, PathKind::Induced, ord, F))
      check_ipl_witness(om, fail);

    // (c)
    VertexSet sub;
    for (VertexId v = 0; v < tree.size(); ++v)
      if (coin(rng))
        sub.push_back(v);
    GraphMap const small = restrict(phi, induced_subgraph(tree, sub), gamma);
    OrderedMap const om_small(small);
    for (std::size_t k = 0; k < _opt.words_per_instance; ++k)
      check_support(om, om_small, random_reduced_word(rng, gamma, uniform(rng, 0, _opt.length_bound)));

    // (d) on the instance when it qualifies, and on a synthesized tree
    if (covers(phi, F) && has_SIPL(phi, ord, F).holds)
      check_lengths(rng, om);
    SynthesizedTree st = synthesize_sipl_tree(gp, ord);
    auto bad = synthesized_tree_violations(st);
    for (auto const &b : bad)
      fail("synthesized tree: " + b);
    OrderedMap const om_tree(st.map);
    for (VertexId v : st.f_vertices)
      check_survives(om_tree, v);
    check_lengths(rng, om_tree);

    ++_res.instances;
  }

private:
  void fail(std::string const &what) { _res.counterexamples.push_back(_tag + ": " + what); }

  static bool covers(GraphMap const &phi, VertexSet const &F)
  {
    std::set<VertexId> hit;
    for (VertexId v : F)
      hit.insert(phi(v));
    return hit.size() == phi.codomain().size();
  }

  void check_survives(OrderedMap const &om, VertexId v)
  {
    ++_res.sipl_instances;
    if (auto w = surviving_violation_search(om, v, _opt.survive_bound))
      fail("SIPL at " + om.domain().name(v) + " but " +
           format_word(om.codomain(), w->word) + " violates surviving");
  }

  void check_ipl_witness(OrderedMap const &om, LiftFailure const &f)
  {
    ++_res.ipl_failures;
    Word w = conjugated_path_word(f.failing_prefix());
    VertexSet supp = support_elem(om.domain(), phi_star_word(om, w));
    if (std::binary_search(supp.begin(), supp.end(), f.start))
      fail("IPL witness " + format_word(om.codomain(), w) + " keeps " +
           om.domain().name(f.start));
  }

  void check_support(OrderedMap const &big, OrderedMap const &small, Word const &w)
  {
    ++_res.support_checks;
    auto big_names = names_of(big.domain(), support_elem(big.domain(), phi_star_word(big, w)));
    auto small_names =
      names_of(small.domain(), support_elem(small.domain(), phi_star_word(small, w)));
    std::sort(big_names.begin(), big_names.end());
    std::sort(small_names.begin(), small_names.end());
    if (!std::includes(big_names.begin(), big_names.end(), small_names.begin(),
                       small_names.end()))
      fail("support grows under restriction for " + format_word(big.codomain(), w));
  }

  void check_lengths(Rng &rng, OrderedMap const &om)
  {
    for (std::size_t k = 0; k < _opt.words_per_instance; ++k) {
      Word w = random_reduced_word(rng, om.codomain(), uniform(rng, 0, _opt.length_bound));
      ++_res.length_checks;
      if (length_elem(om.domain(), phi_star_word(om, w)) < w.size())
        fail("image of " + format_word(om.codomain(), w) + " is shorter");
    }
  }

  PropertySuiteOptions const &_opt;
  PropertySuiteResult &_res;
  std::string _tag;
};

} // namespace

PropertySuiteResult run_property_suite(PropertySuiteOptions const &opt)
{
  if (opt.max_gamma < 2 || opt.max_tree < 1)
    throw Error(ErrorKind::BadParameter, "need max_gamma >= 2 and max_tree >= 1");
  PropertySuiteResult res;
  Rng rng(opt.seed);
  SuiteRunner runner(opt, res);
  for (std::size_t i = 0; i < opt.instances; ++i)
    runner.instance(rng, i);
  return res;
}

} // namespace raagpath
