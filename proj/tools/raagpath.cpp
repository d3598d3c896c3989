// Command-line front end: graph and map inspection, path enumeration, word
// arithmetic, the induced homomorphism, certificates and experiments.
//
// Exit codes: 0 pass, 1 verdict mismatch or failed report, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "raagpath/error.hpp"
#include "raagpath/experiments.hpp"
#include "raagpath/io.hpp"

using namespace raagpath;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

struct GraphSource
{
  std::string file;
  std::string family;
  int p = 0;
  int q = 0;

  void attach(CLI::App *cmd)
  {
    cmd->add_option("--graph", file, "graph file (JSON or adjacency text)");
    cmd->add_option("--family", family,
                    "cycle, path, complete, bipartite, edgeless or lowerbound");
    cmd->add_option("--p", p, "first family parameter");
    cmd->add_option("--q", q, "second family parameter (bipartite)");
  }

  Graph load() const
  {
    if (!file.empty())
      return load_graph(file);
    if (family == "cycle")
      return standard_graph(Family::Cycle, p);
    if (family == "path")
      return standard_graph(Family::Path, p);
    if (family == "complete")
      return standard_graph(Family::Complete, p);
    if (family == "bipartite")
      return standard_graph(Family::CompleteBipartite, p, q);
    if (family == "edgeless")
      return standard_graph(Family::Edgeless, p);
    if (family == "lowerbound")
      return lowerbound_graph(p);
    throw Error(ErrorKind::BadParameter, "give --graph FILE or --family NAME --p N");
  }
};

struct MapSource
{
  std::string file;
  int cdk_n = 0;
  int cdk_m = 0;

  void attach(CLI::App *cmd)
  {
    cmd->add_option("--map", file, "map file (JSON)");
    cmd->add_option("--cdk-n", cdk_n, "use the path-into-cycle map P_n -> C_m ...");
    cmd->add_option("--cdk-m", cdk_m, "... with this m");
  }

  OrderedMap load() const
  {
    if (!file.empty())
      return load_map(file);
    if (cdk_n > 0 && cdk_m > 0)
      return OrderedMap(cycle_to_path_map(cdk_n, cdk_m));
    throw Error(ErrorKind::BadParameter, "give --map FILE or --cdk-n N --cdk-m M");
  }
};

std::vector<std::string> split_names(std::string const &text)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

std::pair<int, int> parse_range(std::string const &text)
{
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (std::exception const &) {
    throw Error(ErrorKind::BadParameter, "range must look like 3:8, got '" + text + "'");
  }
}

std::string cell_text(Json const &v)
{
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (auto const &x : v) {
      if (!out.empty())
        out += ' ';
      out += cell_text(x);
    }
    return out;
  }
  return v.dump();
}

/// Aligned columns for a report's rows, `key: value` lines otherwise.
std::string render_table(Json const &j)
{
  std::ostringstream os;
  if (j.is_object() && j.contains("rows") && j["rows"].is_array()) {
    std::vector<std::string> cols;
    for (auto const &row : j["rows"])
      for (auto it = row.begin(); it != row.end(); ++it)
        if (!it.value().is_object() &&
            std::find(cols.begin(), cols.end(), it.key()) == cols.end())
          cols.push_back(it.key());
    std::vector<std::vector<std::string>> cells{cols};
    for (auto const &row : j["rows"]) {
      std::vector<std::string> line;
      for (auto const &c : cols)
        line.push_back(row.contains(c) ? cell_text(row[c]) : "");
      cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(cols.size(), 0);
    for (auto const &line : cells)
      for (std::size_t i = 0; i < line.size(); ++i)
        width[i] = std::max(width[i], line[i].size());
    for (auto const &line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i)
        os << line[i] << std::string(width[i] - line[i].size() + 2, ' ');
      os << "\n";
    }
    if (j.contains("pass"))
      os << "pass: " << cell_text(j["pass"]) << "\n";
    return os.str();
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      os << it.key() << ": " << (it.value().is_object() ? it.value().dump() : cell_text(it.value()))
         << "\n";
    return os.str();
  }
  return cell_text(j) + "\n";
}

struct Output
{
  bool table = false;

  void emit(Json const &j) const
  {
    if (table)
      std::cout << render_table(j);
    else
      std::cout << j.dump(2) << "\n";
  }
};

PathKind parse_kind(std::string const &k)
{
  if (k == "any")
    return PathKind::Any;
  if (k == "induced")
    return PathKind::Induced;
  if (k == "semi" || k == "semi-induced")
    return PathKind::SemiInduced;
  throw Error(ErrorKind::BadParameter, "path kind must be any, induced or semi");
}

Json graph_summary(Graph const &g)
{
  Json j = graph_to_json(g);
  j["size"] = g.size();
  j["edge_count"] = g.edge_count();
  j["connected"] = is_connected(g);
  j["forest"] = is_forest(g);
  return j;
}

Json map_summary(OrderedMap const &om)
{
  GraphMap const &f = om.map();
  Json fibers = Json::object();
  for (VertexId v = 0; v < f.codomain().size(); ++v)
    fibers[f.codomain().name(v)] = names_of(f.domain(), om.block(v));
  return Json{{"map", map_to_json(om)},
              {"immersion", is_immersion(f)},
              {"covering", is_covering(f)},
              {"surjective", f.is_surjective()},
              {"domain_forest", is_forest(f.domain())},
              {"fibers", std::move(fibers)}};
}

Verdict parse_expect(std::string const &e)
{
  if (e == "injective")
    return Verdict::CertifiedInjective;
  if (e == "noninjective")
    return Verdict::CertifiedNonInjective;
  if (e == "unknown")
    return Verdict::Unknown;
  throw Error(ErrorKind::BadParameter, "--expect must be injective, noninjective or unknown");
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"raagpath: path lifting, induced homomorphisms and certificates for "
               "right-angled Artin groups"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--table", out.table, "aligned text instead of JSON");

  int status = exit_pass;

  // graph
  auto *graph_cmd = app.add_subcommand("graph", "inspect or convert a graph");
  GraphSource graph_src;
  graph_src.attach(graph_cmd);
  std::string graph_to;
  graph_cmd->add_option("--to", graph_to, "json, text or dot");
  graph_cmd->callback([&] {
    Graph g = graph_src.load();
    if (graph_to == "text")
      std::cout << format_graph_text(g);
    else if (graph_to == "dot")
      std::cout << to_dot(g);
    else if (graph_to == "json")
      std::cout << graph_to_json(g).dump(2) << "\n";
    else if (graph_to.empty())
      out.emit(graph_summary(g));
    else
      throw Error(ErrorKind::BadParameter, "--to must be json, text or dot");
  });

  // map
  auto *map_cmd = app.add_subcommand("map", "inspect a map of graphs");
  MapSource map_src;
  map_src.attach(map_cmd);
  bool map_emit = false;
  map_cmd->add_flag("--emit", map_emit, "print only the map file");
  map_cmd->callback([&] {
    OrderedMap om = map_src.load();
    if (map_emit)
      std::cout << map_to_json(om).dump(2) << "\n";
    else
      out.emit(map_summary(om));
  });

  // paths
  auto *paths_cmd = app.add_subcommand("paths", "enumerate paths from a vertex");
  GraphSource paths_src;
  paths_src.attach(paths_cmd);
  std::string paths_from, paths_kind = "induced", paths_order;
  bool paths_all = false, paths_count = false;
  paths_cmd->add_option("--from", paths_from, "start vertex")->required();
  paths_cmd->add_option("--kind", paths_kind, "any, induced or semi");
  paths_cmd->add_option("--order", paths_order, "comma-separated vertex order");
  paths_cmd->add_flag("--all", paths_all, "every path, not only maximal ones");
  paths_cmd->add_flag("--count-only", paths_count, "print the count only");
  paths_cmd->callback([&] {
    Graph g = paths_src.load();
    TotalOrder ord = paths_order.empty() ? TotalOrder::of(g)
                                         : TotalOrder::from_names(g, split_names(paths_order));
    PathKind kind = parse_kind(paths_kind);
    Json list = Json::array();
    std::size_t count = 0;
    auto visit = [&](Path const &p) {
      ++count;
      if (!paths_count)
        list.push_back(path_to_json(g, p));
    };
    if (paths_all)
      for_each_path(g, kind, ord, g.id(paths_from), visit);
    else
      for_each_maximal_path(g, kind, ord, g.id(paths_from), visit);
    if (paths_count)
      out.emit(Json{{"count", count}});
    else
      out.emit(list);
  });

  // word
  auto *word_cmd = app.add_subcommand("word", "reduce and inspect a word");
  GraphSource word_src;
  word_src.attach(word_cmd);
  std::string word_text, word_innermost;
  word_cmd->add_option("--word", word_text, "e.g. \"v1 v2 v1^-1\"")->required();
  word_cmd->add_option("--innermost", word_innermost, "look for an innermost cancellation of this vertex");
  word_cmd->callback([&] {
    Graph g = word_src.load();
    Word w = parse_word(g, word_text);
    Json j{{"word", format_word(g, w)},
           {"reduced", is_reduced(g, w)},
           {"reduce", format_word(g, reduce(g, w))},
           {"canonical", format_word(g, canonical_form(g, w))},
           {"length", length_elem(g, w)},
           {"support", names_of(g, support_elem(g, w))},
           {"letter_support", names_of(g, letter_support(w))}};
    if (!word_innermost.empty()) {
      auto span = find_innermost_cancellation(g, w, g.id(word_innermost));
      j["innermost"] = span ? Json{span->first, span->second} : Json(nullptr);
    }
    out.emit(j);
  });

  // hom
  auto *hom_cmd = app.add_subcommand("hom", "image of a word under the induced homomorphism");
  MapSource hom_src;
  hom_src.attach(hom_cmd);
  std::string hom_word;
  hom_cmd->add_option("--word", hom_word, "word over the codomain")->required();
  hom_cmd->callback([&] {
    OrderedMap om = hom_src.load();
    Word w = parse_word(om.codomain(), hom_word);
    Word img = phi_star_word(om, w);
    out.emit(Json{{"word", format_word(om.codomain(), w)},
                  {"image", format_word(om.domain(), img)},
                  {"reduced_image", format_word(om.domain(), reduce(om.domain(), img))},
                  {"support", names_of(om.domain(), support_elem(om.domain(), img))}});
  });

  // survive
  auto *survive_cmd = app.add_subcommand("survive", "bounded search for a surviving violation");
  MapSource survive_src;
  survive_src.attach(survive_cmd);
  std::string survive_vertex;
  std::size_t survive_bound = default_search_bound;
  survive_cmd->add_option("--vertex", survive_vertex, "domain vertex")->required();
  survive_cmd->add_option("--bound", survive_bound, "maximal word length");
  survive_cmd->callback([&] {
    OrderedMap om = survive_src.load();
    auto w = surviving_violation_search(om, om.domain().id(survive_vertex), survive_bound);
    Json j{{"vertex", survive_vertex}, {"bound", survive_bound}};
    if (w)
      j["witness"] = Json{{"word", format_word(om.codomain(), w->word)},
                          {"span", {w->span.first, w->span.second}},
                          {"vertex", om.domain().name(w->vertex)}};
    else
      j["witness"] = nullptr;
    out.emit(j);
  });

  // kernel
  auto *kernel_cmd = app.add_subcommand("kernel", "bounded search for a kernel element");
  MapSource kernel_src;
  kernel_src.attach(kernel_cmd);
  std::size_t kernel_bound = default_search_bound;
  kernel_cmd->add_option("--bound", kernel_bound, "maximal word length");
  kernel_cmd->callback([&] {
    OrderedMap om = kernel_src.load();
    auto w = kernel_search(om, kernel_bound);
    out.emit(Json{{"bound", kernel_bound},
                  {"kernel_word", w ? Json(format_word(om.codomain(), *w)) : Json(nullptr)}});
  });

  // certify
  auto *certify_cmd = app.add_subcommand("certify", "certify injectivity or non-injectivity");
  MapSource certify_src;
  certify_src.attach(certify_cmd);
  std::size_t certify_bound = default_search_bound;
  std::string certify_mode = "auto", certify_expect;
  certify_cmd->add_option("--bound", certify_bound, "kernel search bound for the last resort");
  certify_cmd->add_option("--mode", certify_mode, "auto, injective or noninjective");
  certify_cmd->add_option("--expect", certify_expect, "injective, noninjective or unknown");
  certify_cmd->callback([&] {
    OrderedMap om = certify_src.load();
    Certificate c;
    if (certify_mode == "auto")
      c = certify(om.map(), certify_bound);
    else if (certify_mode == "injective")
      c = certify_injective(om.map());
    else if (certify_mode == "noninjective")
      c = certify_noninjective(om.map());
    else
      throw Error(ErrorKind::BadParameter, "--mode must be auto, injective or noninjective");
    out.emit(certificate_to_json(c));
    if (!certify_expect.empty() && parse_expect(certify_expect) != c.verdict)
      status = exit_mismatch;
  });

  // synth
  auto *synth_cmd = app.add_subcommand("synth", "synthesize a tree with SIPL");
  GraphSource synth_src;
  synth_src.attach(synth_cmd);
  std::string synth_order;
  bool synth_dot = false, synth_bounds = false;
  synth_cmd->add_option("--order", synth_order, "comma-separated vertex order");
  synth_cmd->add_flag("--dot", synth_dot, "print the tree in DOT");
  synth_cmd->add_flag("--bounds", synth_bounds, "run the size-bound experiment instead");
  synth_cmd->callback([&] {
    if (synth_bounds) {
      std::vector<int> ms;
      for (int m = 3; m <= 12; ++m)
        ms.push_back(m);
      auto report = run_bounds(standard_bound_graphs(), ms);
      out.emit(report.to_json());
      if (!report.pass)
        status = exit_mismatch;
      return;
    }
    auto g = share(synth_src.load());
    TotalOrder ord = synth_order.empty() ? TotalOrder::of(*g)
                                         : TotalOrder::from_names(*g, split_names(synth_order));
    SynthesizedTree t = synthesize_sipl_tree(g, ord);
    auto bad = synthesized_tree_violations(t);
    if (synth_dot) {
      std::cout << to_dot(*t.tree, "T");
    } else {
      Json j = synthesized_tree_to_json(t);
      j["violations"] = bad;
      out.emit(j);
    }
    if (!bad.empty())
      status = exit_mismatch;
  });

  // cdk
  auto *cdk_cmd = app.add_subcommand("cdk", "decide injectivity of P_n -> C_m");
  int cdk_m = 0, cdk_n = 0;
  std::string cdk_m_range, cdk_n_range;
  cdk_cmd->add_option("--m", cdk_m, "cycle length");
  cdk_cmd->add_option("--n", cdk_n, "path length");
  cdk_cmd->add_option("--m-range", cdk_m_range, "grid over m, e.g. 3:8 (n runs from m to 2m+2)");
  cdk_cmd->add_option("--n-range", cdk_n_range, "fixed n range for the grid, e.g. 1:10");
  cdk_cmd->callback([&] {
    if (cdk_m > 0 && cdk_n > 0 && cdk_m_range.empty()) {
      CdkDecision d = decide_cycle_into_path(cdk_m, cdk_n);
      out.emit(cdk_decision_to_json(d));
      CdkVerdict expected = cdk_n >= 2 * cdk_m - 2 ? CdkVerdict::Injective
                                                   : CdkVerdict::NonInjective;
      if (d.verdict != expected)
        status = exit_mismatch;
      return;
    }
    auto mr = cdk_m_range.empty() ? std::pair{3, 8} : parse_range(cdk_m_range);
    ExperimentReport report = cdk_n_range.empty()
                                ? run_cdk_grid(cdk_threshold_cells(mr.first, mr.second))
                                : run_cdk_grid(mr, parse_range(cdk_n_range));
    out.emit(report.to_json());
    if (!report.pass)
      status = exit_mismatch;
  });

  // lowerbound
  auto *lb_cmd = app.add_subcommand("lowerbound", "count lifted induced-path endpoints");
  int lb_m = 0;
  std::string lb_range;
  lb_cmd->add_option("--m", lb_m, "graph index m >= 3");
  lb_cmd->add_option("--m-range", lb_range, "e.g. 3:12");
  lb_cmd->callback([&] {
    if (lb_range.empty()) {
      if (lb_m == 0)
        throw Error(ErrorKind::BadParameter, "give --m or --m-range");
      auto c = lowerbound_count(lb_m);
      out.emit(lowerbound_to_json(c));
      if (!c.matches())
        status = exit_mismatch;
      return;
    }
    auto r = parse_range(lb_range);
    std::vector<int> ms;
    for (int m = r.first; m <= r.second; ++m)
      ms.push_back(m);
    auto report = run_bounds({}, ms);
    out.emit(report.to_json());
    if (!report.pass)
      status = exit_mismatch;
  });

  // bench
  auto *bench_cmd = app.add_subcommand("bench", "randomized property suite");
  PropertySuiteOptions bench_opt;
  bench_cmd->add_option("--seed", bench_opt.seed, "random seed");
  bench_cmd->add_option("--instances", bench_opt.instances, "number of instances");
  bench_cmd->add_option("--max-gamma", bench_opt.max_gamma, "largest graph");
  bench_cmd->add_option("--max-tree", bench_opt.max_tree, "largest random subtree");
  bench_cmd->callback([&] {
    auto r = run_property_suite(bench_opt);
    Json j{{"seed", bench_opt.seed},
           {"instances", r.instances},
           {"sipl_checks", r.sipl_instances},
           {"ipl_witnesses", r.ipl_failures},
           {"support_checks", r.support_checks},
           {"length_checks", r.length_checks},
           {"counterexamples", r.counterexamples},
           {"pass", r.pass()}};
    out.emit(j);
    if (!r.pass())
      status = exit_mismatch;
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_input;
  } catch (ParseError const &e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": "
              << e.what() << "\n";
    return exit_input;
  } catch (Error const &e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::CertificateGap ? exit_mismatch : exit_input;
  }
  return status;
}
