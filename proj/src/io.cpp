#include "raagpath/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "raagpath/error.hpp"

namespace raagpath {

namespace {

struct Token
{
  std::string text;
  int column;
};

std::vector<Token> tokens_of(std::string_view line)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), int(start + 1)});
  }
  return out;
}

} // namespace

Graph parse_graph_text(std::string_view text)
{
  struct Row
  {
    int line;
    Token head;
    std::vector<Token> nbrs;
  };
  std::vector<Row> rows;
  std::map<std::string, std::size_t> row_of;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (std::all_of(line.begin(), line.end(),
                    [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'vertex: neighbors'", lineno, 1);
    auto head = tokens_of(line.substr(0, colon));
    if (head.size() != 1)
      throw ParseError("expected exactly one vertex name before ':'", lineno,
                       head.empty() ? int(colon + 1) : head[1 % head.size()].column);
    auto nbrs = tokens_of(line.substr(colon + 1));
    for (auto &t : nbrs)
      t.column += int(colon + 1);
    if (!row_of.emplace(head[0].text, rows.size()).second)
      throw ParseError("vertex '" + head[0].text + "' listed twice", lineno, head[0].column);
    rows.push_back({lineno, head[0], std::move(nbrs)});
  }

  std::vector<std::string> names;
  std::set<std::pair<std::string, std::string>> listed;
  for (auto const &r : rows) {
    names.push_back(r.head.text);
    for (auto const &t : r.nbrs)
      listed.emplace(r.head.text, t.text);
  }

  std::vector<NamedEdge> edges;
  for (auto const &r : rows) {
    for (auto const &t : r.nbrs) {
      if (t.text == r.head.text)
        throw ParseError("loop at '" + t.text + "'", r.line, t.column);
      if (!row_of.count(t.text))
        throw ParseError("unknown vertex '" + t.text + "'", r.line, t.column);
      if (!listed.count({t.text, r.head.text}))
        throw ParseError("'" + t.text + "' does not list '" + r.head.text + "' back",
                         r.line, t.column);
      if (r.head.text < t.text)
        edges.emplace_back(r.head.text, t.text);
    }
  }
  return Graph::make(std::move(names), edges);
}

std::string format_graph_text(Graph const &g)
{
  std::string out;
  for (VertexId v = 0; v < g.size(); ++v) {
    out += g.name(v) + ":";
    for (VertexId u : g.neighbors(v))
      out += " " + g.name(u);
    out += "\n";
  }
  return out;
}

Graph graph_from_json(Json const &j)
{
  try {
    if (!j.is_object() || !j.contains("vertices"))
      throw ParseError("graph object needs a 'vertices' array", 0, 0);
    auto names = j.at("vertices").get<std::vector<std::string>>();
    std::vector<NamedEdge> edges;
    if (j.contains("edges")) {
      for (auto const &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
          throw ParseError("edge must be a pair of names: " + e.dump(), 0, 0);
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
    return Graph::make(std::move(names), edges);
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what(), 0, 0);
  }
}

Json graph_to_json(Graph const &g)
{
  Json edges = Json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({g.name(u), g.name(v)});
  return Json{{"vertices", g.names()}, {"edges", std::move(edges)}};
}

std::string to_dot(Graph const &g, std::string_view name)
{
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.size(); ++v)
    os << "  \"" << g.name(v) << "\";\n";
  for (auto [u, v] : g.edges())
    os << "  \"" << g.name(u) << "\" -- \"" << g.name(v) << "\";\n";
  os << "}\n";
  return os.str();
}

Json parse_json(std::string_view text)
{
  try {
    return Json::parse(text);
  } catch (nlohmann::json::parse_error const &e) {
    std::size_t const at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(e.what(), line, col);
  }
}

std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph parse_graph(std::string_view text)
{
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return graph_from_json(parse_json(text));
  return parse_graph_text(text);
}

Graph load_graph(std::filesystem::path const &path)
{
  return parse_graph(read_file(path));
}

namespace {

GraphPtr graph_field(Json const &j, char const *key, std::filesystem::path const &dir)
{
  if (!j.contains(key))
    throw ParseError(std::string("map needs '") + key + "'", 0, 0);
  Json const &g = j.at(key);
  if (g.is_string())
    return share(load_graph(dir / g.get<std::string>()));
  return share(graph_from_json(g));
}

} // namespace

OrderedMap map_from_json(Json const &j, std::filesystem::path const &dir)
{
  if (!j.is_object())
    throw ParseError("map must be a JSON object", 0, 0);
  auto dom = graph_field(j, "domain", dir);
  auto cod = graph_field(j, "codomain", dir);
  std::map<std::string, std::string> assignment;
  try {
    assignment = j.at("assignment").get<std::map<std::string, std::string>>();
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("bad 'assignment': ") + e.what(), 0, 0);
  }
  auto map = GraphMap::make(dom, cod, assignment);
  if (j.contains("domain_order")) {
    try {
      auto order = j.at("domain_order").get<std::vector<std::string>>();
      return OrderedMap(map, TotalOrder::from_names(*dom, order));
    } catch (nlohmann::json::exception const &e) {
      throw ParseError(std::string("bad 'domain_order': ") + e.what(), 0, 0);
    }
  }
  return OrderedMap(map);
}

Json map_to_json(OrderedMap const &om)
{
  Json assignment = Json::object();
  for (VertexId v = 0; v < om.domain().size(); ++v)
    assignment[om.domain().name(v)] = om.codomain().name(om.map()(v));
  Json order = Json::array();
  for (VertexId v : om.domain_order().sequence())
    order.push_back(om.domain().name(v));
  return Json{{"domain", graph_to_json(om.domain())},
              {"codomain", graph_to_json(om.codomain())},
              {"assignment", std::move(assignment)},
              {"domain_order", std::move(order)}};
}

OrderedMap load_map(std::filesystem::path const &path)
{
  return map_from_json(parse_json(read_file(path)), path.parent_path());
}

Walk walk_from_json(Graph const &g, Json const &j)
{
  try {
    Walk w;
    auto base = g.find(j.at("base").get<std::string>());
    if (!base)
      throw ParseError("unknown base vertex " + j.at("base").dump(), 0, 0);
    w.base = *base;
    std::vector<VertexId> seq;
    for (auto const &s : j.value("walk", Json::array())) {
      auto v = g.find(s.get<std::string>());
      if (!v)
        throw ParseError("unknown vertex " + s.dump() + " in walk", 0, 0);
      seq.push_back(*v);
    }
    w.steps = seq;
    if (!is_walk(g, w))
      throw ParseError("not a non-backtracking walk: " + j.dump(), 0, 0);
    return w;
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("bad walk: ") + e.what(), 0, 0);
  }
}

Json walk_to_json(Graph const &g, Walk const &w)
{
  return Json{{"base", g.name(w.base)}, {"walk", names_of(g, w.steps)}};
}

Json path_to_json(Graph const &g, Path const &p)
{
  return Json(names_of(g, p));
}

Json lift_report_to_json(GraphMap const &f, LiftReport const &r)
{
  Json starts = Json::array();
  for (auto const &s : r.starts) {
    Json row{{"start", f.domain().name(s.start)}, {"paths_checked", s.paths_checked}};
    if (s.failure) {
      row["failure"] = Json{{"path", path_to_json(f.codomain(), s.failure->path)},
                            {"lifted_prefix",
                             path_to_json(f.domain(), s.failure->lifted_prefix)}};
    }
    starts.push_back(std::move(row));
  }
  return Json{{"kind", to_string(r.kind)}, {"holds", r.holds}, {"starts", std::move(starts)}};
}

Json certificate_to_json(Certificate const &c)
{
  Json out{{"verdict", std::string(to_string(c.verdict))}};
  if (c.injective) {
    Json trace = Json::array();
    for (auto const &s : c.injective->trace) {
      trace.push_back(Json{{"domain_vertex", s.domain_vertex},
                           {"codomain_vertex", s.codomain_vertex},
                           {"link", s.link},
                           {"link_preimages", s.link_preimages},
                           {"sipl_paths", s.sipl_paths},
                           {"permutation", s.permutation}});
    }
    out["injective"] = Json{{"trace", std::move(trace)},
                            {"full_permutation_limit", c.injective->full_permutation_limit}};
  }
  if (c.noninjective) {
    auto const &n = *c.noninjective;
    Json ev{{"method", n.method}, {"witness", n.witness_text}};
    if (n.method == "deck-ipl") {
      ev["F"] = n.f_walks;
      ev["sigma"] = n.sigma;
      ev["lambda1_vertices"] = n.lambda1_vertices;
      ev["failing_vertex"] = n.failing_vertex;
      ev["path"] = n.path;
      ev["lifted_prefix"] = n.lifted_prefix;
      ev["witness_image_support"] = n.witness_image_support;
    }
    out["noninjective"] = std::move(ev);
  }
  if (c.verdict == Verdict::Unknown)
    out["bound"] = c.bound;
  if (!c.notes.empty())
    out["notes"] = c.notes;
  return out;
}

Json synthesized_tree_to_json(SynthesizedTree const &t)
{
  Graph const &gamma = t.map.codomain();
  Json assignment = Json::object();
  for (VertexId v = 0; v < t.map.domain().size(); ++v)
    assignment[t.map.domain().name(v)] = gamma.name(t.map(v));
  Json order = Json::array();
  for (VertexId v : t.order.sequence())
    order.push_back(gamma.name(v));
  return Json{{"tree", graph_to_json(*t.tree)},
              {"assignment", std::move(assignment)},
              {"F", names_of(t.map.domain(), t.f_vertices)},
              {"bridges", names_of(*t.tree, t.bridges)},
              {"order", std::move(order)},
              {"size", t.tree->size()},
              {"bound", t.bound}};
}

Json cdk_decision_to_json(CdkDecision const &d)
{
  return Json{{"m", d.m},
              {"n", d.n},
              {"verdict", std::string(to_string(d.verdict))},
              {"anchor_n", d.anchor_n},
              {"certificate", certificate_to_json(d.certificate)}};
}

Json lowerbound_to_json(LowerBoundCount const &c)
{
  return Json{{"m", c.m},
              {"k", c.k},
              {"paths_by_length", c.paths_by_length},
              {"endpoints", c.endpoints},
              {"closed_form", c.closed_form},
              {"half_power", c.half_power},
              {"quarter_power", c.quarter_power},
              {"matches", c.matches()}};
}

} // namespace raagpath
