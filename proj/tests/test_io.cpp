#include <doctest.h>

#include "raagpath/error.hpp"
#include "raagpath/io.hpp"
#include "support/fixtures.hpp"

#ifndef RAAGPATH_TEST_DATA
#define RAAGPATH_TEST_DATA "tests/data"
#endif

using namespace raagpath;

namespace {

std::filesystem::path data(char const *name)
{
  return std::filesystem::path(RAAGPATH_TEST_DATA) / name;
}

std::pair<int, int> position_of(std::string_view text)
{
  try {
    parse_graph(text);
  } catch (ParseError const &e) {
    return {e.line(), e.column()};
  }
  FAIL("expected a parse error");
  return {-1, -1};
}

} // namespace

TEST_CASE("adjacency text")
{
  auto g = parse_graph_text("# comment\n\na: b c  # trailing\nb: a\nc: a\n");
  CHECK(g.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.edge_count() == 2);
  CHECK(parse_graph_text(format_graph_text(g)) == g);
  auto c5 = cycle_graph(5);
  CHECK(parse_graph(format_graph_text(c5)) == c5);
  CHECK(parse_graph_text("solo:\n").size() == 1);
}

TEST_CASE("adjacency text errors carry positions")
{
  CHECK(position_of("a: b\nb a\n") == std::pair{2, 1});
  CHECK(position_of("a:\na:\n") == std::pair{2, 1});
  CHECK(position_of("a: a\n") == std::pair{1, 4});
  CHECK(position_of("a: b\nb: a zz\n") == std::pair{2, 6});
  CHECK(position_of("a: b\nb:\n") == std::pair{1, 4});
  CHECK(position_of("{\"vertices\": [\"a\",]\n}").first == 1);
}

TEST_CASE("graph JSON")
{
  auto g = lowerbound_graph(6);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(parse_graph(graph_to_json(g).dump()) == g);
  CHECK_THROWS_AS(graph_from_json(Json{{"edges", Json::array()}}), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["a"],"edges":[["a"]]})")),
                  ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["a"],"edges":[["a","b"]]})")),
                  Error);
  auto dot = to_dot(path_graph(2));
  CHECK(dot.find("\"v0\" -- \"v1\"") != std::string::npos);
}

TEST_CASE("files")
{
  auto c4 = load_graph(data("c4.txt"));
  CHECK(c4.size() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(load_graph(data("c5.txt")) == cycle_graph(5));

  auto om = load_map(data("square_map.json"));
  CHECK(om.map() == fixture::square_map());
  auto back = map_from_json(map_to_json(om));
  CHECK(back.map() == om.map());
  CHECK(back.domain_order() == om.domain_order());

  try {
    load_graph(data("bad_syntax.json"));
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
  try {
    load_graph(data("bad_asym.txt"));
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(load_graph(data("missing.txt")), ParseError);
  CHECK_THROWS_AS(map_from_json(Json::array()), ParseError);
  CHECK_THROWS_AS(map_from_json(Json{{"domain", graph_to_json(path_graph(2))}}), ParseError);
  auto fold = load_map(data("fold_map.json"));
  CHECK_FALSE(is_immersion(fold.map()));
}

TEST_CASE("map JSON with a domain order")
{
  auto j = map_to_json(OrderedMap(cycle_to_path_map(8, 5)));
  auto order = j["domain_order"];
  std::reverse(order.begin(), order.end());
  j["domain_order"] = order;
  auto om = map_from_json(j);
  auto const &g = om.codomain();
  CHECK(format_word(om.domain(), phi_star_generator(om, g.id("v2"))) == "v2pp v2p");
  j["domain_order"] = Json::array({"nope"});
  CHECK_THROWS_AS(map_from_json(j), Error);
}

TEST_CASE("walk JSON")
{
  auto c3 = cycle_graph(3);
  Walk w{0, {1, 2, 0}};
  CHECK(walk_from_json(c3, walk_to_json(c3, w)) == w);
  CHECK(walk_to_json(c3, w).dump() == R"({"base":"v0","walk":["v1","v2","v0"]})");
  CHECK_THROWS_AS(walk_from_json(c3, Json::parse(R"({"base":"v0","walk":["v1","v0"]})")),
                  ParseError);
  CHECK_THROWS_AS(walk_from_json(c3, Json::parse(R"({"base":"q","walk":[]})")), ParseError);
}

TEST_CASE("report JSON")
{
  auto f = cycle_to_path_map(7, 5);
  auto c = certify_noninjective(f);
  auto j = certificate_to_json(c);
  CHECK(j["verdict"] == "CertifiedNonInjective");
  CHECK(j["noninjective"]["witness"] == "v0 v4 v3 v2 v3^-1 v4^-1 v0^-1");
  CHECK(j["noninjective"]["path"] == Json::array({"v0", "v4", "v3", "v2"}));

  auto d = cdk_decision_to_json(decide_cycle_into_path(5, 8));
  CHECK(d["verdict"] == "Injective");
  auto lb = lowerbound_to_json(lowerbound_count(9));
  CHECK(lb["endpoints"] == 31);
  auto st = synthesized_tree_to_json(synthesize_sipl_tree(share(cycle_graph(4))));
  CHECK(st.contains("tree"));
  auto lr = lift_report_to_json(f, has_IPL(f, {0}));
  CHECK(lr.is_object());
  CHECK(path_to_json(f.codomain(), {0, 1}) == Json::array({"v0", "v1"}));
}
