#include <doctest.h>

#include "raagpath/error.hpp"
#include "raagpath/graph.hpp"

using namespace raagpath;

namespace {

std::vector<std::string> sorted_names(Graph const &g, VertexSet const &s)
{
  auto out = names_of(g, s);
  std::sort(out.begin(), out.end());
  return out;
}

ErrorKind kind_of(auto &&fn)
{
  try {
    fn();
  } catch (Error const &e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::BadParameter;
}

} // namespace

TEST_CASE("make validates vertices and edges")
{
  auto one = Graph::make({"a"}, std::vector<NamedEdge>{});
  CHECK(one.size() == 1);
  CHECK(one.edge_count() == 0);

  auto two = Graph::make({"a", "b"}, std::vector<NamedEdge>{{"a", "b"}, {"b", "a"}});
  CHECK(two.edge_count() == 1);
  CHECK(two.adjacent(0, 1));
  CHECK(two.adjacent(1, 0));

  CHECK(kind_of([] { Graph::make({"a"}, std::vector<NamedEdge>{{"a", "a"}}); }) ==
        ErrorKind::LoopEdge);
  CHECK(kind_of([] { Graph::make({"a", "a"}, std::vector<NamedEdge>{}); }) ==
        ErrorKind::DuplicateVertex);
  CHECK(kind_of([] { Graph::make({"a"}, std::vector<NamedEdge>{{"a", "z"}}); }) ==
        ErrorKind::UnknownEndpoint);
  CHECK(kind_of([&] { two.id("zz"); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("standard families")
{
  auto c5 = cycle_graph(5);
  CHECK(c5.size() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.adjacent(c5.id("v4"), c5.id("v0")));

  auto p8 = path_graph(8);
  CHECK(p8.size() == 8);
  CHECK(p8.edge_count() == 7);

  auto k23 = standard_graph(Family::CompleteBipartite, 2, 3);
  CHECK(k23.size() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK(k23.adjacent(0, 2));

  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(standard_graph(Family::Edgeless, 3).edge_count() == 0);
  CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { path_graph(0); }) == ErrorKind::BadParameter);
}

TEST_CASE("lower-bound graphs")
{
  auto g3 = lowerbound_graph(3);
  CHECK(g3.size() == 3);
  CHECK(g3.edge_count() == 2);
  CHECK_FALSE(g3.adjacent(g3.id("u1"), g3.id("v1")));

  auto g9 = lowerbound_graph(9);
  CHECK(g9.size() == 9);
  CHECK(g9.edge_count() == 14);
  auto g10 = lowerbound_graph(10);
  CHECK(g10.size() == 10);
  CHECK(g10.edge_count() == 16);
  CHECK(g10.adjacent(g10.id("v4"), g10.id("v5")));
  CHECK(g10.adjacent(g10.id("u4"), g10.id("v5")));

  for (int k = 1; k <= 6; ++k) {
    CHECK(lowerbound_graph(2 * k + 1).edge_count() == std::size_t(4 * (k - 1) + 2));
    CHECK(lowerbound_graph(2 * k + 2).edge_count() == std::size_t(4 * (k - 1) + 4));
  }
  CHECK(kind_of([] { lowerbound_graph(2); }) == ErrorKind::BadParameter);
}

TEST_CASE("complement")
{
  auto c = complement(path_graph(3));
  CHECK(c.edge_count() == 1);
  CHECK(c.adjacent(0, 2));
  CHECK(complement(complete_graph(5)).edge_count() == 0);
  auto c5 = cycle_graph(5);
  CHECK(complement(complement(c5)) == c5);
  for (int n = 1; n <= 6; ++n) {
    auto g = lowerbound_graph(std::max(3, n));
    std::size_t m = g.size();
    CHECK(g.edge_count() + complement(g).edge_count() == m * (m - 1) / 2);
  }
}

TEST_CASE("link, induced subgraphs and removal")
{
  auto c5 = cycle_graph(5);
  CHECK(sorted_names(c5, link(c5, c5.id("v0"))) == std::vector<std::string>{"v1", "v4"});
  CHECK(link(standard_graph(Family::Edgeless, 3), 1).empty());
  CHECK(link(complete_graph(4), 2).size() == 3);

  auto p = remove(c5, {0});
  CHECK(p.names() == std::vector<std::string>{"v1", "v2", "v3", "v4"});
  CHECK(p.edge_count() == 3);
  CHECK(is_connected(p));
  CHECK(is_forest(p));

  auto p3 = remove(c5, {0, 1});
  CHECK(p3.names() == std::vector<std::string>{"v2", "v3", "v4"});
  CHECK(p3.edge_count() == 2);

  CHECK(induced_subgraph(c5, {0, 1, 2, 3, 4}) == c5);

  // adjacency is inherited exactly
  auto g = lowerbound_graph(8);
  VertexSet s{0, 2, 3, 5, 6};
  auto sub = induced_subgraph(g, s);
  for (VertexId a = 0; a < sub.size(); ++a)
    for (VertexId b = 0; b < sub.size(); ++b)
      CHECK(sub.adjacent(a, b) == g.adjacent(s[a], s[b]));
}

TEST_CASE("components")
{
  CHECK(components(cycle_graph(5)).size() == 1);
  CHECK(components(standard_graph(Family::Edgeless, 2)).size() == 2);
  auto c5 = cycle_graph(5);
  auto g = remove(c5, {0, 2});
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(sorted_names(g, comps[0]) == std::vector<std::string>{"v1"});
  CHECK(sorted_names(g, comps[1]) == std::vector<std::string>{"v3", "v4"});
  CHECK_FALSE(is_connected(g));
  CHECK_FALSE(is_forest(c5));
}

TEST_CASE("total orders")
{
  auto c5 = cycle_graph(5);
  auto ord = TotalOrder::from_names(c5, {"v3", "v0", "v4", "v1", "v2"});
  CHECK(ord.less(c5.id("v3"), c5.id("v0")));
  CHECK(ord.rank(c5.id("v2")) == 4);
  std::vector<VertexId> ids{0, 1, 2, 3, 4};
  ord.sort(ids);
  CHECK(names_of(c5, ids) == std::vector<std::string>{"v3", "v0", "v4", "v1", "v2"});

  auto sub = remove(c5, {c5.id("v0")});
  auto r = ord.restricted(c5, sub);
  CHECK(names_of(sub, r.sequence()) == std::vector<std::string>{"v3", "v4", "v1", "v2"});

  CHECK(kind_of([] { TotalOrder::from_sequence(3, {0, 0, 1}); }) == ErrorKind::BadParameter);
  CHECK(kind_of([&] { TotalOrder::from_names(c5, {"v0"}); }) == ErrorKind::BadParameter);
}
