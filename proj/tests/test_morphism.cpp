#include <doctest.h>

#include "raagpath/error.hpp"
#include "support/fixtures.hpp"

using namespace raagpath;

namespace {

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

GraphMap mod_map(int n, int m)
{
  std::vector<VertexId> a;
  for (int j = 0; j < n; ++j)
    a.push_back(VertexId(j % m));
  return GraphMap::make(share(cycle_graph(n)), share(cycle_graph(m)), a);
}

} // namespace

TEST_CASE("maps of graphs")
{
  auto c5 = share(cycle_graph(5));
  auto id = identity_map(c5);
  CHECK(is_immersion(id));
  CHECK(is_covering(id));

  auto sq = fixture::square_map();
  CHECK(is_immersion(sq));
  CHECK_FALSE(is_covering(sq));
  CHECK(sq.is_surjective());
  CHECK(names_of(sq.domain(), sq.fiber(sq.codomain().id("v1"))) ==
        std::vector<std::string>{"v1p", "v1pp"});

  auto edge = share(path_graph(2));
  CHECK(kind_of([&] { GraphMap::make(edge, edge, std::vector<VertexId>{0, 0}); }) ==
        ErrorKind::NotAMapOfGraphs);

  // P_3 folded onto one edge: both neighbors of the middle go to the same place
  auto fold = GraphMap::make(share(path_graph(3)), edge, std::vector<VertexId>{0, 1, 0});
  CHECK_FALSE(is_immersion(fold));

  CHECK(is_covering(mod_map(6, 3)));
  CHECK(is_immersion(mod_map(6, 3)));
}

TEST_CASE("path into cycle maps")
{
  auto phi = cycle_to_path_map(8, 5);
  CHECK(is_immersion(phi));
  CHECK_FALSE(is_covering(phi));
  CHECK(phi.domain().names() ==
        std::vector<std::string>{"v0p", "v1p", "v2p", "v3p", "v4p", "v2pp", "v3pp", "v4pp"});
  // the path runs v2pp v3pp v4pp v0p v1p v2p v3p v4p
  auto const &d = phi.domain();
  std::vector<std::string> order{"v2pp", "v3pp", "v4pp", "v0p", "v1p", "v2p", "v3p", "v4p"};
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    CHECK(d.adjacent(d.id(order[i]), d.id(order[i + 1])));
  CHECK(d.edge_count() == 7);
  for (VertexId v = 0; v < d.size(); ++v)
    CHECK(phi.codomain().name(phi(v)) == d.name(v).substr(0, 2));

  auto mm = cycle_to_path_map(5, 5);
  CHECK(mm.is_surjective());
  CHECK_FALSE(is_covering(mm));
  for (VertexId v = 0; v < 5; ++v)
    CHECK(mm.fiber(v).size() == 1);

  auto p33 = cycle_to_path_map(3, 3);
  CHECK(p33.domain().names() == std::vector<std::string>{"v0p", "v1p", "v2p"});
  CHECK(p33.assignment() == std::vector<VertexId>{0, 1, 2});

  for (int m = 3; m <= 12; ++m)
    for (int n = m; n <= 3 * m; ++n)
      CHECK(is_immersion(cycle_to_path_map(n, m)));

  CHECK(kind_of([] { cycle_to_path_map(4, 2); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { cycle_to_path_map(0, 5); }) == ErrorKind::BadParameter);
}

TEST_CASE("restriction")
{
  auto phi = cycle_to_path_map(8, 5);
  auto c5 = phi.codomain();
  auto gamma1 = remove(c5, {c5.id("v0")});
  auto lambda1 = remove(phi.domain(), phi.fiber(c5.id("v0")));
  auto phi1 = restrict(phi, lambda1, gamma1);
  CHECK(phi1 == remove_fibers(phi, {c5.id("v0")}));
  CHECK(phi1.domain().size() == 7);
  CHECK(is_immersion(phi1));
  CHECK(components(phi1.domain()).size() == 2);

  CHECK(restrict(phi, phi.domain(), phi.codomain()) == phi);
  CHECK(kind_of([&] { restrict(phi, phi.domain(), gamma1); }) ==
        ErrorKind::ImageEscapesCodomain);

  // a spanning path of C_5 is a subgraph but not an induced one
  auto open = path_graph(5);
  CHECK(kind_of([&] { restrict(identity_map(share(c5)), c5, open); }) == ErrorKind::NotInduced);
}

TEST_CASE("composition")
{
  auto cover = mod_map(6, 3);
  auto phi = cycle_to_path_map(4, 6);
  auto both = compose(cover, phi);
  CHECK(is_immersion(both));
  for (VertexId v = 0; v < both.domain().size(); ++v)
    CHECK(both(v) == cover(phi(v)));
}

TEST_CASE("cover position names")
{
  CHECK(cover_position_name(0, 5) == "v0p");
  CHECK(cover_position_name(-1, 5) == "v4pp");
  CHECK(cover_position_name(-5, 5) == "v0pp");
  CHECK(cover_position_name(5, 5) == "v0qq");
}
