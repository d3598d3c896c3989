#pragma once

#include "raagpath/hom.hpp"
#include "raagpath/morphism.hpp"

namespace fixture {

using namespace raagpath;

/// The square: Gamma = C_4 on v1..v4, Lambda the path
/// v1p - v2p - v3p - v4p - v1pp, every vertex sent to its base name.
inline GraphMap square_map()
{
  auto gamma = share(Graph::make({"v1", "v2", "v3", "v4"},
                                 std::vector<NamedEdge>{{"v1", "v2"}, {"v2", "v3"},
                                                        {"v3", "v4"}, {"v4", "v1"}}));
  auto lambda = share(Graph::make({"v1p", "v2p", "v3p", "v4p", "v1pp"},
                                  std::vector<NamedEdge>{{"v1p", "v2p"}, {"v2p", "v3p"},
                                                         {"v3p", "v4p"}, {"v4p", "v1pp"}}));
  return GraphMap::make(lambda, gamma,
                        std::map<std::string, std::string>{{"v1p", "v1"}, {"v2p", "v2"},
                                                           {"v3p", "v3"}, {"v4p", "v4"},
                                                           {"v1pp", "v1"}});
}

inline Graph named(std::vector<std::string> names, std::vector<NamedEdge> edges)
{
  return Graph::make(std::move(names), edges);
}

} // namespace fixture
