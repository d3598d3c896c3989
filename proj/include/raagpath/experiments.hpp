#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "raagpath/io.hpp"

namespace raagpath {

struct ExperimentReport
{
  std::string id;
  Json parameters = Json::object();
  std::vector<Json> rows;
  bool pass = true;

  Json to_json() const;
};

/// Worker count: hardware concurrency, capped by RAAGPATH_THREADS.
unsigned worker_count();

/// decide_cycle_into_path over the grid; a row passes when the verdict is
/// Injective exactly for n >= 2m - 2. Rows are ordered by (m, n) whatever
/// the thread count. Throws BadParameter.
ExperimentReport run_cdk_grid(std::pair<int, int> m_range, std::pair<int, int> n_range);
ExperimentReport run_cdk_grid(std::vector<std::pair<int, int>> cells);

/// (m, n) for m in [m_lo, m_hi] and m <= n <= 2m + 2.
std::vector<std::pair<int, int>> cdk_threshold_cells(int m_lo, int m_hi);

struct NamedGraph
{
  std::string name;
  GraphPtr graph;
};

/// Synthesized tree size against m 2^(m-1) for each graph, and for every
/// m in `lowerbound_ms` the endpoint count against its closed form.
ExperimentReport run_bounds(std::vector<NamedGraph> const &graphs,
                            std::vector<int> const &lowerbound_ms = {});

/// The graphs used by `raagpath synth --bounds`.
std::vector<NamedGraph> standard_bound_graphs();

/// Randomized checks of the chain SIPL => surviving => IPL on small
/// instances: random connected graphs with at most `max_gamma` vertices and
/// random subtrees of the universal cover with at most `max_tree` vertices.
struct PropertySuiteOptions
{
  std::uint64_t seed = 1;
  std::size_t instances = 100;
  std::size_t max_gamma = 5;
  std::size_t max_tree = 12;
  std::size_t survive_bound = 5;
  std::size_t length_bound = 6;
  std::size_t words_per_instance = 60;
};

struct PropertySuiteResult
{
  std::size_t instances = 0;
  std::size_t sipl_instances = 0;       ///< (a) checks that were not vacuous
  std::size_t ipl_failures = 0;         ///< (b) witnesses checked
  std::size_t support_checks = 0;       ///< (c)
  std::size_t length_checks = 0;        ///< (d)
  std::vector<std::string> counterexamples;

  bool pass() const { return counterexamples.empty(); }
};

PropertySuiteResult run_property_suite(PropertySuiteOptions const &opt);

} // namespace raagpath
