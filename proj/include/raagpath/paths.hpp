#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "raagpath/graph.hpp"
#include "raagpath/morphism.hpp"

namespace raagpath {

/// Sequence of pairwise distinct, consecutively adjacent vertices.
using Path = std::vector<VertexId>;

enum class PathKind { Any, Induced, SemiInduced };

char const *to_string(PathKind kind);

bool is_path(Graph const &g, Path const &p);

/// No chord {v_i, v_j} with j >= i + 2. False for non-paths.
bool is_induced(Graph const &g, Path const &p);

/// No chord {v_i, v_j} with j >= i + 2 and v_j before v_{i+1} in `ord`.
/// False for non-paths.
bool is_semi_induced(Graph const &g, Path const &p, TotalOrder const &ord);

/// Calls `visit` for every maximal path of the given kind that starts at
/// `start`. Depth-first, neighbors taken in `ord` order, so paths arrive in
/// lexicographic order with respect to `ord`. `ord` also defines
/// semi-induced.
void for_each_maximal_path(Graph const &g, PathKind kind, TotalOrder const &ord,
                           VertexId start,
                           std::function<void(Path const &)> const &visit);

/// Same traversal, but every path of the kind (maximal or not) is visited,
/// starting with the one-vertex path.
void for_each_path(Graph const &g, PathKind kind, TotalOrder const &ord,
                   VertexId start, std::function<void(Path const &)> const &visit);

std::vector<Path> maximal_paths_from(Graph const &g, VertexId start);
std::vector<Path> maximal_induced_paths_from(Graph const &g, VertexId start);
std::vector<Path> maximal_semi_induced_paths_from(Graph const &g,
                                                  TotalOrder const &ord,
                                                  VertexId start);
std::vector<Path> induced_paths_from(Graph const &g, VertexId start);

struct LiftResult
{
  /// The lift, when the whole path lifts.
  std::optional<Path> lift;
  /// Longest liftable prefix, as domain vertices. Equals *lift on success.
  Path prefix;
};

/// Unique lift of `alpha` (a path in the codomain) starting at `start`.
/// Throws NotImmersion, StartMismatch, or BadParameter when `alpha` is not a
/// path.
LiftResult lift_path(GraphMap const &f, Path const &alpha, VertexId start);

/// Lift without validating the immersion or the start.
LiftResult lift_path_unchecked(GraphMap const &f, Path const &alpha,
                               VertexId start);

struct LiftFailure
{
  VertexId start;        ///< domain vertex
  Path path;             ///< maximal codomain path that does not lift
  Path lifted_prefix;    ///< its longest liftable prefix in the domain

  /// The shortest unliftable prefix of `path`: all but its last vertex lift.
  Path failing_prefix() const;
};

struct StartReport
{
  VertexId start = 0;
  std::size_t paths_checked = 0;
  std::optional<LiftFailure> failure; ///< first failure only
};

struct LiftReport
{
  PathKind kind = PathKind::Any;
  bool holds = true;
  std::vector<StartReport> starts;

  std::optional<LiftFailure> first_failure() const;
};

/// Lifting properties for the domain vertices in `F`. Maximal paths suffice:
/// a lift of a maximal path restricts to lifts of its prefixes.
/// All three throw NotImmersion.
LiftReport has_PL(GraphMap const &f, VertexSet const &F);
LiftReport has_IPL(GraphMap const &f, VertexSet const &F);
LiftReport has_SIPL(GraphMap const &f, TotalOrder const &ord, VertexSet const &F);

/// Shared implementation; `ord` orders the codomain. Set `stop_at_first` to
/// abandon the whole check on the first failure.
LiftReport check_lifting(GraphMap const &f, PathKind kind, TotalOrder const &ord,
                         VertexSet const &F, bool stop_at_first = false);

/// Every failing maximal path, for every start in F.
std::vector<LiftFailure> lift_failures(GraphMap const &f, PathKind kind,
                                       TotalOrder const &ord, VertexSet const &F);

} // namespace raagpath
