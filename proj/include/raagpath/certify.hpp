#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raagpath/cover.hpp"
#include "raagpath/hom.hpp"
#include "raagpath/paths.hpp"

namespace raagpath {

enum class Verdict { CertifiedInjective, CertifiedNonInjective, Unknown };

std::string_view to_string(Verdict v);

/// One application of the link peeling step: v' with phi(Lk v') = Lk v,
/// the link order x_1 .. x_l used, and the SIPL checks of phi_i at x_i'.
struct PeelStep
{
  std::string domain_vertex;
  std::string codomain_vertex;
  std::vector<std::string> link;            ///< x_1 .. x_l
  std::vector<std::string> link_preimages;  ///< x_1' .. x_l'
  std::vector<std::size_t> sipl_paths;      ///< maximal paths checked for phi_i
  std::size_t permutation = 0;              ///< position in the tried sequence
};

struct InjectiveEvidence
{
  std::vector<PeelStep> trace;
  std::size_t full_permutation_limit = 0; ///< links up to this size try all orders
};

struct NonInjectiveEvidence
{
  /// "empty-fiber", "deck-ipl" or "kernel-search".
  std::string method;

  std::vector<std::string> f_walks;
  std::vector<std::string> sigma;       ///< deck loops
  std::size_t lambda1_vertices = 0;

  std::string failing_vertex;           ///< v' in Lambda_1
  std::vector<std::string> path;        ///< induced path that does not lift
  std::vector<std::string> lifted_prefix;

  /// Over the codomain. For "deck-ipl" the conjugated failing prefix, whose
  /// image under phi_1* misses the failing vertex; otherwise a kernel word.
  Word witness;
  std::string witness_text;
  std::vector<std::string> witness_image_support;
};

struct Certificate
{
  Verdict verdict = Verdict::Unknown;
  std::optional<InjectiveEvidence> injective;
  std::optional<NonInjectiveEvidence> noninjective;
  std::size_t bound = 0;                ///< search bound behind an Unknown
  std::vector<std::string> notes;
};

/// Link peeling recursion with SIPL as the surviving oracle. Never returns
/// CertifiedNonInjective except for an empty fiber, where the generator
/// itself is a kernel word. Throws NotImmersion.
Certificate certify_injective(GraphMap const &f);

/// Links of at most this many vertices try every order; longer links try
/// the given order and its reverse.
inline constexpr std::size_t full_permutation_limit = 6;

/// Deck enlargement followed by an IPL check of phi_1 at F. Without F, the
/// singletons {walk of v'} are tried in domain order and then the lift of a
/// spanning tree; the first failure wins. `base` is the base vertex of the
/// universal cover. Throws NotImmersion, NotForest, NotSurjective,
/// Disconnected.
Certificate certify_noninjective(GraphMap const &f,
                                 std::optional<std::vector<Walk>> const &F = std::nullopt,
                                 VertexId base = 0);

/// certify_injective, then certify_noninjective when its preconditions
/// hold, then kernel_search up to `bound` as a last resort.
Certificate certify(GraphMap const &f, std::size_t bound = default_search_bound);

/// Tree built from lifts of maximal semi-induced paths. For a disconnected
/// graph the component trees are joined by bridge vertices (paths of
/// length 2); bridges have no image, so the immersion lives on the forest
/// obtained by deleting them.
struct SynthesizedTree
{
  GraphPtr tree;          ///< T, bridges included
  GraphMap map;           ///< immersion T minus bridges -> Gamma
  VertexSet f_vertices;   ///< ids in map.domain()
  VertexSet bridges;      ///< ids in *tree
  TotalOrder order;       ///< on Gamma
  std::size_t bound = 0;  ///< m 2^(m-1)
};

/// Throws EmptyGraph and BadParameter (order size).
SynthesizedTree synthesize_sipl_tree(GraphPtr gamma, TotalOrder const &ord);
SynthesizedTree synthesize_sipl_tree(GraphPtr gamma);

/// Empty when every invariant holds: T a tree, map an immersion, phi(F) =
/// V(Gamma), SIPL for F and the size bound.
std::vector<std::string> synthesized_tree_violations(SynthesizedTree const &t);

enum class CdkVerdict { Injective, NonInjective };

std::string_view to_string(CdkVerdict v);

struct CdkDecision
{
  int m = 0;
  int n = 0;
  CdkVerdict verdict = CdkVerdict::Injective;
  int anchor_n = 0;           ///< 2m-2 or 2m-3: the certified map
  Certificate certificate;    ///< of the anchor map
};

/// Decides injectivity of phi_{n,m}* by certifying phi_{2m-2,m} (injective)
/// or phi_{2m-3,m} (not injective) and passing to phi_{n,m} by restriction.
/// Throws BadParameter and CertificateGap.
CdkDecision decide_cycle_into_path(int m, int n);

struct LowerBoundCount
{
  int m = 0;
  int k = 0;
  std::vector<std::size_t> paths_by_length;  ///< induced paths from v0
  std::size_t endpoints = 0;                 ///< distinct lifted endpoints
  std::size_t closed_form = 0;
  double half_power = 0.0;                   ///< 2^(m/2)
  double quarter_power = 0.0;                ///< 2^(m/4)

  bool matches() const;
};

/// Throws BadParameter for m < 3.
LowerBoundCount lowerbound_count(int m);

} // namespace raagpath
