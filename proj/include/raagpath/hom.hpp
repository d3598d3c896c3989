#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "raagpath/morphism.hpp"
#include "raagpath/paths.hpp"
#include "raagpath/word.hpp"

namespace raagpath {

/// Search bound used when none is given.
inline constexpr std::size_t default_search_bound = 6;

/// A map of graphs together with the order in which each fiber is
/// multiplied out. The induced homomorphism G(codomain) -> G(domain) is only
/// available through this type.
class OrderedMap
{
public:
  explicit OrderedMap(GraphMap map);
  OrderedMap(GraphMap map, TotalOrder domain_order);

  GraphMap const &map() const noexcept { return _map; }
  Graph const &domain() const { return _map.domain(); }
  Graph const &codomain() const { return _map.codomain(); }
  TotalOrder const &domain_order() const noexcept { return _order; }

  /// Preimages of v, ascending in the domain order.
  std::vector<VertexId> const &block(VertexId v) const { return _blocks.at(v); }

  /// Largest fiber size.
  std::size_t max_fiber() const;

private:
  GraphMap _map;
  TotalOrder _order;
  std::vector<std::vector<VertexId>> _blocks;
};

/// Product of the preimages of v; the empty word for an empty fiber.
/// Throws UnknownVertex.
Word phi_star_generator(OrderedMap const &om, VertexId v);

/// Letterwise image; an inverted letter maps to the inverted, reversed block.
/// Throws GraphMismatch.
Word phi_star_word(OrderedMap const &om, Word const &w);

/// A reduced word w over the codomain with a subword v^e w1 v^-e (w1 free
/// of v) whose image gives an innermost cancellation of `vertex`: the
/// element support of phi*(w1) misses the link of `vertex`.
struct SurvivingWitness
{
  Word word;
  Span span;        ///< positions of the two v letters in `word`
  VertexId vertex;  ///< domain vertex that fails to survive
};

/// First witness among reduced words of length <= bound, in
/// length-then-lexicographic order. Absence does not prove survival.
/// Throws UnknownVertex.
std::optional<SurvivingWitness> surviving_violation_search(OrderedMap const &om,
                                                           VertexId vertex,
                                                           std::size_t bound);

/// Least nontrivial reduced word (length, then lexicographic; one canonical
/// form per element) of length <= bound that phi* sends to the identity.
std::optional<Word> kernel_search(OrderedMap const &om, std::size_t bound);

struct DistortionStats
{
  std::size_t samples = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::size_t fiber_bound = 0; ///< max fiber size; max_ratio never exceeds it
};

/// Ratios |phi*(w)| / |w| (element lengths) over the nonempty sampled words.
DistortionStats length_distortion_sample(OrderedMap const &om,
                                         std::vector<Word> const &words);

/// v_0 ... v_{k-1} v_k v_{k-1}^-1 ... v_0^-1 for a path (v_0, ..., v_k).
Word conjugated_path_word(Path const &alpha);

} // namespace raagpath
