#include "raagpath/hom.hpp"

#include <algorithm>
#include <limits>

#include "raagpath/error.hpp"

namespace raagpath {

OrderedMap::OrderedMap(GraphMap map)
  : OrderedMap(map, TotalOrder::of(map.domain()))
{}

OrderedMap::OrderedMap(GraphMap map, TotalOrder domain_order)
  : _map(std::move(map)), _order(std::move(domain_order))
{
  if (_order.size() != _map.domain().size())
    throw Error(ErrorKind::BadParameter, "domain order must cover the domain");
  _blocks.resize(_map.codomain().size());
  for (VertexId v = 0; v < _blocks.size(); ++v) {
    auto const &fib = _map.fiber(v);
    _blocks[v].assign(fib.begin(), fib.end());
    _order.sort(_blocks[v]);
  }
}

std::size_t OrderedMap::max_fiber() const
{
  std::size_t out = 0;
  for (auto const &b : _blocks)
    out = std::max(out, b.size());
  return out;
}

Word phi_star_generator(OrderedMap const &om, VertexId v)
{
  if (v >= om.codomain().size())
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
  Word out;
  for (VertexId x : om.block(v))
    out.push_back(Letter{x, false});
  return out;
}

namespace {

void append_image(OrderedMap const &om, Letter x, Word &out)
{
  auto const &blk = om.block(x.gen);
  if (!x.inverse) {
    for (VertexId y : blk)
      out.push_back(Letter{y, false});
  } else {
    for (auto it = blk.rbegin(); it != blk.rend(); ++it)
      out.push_back(Letter{*it, true});
  }
}

/// Reduced image of a prefix, extended letter by letter.
class ImageStack
{
public:
  explicit ImageStack(OrderedMap const &om) : _om(om), _levels(1) {}

  void push(Letter x)
  {
    Word next = _levels.back();
    for (VertexId y : block_of(x))
      append_reduced(_om.domain(), next, Letter{y, x.inverse});
    _levels.push_back(std::move(next));
  }
  void pop() { _levels.pop_back(); }
  Word const &top() const { return _levels.back(); }

private:
  std::vector<VertexId> block_of(Letter x) const
  {
    auto blk = _om.block(x.gen);
    if (x.inverse)
      std::reverse(blk.begin(), blk.end());
    return blk;
  }

  OrderedMap const &_om;
  std::vector<Word> _levels;
};

} // namespace

Word phi_star_word(OrderedMap const &om, Word const &w)
{
  check_word(om.codomain(), w);
  Word out;
  for (Letter x : w)
    append_image(om, x, out);
  return out;
}

namespace {

/// Depth-first search over reduced words of the codomain, with the reduced
/// image kept alongside. `allowed` filters letters, `accept` decides whether
/// a complete word of the target length ends the search.
template <typename Allowed, typename Accept>
class ImageSearch
{
public:
  ImageSearch(OrderedMap const &om, bool canonical, Allowed allowed, Accept accept)
    : _om(om), _g(om.codomain()), _images(om), _canonical(canonical),
      _allowed(allowed), _accept(accept)
  {}

  /// Words of exactly `length` letters, lexicographic order.
  std::optional<Word> run(std::size_t length)
  {
    _word.clear();
    _target = length;
    if (grow())
      return _word;
    return std::nullopt;
  }

private:
  bool acceptable(Letter a) const
  {
    for (std::size_t k = _word.size(); k-- > 0;) {
      VertexId u = _word[k].gen;
      if (u == a.gen || _g.adjacent(u, a.gen))
        return !(_word[k] == a.inv());
      if (_canonical && a < _word[k])
        return false;
    }
    return true;
  }

  bool grow()
  {
    if (_word.size() == _target)
      return _accept(_word, _images.top());
    for (std::uint32_t code = 0; code < 2 * _g.size(); ++code) {
      Letter a{code / 2, (code & 1u) != 0};
      if (!_allowed(a) || !acceptable(a))
        continue;
      _word.push_back(a);
      _images.push(a);
      bool found = grow();
      if (found)
        return true;
      _images.pop();
      _word.pop_back();
    }
    return false;
  }

  OrderedMap const &_om;
  Graph const &_g;
  ImageStack _images;
  bool _canonical;
  Allowed _allowed;
  Accept _accept;
  Word _word;
  std::size_t _target = 0;
};

} // namespace

std::optional<SurvivingWitness> surviving_violation_search(OrderedMap const &om,
                                                           VertexId vertex,
                                                           std::size_t bound)
{
  Graph const &lambda = om.domain();
  Graph const &gamma = om.codomain();
  if (vertex >= lambda.size())
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(vertex));

  VertexId const v = om.map()(vertex);
  auto lk_domain = lambda.neighbors(vertex);

  // A reduced word containing such a subword can be shortened to the
  // subword itself, so scanning the words v^e w1 v^-e in length-then-lex
  // order finds the same first witness as scanning all reduced words.
  auto allowed = [v](Letter a) { return a.gen != v; };
  auto accept = [&](Word const &w1, Word const &image) {
    bool blocked_in_gamma = std::any_of(w1.begin(), w1.end(), [&](Letter x) {
      return gamma.adjacent(v, x.gen);
    });
    if (!blocked_in_gamma)
      return false; // v^e w1 v^-e would not be reduced
    return std::none_of(image.begin(), image.end(), [&](Letter y) {
      return std::binary_search(lk_domain.begin(), lk_domain.end(), y.gen);
    });
  };

  for (std::size_t len = 2; len <= bound; ++len) {
    for (bool inv : {false, true}) {
      ImageSearch search(om, false, allowed, accept);
      if (auto w1 = search.run(len - 2)) {
        SurvivingWitness out;
        out.word.push_back(Letter{v, inv});
        out.word.insert(out.word.end(), w1->begin(), w1->end());
        out.word.push_back(Letter{v, !inv});
        out.span = Span{0, out.word.size() - 1};
        out.vertex = vertex;
        return out;
      }
    }
  }
  return std::nullopt;
}

std::optional<Word> kernel_search(OrderedMap const &om, std::size_t bound)
{
  auto allowed = [](Letter) { return true; };
  auto accept = [](Word const &, Word const &image) { return image.empty(); };
  for (std::size_t len = 1; len <= bound; ++len) {
    ImageSearch search(om, true, allowed, accept);
    if (auto w = search.run(len))
      return w;
  }
  return std::nullopt;
}

DistortionStats length_distortion_sample(OrderedMap const &om,
                                         std::vector<Word> const &words)
{
  DistortionStats out;
  out.fiber_bound = om.max_fiber();
  out.min_ratio = std::numeric_limits<double>::infinity();
  for (auto const &w : words) {
    if (w.empty())
      continue;
    double r = double(length_elem(om.domain(), phi_star_word(om, w))) / double(w.size());
    out.min_ratio = std::min(out.min_ratio, r);
    out.max_ratio = std::max(out.max_ratio, r);
    ++out.samples;
  }
  if (out.samples == 0)
    out.min_ratio = 0.0;
  return out;
}

Word conjugated_path_word(Path const &alpha)
{
  Word out;
  if (alpha.empty())
    return out;
  for (VertexId v : alpha)
    out.push_back(Letter{v, false});
  for (std::size_t i = alpha.size() - 1; i-- > 0;)
    out.push_back(Letter{alpha[i], true});
  return out;
}

} // namespace raagpath
