#include "ruled/blowup.hpp"

#include "ruled/errors.hpp"

namespace ruled {

namespace {

void require_positive(const Rational& delta) {
  if (delta.sign() <= 0) throw PreconditionError("blowup size must be positive");
}

}  // namespace

std::optional<DecoratedGraph> blowup_fat(const DecoratedGraph& g, FatSide side, const Rational& delta) {
  require_positive(delta);
  const Rational& area = side == FatSide::Bottom ? g.bottom().area : g.top().area;
  if (!(delta < area) || !(delta < g.height())) return std::nullopt;

  DecoratedGraph out = g;
  if (side == FatSide::Bottom) {
    out.set_bottom_area(area - delta);
    out.add_chain(Chain::single(delta));
  } else {
    out.set_top_area(area - delta);
    out.add_chain(Chain::single(g.height() - delta));
  }
  return out;
}

std::optional<DecoratedGraph> blowup_interior(const DecoratedGraph& g, std::size_t chain, std::size_t vertex,
                                              const Rational& delta) {
  require_positive(delta);
  if (chain >= g.chain_count()) throw PreconditionError("blowup chain id out of range");
  const Chain& c = g.chains()[chain];
  if (vertex >= c.vertex_count()) throw PreconditionError("blowup vertex position out of range");

  const std::uint64_t m = c.label_below(vertex);
  const std::uint64_t n = c.label_above(vertex);
  const Rational& h = c.height(vertex);
  Rational lower = h - Rational(static_cast<long>(m)) * delta;
  Rational upper = h + Rational(static_cast<long>(n)) * delta;

  const Rational floor = vertex == 0 ? Rational(0) : c.height(vertex - 1);
  const Rational ceiling = vertex + 1 == c.vertex_count() ? g.height() : c.height(vertex + 1);
  if (!(floor < lower) || !(upper < ceiling)) return std::nullopt;

  std::vector<Rational> heights;
  std::vector<std::uint64_t> labels;
  heights.reserve(c.vertex_count() + 1);
  labels.reserve(c.vertex_count());
  for (std::size_t i = 0; i < c.vertex_count(); ++i) {
    if (i > 0) labels.push_back(c.labels()[i - 1]);
    if (i == vertex) {
      heights.push_back(std::move(lower));
      labels.push_back(m + n);
      heights.push_back(std::move(upper));
    } else {
      heights.push_back(c.height(i));
    }
  }
  DecoratedGraph out = g;
  out.replace_chain(chain, Chain(std::move(heights), std::move(labels)));
  return out;
}

std::optional<DecoratedGraph> blowup_at(const DecoratedGraph& g, const BlowupSite& site, const Rational& delta) {
  return std::visit(
      [&](const auto& s) -> std::optional<DecoratedGraph> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BottomFat>) return blowup_fat(g, FatSide::Bottom, delta);
        else if constexpr (std::is_same_v<S, TopFat>) return blowup_fat(g, FatSide::Top, delta);
        else return blowup_interior(g, s.chain, s.vertex, delta);
      },
      site);
}

std::vector<DecoratedGraph> all_blowups(const DecoratedGraph& g, const Rational& delta) {
  std::vector<DecoratedGraph> out;
  if (auto b = blowup_fat(g, FatSide::Bottom, delta)) out.push_back(std::move(*b));
  if (auto t = blowup_fat(g, FatSide::Top, delta)) out.push_back(std::move(*t));
  for (std::size_t id = 0; id < g.chain_count(); ++id)
    for (std::size_t v = 0; v < g.chains()[id].vertex_count(); ++v)
      if (auto r = blowup_interior(g, id, v, delta)) out.push_back(std::move(*r));
  return out;
}

}  // namespace ruled
