#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ruled/graph.hpp"
#include "ruled/rational.hpp"

namespace ruled {

struct BottomFat {};
struct TopFat {};
struct Interior {
  std::size_t chain = 0;   // chain id
  std::size_t vertex = 0;  // position within the chain, bottom-up
};

using BlowupSite = std::variant<BottomFat, TopFat, Interior>;
enum class FatSide { Bottom, Top };

/// Equivariant blowup of size delta at a fat vertex: the fat area drops by
/// delta and a one-vertex chain appears at distance delta from that side.
/// std::nullopt when delta is not strictly below both the fat area and the
/// graph height.
std::optional<DecoratedGraph> blowup_fat(const DecoratedGraph& g, FatSide side, const Rational& delta);

/// Equivariant blowup of size delta at an interior fixed point at height h
/// with edge labels m below and n above. The vertex splits into h - m*delta
/// and h + n*delta joined by a Z_{m+n}-sphere. std::nullopt when either new
/// vertex would reach its neighbour in the chain (or the fat vertex).
std::optional<DecoratedGraph> blowup_interior(const DecoratedGraph& g, std::size_t chain, std::size_t vertex,
                                              const Rational& delta);

std::optional<DecoratedGraph> blowup_at(const DecoratedGraph& g, const BlowupSite& site, const Rational& delta);

/// Every valid single blowup of size delta: bottom fat, top fat, then each
/// chain by id with its vertices bottom-up. Results may be equivalent.
std::vector<DecoratedGraph> all_blowups(const DecoratedGraph& g, const Rational& delta);

}  // namespace ruled
