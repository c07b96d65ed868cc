#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ruled/rational.hpp"

namespace ruled {

/// A path of isolated fixed points between the two fat vertices.
///
/// Stored as the alternating sequence v0, e1, v1, ..., em, vm read from the
/// bottom: heights are distances above the bottom fat vertex, labels are the
/// isotropy orders of the Z_k-spheres between consecutive vertices. The edges
/// to the fat vertices carry label 1 and are not stored.
class Chain {
public:
  Chain() = default;
  /// labels.size() must be heights.size() - 1.
  Chain(std::vector<Rational> heights, std::vector<std::uint64_t> labels);
  static Chain single(Rational height) { return Chain({std::move(height)}, {}); }

  [[nodiscard]] std::size_t vertex_count() const { return heights_.size(); }
  [[nodiscard]] const std::vector<Rational>& heights() const { return heights_; }
  [[nodiscard]] const std::vector<std::uint64_t>& labels() const { return labels_; }
  [[nodiscard]] const Rational& height(std::size_t i) const { return heights_[i]; }

  /// Label of the edge just below / above vertex i; 1 at the chain ends.
  [[nodiscard]] std::uint64_t label_below(std::size_t i) const { return i == 0 ? 1 : labels_[i - 1]; }
  [[nodiscard]] std::uint64_t label_above(std::size_t i) const {
    return i + 1 == heights_.size() ? 1 : labels_[i];
  }

  /// The same chain seen from the top: reversed, heights complemented.
  [[nodiscard]] Chain reflected(const Rational& graph_height) const;

  /// Lexicographic over the alternating sequence read from the bottom;
  /// a strict prefix sorts first.
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);
  friend bool operator==(const Chain&, const Chain&) = default;

private:
  std::vector<Rational> heights_;
  std::vector<std::uint64_t> labels_;
};

std::strong_ordering chain_compare_by_start(const Chain& a, const Chain& b);
/// Reads each chain from its top vertex with heights measured from the top.
std::strong_ordering chain_compare_by_end(const Chain& a, const Chain& b, const Rational& height);

struct FatVertex {
  Rational area;
  int genus = 1;
  friend bool operator==(const FatVertex&, const FatVertex&) = default;
};

/// Dedup bucket key: (larger fat area, smaller fat area, number of chains).
struct GraphKey {
  Rational larger;
  Rational smaller;
  std::size_t chains = 0;
  friend auto operator<=>(const GraphKey&, const GraphKey&) = default;
  friend bool operator==(const GraphKey&, const GraphKey&) = default;
};

/// Decorated graph of a Hamiltonian circle action with exactly two fat
/// vertices, normalized so the bottom fat vertex sits at moment 0 and the top
/// one at `height`.
///
/// Besides the chains (indexed by id) the graph keeps two permutations of the
/// ids: sorted by start and sorted by end. They are always consistent with
/// the chains; every constructor and mutator maintains them.
class DecoratedGraph {
public:
  DecoratedGraph(FatVertex bottom, FatVertex top, Rational height, std::vector<Chain> chains = {});

  /// Ruled surface graph: no chains.
  static DecoratedGraph ruled(Rational bottom_area, Rational top_area, Rational height, int genus = 1);

  [[nodiscard]] const FatVertex& bottom() const { return bottom_; }
  [[nodiscard]] const FatVertex& top() const { return top_; }
  [[nodiscard]] const Rational& height() const { return height_; }
  [[nodiscard]] int genus() const { return bottom_.genus; }
  [[nodiscard]] const std::vector<Chain>& chains() const { return chains_; }
  [[nodiscard]] std::size_t chain_count() const { return chains_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& by_start() const { return by_start_; }
  [[nodiscard]] const std::vector<std::size_t>& by_end() const { return by_end_; }

  /// Chains in by_start order.
  [[nodiscard]] std::vector<Chain> sorted_chains() const;
  [[nodiscard]] std::size_t interior_vertex_count() const;

  /// Appends a chain and places its id in both orders by binary search.
  void add_chain(Chain c);
  /// Replaces chain `id` and re-places it in both orders.
  void replace_chain(std::size_t id, Chain c);
  void set_bottom_area(Rational a) { bottom_.area = std::move(a); }
  void set_top_area(Rational a) { top_.area = std::move(a); }

private:
  void place(std::size_t id);
  void unplace(std::size_t id);

  FatVertex bottom_;
  FatVertex top_;
  Rational height_;
  std::vector<Chain> chains_;
  std::vector<std::size_t> by_start_;
  std::vector<std::size_t> by_end_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return valid; }
};

ValidationReport validate(const DecoratedGraph& g);

/// Swaps the fat vertices and reflects every chain. Throws on invalid input.
DecoratedGraph flip(const DecoratedGraph& g);

GraphKey key(const DecoratedGraph& g);

/// Same fat areas and identical chains as multisets (compared in by_start
/// order). Precondition: equal keys and equal respective fat areas.
bool are_same(const DecoratedGraph& g1, const DecoratedGraph& g2);

/// g2 is the flip of g1: g1's by_start chains matched against g2's by_end
/// chains with complemented heights. Precondition: equal keys and crossed
/// fat areas.
bool are_reflection(const DecoratedGraph& g1, const DecoratedGraph& g2);

/// Equal up to vertical translation and flip. Total: returns false on key
/// mismatch.
bool are_equivalent(const DecoratedGraph& g1, const DecoratedGraph& g2);

/// Structural total order (bottom area, top area, height, chains by start).
/// Equal iff are_same on equal keys.
std::strong_ordering canonical_compare(const DecoratedGraph& a, const DecoratedGraph& b);

/// The smaller of g and flip(g) under canonical_compare.
DecoratedGraph canonical_representative(const DecoratedGraph& g);

}  // namespace ruled
