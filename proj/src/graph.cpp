#include "ruled/graph.hpp"

#include <algorithm>
#include <numeric>

#include "ruled/errors.hpp"

namespace ruled {

namespace {

std::strong_ordering to_ordering(int c) {
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// Walks two alternating sequences letter by letter. `vertex(i)` / `label(i)`
// give the i-th vertex value and i-th edge label of each side.
template <class VA, class LA, class VB, class LB>
std::strong_ordering lex_compare(std::size_t na, VA va, LA la, std::size_t nb, VB vb, LB lb) {
  const std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      if (auto c = la(i - 1) <=> lb(i - 1); c != 0) return c;
    }
    if (auto c = cmp(va(i), vb(i)); c != 0) return to_ordering(c);
  }
  return na <=> nb;
}

}  // namespace

Chain::Chain(std::vector<Rational> heights, std::vector<std::uint64_t> labels)
    : heights_(std::move(heights)), labels_(std::move(labels)) {
  if (heights_.empty()) throw PreconditionError("a chain needs at least one vertex");
  if (labels_.size() + 1 != heights_.size())
    throw PreconditionError("a chain with m vertices needs m-1 edge labels");
}

Chain Chain::reflected(const Rational& graph_height) const {
  std::vector<Rational> hs;
  hs.reserve(heights_.size());
  for (auto it = heights_.rbegin(); it != heights_.rend(); ++it) hs.push_back(graph_height - *it);
  return Chain(std::move(hs), std::vector<std::uint64_t>(labels_.rbegin(), labels_.rend()));
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  return lex_compare(
      a.heights_.size(), [&](std::size_t i) -> const mpq_class& { return a.heights_[i].raw(); },
      [&](std::size_t i) { return a.labels_[i]; }, b.heights_.size(),
      [&](std::size_t i) -> const mpq_class& { return b.heights_[i].raw(); },
      [&](std::size_t i) { return b.labels_[i]; });
}

std::strong_ordering chain_compare_by_start(const Chain& a, const Chain& b) { return a <=> b; }

std::strong_ordering chain_compare_by_end(const Chain& a, const Chain& b, const Rational& height) {
  const std::size_t na = a.vertex_count();
  const std::size_t nb = b.vertex_count();
  const std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      if (auto c = a.labels()[na - 1 - i] <=> b.labels()[nb - 1 - i]; c != 0) return c;
    }
    if (auto c = (height - a.height(na - 1 - i)) <=> (height - b.height(nb - 1 - i)); c != 0) return c;
  }
  return na <=> nb;
}

DecoratedGraph::DecoratedGraph(FatVertex bottom, FatVertex top, Rational height, std::vector<Chain> chains)
    : bottom_(std::move(bottom)), top_(std::move(top)), height_(std::move(height)) {
  chains_.reserve(chains.size());
  for (auto& c : chains) add_chain(std::move(c));
}

DecoratedGraph DecoratedGraph::ruled(Rational bottom_area, Rational top_area, Rational height, int genus) {
  return DecoratedGraph(FatVertex{std::move(bottom_area), genus}, FatVertex{std::move(top_area), genus},
                        std::move(height));
}

std::vector<Chain> DecoratedGraph::sorted_chains() const {
  std::vector<Chain> out;
  out.reserve(chains_.size());
  for (auto id : by_start_) out.push_back(chains_[id]);
  return out;
}

std::size_t DecoratedGraph::interior_vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : chains_) n += c.vertex_count();
  return n;
}

void DecoratedGraph::place(std::size_t id) {
  auto s = std::upper_bound(by_start_.begin(), by_start_.end(), id, [&](std::size_t x, std::size_t y) {
    return chain_compare_by_start(chains_[x], chains_[y]) < 0;
  });
  by_start_.insert(s, id);
  auto e = std::upper_bound(by_end_.begin(), by_end_.end(), id, [&](std::size_t x, std::size_t y) {
    return chain_compare_by_end(chains_[x], chains_[y], height_) < 0;
  });
  by_end_.insert(e, id);
}

void DecoratedGraph::unplace(std::size_t id) {
  by_start_.erase(std::find(by_start_.begin(), by_start_.end(), id));
  by_end_.erase(std::find(by_end_.begin(), by_end_.end(), id));
}

void DecoratedGraph::add_chain(Chain c) {
  chains_.push_back(std::move(c));
  place(chains_.size() - 1);
}

void DecoratedGraph::replace_chain(std::size_t id, Chain c) {
  if (id >= chains_.size()) throw PreconditionError("chain id out of range");
  unplace(id);
  chains_[id] = std::move(c);
  place(id);
}

ValidationReport validate(const DecoratedGraph& g) {
  ValidationReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.violations.push_back(std::move(msg));
  };
  if (g.height().sign() <= 0) fail("height " + g.height().str() + " is not positive");
  if (g.bottom().area.sign() <= 0) fail("bottom fat area " + g.bottom().area.str() + " is not positive");
  if (g.top().area.sign() <= 0) fail("top fat area " + g.top().area.str() + " is not positive");
  if (g.bottom().genus != g.top().genus) fail("fat vertices have different genus");
  if (g.bottom().genus < 1) fail("genus must be positive");

  for (std::size_t id = 0; id < g.chain_count(); ++id) {
    const Chain& c = g.chains()[id];
    const std::string tag = "chain " + std::to_string(id) + ": ";
    Rational below(0);
    for (std::size_t i = 0; i < c.vertex_count(); ++i) {
      if (!(below < c.height(i)))
        fail(tag + "vertex " + c.height(i).str() + " not strictly above " + below.str());
      below = c.height(i);
    }
    if (!(below < g.height())) fail(tag + "vertex " + below.str() + " reaches the top fat vertex");
    for (auto label : c.labels())
      if (label < 1) fail(tag + "edge label must be >= 1");
    for (std::size_t i = 0; i < c.vertex_count(); ++i)
      if (std::gcd(c.label_below(i), c.label_above(i)) != 1)
        fail(tag + "labels at vertex " + c.height(i).str() + " are not coprime");
  }

  // The stored orders must be the sorts they claim to be.
  auto is_perm = [&](const std::vector<std::size_t>& p) {
    std::vector<std::size_t> q = p;
    std::sort(q.begin(), q.end());
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != i) return false;
    return q.size() == g.chain_count();
  };
  if (!is_perm(g.by_start()) || !is_perm(g.by_end())) {
    fail("chain orders are not permutations of the chain ids");
    return r;
  }
  for (std::size_t i = 1; i < g.chain_count(); ++i) {
    if (chain_compare_by_start(g.chains()[g.by_start()[i - 1]], g.chains()[g.by_start()[i]]) > 0)
      fail("by_start order is not sorted");
    if (chain_compare_by_end(g.chains()[g.by_end()[i - 1]], g.chains()[g.by_end()[i]], g.height()) > 0)
      fail("by_end order is not sorted");
  }
  return r;
}

DecoratedGraph flip(const DecoratedGraph& g) {
  if (auto rep = validate(g); !rep) throw PreconditionError("flip of an invalid graph: " + rep.violations.front());
  std::vector<Chain> chains;
  chains.reserve(g.chain_count());
  for (const auto& c : g.chains()) chains.push_back(c.reflected(g.height()));
  return DecoratedGraph(g.top(), g.bottom(), g.height(), std::move(chains));
}

GraphKey key(const DecoratedGraph& g) {
  return GraphKey{max(g.bottom().area, g.top().area), min(g.bottom().area, g.top().area), g.chain_count()};
}

namespace {

void require_same_key(const DecoratedGraph& g1, const DecoratedGraph& g2) {
  if (key(g1) != key(g2)) throw PreconditionError("graphs with different keys");
}

bool is_reflection_of(const Chain& a, const Chain& b, const Rational& height) {
  const std::size_t n = a.vertex_count();
  if (b.vertex_count() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.height(i) != height - b.height(n - 1 - i)) return false;
    if (i + 1 < n && a.labels()[i] != b.labels()[n - 2 - i]) return false;
  }
  return true;
}

}  // namespace

bool are_same(const DecoratedGraph& g1, const DecoratedGraph& g2) {
  require_same_key(g1, g2);
  if (g1.bottom().area != g2.bottom().area || g1.top().area != g2.top().area) return false;
  if (g1.height() != g2.height()) return false;
  for (std::size_t i = 0; i < g1.chain_count(); ++i)
    if (g1.chains()[g1.by_start()[i]] != g2.chains()[g2.by_start()[i]]) return false;
  return true;
}

bool are_reflection(const DecoratedGraph& g1, const DecoratedGraph& g2) {
  require_same_key(g1, g2);
  if (g1.bottom().area != g2.top().area || g1.top().area != g2.bottom().area) return false;
  if (g1.height() != g2.height()) return false;
  for (std::size_t i = 0; i < g1.chain_count(); ++i)
    if (!is_reflection_of(g1.chains()[g1.by_start()[i]], g2.chains()[g2.by_end()[i]], g1.height()))
      return false;
  return true;
}

bool are_equivalent(const DecoratedGraph& g1, const DecoratedGraph& g2) {
  if (key(g1) != key(g2) || g1.height() != g2.height()) return false;
  if (g1.bottom().area == g1.top().area) return are_same(g1, g2) || are_reflection(g1, g2);
  if (g1.bottom().area == g2.bottom().area) return are_same(g1, g2);
  return are_reflection(g1, g2);
}

std::strong_ordering canonical_compare(const DecoratedGraph& a, const DecoratedGraph& b) {
  if (auto c = a.bottom().area <=> b.bottom().area; c != 0) return c;
  if (auto c = a.top().area <=> b.top().area; c != 0) return c;
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  if (auto c = a.chain_count() <=> b.chain_count(); c != 0) return c;
  for (std::size_t i = 0; i < a.chain_count(); ++i)
    if (auto c = a.chains()[a.by_start()[i]] <=> b.chains()[b.by_start()[i]]; c != 0) return c;
  return std::strong_ordering::equal;
}

DecoratedGraph canonical_representative(const DecoratedGraph& g) {
  DecoratedGraph f = flip(g);
  return canonical_compare(f, g) < 0 ? f : g;
}

}  // namespace ruled
