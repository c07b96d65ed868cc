#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ruled/formvec.hpp"
#include "ruled/graph.hpp"

namespace ruled {

/// Set of pairwise-inequivalent decorated graphs, bucketed by GraphKey.
/// Equivalent graphs share a key, so insertion only scans one bucket.
/// Buckets keep insertion order.
class GraphStore {
public:
  /// Inserts g unless an equivalent graph is already present.
  bool add_if_new(const DecoratedGraph& g);
  bool add_if_new(DecoratedGraph&& g);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }
  [[nodiscard]] const std::map<GraphKey, std::vector<DecoratedGraph>>& buckets() const { return buckets_; }

  /// All graphs, bucket by bucket in key order.
  [[nodiscard]] std::vector<DecoratedGraph> graphs() const;

private:
  std::map<GraphKey, std::vector<DecoratedGraph>> buckets_;
  std::size_t size_ = 0;
};

/// Ruled-surface graphs for twists 0 <= n < 2*lb/lf, n even (trivial) or odd
/// (nontrivial): bottom area lb + n*lf/2, top area lb - n*lf/2, height lf.
std::vector<DecoratedGraph> initial_graphs(const Rational& lambda_f, const Rational& lambda_b, BundleType bundle,
                                           int genus = 1);

/// The twist values n used by initial_graphs.
std::vector<long> initial_twists(const Rational& lambda_f, const Rational& lambda_b, BundleType bundle);

/// Every valid blowup of size delta of every stored graph, deduplicated.
/// With jobs > 1 the per-graph blowups are computed concurrently; insertion
/// stays sequential in source order, so the result does not depend on jobs.
GraphStore blowup_stage(const GraphStore& store, const Rational& delta, unsigned jobs = 1);

struct CountOptions {
  bool auto_reduce = true;  // false: reject non-reduced k >= 2 input
  unsigned jobs = 1;
};

struct CountReport {
  BlowupVector input;
  BlowupVector reduced;  // the vector actually enumerated
  std::vector<long> initial_twists;
  std::vector<std::size_t> stage_counts;  // k + 1 entries
  std::size_t count = 0;
  bool auto_reduced = false;
};

struct Enumeration {
  std::vector<DecoratedGraph> graphs;  // canonical representatives, sorted
  CountReport report;
};

/// Number of Hamiltonian circle actions up to equivalence. Requires a cone
/// vector (NotBlowupForm otherwise). Non-reduced input with k >= 2 is first
/// brought to g-reduced form unless options.auto_reduce is false, in which
/// case PreconditionError is thrown.
CountReport count_actions(const BlowupVector& v, const CountOptions& options = {});

/// Same pipeline as count_actions, returning the graphs too.
Enumeration enumerate_actions(const BlowupVector& v, const CountOptions& options = {});

}  // namespace ruled
