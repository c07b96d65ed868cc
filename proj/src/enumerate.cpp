#include "ruled/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ruled/blowup.hpp"
#include "ruled/errors.hpp"
#include "ruled/formulas.hpp"

namespace ruled {

bool GraphStore::add_if_new(const DecoratedGraph& g) { return add_if_new(DecoratedGraph(g)); }

bool GraphStore::add_if_new(DecoratedGraph&& g) {
  auto& bucket = buckets_[key(g)];
  for (const auto& stored : bucket)
    if (are_equivalent(g, stored)) return false;
  bucket.push_back(std::move(g));
  ++size_;
  return true;
}

std::vector<DecoratedGraph> GraphStore::graphs() const {
  std::vector<DecoratedGraph> out;
  out.reserve(size_);
  for (const auto& [k, bucket] : buckets_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<long> initial_twists(const Rational& lambda_f, const Rational& lambda_b, BundleType bundle) {
  if (lambda_f.sign() <= 0 || lambda_b.sign() <= 0)
    throw PreconditionError("initial graphs need positive lambda_F and lambda_B");
  // n ranges over 0 <= n < 2*lb/lf with the parity of the bundle.
  const Rational bound = Rational(2) * lambda_b / lambda_f;
  std::vector<long> twists;
  for (long n = bundle == BundleType::Trivial ? 0 : 1; Rational(n) < bound; n += 2) twists.push_back(n);
  return twists;
}

std::vector<DecoratedGraph> initial_graphs(const Rational& lambda_f, const Rational& lambda_b, BundleType bundle,
                                           int genus) {
  std::vector<DecoratedGraph> out;
  for (long n : initial_twists(lambda_f, lambda_b, bundle)) {
    const Rational shift = Rational(n, 2) * lambda_f;
    out.push_back(DecoratedGraph::ruled(lambda_b + shift, lambda_b - shift, lambda_f, genus));
  }
  return out;
}

GraphStore blowup_stage(const GraphStore& store, const Rational& delta, unsigned jobs) {
  const std::vector<DecoratedGraph> sources = store.graphs();
  std::vector<std::vector<DecoratedGraph>> produced(sources.size());

  if (jobs <= 1 || sources.size() < 2) {
    for (std::size_t i = 0; i < sources.size(); ++i) produced[i] = all_blowups(sources[i], delta);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < sources.size(); i = next++) produced[i] = all_blowups(sources[i], delta);
    };
    std::vector<std::jthread> pool;
    const unsigned n = std::min<std::size_t>(jobs, sources.size());
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }

  GraphStore out;
  for (auto& batch : produced)
    for (auto& g : batch) out.add_if_new(std::move(g));
  return out;
}

namespace {

struct Run {
  CountReport report;
  GraphStore store;
};

Run run_pipeline(const BlowupVector& v, const CountOptions& options) {
  if (auto rep = check_cone(v); !rep)
    throw NotBlowupForm("vector does not encode a blowup form: " + v.str() + " (" + rep.violations.front().message +
                        ")");
  Run run;
  run.report.input = v;
  BlowupVector work = v;
  if (v.k() >= 2 && !is_g_reduced(v)) {
    if (!options.auto_reduce) throw PreconditionError("vector is not in g-reduced form: " + v.str());
    work = cremona_reduce(v).reduced;
    run.report.auto_reduced = true;
  }
  run.report.reduced = work;
  run.report.initial_twists = initial_twists(work.lambda_f, work.lambda_b, work.bundle);

  for (auto& g : initial_graphs(work.lambda_f, work.lambda_b, work.bundle, work.genus))
    run.store.add_if_new(std::move(g));
  run.report.stage_counts.push_back(run.store.size());
  for (const auto& delta : work.deltas) {
    run.store = blowup_stage(run.store, delta, options.jobs);
    run.report.stage_counts.push_back(run.store.size());
  }
  run.report.count = run.store.size();
  return run;
}

}  // namespace

CountReport count_actions(const BlowupVector& v, const CountOptions& options) {
  if (v.k() == 0) {
    if (auto rep = check_cone(v); !rep)
      throw NotBlowupForm("vector does not encode a blowup form: " + v.str() + " (" +
                          rep.violations.front().message + ")");
    CountReport r;
    r.input = r.reduced = v;
    r.initial_twists = initial_twists(v.lambda_f, v.lambda_b, v.bundle);
    r.count = static_cast<std::size_t>(count_ruled(v.lambda_f, v.lambda_b, v.bundle).get_ui());
    r.stage_counts = {r.count};
    return r;
  }
  return run_pipeline(v, options).report;
}

Enumeration enumerate_actions(const BlowupVector& v, const CountOptions& options) {
  Run run = run_pipeline(v, options);
  Enumeration e;
  e.report = std::move(run.report);
  for (const auto& g : run.store.graphs()) e.graphs.push_back(canonical_representative(g));
  std::sort(e.graphs.begin(), e.graphs.end(),
            [](const DecoratedGraph& a, const DecoratedGraph& b) { return canonical_compare(a, b) < 0; });
  return e;
}

}  // namespace ruled
