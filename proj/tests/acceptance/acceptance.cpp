// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ruled/enumerate.hpp"
#include "ruled/formulas.hpp"
#include "ruled/formvec.hpp"
#include "ruled/graph.hpp"

using namespace ruled;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

BlowupVector vec(Rational lf, Rational lb, std::vector<Rational> ds, BundleType b = BundleType::Trivial) {
  return BlowupVector(std::move(lf), std::move(lb), std::move(ds), b, 1);
}

std::size_t count(const BlowupVector& v) { return count_actions(v).count; }

mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Smallest integer n with n >= x, by stepping rather than mpz ceil.
long step_ceil(const Rational& x) {
  long n = 0;
  while (Rational(n) < x) ++n;
  while (Rational(n - 1) >= x) --n;
  return n;
}

bool sorted_and_reduced(const BlowupVector& v) {
  for (std::size_t i = 1; i < v.k(); ++i)
    if (v.deltas[i - 1] < v.deltas[i]) return false;
  return v.k() < 2 || v.deltas[0] + v.deltas[1] <= v.lambda_f;
}

Rational raw_volume(const BlowupVector& v) {
  Rational s = v.lambda_f * v.lambda_b;
  for (const auto& d : v.deltas) s -= d * d / Rational(2);
  return s;
}

Outcome c1() {
  Outcome o;
  auto r = cremona_reduce(vec(3, 3, {2, 2}));
  o.require(r.reduced == vec(3, 2, {1, 1}), "reduced to " + r.reduced.str());
  o.require(r.iterations == 1, "iterations " + std::to_string(r.iterations));
  return o;
}

Outcome c2() {
  Outcome o;
  const auto a = count(vec(12, 2, {3, 3}));
  const auto b = count(vec(10, 2, {1, 1}));
  o.require(a == 0, "(12,2;3,3) gave " + std::to_string(a));
  o.require(b == 1, "(10,2;1,1) gave " + std::to_string(b));
  return o;
}

Outcome c3() {
  Outcome o;
  for (long k = 2; k <= 6; ++k) {
    const auto c = count(vec(2, 1, std::vector<Rational>(static_cast<std::size_t>(k), Rational(2, k))));
    o.require(c == 0, "k=" + std::to_string(k) + " gave " + std::to_string(c));
  }
  return o;
}

Outcome c4() {
  Outcome o;
  for (long lb = 1; lb <= 3; ++lb) {
    std::vector<Rational> ds;
    Rational d = 1;
    for (unsigned k = 1; k <= 4; ++k) {
      d = d / Rational(4);
      ds.push_back(d);
      // (lb - 1/2)(k+1)! = (2lb - 1)(k+1)!/2
      const mpz_class expected = mpz_class(2 * lb - 1) * factorial(k + 1) / 2;
      const mpz_class got(static_cast<unsigned long>(count(vec(1, lb, ds))));
      o.require(got == expected, "lb=" + std::to_string(lb) + " k=" + std::to_string(k) + " gave " +
                                     got.get_str() + ", want " + expected.get_str());
    }
  }
  return o;
}

Outcome c5() {
  Outcome o;
  oracle::Gen gen(5005);
  int checked = 0, boundary = 0, nontrivial = 0;
  while (checked < 240) {
    const unsigned k = static_cast<unsigned>(gen.integer(1, 5));
    const Rational lf = Rational(gen.integer(1, 4)) * (gen.coin(0.3) ? Rational(1, 2) : Rational(1));
    const bool edge = gen.coin(0.3);
    const Rational eps = edge ? lf / Rational(2) : lf * gen.unit(10) / Rational(2);
    const Rational lb = lf * Rational(gen.integer(1, 24), 4);
    const BundleType b = gen.coin() ? BundleType::Trivial : BundleType::NonTrivial;
    auto v = BlowupVector(lf, lb, std::vector<Rational>(k, eps), b, 1);
    if (!check_cone(v).in_cone) continue;
    const mpz_class f = count_equal_sizes(lf, lb, eps, k, b);
    const mpz_class c(static_cast<unsigned long>(count(v)));
    o.require(f == c, v.str() + " " + std::string(to_string(b)) + ": formula " + f.get_str() + ", enumeration " +
                          c.get_str());
    ++checked;
    boundary += edge;
    nontrivial += b == BundleType::NonTrivial;
  }
  o.require(boundary > 20 && nontrivial > 20, "sample did not cover both bundles and 2*eps = lf");
  return o;
}

Outcome c6() {
  Outcome o;
  int pairs = 0;
  for (long a = 1; a <= 10; ++a)
    for (long b = 1; b <= 10; ++b, ++pairs) {
      const Rational lf(a, 3), lb(b, 2);
      const long want_t = step_ceil(lb / lf);
      const long want_n = std::max(0L, step_ceil((lb - lf / Rational(2)) / lf));
      o.require(count_ruled(lf, lb, BundleType::Trivial) == want_t, "trivial " + lf.str() + "," + lb.str());
      o.require(count_ruled(lf, lb, BundleType::NonTrivial) == want_n, "nontrivial " + lf.str() + "," + lb.str());
      o.require(count(vec(lf, lb, {})) == static_cast<std::size_t>(want_t), "k=0 trivial enumeration");
      o.require(count(vec(lf, lb, {}, BundleType::NonTrivial)) == static_cast<std::size_t>(want_n),
                "k=0 nontrivial enumeration");
      o.require(enumerate_actions(vec(lf, lb, {})).graphs.size() == static_cast<std::size_t>(want_t),
                "k=0 trivial graphs");
    }
  o.require(pairs == 100, "grid size");
  return o;
}

Outcome c7() {
  Outcome o;
  const auto a = count(vec(2, 3, {Rational(1, 2)}, BundleType::NonTrivial));
  const auto b = count(vec(2, Rational(7, 2), {Rational(3, 2)}));
  o.require(a == 2 && b == 2, "hand pair gave " + std::to_string(a) + " and " + std::to_string(b));
  oracle::Gen gen(7007);
  for (int i = 0; i < 120; ++i) {
    const auto k = static_cast<std::size_t>(gen.integer(1, 3));
    auto v = gen.cone_vector(k, gen.coin() ? BundleType::Trivial : BundleType::NonTrivial);
    if (k >= 2) v = cremona_reduce(v).reduced;
    const auto s = swap_bundle(v);
    const auto x = count(v), y = count(s);
    o.require(x == y, v.str() + " gave " + std::to_string(x) + " vs " + std::to_string(y));
  }
  return o;
}

Outcome c8() {
  Outcome o;
  oracle::Gen gen(8008);
  for (int i = 0; i < 600; ++i) {
    const auto k = static_cast<std::size_t>(gen.integer(2, 8));
    const auto v = gen.cone_vector(k, gen.coin() ? BundleType::Trivial : BundleType::NonTrivial);
    const auto r = cremona_reduce(v);
    const auto& w = r.reduced;
    o.require(sorted_and_reduced(w), v.str() + " reduced to " + w.str());
    o.require(w.lambda_f == v.lambda_f, "lambda_F changed for " + v.str());
    o.require(raw_volume(w) == raw_volume(v), "volume changed for " + v.str());
    o.require(cremona_reduce(w).reduced == w && cremona_reduce(w).iterations == 0, "not idempotent at " + v.str());
    o.require(cremona(cremona(v)) == v, "cremona not an involution at " + v.str());
  }
  return o;
}

Outcome c9() {
  Outcome o;
  oracle::Gen gen(9009);
  int with_cremona = 0;
  for (int i = 0; i < 250; ++i) {
    const auto k = static_cast<std::size_t>(gen.integer(2, 6));
    const auto v = gen.cone_vector(k);
    const auto r = cremona_reduce(v).reduced;
    o.require(cremona_reduce(sort_deltas(v)).reduced == r, "sort changes the normal form of " + v.str());
    const auto c = cremona(v);
    if (check_cone(c).in_cone) {
      ++with_cremona;
      o.require(cremona_reduce(c).reduced == r, "cremona changes the normal form of " + v.str());
    }
  }
  o.require(with_cremona > 50, "too few cremona images stayed in the cone");
  return o;
}

Outcome c10() {
  Outcome o;
  oracle::Gen gen(10010);
  for (int i = 0; i < 600; ++i) {
    const auto k = static_cast<std::size_t>(gen.integer(1, 6));
    auto v = gen.cone_vector(k);
    if (k >= 2) v = cremona_reduce(v).reduced;
    if (gen.coin(0.3) && k >= 2) {
      // push the smallest delta onto a tie with lf - d1
      auto w = v;
      w.deltas.back() = w.lambda_f - w.deltas.front();
      if (check_cone(w).in_cone && sorted_and_reduced(w)) v = w;
    }
    o.require(emin(v).classes == oracle::argmin_classes(v), "argmin mismatch at " + v.str());
  }
  struct Witness {
    BlowupVector v;
    EminCase label;
  };
  const std::vector<Witness> witnesses{
      {vec(4, 1, {1}), EminCase::K1Case1},
      {vec(4, 2, {3}), EminCase::K1Case2},
      {vec(2, 1, {1}), EminCase::K1Case3},
      {vec(10, 5, {4, 3, 3}), EminCase::Case1a},
      {vec(4, 5, {2, 2, 2}), EminCase::Case1b},
      {vec(10, 5, {6, 2, 1, 1}), EminCase::Case2a},
      {vec(10, 5, {6, 4, 4}), EminCase::Case2b},
  };
  for (const auto& w : witnesses) {
    const auto r = emin(w.v);
    o.require(r.case_label == w.label, w.v.str() + " labelled " + std::string(to_string(r.case_label)));
    o.require(r.classes == oracle::argmin_classes(w.v), "witness classes at " + w.v.str());
  }
  using Kind = ExceptionalClass::Kind;
  o.require(emin(vec(2, 1, {1})).classes == std::vector<ExceptionalClass>{{Kind::E, 1}, {Kind::FminusE, 1}},
            "(2,1;1) classes");
  return o;
}

Outcome c11() {
  Outcome o;
  const auto v = vec(1, 1, {});
  o.require(packing_number(v) == 2, "packing " + packing_number(v).get_str());
  o.require(gromov_width(v).squared == 1, "width^2 " + gromov_width(v).squared.str());
  return o;
}

Outcome c12() {
  Outcome o;
  oracle::Gen gen(12012);
  int compared = 0, positives = 0;
  while (compared < 1200) {
    const auto g = gen.graph(5, gen.coin(0.3));
    DecoratedGraph h = g;
    switch (gen.integer(0, 3)) {
      case 0: h = oracle::relabel(g, gen); break;
      case 1: h = oracle::brute_flip(g, gen); break;
      default: h = gen.graph(5, gen.coin(0.3)); break;
    }
    if (key(g) != key(h)) {
      o.require(!are_equivalent(g, h) && !oracle::brute_equivalent(g, h), "key mismatch treated as equivalent");
      continue;
    }
    const bool fast = are_equivalent(g, h);
    o.require(fast == oracle::brute_equivalent(g, h), "disagreement on a graph with " +
                                                          std::to_string(g.chain_count()) + " chains");
    positives += fast;
    ++compared;
  }
  o.require(positives > 200 && positives < compared, "sample lacks both outcomes");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cremona demo (3,3;2,2) -> (3,2;1,1)", 0.001, c1},
      {2, "zero-action example", 1, c2},
      {3, "equal-size vanishing (2,1;2/k...)", 10, c3},
      {4, "factorial sharpness", 120, c4},
      {5, "closed form vs enumeration", 300, c5},
      {6, "ruled counts", 60, c6},
      {7, "bundle duality", 300, c7},
      {8, "normal-form properties", 60, c8},
      {9, "normal-form uniqueness", 60, c9},
      {10, "E_min classification", 60, c10},
      {11, "packing number and Gromov width of (1,1;)", 1, c11},
      {12, "equivalence oracle", 120, c12},
  };
  // warm-up
  (void)cremona_reduce(vec(3, 3, {2, 2}));

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      std::ostringstream os;
      os << "over the " << c.limit_seconds << " s budget";
      o.detail = os.str();
    }
    failures += !o.ok;
    std::printf("%s [%2d] %s (%.4f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.ok ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
