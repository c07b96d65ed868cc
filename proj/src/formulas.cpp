#include "ruled/formulas.hpp"

#include "ruled/errors.hpp"

namespace ruled {

mpz_class count_ruled(const Rational& lambda_f, const Rational& lambda_b, BundleType bundle) {
  if (lambda_f.sign() <= 0 || lambda_b.sign() <= 0) throw PreconditionError("count_ruled needs positive lf, lb");
  if (bundle == BundleType::Trivial) return (lambda_b / lambda_f).ceil();
  mpz_class c = ((lambda_b - lambda_f / Rational(2)) / lambda_f).ceil();
  return c < 0 ? mpz_class(0) : c;
}

namespace {

// Upper index of the twist sum: ceil(lb/lf) - 1 (trivial) or
// ceil((lb - lf/2)/lf) - 1 (nontrivial).
long last_twist(const Rational& lambda_f, const Rational& lambda_b, BundleType bundle) {
  return count_ruled(lambda_f, lambda_b, bundle).get_si() - 1;
}

// Distance of the n-th initial fat vertex pair from lb, in units of lf:
// n for the trivial bundle, (2n+1)/2 for the nontrivial one.
Rational twist_offset(long n, BundleType bundle) {
  return bundle == BundleType::Trivial ? Rational(n) : Rational(2 * n + 1, 2);
}

void check_regime(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon, unsigned k,
                  BundleType bundle) {
  if (k == 0) throw PreconditionError("equal-size formula needs k >= 1");
  if (Rational(2) * epsilon > lambda_f) throw PreconditionError("formula regime not covered (2*eps > lf)");
  BlowupVector v(lambda_f, lambda_b, std::vector<Rational>(k, epsilon), bundle);
  if (auto rep = check_cone(v); !rep) throw NotBlowupForm("not a blowup form: " + v.str());
}

}  // namespace

namespace equal_sizes {

mpz_class fat_splits(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon, unsigned k,
                     BundleType bundle) {
  const long last = last_twist(lambda_f, lambda_b, bundle);
  mpz_class total = 0;
  const long first = bundle == BundleType::Trivial ? 1 : 0;
  for (long n = first; n <= last; ++n) {
    const Rational off = twist_offset(n, bundle) * lambda_f;
    for (unsigned j = 0; j <= k; ++j)
      total += indicator_less(Rational(static_cast<long>(j)) * epsilon, lambda_b - off) *
               indicator_less(Rational(static_cast<long>(k - j)) * epsilon, lambda_b + off);
  }
  if (bundle == BundleType::Trivial) {
    for (unsigned j = 0; j <= k / 2; ++j)
      total += indicator_less(Rational(static_cast<long>(j)) * epsilon, lambda_b) *
               indicator_less(Rational(static_cast<long>(k - j)) * epsilon, lambda_b);
  }
  return total;
}

mpz_class twist_coincidences(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon,
                             unsigned k, BundleType bundle) {
  if (Rational(2) * epsilon != lambda_f || k < 2) return 0;
  const long last = last_twist(lambda_f, lambda_b, bundle);
  mpz_class total = 0;
  for (long n = 1; n <= last; ++n) {
    const Rational off = twist_offset(n, bundle) * lambda_f;
    const Rational prev_off = twist_offset(n - 1, bundle) * lambda_f;
    for (unsigned j = 0; j + 2 <= k; ++j)
      total += indicator_less(Rational(static_cast<long>(j)) * epsilon, lambda_b - off) *
               indicator_less(Rational(static_cast<long>(k - 2 - j)) * epsilon, lambda_b + prev_off);
  }
  return total;
}

mpz_class lowest_twist_flips(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon,
                             unsigned k) {
  if (Rational(2) * epsilon != lambda_f || k < 3) return 0;
  if (last_twist(lambda_f, lambda_b, BundleType::NonTrivial) < 0) return 0;
  const Rational off = lambda_f / Rational(2);
  mpz_class total = 0;
  // j and k-2-j top blowups on the twist-1 graph give flipped graphs; count
  // each pair once (j < k-2-j).
  for (unsigned j = 0; 2 * j + 2 < k; ++j)
    total += indicator_less(Rational(static_cast<long>(j)) * epsilon, lambda_b - off) *
             indicator_less(Rational(static_cast<long>(k - j)) * epsilon, lambda_b + off);
  return total;
}

}  // namespace equal_sizes

mpz_class count_equal_sizes(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon,
                            unsigned k, BundleType bundle) {
  check_regime(lambda_f, lambda_b, epsilon, k, bundle);
  mpz_class c = equal_sizes::fat_splits(lambda_f, lambda_b, epsilon, k, bundle) -
                equal_sizes::twist_coincidences(lambda_f, lambda_b, epsilon, k, bundle);
  if (bundle == BundleType::NonTrivial) c -= equal_sizes::lowest_twist_flips(lambda_f, lambda_b, epsilon, k);
  return c;
}

mpz_class fibonacci(unsigned n) {
  mpz_class r;
  mpz_fib_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class max_count(const Rational& lambda_f, const Rational& lambda_b, unsigned k) {
  if (k == 0) throw PreconditionError("max_count is stated for k >= 1");
  if (lambda_f.sign() <= 0 || lambda_b.sign() <= 0) throw PreconditionError("max_count needs positive lf, lb");
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), k + 1);
  const mpz_class c = (lambda_b / lambda_f).ceil();
  // (c - 1/2)(k+1)! = (2c - 1)(k+1)!/2, and (k+1)! is even for k >= 1
  return (2 * c - 1) * factorial / 2;
}

bool max_count_conditions(const BlowupVector& v) {
  const std::size_t k = v.k();
  const auto& d = v.deltas;
  Rational total;
  for (const auto& x : d) total += x;

  if (!(total < v.lambda_f)) return false;

  const Rational bound = Rational(2) * v.lambda_b / v.lambda_f;
  for (long n = 0; Rational(n) < bound; n += 2)
    if (!(total < v.lambda_b - Rational(n, 2) * v.lambda_f)) return false;

  for (std::size_t j = 0; j < k; ++j) {
    Rational tail;
    for (std::size_t i = j + 1; i < k; ++i) tail += d[i];
    if (!(tail < d[j])) return false;
  }

  // 1-based: sum_{i=1..s} F_{i+1} d_{j+i} < F_1 d_j for j+s <= k.
  for (std::size_t j = 1; j <= k; ++j) {
    Rational weighted;
    for (std::size_t s = 1; j + s <= k; ++s) {
      weighted += Rational(fibonacci(static_cast<unsigned>(s + 1))) * d[j + s - 1];
      if (!(weighted < d[j - 1])) return false;
    }
  }
  return true;
}

}  // namespace ruled
