#pragma once

#include <gmpxx.h>

#include "ruled/formvec.hpp"
#include "ruled/rational.hpp"

namespace ruled {

/// 1 if a < b strictly, else 0.
inline int indicator_less(const Rational& a, const Rational& b) { return a < b ? 1 : 0; }

/// Actions on the ruled surface itself: ceil(lb/lf) for the trivial bundle,
/// ceil((lb - lf/2)/lf) floored at 0 for the nontrivial one.
mpz_class count_ruled(const Rational& lambda_f, const Rational& lambda_b, BundleType bundle);

/// Closed-form count for k blowups of equal size epsilon with 2*epsilon <= lf.
/// Throws PreconditionError when 2*epsilon > lf and NotBlowupForm when the
/// vector leaves the cone.
mpz_class count_equal_sizes(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon,
                            unsigned k, BundleType bundle);

/// Pieces of count_equal_sizes, exposed for testing.
namespace equal_sizes {

/// Sum over all initial graphs of the ways to split k fat blowups between
/// top and bottom (the n = 0 trivial graph counted up to flip).
mpz_class fat_splits(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon, unsigned k,
                     BundleType bundle);

/// Graphs from neighbouring twists that coincide when 2*epsilon = lf.
mpz_class twist_coincidences(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon,
                             unsigned k, BundleType bundle);

/// Nontrivial bundle, 2*epsilon = lf: graphs of the lowest twist that are
/// flips of each other (j top blowups vs k-2-j top blowups).
mpz_class lowest_twist_flips(const Rational& lambda_f, const Rational& lambda_b, const Rational& epsilon,
                             unsigned k);

}  // namespace equal_sizes

/// Upper bound (ceil(lb/lf) - 1/2) * (k+1)! on the trivial-bundle count.
mpz_class max_count(const Rational& lambda_f, const Rational& lambda_b, unsigned k);

/// Sufficient conditions for max_count to be attained (trivial bundle):
/// sum d < lf; sum d < lb - (n/2) lf for every even n < 2 lb/lf;
/// every tail sum strictly below its predecessor; and the Fibonacci-weighted
/// tails sum_{i=1..s} F_{i+1} d_{j+i} < d_j.
bool max_count_conditions(const BlowupVector& v);

/// F_1 = F_2 = 1.
mpz_class fibonacci(unsigned n);

}  // namespace ruled
