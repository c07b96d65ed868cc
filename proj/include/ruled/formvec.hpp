#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/rational.hpp"

namespace ruled {

enum class BundleType { Trivial, NonTrivial };

std::string_view to_string(BundleType b);
BundleType other(BundleType b);

/// Encoding vector (fiber area, base parameter; blowup sizes) of the cohomology
/// class of a blowup form on a k-fold blowup of an S^2-bundle over a surface
/// of positive genus.
struct BlowupVector {
  Rational lambda_f;
  Rational lambda_b;
  std::vector<Rational> deltas;
  BundleType bundle = BundleType::Trivial;
  int genus = 1;

  BlowupVector() = default;
  BlowupVector(Rational f, Rational b, std::vector<Rational> ds,
               BundleType bt = BundleType::Trivial, int g = 1);

  [[nodiscard]] std::size_t k() const { return deltas.size(); }

  /// "lf,lb;d1,...,dk" with exact rationals.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const BlowupVector&, const BlowupVector&) = default;
};

enum class ConeCondition { FiberPositive, BasePositive, DeltaPositive, DeltaBelowFiber, Volume };

std::string_view to_string(ConeCondition c);

struct ConeViolation {
  ConeCondition condition;
  std::size_t index = 0;  // 1-based blowup index for the per-delta conditions, else 0
  std::string message;
};

struct ConeReport {
  bool in_cone = true;
  std::vector<ConeViolation> violations;
  explicit operator bool() const { return in_cone; }
};

/// Membership in the standard symplectic cone: lf > 0, lb > 0, 0 < di < lf,
/// and positive volume. Strict throughout.
ConeReport check_cone(const BlowupVector& v);

/// lf*lb - (d1^2 + ... + dk^2)/2.
Rational volume(const BlowupVector& v);

/// d1 + d2 - lf. Requires k >= 2.
Rational defect(const BlowupVector& v);

/// Raw Cremona transform (no defect guard, no sorting). Requires k >= 2.
BlowupVector cremona(const BlowupVector& v);

/// Deltas in non-increasing order; everything else untouched.
BlowupVector sort_deltas(const BlowupVector& v);

/// cremona followed by sort when the defect is positive, plain sort otherwise.
BlowupVector cremona_move(const BlowupVector& v);

struct ReduceResult {
  BlowupVector reduced;
  /// Every vector visited, starting with the sorted input. trace.size() - 1 == iterations.
  std::vector<BlowupVector> trace;
  std::size_t iterations = 0;
};

/// Iterates the Cremona move until the defect is nonpositive. The input is
/// sorted first (a permutation of the exceptional classes). Requires k >= 2
/// and a cone vector; throws NotBlowupForm otherwise.
ReduceResult cremona_reduce(const BlowupVector& v);

/// Positive-genus reduced form: non-increasing deltas and d1 + d2 <= lf.
/// Vacuously true for k <= 1.
bool is_g_reduced(const BlowupVector& v);

/// Toggles the bundle type via the F - E1 blowdown duality and re-sorts the
/// deltas. Requires k >= 1 and a cone vector.
BlowupVector swap_bundle(const BlowupVector& v);

struct ExceptionalClass {
  enum class Kind { E, FminusE };
  Kind kind = Kind::E;
  std::size_t index = 1;  // 1-based

  [[nodiscard]] std::string str() const;

  /// Ordered by index, then E before F-E.
  friend auto operator<=>(const ExceptionalClass& a, const ExceptionalClass& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.kind <=> b.kind;
  }
  friend bool operator==(const ExceptionalClass&, const ExceptionalClass&) = default;
};

/// Symplectic areas of E_i (di) and F - E_i (lf - di). Empty for k = 0.
std::map<ExceptionalClass, Rational> exceptional_areas(const BlowupVector& v);

enum class EminCase { K1Case1, K1Case2, K1Case3, Case1a, Case1b, Case2a, Case2b };

std::string_view to_string(EminCase c);

struct EminResult {
  std::vector<ExceptionalClass> classes;  // sorted
  EminCase case_label = EminCase::K1Case1;
  std::size_t j_v = 0;
};

/// Smallest nonnegative j with d_{j+1} = ... = d_k (0 for k = 0).
std::size_t tail_start(const BlowupVector& v);

/// Exceptional classes of minimal area, classified by case. Requires k >= 1,
/// a cone vector, and g-reduced form when k >= 2.
EminResult emin(const BlowupVector& v);

struct GromovWidth {
  Rational squared;      // min(lf^2, 2*volume)
  bool capped_by_fiber;  // true when lf^2 <= 2*volume
  double approx;         // sqrt(squared), display only
};

GromovWidth gromov_width(const BlowupVector& v);

/// ceil(2*volume / lf^2). Requires a cone vector.
mpz_class packing_number(const BlowupVector& v);

}  // namespace ruled
