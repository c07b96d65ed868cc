#include "ruled/formvec.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "ruled/errors.hpp"

namespace ruled {

std::string_view to_string(BundleType b) {
  return b == BundleType::Trivial ? "trivial" : "nontrivial";
}

BundleType other(BundleType b) {
  return b == BundleType::Trivial ? BundleType::NonTrivial : BundleType::Trivial;
}

BlowupVector::BlowupVector(Rational f, Rational b, std::vector<Rational> ds, BundleType bt, int g)
    : lambda_f(std::move(f)), lambda_b(std::move(b)), deltas(std::move(ds)), bundle(bt), genus(g) {
  if (genus < 1) throw PreconditionError("genus must be positive");
}

std::string BlowupVector::str() const {
  std::ostringstream os;
  os << lambda_f << ',' << lambda_b << ';';
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i) os << ',';
    os << deltas[i];
  }
  return os.str();
}

std::string_view to_string(ConeCondition c) {
  switch (c) {
    case ConeCondition::FiberPositive: return "fiber_positive";
    case ConeCondition::BasePositive: return "base_positive";
    case ConeCondition::DeltaPositive: return "delta_positive";
    case ConeCondition::DeltaBelowFiber: return "delta_below_fiber";
    case ConeCondition::Volume: return "volume";
  }
  return "?";
}

ConeReport check_cone(const BlowupVector& v) {
  ConeReport r;
  auto violate = [&](ConeCondition c, std::size_t i, std::string msg) {
    r.in_cone = false;
    r.violations.push_back({c, i, std::move(msg)});
  };
  if (v.lambda_f.sign() <= 0) violate(ConeCondition::FiberPositive, 0, "lambda_F = " + v.lambda_f.str() + " <= 0");
  if (v.lambda_b.sign() <= 0) violate(ConeCondition::BasePositive, 0, "lambda_B = " + v.lambda_b.str() + " <= 0");
  for (std::size_t i = 0; i < v.k(); ++i) {
    const auto& d = v.deltas[i];
    const std::string name = "delta_" + std::to_string(i + 1);
    if (d.sign() <= 0) violate(ConeCondition::DeltaPositive, i + 1, name + " = " + d.str() + " <= 0");
    if (!(d < v.lambda_f))
      violate(ConeCondition::DeltaBelowFiber, i + 1, name + " = " + d.str() + " >= lambda_F");
  }
  if (auto vol = volume(v); vol.sign() <= 0)
    violate(ConeCondition::Volume, 0, "volume = " + vol.str() + " <= 0");
  return r;
}

Rational volume(const BlowupVector& v) {
  Rational squares;
  for (const auto& d : v.deltas) squares += d * d;
  return v.lambda_f * v.lambda_b - squares / Rational(2);
}

namespace {

void require_two(const BlowupVector& v, const char* op) {
  if (v.k() < 2) throw PreconditionError(std::string(op) + " undefined for k<2");
}

void require_cone(const BlowupVector& v) {
  if (auto rep = check_cone(v); !rep) {
    std::string msg = "not a blowup form: " + v.str();
    for (const auto& viol : rep.violations) msg += "; " + viol.message;
    throw NotBlowupForm(msg);
  }
}

}  // namespace

Rational defect(const BlowupVector& v) {
  require_two(v, "defect");
  return v.deltas[0] + v.deltas[1] - v.lambda_f;
}

BlowupVector cremona(const BlowupVector& v) {
  require_two(v, "cremona");
  BlowupVector out = v;
  out.lambda_b = v.lambda_b - defect(v);
  out.deltas[0] = v.lambda_f - v.deltas[1];
  out.deltas[1] = v.lambda_f - v.deltas[0];
  return out;
}

BlowupVector sort_deltas(const BlowupVector& v) {
  BlowupVector out = v;
  std::stable_sort(out.deltas.begin(), out.deltas.end(), std::greater<>{});
  return out;
}

BlowupVector cremona_move(const BlowupVector& v) {
  require_two(v, "cremona_move");
  return defect(v).sign() > 0 ? sort_deltas(cremona(v)) : sort_deltas(v);
}

ReduceResult cremona_reduce(const BlowupVector& v) {
  require_two(v, "cremona_reduce");
  require_cone(v);
  ReduceResult r;
  BlowupVector cur = sort_deltas(v);
  r.trace.push_back(cur);
  while (defect(cur).sign() > 0) {
    cur = sort_deltas(cremona(cur));
    r.trace.push_back(cur);
    ++r.iterations;
  }
  r.reduced = std::move(cur);
  return r;
}

bool is_g_reduced(const BlowupVector& v) {
  if (v.k() < 2) return true;
  if (!std::is_sorted(v.deltas.begin(), v.deltas.end(), std::greater<>{})) return false;
  return v.deltas[0] + v.deltas[1] <= v.lambda_f;
}

BlowupVector swap_bundle(const BlowupVector& v) {
  if (v.k() == 0) throw PreconditionError("swap_bundle needs at least one blowup");
  require_cone(v);
  BlowupVector out = v;
  out.bundle = other(v.bundle);
  out.lambda_b = v.lambda_b + v.lambda_f / Rational(2) - v.deltas[0];
  out.deltas[0] = v.lambda_f - v.deltas[0];
  return sort_deltas(out);
}

std::string ExceptionalClass::str() const {
  return (kind == Kind::E ? "E" : "F-E") + std::to_string(index);
}

std::map<ExceptionalClass, Rational> exceptional_areas(const BlowupVector& v) {
  std::map<ExceptionalClass, Rational> areas;
  for (std::size_t i = 0; i < v.k(); ++i) {
    areas.emplace(ExceptionalClass{ExceptionalClass::Kind::E, i + 1}, v.deltas[i]);
    areas.emplace(ExceptionalClass{ExceptionalClass::Kind::FminusE, i + 1}, v.lambda_f - v.deltas[i]);
  }
  return areas;
}

std::string_view to_string(EminCase c) {
  switch (c) {
    case EminCase::K1Case1: return "k1_case1";
    case EminCase::K1Case2: return "k1_case2";
    case EminCase::K1Case3: return "k1_case3";
    case EminCase::Case1a: return "case1a";
    case EminCase::Case1b: return "case1b";
    case EminCase::Case2a: return "case2a";
    case EminCase::Case2b: return "case2b";
  }
  return "?";
}

std::size_t tail_start(const BlowupVector& v) {
  const std::size_t k = v.k();
  if (k == 0) return 0;
  std::size_t j = k - 1;
  while (j > 0 && v.deltas[j - 1] == v.deltas[k - 1]) --j;
  return j;
}

EminResult emin(const BlowupVector& v) {
  using Kind = ExceptionalClass::Kind;
  const std::size_t k = v.k();
  if (k == 0) throw PreconditionError("emin needs at least one blowup");
  require_cone(v);
  if (k >= 2 && !is_g_reduced(v)) throw PreconditionError("emin needs a g-reduced vector for k>=2");

  const Rational half_f = v.lambda_f / Rational(2);
  const auto& d = v.deltas;
  EminResult r;
  r.j_v = tail_start(v);

  auto tail_es = [&] {
    for (std::size_t i = r.j_v; i < k; ++i) r.classes.push_back({Kind::E, i + 1});
  };

  if (k == 1) {
    if (d[0] < half_f) {
      r.case_label = EminCase::K1Case1;
      r.classes = {{Kind::E, 1}};
    } else if (d[0] > half_f) {
      r.case_label = EminCase::K1Case2;
      r.classes = {{Kind::FminusE, 1}};
    } else {
      r.case_label = EminCase::K1Case3;
      r.classes = {{Kind::E, 1}, {Kind::FminusE, 1}};
    }
    return r;
  }

  if (d[0] <= half_f) {
    if (d[k - 1] < half_f) {
      r.case_label = EminCase::Case1a;
      tail_es();
    } else {
      // every delta equals lf/2
      r.case_label = EminCase::Case1b;
      for (std::size_t i = 1; i <= k; ++i) {
        r.classes.push_back({Kind::E, i});
        r.classes.push_back({Kind::FminusE, i});
      }
    }
  } else if (v.lambda_f - d[0] > d[k - 1]) {
    r.case_label = EminCase::Case2a;
    tail_es();
  } else {
    // reduced form forces d2 = ... = dk = lf - d1 here
    r.case_label = EminCase::Case2b;
    r.classes.push_back({Kind::FminusE, 1});
    for (std::size_t i = 2; i <= k; ++i) r.classes.push_back({Kind::E, i});
  }
  std::sort(r.classes.begin(), r.classes.end());
  return r;
}

GromovWidth gromov_width(const BlowupVector& v) {
  require_cone(v);
  const Rational fiber_sq = v.lambda_f * v.lambda_f;
  const Rational volume_bound = Rational(2) * volume(v);
  GromovWidth w;
  w.capped_by_fiber = fiber_sq <= volume_bound;
  w.squared = w.capped_by_fiber ? fiber_sq : volume_bound;
  w.approx = std::sqrt(w.squared.approx());
  return w;
}

mpz_class packing_number(const BlowupVector& v) {
  require_cone(v);
  return (Rational(2) * volume(v) / (v.lambda_f * v.lambda_f)).ceil();
}

}  // namespace ruled
