#include "nonarch/frobenius.hpp"

#include <algorithm>
#include <limits>

#include "nonarch/error.hpp"

namespace nonarch {

namespace {

long require_char_p(const Field& field) {
  const long p = field.characteristic();
  if (p == 0) {
    throw Error(ErrorCode::kUnsupportedField,
                field.describe() + " does not have characteristic p arithmetic");
  }
  return p;
}

}  // namespace

LaurentSeries pth_power(const LaurentSeries& f) {
  const long p = require_char_p(f.field());
  if (f.tail()) throw Error(ErrorCode::kInvalidArgument, "pth_power expects finite support");
  LaurentSeries::Terms terms;
  for (const auto& [exponent, c] : f.terms()) terms.emplace(exponent * p, frobenius(c));
  return LaurentSeries(f.field(), std::move(terms));
}

LaurentSeries pth_root(const LaurentSeries& f) {
  const long p = require_char_p(f.field());
  if (f.tail()) throw Error(ErrorCode::kInvalidArgument, "pth_root expects finite support");
  LaurentSeries::Terms terms;
  for (const auto& [exponent, c] : f.terms()) {
    if (exponent % p != 0) {
      throw Error(ErrorCode::kExponentNotDivisible,
                  "exponent " + std::to_string(exponent) + " is not divisible by " +
                      std::to_string(p));
    }
    terms.emplace(exponent / p, frobenius_root(c));
  }
  return LaurentSeries(f.field(), std::move(terms));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

Verdict verify_power_identity(const StreamSeries& f, const LaurentSeries& G, const LaurentSeries& H,
                              long m, long depth, std::optional<Rational> precision) {
  const long p = require_char_p(f.field());
  require_same_field(f.field(), G.field());
  require_same_field(f.field(), H.field());
  if (H.is_zero()) throw Error(ErrorCode::kInvalidArgument, "H must be nonzero");
  if (G.tail() || H.tail()) throw Error(ErrorCode::kInvalidArgument, "G and H must be finite");
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "negative Frobenius exponent");
  if (!precision) precision = Rational(f.field().laurent_desc().truncation);

  long q = 1;
  for (long k = 0; k < m; ++k) q *= p;

  const StreamWindow window = f.deepen(depth);
  if (!window.tail) return Verdict::kUndetermined;
  const LaurentSeries& known = window.coefficients;
  const LogRadiusWindow& domain = window.tail->domain;

  // Exponents i of f whose coefficient is known exactly.
  const bool known_below = f.shape().kind == ShapeKind::kFiniteBelow && f.shape().j0 >= -depth;
  const long h_min = *H.min_exponent();
  const long h_max = *H.max_exponent();

  long k_hi = q * depth + h_min;
  long k_lo = 0;
  if (known_below) {
    k_lo = q * f.shape().j0 + h_min;
    if (G.min_exponent()) k_lo = std::min(k_lo, *G.min_exponent());
  } else {
    k_lo = -q * depth + h_max;
  }
  if (k_lo > k_hi) return Verdict::kUndetermined;
  if (!G.is_zero() && (*G.min_exponent() < k_lo || *G.max_exponent() > k_hi)) {
    return Verdict::kUndetermined;
  }

  auto frob_power = [&](const Element& c) {
    Element out = c;
    for (long k = 0; k < m; ++k) out = frobenius(out);
    return out;
  };

  // Decidable part of the residual.
  try {
    for (long k = k_lo; k <= k_hi; ++k) {
      Element sum = -G.coefficient(k);
      for (const auto& [h, ch] : H.terms()) {
        const long offset = k - h;
        if (offset % q != 0) continue;
        const long i = offset / q;
        if (i > depth || (!known_below && i < -depth)) continue;  // unreachable by construction
        const Element a = known.coefficient(i);
        if (a.is_zero()) continue;
        sum = sum + ch * frob_power(a);
      }
      if (!sum.is_zero()) return Verdict::kFalse;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTruncationExceeded) return Verdict::kUndetermined;
    throw;
  }

  // Remainder of the residual outside [k_lo, k_hi]: known window terms that
  // spill out, plus the image of f's own remainder.
  TropVal floor = TropVal::infinity();
  for (const auto& [i, a] : known.terms()) {
    const Rational va = Rational(q) * a.valuation().value();
    for (const auto& [h, ch] : H.terms()) {
      const long k = q * i + h;
      if (k >= k_lo && k <= k_hi) continue;
      auto inf = term_infimum(va + ch.valuation().value(), k, domain);
      if (!inf) return Verdict::kUndetermined;
      floor = min(floor, TropVal(*inf));
    }
  }
  if (window.tail->floor.is_finite()) {
    auto inf_h = stored_infimum(H.terms(), domain);
    if (!inf_h) return Verdict::kUndetermined;
    floor = min(floor, TropVal(Rational(q) * window.tail->floor.value()) + *inf_h);
  }
  return floor > TropVal(*precision) ? Verdict::kTrue : Verdict::kUndetermined;
}

}  // namespace nonarch
