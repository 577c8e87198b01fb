#include "nonarch/series.hpp"

#include <algorithm>

#include "nonarch/error.hpp"

namespace nonarch {

LaurentSeries::LaurentSeries(Field field, Terms terms, std::optional<TailCertificate> tail)
    : field_(std::move(field)), tail_(std::move(tail)) {
  for (auto& [exponent, c] : terms) {
    require_same_field(field_, c.field());
    if (!c.is_zero()) terms_.emplace(exponent, std::move(c));
  }
  if (tail_ && !terms_.empty()) {
    if (terms_.begin()->first < tail_->e_min || terms_.rbegin()->first > tail_->e_max) {
      throw Error(ErrorCode::kInvalidArgument, "stored support escapes the certificate window");
    }
  }
}

LaurentSeries LaurentSeries::monomial(const Element& c, long exponent) {
  Terms terms;
  terms.emplace(exponent, c);
  return LaurentSeries(c.field(), std::move(terms));
}

LaurentSeries LaurentSeries::from_rationals(const Field& field,
                                            const std::vector<std::pair<long, Rational>>& terms) {
  LaurentSeries out(field);
  for (const auto& [exponent, q] : terms) {
    out = out + monomial(Element::from_rational(field, q), exponent);
  }
  return out;
}

std::optional<long> LaurentSeries::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<long> LaurentSeries::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Element LaurentSeries::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Element::zero(field_) : it->second;
}

LaurentSeries LaurentSeries::with_tail(std::optional<TailCertificate> tail) const {
  return LaurentSeries(field_, terms_, std::move(tail));
}

std::string LaurentSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    const std::string coeff = c.str();
    const bool simple = field_.is_padic() || c.terms().size() == 1;
    out += simple ? coeff : "(" + coeff + ")";
    if (exponent != 0) {
      out += "*T";
      if (exponent != 1) out += "^" + std::to_string(exponent);
    }
  }
  if (tail_) out += " + O[floor " + tail_->floor.str() + " on " + tail_->domain.str() + "]";
  return out;
}

// ------------------------------------------------------------ tropical terms

Rational term_value(const Rational& v, long i, const Rational& w) { return v + Rational(i) * w; }

std::optional<Rational> term_infimum(const Rational& v, long i, const LogRadiusWindow& window) {
  if (i == 0) return v;
  if (i > 0) {
    if (!window.lo()) return std::nullopt;
    return term_value(v, i, *window.lo());
  }
  if (!window.hi()) return std::nullopt;
  return term_value(v, i, *window.hi());
}

std::optional<Rational> term_supremum(const Rational& v, long i, const LogRadiusWindow& window) {
  if (i == 0) return v;
  if (i > 0) {
    if (!window.hi()) return std::nullopt;
    return term_value(v, i, *window.hi());
  }
  if (!window.lo()) return std::nullopt;
  return term_value(v, i, *window.lo());
}

std::optional<TropVal> stored_infimum(const LaurentSeries::Terms& terms,
                                      const LogRadiusWindow& window) {
  TropVal best = TropVal::infinity();
  for (const auto& [exponent, c] : terms) {
    auto inf = term_infimum(c.valuation().value(), exponent, window);
    if (!inf) return std::nullopt;
    best = min(best, TropVal(*inf));
  }
  return best;
}

// ------------------------------------------------------------ ring operations

namespace {

struct TailView {
  std::optional<long> lo;
  std::optional<long> hi;
  LogRadiusWindow domain;
  TropVal floor;
  bool exact = true;
  bool present = false;
};

/// A tail-less operand behaves like a certificate with an infinite floor on
/// the whole line over its own support span.
TailView view_of(const LaurentSeries& f) {
  TailView out;
  if (f.tail()) {
    out.lo = f.tail()->e_min;
    out.hi = f.tail()->e_max;
    out.domain = f.tail()->domain;
    out.floor = f.tail()->floor;
    out.exact = f.tail()->exact_window;
    out.present = true;
  } else {
    out.lo = f.min_exponent();
    out.hi = f.max_exponent();
  }
  return out;
}

LogRadiusWindow joint_domain(const TailView& a, const TailView& b) {
  auto joint = a.domain.intersect(b.domain);
  if (!joint) {
    throw Error(ErrorCode::kEmptyDomain, "tail certificate domains " + a.domain.str() + " and " +
                                             b.domain.str() + " do not intersect");
  }
  return *joint;
}

std::optional<long> opt_min(std::optional<long> a, std::optional<long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::optional<long> opt_max(std::optional<long> a, std::optional<long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

/// floor + infimum, where an infinite floor means "no remainder" and absorbs
/// even an unbounded infimum.
TropVal cross_floor(const TropVal& floor, const std::optional<TropVal>& infimum) {
  if (floor.is_infinite()) return TropVal::infinity();
  if (!infimum) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "tail interaction is unbounded below on an unbounded certificate domain");
  }
  return floor + *infimum;
}

}  // namespace

LaurentSeries ser_add(const LaurentSeries& f, const LaurentSeries& g) {
  require_same_field(f.field(), g.field());
  LaurentSeries::Terms terms = f.terms();
  for (const auto& [exponent, c] : g.terms()) {
    auto it = terms.find(exponent);
    if (it == terms.end()) {
      terms.emplace(exponent, c);
    } else {
      Element sum = it->second + c;
      if (sum.is_zero()) {
        terms.erase(it);
      } else {
        it->second = std::move(sum);
      }
    }
  }
  const TailView a = view_of(f);
  const TailView b = view_of(g);
  if (!a.present && !b.present) return LaurentSeries(f.field(), std::move(terms));

  TailCertificate tail;
  tail.domain = joint_domain(a, b);
  tail.floor = min(a.floor, b.floor);
  const auto lo = opt_min(a.lo, b.lo);
  const auto hi = opt_max(a.hi, b.hi);
  tail.e_min = lo.value_or(0);
  tail.e_max = hi.value_or(0);
  tail.exact_window = true;
  for (const TailView* side : {&a, &b}) {
    if (!side->present || side->floor.is_infinite()) continue;
    if (!side->exact || side->lo != lo || side->hi != hi) tail.exact_window = false;
  }
  return LaurentSeries(f.field(), std::move(terms), tail);
}

LaurentSeries ser_neg(const LaurentSeries& f) {
  LaurentSeries::Terms terms;
  for (const auto& [exponent, c] : f.terms()) terms.emplace(exponent, -c);
  return LaurentSeries(f.field(), std::move(terms), f.tail());
}

LaurentSeries ser_sub(const LaurentSeries& f, const LaurentSeries& g) { return ser_add(f, ser_neg(g)); }

LaurentSeries ser_mul(const LaurentSeries& f, const LaurentSeries& g) {
  require_same_field(f.field(), g.field());
  LaurentSeries::Terms terms;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      const long exponent = ef + eg;
      Element product = cf * cg;
      auto it = terms.find(exponent);
      if (it == terms.end()) {
        if (!product.is_zero()) terms.emplace(exponent, std::move(product));
      } else {
        Element sum = it->second + product;
        if (sum.is_zero()) {
          terms.erase(it);
        } else {
          it->second = std::move(sum);
        }
      }
    }
  }
  const TailView a = view_of(f);
  const TailView b = view_of(g);
  if (!a.present && !b.present) return LaurentSeries(f.field(), std::move(terms));

  TailCertificate tail;
  tail.domain = joint_domain(a, b);
  const auto inf_f = stored_infimum(f.terms(), tail.domain);
  const auto inf_g = stored_infimum(g.terms(), tail.domain);
  tail.floor = min(min(cross_floor(a.floor, inf_g), cross_floor(b.floor, inf_f)), a.floor + b.floor);
  if (a.lo && b.lo) {
    tail.e_min = *a.lo + *b.lo;
    tail.e_max = *a.hi + *b.hi;
  } else {
    tail.e_min = terms.empty() ? 0 : terms.begin()->first;
    tail.e_max = terms.empty() ? 0 : terms.rbegin()->first;
  }
  tail.exact_window = tail.floor.is_infinite();
  return LaurentSeries(f.field(), std::move(terms), tail);
}

LaurentSeries ser_scale(const LaurentSeries& f, const Element& c) {
  return ser_mul(f, LaurentSeries::monomial(c, 0));
}

LaurentSeries ser_shift(const LaurentSeries& f, long k) {
  return ser_mul(f, LaurentSeries::monomial(Element::one(f.field()), k));
}

LaurentSeries ser_pow(const LaurentSeries& f, long n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative series power");
  LaurentSeries out = LaurentSeries::monomial(Element::one(f.field()), 0);
  for (long k = 0; k < n; ++k) out = ser_mul(out, f);
  return out;
}

}  // namespace nonarch
