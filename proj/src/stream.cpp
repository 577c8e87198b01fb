#include "nonarch/stream.hpp"

#include <algorithm>
#include <memory>

#include "nonarch/error.hpp"

namespace nonarch {

std::string SupportShape::str() const {
  switch (kind) {
    case ShapeKind::kFiniteBelow: return "finite-below " + std::to_string(j0);
    case ShapeKind::kInfiniteBelow: return "infinite-below";
    case ShapeKind::kUnknown: return "unknown";
  }
  return "unknown";
}

LaurentSeries StreamWindow::certified() const {
  if (!tail) throw Error(ErrorCode::kDomain, "stream window carries no tail certificate");
  return coefficients.with_tail(tail);
}

StreamSeries::StreamSeries(Field field, Oracle oracle, SupportShape shape, TailProvider tail,
                           LogRadiusWindow natural_domain)
    : field_(std::move(field)),
      oracle_(std::move(oracle)),
      shape_(shape),
      tail_(std::move(tail)),
      natural_domain_(std::move(natural_domain)) {}

StreamWindow StreamSeries::deepen(long depth) const { return deepen(depth, natural_domain_); }

StreamWindow StreamSeries::deepen(long depth, const LogRadiusWindow& domain) const {
  if (depth < 0) throw Error(ErrorCode::kInvalidArgument, "negative depth");
  if (deepen_override_) return deepen_override_(depth);
  LaurentSeries::Terms terms;
  const long start = shape_.kind == ShapeKind::kFiniteBelow ? std::max(-depth, shape_.j0) : -depth;
  for (long i = start; i <= depth; ++i) {
    Element c = oracle_(i);
    if (!c.is_zero()) terms.emplace(i, std::move(c));
  }
  StreamWindow out{LaurentSeries(field_, std::move(terms)), std::nullopt};
  if (auto floor = tail_(depth, domain)) {
    out.tail = TailCertificate{-depth, depth, domain, *floor, true};
  }
  return out;
}

StreamSeries StreamSeries::with_shape(SupportShape shape) const {
  StreamSeries out = *this;
  out.shape_ = shape;
  return out;
}

StreamSeries StreamSeries::with_natural_domain(LogRadiusWindow domain) const {
  StreamSeries out = *this;
  out.natural_domain_ = std::move(domain);
  return out;
}

StreamSeries StreamSeries::with_deepen(Deepen deepen) const {
  StreamSeries out = *this;
  out.deepen_override_ = std::move(deepen);
  return out;
}

namespace {

/// min over the given terms of their infimum on the domain; nullopt on -inf.
std::optional<TropVal> outside_infimum(const LaurentSeries::Terms& terms, long depth,
                                       const LogRadiusWindow& domain) {
  TropVal best = TropVal::infinity();
  for (const auto& [exponent, c] : terms) {
    if (exponent >= -depth && exponent <= depth) continue;
    auto inf = term_infimum(c.valuation().value(), exponent, domain);
    if (!inf) return std::nullopt;
    best = min(best, TropVal(*inf));
  }
  return best;
}

/// beta(w) = slope0 + step*w is strictly positive on the closure of `domain`.
bool positive_on_closure(const Rational& slope0, long step, const LogRadiusWindow& domain) {
  auto inf = term_infimum(slope0, step, domain);
  return inf && *inf > 0;
}

}  // namespace

StreamSeries StreamSeries::from_laurent(const LaurentSeries& f) {
  if (f.tail()) {
    throw Error(ErrorCode::kInvalidArgument, "from_laurent expects a finite Laurent polynomial");
  }
  auto held = std::make_shared<const LaurentSeries>(f);
  Oracle oracle = [held](long i) { return held->coefficient(i); };
  TailProvider tail = [held](long depth, const LogRadiusWindow& domain) {
    return outside_infimum(held->terms(), depth, domain);
  };
  const long j0 = f.min_exponent().value_or(0);
  return StreamSeries(f.field(), oracle, SupportShape::finite_below(j0), tail,
                      LogRadiusWindow::everything());
}

StreamSeries StreamSeries::geometric(const Element& coef, const Element& ratio, long step,
                                     long shift, LogRadiusWindow natural_domain) {
  require_same_field(coef.field(), ratio.field());
  if (step == 0) throw Error(ErrorCode::kInvalidArgument, "geometric stream needs nonzero step");
  const Field field = coef.field();
  Oracle oracle = [coef, ratio, step, shift, field](long i) {
    const long offset = i - shift;
    if (coef.is_zero() || offset % step != 0) return Element::zero(field);
    const long n = offset / step;
    if (n < 0) return Element::zero(field);
    if (n > 0 && ratio.is_zero()) return Element::zero(field);
    return coef * field_pow(ratio, n);
  };
  TailProvider tail = [coef, ratio, step, shift](long depth,
                                                  const LogRadiusWindow& domain) -> std::optional<TropVal> {
    if (coef.is_zero()) return TropVal::infinity();
    const Rational vc = coef.valuation().value();
    auto outside = [depth](long e) { return e < -depth || e > depth; };
    if (ratio.is_zero()) {
      if (!outside(shift)) return TropVal::infinity();
      auto inf = term_infimum(vc, shift, domain);
      if (!inf) return std::nullopt;
      return TropVal(*inf);
    }
    const Rational vr = ratio.valuation().value();
    if (!positive_on_closure(vr, step, domain)) return std::nullopt;
    // First omitted index in the direction where the exponents run off.
    long n_inf = 0;
    if (step > 0) {
      n_inf = std::max(0L, floor_of(Rational(depth - shift, step)).get_si() + 1);
    } else {
      n_inf = std::max(0L, floor_of(Rational(depth + shift, -step)).get_si() + 1);
    }
    TropVal best = TropVal::infinity();
    for (long n = 0; n <= n_inf; ++n) {
      const long e = shift + step * n;
      if (n < n_inf && !outside(e)) continue;
      auto inf = term_infimum(vc + Rational(n) * vr, e, domain);
      if (!inf) return std::nullopt;
      best = min(best, TropVal(*inf));
    }
    return best;
  };
  SupportShape shape = SupportShape::finite_below(shift);
  if (step < 0 && !ratio.is_zero() && !coef.is_zero()) shape = SupportShape::infinite_below();
  return StreamSeries(field, oracle, shape, tail, std::move(natural_domain));
}

StreamSeries StreamSeries::gaussian(const Element& base, int sign, LogRadiusWindow natural_domain) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::kInvalidArgument, "sign must be +1 or -1");
  if (base.is_zero() || base.valuation() <= TropVal(0)) {
    throw Error(ErrorCode::kInvalidArgument, "gaussian stream needs v(base) > 0");
  }
  const Field field = base.field();
  Oracle oracle = [base, sign, field](long i) {
    const long n = sign * i;
    if (n < 0) return Element::zero(field);
    return field_pow(base, n * n);
  };
  TailProvider tail = [base, sign](long depth,
                                   const LogRadiusWindow& domain) -> std::optional<TropVal> {
    const Rational vb = base.valuation().value();
    // For fixed n > 0 the value vb*n^2 + sign*n*w is smallest at one endpoint.
    const auto& end = sign > 0 ? domain.lo() : domain.hi();
    if (!end) return std::nullopt;
    const Rational w = *end;
    const long n0 = depth + 1;
    auto value = [&](long n) -> Rational { return vb * Rational(n * n) + Rational(sign * n) * w; };
    const Rational vertex = -Rational(sign) * w / (2 * vb);
    Rational best = value(n0);
    for (Integer cand : {floor_of(vertex), ceil_of(vertex)}) {
      if (cand > n0) best = std::min(best, value(cand.get_si()));
    }
    return TropVal(best);
  };
  SupportShape shape = sign < 0 ? SupportShape::infinite_below() : SupportShape::finite_below(0);
  return StreamSeries(field, oracle, shape, tail, std::move(natural_domain));
}

StreamSeries StreamSeries::times(const LaurentSeries& poly) const {
  if (poly.tail()) throw Error(ErrorCode::kInvalidArgument, "multiplier must be finite");
  require_same_field(field_, poly.field());
  auto held = std::make_shared<const LaurentSeries>(poly);
  const Oracle base_oracle = oracle_;
  const TailProvider base_tail = tail_;
  const Field field = field_;
  long reach = 0;
  for (const auto& [h, c] : poly.terms()) reach = std::max(reach, h < 0 ? -h : h);

  Oracle oracle = [held, base_oracle, field](long k) {
    Element sum = Element::zero(field);
    for (const auto& [h, c] : held->terms()) sum = sum + c * base_oracle(k - h);
    return sum;
  };
  TailProvider tail = [held, base_oracle, base_tail, field, reach](
                          long depth, const LogRadiusWindow& domain) -> std::optional<TropVal> {
    if (held->is_zero()) return TropVal::infinity();
    const long inner = depth + reach;
    auto base_floor = base_tail(inner, domain);
    if (!base_floor) return std::nullopt;
    // A remainder term a_i T^i with i > inner keeps i + h > 0 after the
    // shift, so its product value is smallest at the left end of the domain;
    // symmetrically on the right for i < -inner. An infinite end admits no
    // remainder terms on that side at all.
    TropVal best = TropVal::infinity();
    if (base_floor->is_finite()) {
      for (const auto& [h, c] : held->terms()) {
        const TropVal vc = val(c);
        if (domain.lo()) best = min(best, *base_floor + vc + TropVal(Rational(h) * *domain.lo()));
        if (domain.hi()) best = min(best, *base_floor + vc + TropVal(Rational(h) * *domain.hi()));
      }
    }
    // Window-times-polynomial contributions that land outside [-depth, depth].
    LaurentSeries::Terms spill;
    for (long k = -depth - 2 * reach; k <= depth + 2 * reach; ++k) {
      if (k >= -depth && k <= depth) continue;
      Element sum = Element::zero(field);
      for (const auto& [h, c] : held->terms()) {
        const long i = k - h;
        if (i >= -inner && i <= inner) sum = sum + c * base_oracle(i);
      }
      if (!sum.is_zero()) spill.emplace(k, std::move(sum));
    }
    auto inf_spill = outside_infimum(spill, depth, domain);
    if (!inf_spill) return std::nullopt;
    return min(best, *inf_spill);
  };
  SupportShape shape = shape_;
  if (poly.is_zero()) {
    shape = SupportShape::finite_below(0);
  } else if (shape.kind == ShapeKind::kFiniteBelow) {
    shape.j0 += *poly.min_exponent();
  }
  return StreamSeries(field_, oracle, shape, tail, natural_domain_);
}

StreamSeries StreamSeries::plus(const LaurentSeries& poly) const {
  if (poly.tail()) throw Error(ErrorCode::kInvalidArgument, "summand must be finite");
  require_same_field(field_, poly.field());
  auto held = std::make_shared<const LaurentSeries>(poly);
  const Oracle base_oracle = oracle_;
  const TailProvider base_tail = tail_;
  Oracle oracle = [held, base_oracle](long k) { return base_oracle(k) + held->coefficient(k); };
  TailProvider tail = [held, base_tail](long depth,
                                        const LogRadiusWindow& domain) -> std::optional<TropVal> {
    auto base_floor = base_tail(depth, domain);
    if (!base_floor) return std::nullopt;
    auto inf_poly = outside_infimum(held->terms(), depth, domain);
    if (!inf_poly) return std::nullopt;
    return min(*base_floor, *inf_poly);
  };
  SupportShape shape = shape_;
  if (shape.kind == ShapeKind::kFiniteBelow && !poly.is_zero()) {
    shape.j0 = std::min(shape.j0, *poly.min_exponent());
  }
  return StreamSeries(field_, oracle, shape, tail, natural_domain_);
}

}  // namespace nonarch
