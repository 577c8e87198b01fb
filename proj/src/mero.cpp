#include "nonarch/mero.hpp"

#include <algorithm>
#include <memory>

#include "nonarch/error.hpp"

namespace nonarch {

namespace {

/// Least integer strictly greater than x.
Rational next_integer_above(const Rational& x) { return Rational(floor_of(x) + 1); }

bool reaches_plus_infinity(const LogRadiusWindow& domain) { return !domain.hi(); }

}  // namespace

NearZeroResult check_invertible_near_zero(const StreamSeries& f, long depth) {
  // Infinitely many negative exponents never admit a certificate near zero.
  if (f.shape().kind == ShapeKind::kInfiniteBelow) return Undetermined{depth};
  const StreamWindow window = f.deepen(depth);
  if (!window.tail) {
    throw Error(ErrorCode::kDomain, "stream carries no tail certificate at depth " + std::to_string(depth));
  }
  const TailCertificate& tail = *window.tail;
  if (!reaches_plus_infinity(tail.domain)) {
    throw Error(ErrorCode::kDomain, "certificate domain " + tail.domain.str() +
                                        " does not contain a punctured disc [w, +inf)");
  }
  const LaurentSeries& coeffs = window.coefficients;
  if (coeffs.is_zero()) {
    if (!tail.floor.is_finite()) return DominanceAtZero{0, std::nullopt};
    return Undetermined{depth};
  }

  const long j = *coeffs.min_exponent();
  const Rational vj = coeffs.coefficient(j).valuation().value();
  std::optional<Rational> threshold;
  auto push = [&](const Rational& t) {
    if (!threshold || t > *threshold) threshold = t;
  };
  for (const auto& [i, c] : coeffs.terms()) {
    if (i == j) continue;
    push((vj - c.valuation().value()) / Rational(i - j));
  }

  const std::optional<Rational>& d0 = tail.domain.lo();
  if (tail.floor.is_finite()) {
    const Rational F = tail.floor.value();
    // Omitted terms lie above the line F + m*(w - d0) for w >= d0.
    long m = 0;
    if (d0 && tail.exact_window && tail.e_min <= 0) m = tail.e_max + 1;
    const Rational anchor = d0 ? *d0 : Rational(0);
    if (m > j) {
      push((vj - F + Rational(m) * anchor) / Rational(m - j));
    } else if (m == j) {
      if (!(vj < F - Rational(m) * anchor)) return TieFamily{j, Rational(m)};
    } else {
      return Undetermined{depth};
    }
  }

  std::optional<Rational> w0;
  if (threshold) w0 = next_integer_above(*threshold);
  if (d0) {
    const Rational start = tail.domain.lo_open() ? next_integer_above(*d0) : *d0;
    if (!w0 || *w0 < start) w0 = start;
  }
  return DominanceAtZero{j, w0};
}

PoleReport pole_order(const StreamSeries& f, long depth) {
  if (depth < 0) throw Error(ErrorCode::kInvalidArgument, "negative depth");
  const SupportShape& shape = f.shape();

  if (shape.kind == ShapeKind::kFiniteBelow) {
    const long stop = std::max(-1L, shape.j0 + depth);
    for (long i = shape.j0; i <= stop; ++i) {
      if (!f.coefficient(i).is_zero()) return Meromorphic{i};
    }
    return Meromorphic{std::nullopt};
  }

  if (shape.kind == ShapeKind::kInfiniteBelow) {
    long fresh = 0;
    long total = 0;
    for (long i = -depth; i < 0; ++i) {
      if (f.coefficient(i).is_zero()) continue;
      ++total;
      if (2 * i <= -depth) ++fresh;
    }
    if (fresh > 0) return Essential{true, total};
    return Undetermined{depth};
  }

  const StreamWindow window = f.deepen(depth);
  if (!window.tail) {
    throw Error(ErrorCode::kDomain, "stream carries no tail certificate at depth " + std::to_string(depth));
  }
  if (!reaches_plus_infinity(window.tail->domain)) return Undetermined{depth};

  const NearZeroResult near = check_invertible_near_zero(f, depth);
  const auto* dom = std::get_if<DominanceAtZero>(&near);
  if (!dom) return Undetermined{depth};
  if (window.coefficients.is_zero()) return Meromorphic{std::nullopt};
  for (long i = -depth; i < dom->j; ++i) {
    if (!f.coefficient(i).is_zero()) {
      throw Error(ErrorCode::kContradiction,
                  "coefficient at exponent " + std::to_string(i) + " is nonzero below the dominant term " +
                      std::to_string(dom->j) + "; the tail certificate is invalid");
    }
  }
  return Meromorphic{dom->j};
}

// ------------------------------------------------------------ relative case

StreamSeries fiber_pullback(const RelativeSeries& F, const GenericPoint& y) {
  if (y.coordinates.size() != F.variable_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(y.coordinates.size()) + " coordinates, series has " +
                    std::to_string(F.variable_count()) + " variables");
  }
  for (const auto& c : y.coordinates) require_same_field(F.field(), c.field());

  LaurentSeries::Terms evaluated;
  for (const auto& [i, b] : F.terms()) {
    Element value = b.evaluate(y.coordinates);
    if (!value.is_zero()) evaluated.emplace(i, std::move(value));
  }
  const auto held = std::make_shared<const LaurentSeries>(F.field(), std::move(evaluated));
  if (!F.tail()) {
    StreamSeries out = StreamSeries::from_laurent(*held);
    if (held->is_zero() && F.min_exponent()) {
      out = out.with_shape(SupportShape::finite_below(*F.min_exponent()));
    }
    return out;
  }

  for (std::size_t k = 0; k < y.coordinates.size(); ++k) {
    if (y.coordinates[k].valuation() < TropVal(F.weights()[k])) {
      throw Error(ErrorCode::kDomain, "coordinate " + std::to_string(k + 1) +
                                          " lies outside the closed polydisc; the tail cannot be transported");
    }
  }
  const TailCertificate cert = *F.tail();
  StreamSeries::Oracle oracle = [held](long i) { return held->coefficient(i); };
  StreamSeries::TailProvider provider = [held, cert](long depth,
                                                     const LogRadiusWindow& domain) -> std::optional<TropVal> {
    if (!cert.domain.covers(domain)) return std::nullopt;
    TropVal best = cert.floor;
    for (const auto& [i, c] : held->terms()) {
      if (i >= -depth && i <= depth) continue;
      auto inf = term_infimum(c.valuation().value(), i, domain);
      if (!inf) return std::nullopt;
      best = min(best, TropVal(*inf));
    }
    return best;
  };
  StreamSeries out(F.field(), oracle, SupportShape::unknown(), provider, cert.domain);
  StreamSeries::Deepen deepen = [held, cert, provider](long depth) {
    LaurentSeries::Terms window;
    for (const auto& [i, c] : held->terms()) {
      if (i >= -depth && i <= depth) window.emplace(i, c);
    }
    StreamWindow w{LaurentSeries(held->field(), std::move(window)), std::nullopt};
    if (auto floor = provider(depth, cert.domain)) {
      const bool exact = cert.exact_window && cert.e_min <= -depth && depth <= cert.e_max;
      w.tail = TailCertificate{-depth, depth, cert.domain, *floor, exact};
    }
    return w;
  };
  return out.with_deepen(deepen);
}

DiscwiseResult discwise_meromorphy(const RelativeSeries& F, const GenericPoint& y, long depth) {
  if (F.is_zero()) throw Error(ErrorCode::kZeroSeries, "discwise meromorphy of the zero series");
  const StreamSeries fiber = fiber_pullback(F, y);
  const PoleReport report = pole_order(fiber, depth);
  if (const auto* u = std::get_if<Undetermined>(&report)) return *u;
  if (std::holds_alternative<Essential>(report)) return Undetermined{depth};

  const auto lowest = std::get<Meromorphic>(report).lowest_exponent;
  for (const auto& [i, b] : F.terms()) {
    if (lowest && i >= *lowest) break;
    if (!b.is_zero()) throw NonGenericPointError(i);
  }
  const long j = *lowest;
  return MeroExtension{j < 0 ? -j : 0, F.restricted_from(j)};
}

LaurentSeries descend_kr(const KrSeries& f) {
  LaurentSeries::Terms out;
  for (const auto& [i, c] : f.terms) {
    if (!(c.base() == f.base) || c.aux_count() != f.aux_count) {
      throw Error(ErrorCode::kFieldMismatch, "coefficient at exponent " + std::to_string(i) +
                                                 " lives in a different polyradius field");
    }
    for (const auto& [index, a] : c.terms()) {
      const bool constant = std::all_of(index.begin(), index.end(), [](long e) { return e == 0; });
      if (!constant) throw NontrivialAuxSupportError(i, index);
    }
    Element k = c.constant_term();
    if (!k.is_zero()) out.emplace(i, std::move(k));
  }
  return LaurentSeries(f.base, std::move(out));
}

}  // namespace nonarch
