#include "nonarch/annuli.hpp"

#include "nonarch/error.hpp"

namespace nonarch {

bool converges_on(const LaurentSeries& f, const AnnulusDomain& annulus) {
  if (!(f.field() == annulus.field)) return false;
  if (!f.tail()) return true;
  return f.tail()->domain.covers(annulus.window);
}

bool converges_on(const StreamSeries& f, const AnnulusDomain& annulus) {
  if (!(f.field() == annulus.field)) return false;
  try {
    return f.tail_floor(0, annulus.window).has_value();
  } catch (const Error&) {
    return false;
  }
}

UnitTest is_unit(const LaurentSeries& f, const AnnulusDomain& annulus) {
  if (!converges_on(f, annulus)) {
    throw Error(ErrorCode::kDomain, "series is not certified to converge on " + annulus.window.str());
  }
  DominanceResult witness = dominant_monomial(f, annulus.window);
  const bool unit = std::holds_alternative<DominanceCertificate>(witness);
  return {unit, std::move(witness)};
}

namespace {

LaurentSeries restrict_tail(const LaurentSeries& f, const LogRadiusWindow& window) {
  if (!f.tail()) return f;
  TailCertificate tail = *f.tail();
  auto joint = tail.domain.intersect(window);
  if (!joint) throw Error(ErrorCode::kEmptyDomain, "certificate domain misses the window");
  tail.domain = *joint;
  return f.with_tail(tail);
}

std::string suggest_compact(const LogRadiusWindow& w) {
  Rational lo = w.lo() ? *w.lo() : (w.hi() ? *w.hi() - 1 : Rational(-1));
  Rational hi = w.hi() ? *w.hi() : lo + 1;
  const Rational quarter = (hi - lo) / 4;
  if (w.lo_open()) lo += quarter;
  if (w.hi_open()) hi -= quarter;
  return LogRadiusWindow::closed(lo, hi).str();
}

}  // namespace

UnitDecomposition unit_decomposition(const LaurentSeries& f, const AnnulusDomain& annulus) {
  const UnitTest test = is_unit(f, annulus);
  if (!test.unit) throw Error(ErrorCode::kNonUnit, "series is not a unit on " + annulus.window.str());
  const auto& cert = std::get<DominanceCertificate>(test.witness);
  const Element lead = f.coefficient(cert.j);
  const LaurentSeries normalizer = LaurentSeries::monomial(field_inv(lead), -cert.j);
  LaurentSeries u = ser_mul(restrict_tail(f, annulus.window), normalizer);
  u = ser_sub(u, LaurentSeries::monomial(Element::one(f.field()), 0));
  return {cert.j, lead, u, cert.gap, cert.uniform};
}

LaurentSeries invert(const LaurentSeries& f, const AnnulusDomain& annulus, const Rational& prec,
                     std::optional<LogRadiusWindow> subwindow) {
  if (f.tail()) {
    throw Error(ErrorCode::kInvalidArgument, "invert expects a Laurent polynomial (no tail)");
  }
  if (prec <= 0) throw Error(ErrorCode::kInvalidArgument, "precision must be positive");
  const UnitDecomposition dec = unit_decomposition(f, annulus);
  const Field& field = f.field();
  const LaurentSeries normalizer = LaurentSeries::monomial(field_inv(dec.lead), -dec.j);

  if (dec.u.is_zero()) return normalizer;  // monomial: exact inverse

  LogRadiusWindow window = annulus.window;
  TropVal gap = dec.gap;
  if (subwindow) {
    if (!subwindow->is_compact() || !annulus.window.covers(*subwindow)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "subwindow " + subwindow->str() + " must be compact and inside " +
                      annulus.window.str());
    }
    window = *subwindow;
    const auto local = dominant_monomial(f, window);
    gap = std::get<DominanceCertificate>(local).gap;
  } else if (!dec.uniform) {
    throw Error(ErrorCode::kNeedsCompactWindow,
                "gap tends to zero at an open end of " + annulus.window.str() +
                    "; invert on a compact subwindow such as " + suggest_compact(annulus.window));
  }

  const Rational vj = dec.lead.valuation().value();
  const auto lead_sup = term_supremum(vj, dec.j, window);
  if (!lead_sup) {
    throw Error(ErrorCode::kNeedsCompactWindow,
                "dominant term is unbounded on " + window.str() +
                    "; invert on a compact subwindow such as " + suggest_compact(window));
  }

  const Integer steps = ceil_of(prec / gap.value());
  const long L = steps.get_si();
  const LaurentSeries minus_u = ser_neg(dec.u);

  auto prune = [&](const LaurentSeries& s) {
    LaurentSeries::Terms kept;
    for (const auto& [e, c] : s.terms()) {
      auto inf = term_infimum(c.valuation().value(), e, window);
      if (inf && *inf >= prec) continue;
      kept.emplace(e, c);
    }
    return LaurentSeries(field, std::move(kept));
  };

  LaurentSeries power = LaurentSeries::monomial(Element::one(field), 0);
  LaurentSeries sum = power;
  for (long l = 1; l <= L && !power.is_zero(); ++l) {
    power = prune(ser_mul(power, minus_u));
    sum = ser_add(sum, power);
  }
  sum = prune(sum);

  LaurentSeries g = ser_mul(sum, normalizer);
  TailCertificate tail;
  tail.domain = window;
  tail.floor = TropVal(prec - *lead_sup);
  tail.e_min = g.min_exponent().value_or(-dec.j);
  tail.e_max = g.max_exponent().value_or(-dec.j);
  tail.exact_window = false;
  return g.with_tail(tail);
}

}  // namespace nonarch
