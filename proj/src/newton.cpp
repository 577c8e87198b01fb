#include "nonarch/newton.hpp"

#include <algorithm>

#include "nonarch/error.hpp"

namespace nonarch {

namespace {

struct Term {
  long exponent;
  Rational value;  // v(a_i)
};

std::vector<Term> terms_of(const LaurentSeries& f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& [exponent, c] : f.terms()) out.push_back({exponent, c.valuation().value()});
  return out;
}

std::pair<Rational, std::set<long>> minimize(const std::vector<Term>& terms, const Rational& w) {
  Rational best;
  std::set<long> at;
  bool first = true;
  for (const auto& t : terms) {
    Rational value = term_value(t.value, t.exponent, w);
    if (first || value < best) {
      best = std::move(value);
      at = {t.exponent};
      first = false;
    } else if (value == best) {
      at.insert(t.exponent);
    }
  }
  return {best, at};
}

/// Smallest gap between term j and any other term at w.
Rational gap_at(const std::vector<Term>& terms, long j, const Rational& vj, const Rational& w) {
  const Rational base = term_value(vj, j, w);
  std::optional<Rational> gap;
  for (const auto& t : terms) {
    if (t.exponent == j) continue;
    Rational d = term_value(t.value, t.exponent, w) - base;
    if (!gap || d < *gap) gap = std::move(d);
  }
  return *gap;
}

void check_tail_admits(const LaurentSeries& f, const Rational& w) {
  if (!f.tail()) return;
  if (!f.tail()->domain.contains(w)) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "log-radius " + to_string(w) + " lies outside the certificate domain " +
                    f.tail()->domain.str());
  }
}

}  // namespace

std::pair<TropVal, std::set<long>> minimizers_at(const LaurentSeries& f, const Rational& w) {
  if (f.is_zero()) return {TropVal::infinity(), {}};
  auto [best, at] = minimize(terms_of(f), w);
  return {TropVal(best), at};
}

TropVal tropicalize(const LaurentSeries& f, const Rational& w) {
  check_tail_admits(f, w);
  TropVal best = TropVal::infinity();
  for (const auto& [exponent, c] : f.terms()) {
    best = min(best, TropVal(term_value(c.valuation().value(), exponent, w)));
  }
  if (f.tail() && !(f.tail()->floor > best)) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "tail floor " + f.tail()->floor.str() + " does not exceed the stored minimum " +
                    best.str() + " at w = " + to_string(w));
  }
  return best;
}

// ------------------------------------------------------------ Newton polygon

std::vector<long> NewtonPolygon::segment_indices(std::size_t k) const {
  const HullPoint& a = vertices.at(k);
  const HullPoint& b = vertices.at(k + 1);
  std::vector<long> out;
  for (const auto& pt : points) {
    if (pt.exponent < a.exponent || pt.exponent > b.exponent) continue;
    if (pt.value - a.value == slopes[k] * Rational(pt.exponent - a.exponent)) {
      out.push_back(pt.exponent);
    }
  }
  return out;
}

NewtonPolygon newton_polygon(const LaurentSeries& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroSeries, "Newton polygon of the zero series");
  NewtonPolygon poly;
  for (const auto& t : terms_of(f)) poly.points.push_back({t.exponent, t.value});
  // Monotone chain; points arrive sorted by exponent. Collinear points are
  // dropped so that slopes strictly increase.
  auto turn = [](const HullPoint& o, const HullPoint& a, const HullPoint& b) -> Rational {
    return Rational(a.exponent - o.exponent) * (b.value - o.value) -
           (a.value - o.value) * Rational(b.exponent - o.exponent);
  };
  for (const auto& pt : poly.points) {
    while (poly.vertices.size() >= 2 &&
           turn(poly.vertices[poly.vertices.size() - 2], poly.vertices.back(), pt) <= 0) {
      poly.vertices.pop_back();
    }
    poly.vertices.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < poly.vertices.size(); ++k) {
    const auto& a = poly.vertices[k];
    const auto& b = poly.vertices[k + 1];
    poly.slopes.push_back((b.value - a.value) / Rational(b.exponent - a.exponent));
  }
  return poly;
}

// ------------------------------------------------------------ dominance

DominanceResult dominant_monomial(const LaurentSeries& f, const LogRadiusWindow& window) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroSeries, "dominance test on the zero series");
  if (f.tail() && !f.tail()->domain.covers(window)) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "certificate domain " + f.tail()->domain.str() + " does not cover " + window.str());
  }
  const auto terms = terms_of(f);
  const long least = terms.front().exponent;
  const long greatest = terms.back().exponent;

  long left = greatest;
  if (window.lo()) {
    auto [value, at] = minimize(terms, *window.lo());
    if (at.size() == 1) {
      left = *at.begin();
    } else if (!window.lo_open()) {
      return TieWitness{*window.lo(), at};
    } else {
      left = *at.begin();  // smaller exponents win just to the right
    }
  }
  long right = least;
  if (window.hi()) {
    auto [value, at] = minimize(terms, *window.hi());
    if (at.size() == 1) {
      right = *at.begin();
    } else if (!window.hi_open()) {
      return TieWitness{*window.hi(), at};
    } else {
      right = *at.rbegin();  // larger exponents win just to the left
    }
  }

  if (left != right) {
    const auto poly = newton_polygon(f.without_tail());
    for (std::size_t k = poly.slopes.size(); k-- > 0;) {
      const Rational b = -poly.slopes[k];
      const bool above = !window.lo() || b > *window.lo();
      const bool below = !window.hi() || b < *window.hi();
      if (above && below) {
        const auto idx = poly.segment_indices(k);
        return NoDominance{left, right, TieWitness{b, std::set<long>(idx.begin(), idx.end())}};
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "internal: no interior breakpoint found");
  }

  const long j = left;
  const Rational vj = f.coefficient(j).valuation().value();

  if (f.tail()) {
    auto sup = term_supremum(vj, j, window);
    if (!sup || !(f.tail()->floor > TropVal(*sup))) {
      throw Error(ErrorCode::kInsufficientPrecision,
                  "tail floor " + f.tail()->floor.str() +
                      " does not stay above the dominant term on " + window.str());
    }
  }

  if (terms.size() == 1) return DominanceCertificate{j, TropVal::infinity(), true};

  std::optional<Rational> gap;
  bool uniform = true;
  for (const auto* end : {&window.lo(), &window.hi()}) {
    if (!*end) continue;
    Rational g = gap_at(terms, j, vj, **end);
    if (g == 0) {
      uniform = false;
      continue;
    }
    if (!gap || g < *gap) gap = std::move(g);
  }
  if (!gap) {
    // Both ends degenerate: report the gap at an interior representative.
    Rational rep;
    if (window.lo() && window.hi()) {
      rep = (*window.lo() + *window.hi()) / 2;
    } else if (window.lo()) {
      rep = *window.lo() + 1;
    } else {
      rep = *window.hi() - 1;
    }
    gap = gap_at(terms, j, vj, rep);
  }
  return DominanceCertificate{j, TropVal(*gap), uniform};
}

// ------------------------------------------------------------ profile

std::vector<ProfilePiece> minimizer_profile(const LaurentSeries& f, const LogRadiusWindow& window) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroSeries, "minimizer profile of the zero series");
  const auto poly = newton_polygon(f.without_tail());
  const std::size_t last = poly.vertices.size() - 1;

  std::vector<ProfilePiece> pieces;
  std::optional<Rational> start = window.lo();
  bool start_open = window.lo_open();
  std::size_t vertex = last;  // minimizer for w -> -infinity
  bool ended = false;

  auto tie_piece = [&](const Rational& b, std::size_t k) {
    const auto idx = poly.segment_indices(k);
    pieces.push_back({LogRadiusWindow::point(b), std::nullopt, std::set<long>(idx.begin(), idx.end())});
  };
  auto region_piece = [&](const std::optional<Rational>& hi, bool hi_open) {
    if (start && hi && *start == *hi && (start_open || hi_open)) return;
    pieces.push_back({LogRadiusWindow(start, start_open, hi, hi_open), poly.vertices[vertex].exponent, {}});
  };

  // Breakpoints in increasing w are -slopes[k] for k descending.
  for (std::size_t k = poly.slopes.size(); k-- > 0;) {
    const Rational b = -poly.slopes[k];
    if (window.lo() && b < *window.lo()) {
      vertex = k;
      continue;
    }
    if (window.lo() && b == *window.lo()) {
      if (!window.lo_open()) tie_piece(b, k);
      vertex = k;
      start = b;
      start_open = true;
      if (window.hi() && *window.hi() == b) {
        ended = true;
        break;
      }
      continue;
    }
    if (window.hi() && b >= *window.hi()) {
      if (b == *window.hi()) {
        region_piece(b, true);
        if (!window.hi_open()) tie_piece(b, k);
        ended = true;
      }
      break;
    }
    region_piece(b, true);
    tie_piece(b, k);
    vertex = k;
    start = b;
    start_open = true;
  }
  if (!ended) region_piece(window.hi(), window.hi_open());
  return pieces;
}

// ------------------------------------------------------------ residues

ResidueLeadingPart residue_leading_part(const LaurentSeries& f, const Rational& w) {
  if (w.get_den() != 1) {
    throw Error(ErrorCode::kNormalization,
                "log-radius " + to_string(w) + " is not in the value group Z of the field");
  }
  const TropVal minimum = tropicalize(f, w);
  ResidueLeadingPart out{minimum, {}, {}};
  if (f.is_zero()) return out;
  for (const auto& [exponent, c] : f.terms()) {
    if (TropVal(term_value(c.valuation().value(), exponent, w)) == minimum) {
      out.indices.push_back(exponent);
      out.residues.push_back(c.normalized_residue());
    }
  }
  return out;
}

}  // namespace nonarch
