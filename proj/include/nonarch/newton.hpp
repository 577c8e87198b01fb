#pragma once

// The tropical engine.
//
// Everything is min-plus: the term a_i T^i has value v(a_i) + i*w at
// log-radius w (see window.hpp for the radius/log-radius orientation), and the
// Gauss norm at radius r becomes tropicalize(f, w) = min_i (v(a_i) + i*w).
// Minimizers at w are vertices of the lower Newton polygon; the minimizing
// index jumps exactly at w = -slope for each hull segment, and it can only
// decrease as w grows.

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "nonarch/series.hpp"

namespace nonarch {

/// min over stored terms of v(a_i) + i*w.
///
/// With a tail, w must lie in the certificate domain and the floor must lie
/// strictly above the returned minimum; otherwise kInsufficientPrecision.
TropVal tropicalize(const LaurentSeries& f, const Rational& w);

struct HullPoint {
  long exponent;
  Rational value;
  friend bool operator==(const HullPoint&, const HullPoint&) = default;
};

struct NewtonPolygon {
  std::vector<HullPoint> points;    // every support point, exponent-increasing
  std::vector<HullPoint> vertices;  // lower hull, exponent-increasing
  std::vector<Rational> slopes;     // slopes[k] joins vertices[k] and vertices[k+1]

  /// Support points lying on the segment from vertices[k] to vertices[k+1].
  std::vector<long> segment_indices(std::size_t k) const;
};

NewtonPolygon newton_polygon(const LaurentSeries& f);

struct DominanceCertificate {
  long j;
  /// Positive gap between the second-smallest and the smallest term value,
  /// taken at the window endpoints where it is attained.
  TropVal gap;
  /// True iff `gap` bounds the gap on the whole window; false when the gap
  /// tends to zero at an open endpoint.
  bool uniform;
};

struct TieWitness {
  Rational w;
  std::set<long> indices;
};

struct NoDominance {
  long left_index;   // dominant at the lower end of the window
  long right_index;  // dominant at the upper end of the window
  TieWitness witness;
};

using DominanceResult = std::variant<DominanceCertificate, TieWitness, NoDominance>;

/// Decides whether a single term strictly dominates on the whole window.
///
/// Because every term value is affine in w, a single index that is the unique
/// minimizer at both ends of the window (limit minimizers at open or infinite
/// ends) is the unique minimizer throughout.
DominanceResult dominant_monomial(const LaurentSeries& f, const LogRadiusWindow& window);

struct ProfilePiece {
  LogRadiusWindow window;
  /// Set for a single-minimizer piece; empty for a tie point.
  std::optional<long> index;
  std::set<long> tie_indices;
};

/// Partition of the window into maximal pieces with a single minimizer and the
/// tie points between them, ordered by increasing w.
std::vector<ProfilePiece> minimizer_profile(const LaurentSeries& f, const LogRadiusWindow& window);

struct ResidueLeadingPart {
  TropVal minimum;
  std::vector<long> indices;
  /// Residue-field images of a_i / pi^{v(a_i)}, aligned with `indices`.
  std::vector<Rational> residues;
  bool is_unit() const { return indices.size() == 1; }
};

/// Minimizing terms at w together with their reductions in the residue field.
/// Requires w in Z (the value group of the coefficient field).
ResidueLeadingPart residue_leading_part(const LaurentSeries& f, const Rational& w);

/// Minimum value and minimizing exponents at w over the stored support.
std::pair<TropVal, std::set<long>> minimizers_at(const LaurentSeries& f, const Rational& w);

}  // namespace nonarch
