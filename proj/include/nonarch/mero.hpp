#pragma once

// Meromorphy detection at the origin of a punctured disc, for absolute
// streams and for relative series over a polydisc, plus descent from the
// polyradius field k_r back to k.
//
// The punctured disc 0 < |t| <= R is the log-radius window [w0, +inf). A unit
// on it has a single dominant term for all w >= w0; as w -> +inf that term
// must be the lowest one present, so all coefficients below it vanish and the
// series is meromorphic at the origin.

#include <map>
#include <optional>
#include <variant>

#include "nonarch/polyradius.hpp"
#include "nonarch/relative.hpp"
#include "nonarch/stream.hpp"

namespace nonarch {

/// Term j strictly dominates every other term for all w >= w0 (w0 unset means
/// for every w in the certificate domain, which then extends to -inf).
struct DominanceAtZero {
  long j;
  std::optional<Rational> w0;
};

/// The certificate tail cannot be separated from term j on any [w, +inf):
/// the omitted terms may grow exactly like term j.
struct TieFamily {
  long j;
  Rational tail_slope;
};

struct Undetermined {
  long depth;
};

using NearZeroResult = std::variant<DominanceAtZero, TieFamily, Undetermined>;

/// Looks for a term dominating on a punctured neighborhood of the origin,
/// using the window and certificate returned by f.deepen(depth). The
/// certificate domain must contain some [w, +inf); otherwise kDomain. A
/// declared InfiniteBelow stream is always Undetermined.
NearZeroResult check_invertible_near_zero(const StreamSeries& f, long depth);

struct Meromorphic {
  /// Lowest exponent with a nonzero coefficient; unset for the zero series.
  std::optional<long> lowest_exponent;
  long pole_order() const {
    return lowest_exponent && *lowest_exponent < 0 ? -*lowest_exponent : 0;
  }
};

struct Essential {
  bool declared;
  long scanned_negative_terms;
};

using PoleReport = std::variant<Meromorphic, Essential, Undetermined>;

/// Semi-decision of the singularity type at the origin.
///
/// FiniteBelow streams are answered exactly. InfiniteBelow streams are
/// reported Essential when nonzero negative coefficients keep appearing in the
/// deeper half of the scan. Otherwise a DominanceAtZero(j) is sought; the
/// oracle is then checked to vanish on [-depth, j), and a nonzero coefficient
/// there raises kContradiction (the stream's certificate is invalid).
PoleReport pole_order(const StreamSeries& f, long depth);

struct GenericPoint {
  std::vector<Element> coordinates;
};

/// Stream of coefficients b_i(y). A finite relative series pulls back to a
/// FiniteBelow stream; a tail is transported only when y lies in the closed
/// polydisc, where evaluation cannot go below the Gauss valuation.
StreamSeries fiber_pullback(const RelativeSeries& F, const GenericPoint& y);

struct MeroExtension {
  long pole_order;
  RelativeSeries regular_part;
};

using DiscwiseResult = std::variant<MeroExtension, Undetermined>;

/// Pulls F back at y, runs pole_order, and confirms symbolically that every
/// stored coefficient below the fiber's lowest exponent is identically zero.
/// Throws NonGenericPointError naming the lowest offending exponent otherwise.
DiscwiseResult discwise_meromorphy(const RelativeSeries& F, const GenericPoint& y, long depth);

/// Laurent series over the polyradius field k_r.
struct KrSeries {
  Field base;
  std::size_t aux_count = 1;
  std::map<long, PolyradiusElement> terms;
};

/// Returns the base-field series when every coefficient is constant in the
/// auxiliary variables; otherwise NontrivialAuxSupportError for the first
/// offending (exponent, multi-index).
LaurentSeries descend_kr(const KrSeries& f);

}  // namespace nonarch
