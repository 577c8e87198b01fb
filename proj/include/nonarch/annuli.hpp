#pragma once

#include <optional>

#include "nonarch/newton.hpp"
#include "nonarch/stream.hpp"

namespace nonarch {

/// {|T| in I} for the radius interval I whose log-radius image is `window`.
/// A compact window is an affinoid annulus; a point window is a circle.
struct AnnulusDomain {
  LogRadiusWindow window;
  Field field;
};

/// Finitized convergence: a Laurent polynomial converges everywhere; a series
/// with a tail or a stream converges iff a certificate covers the window.
bool converges_on(const LaurentSeries& f, const AnnulusDomain& annulus);
bool converges_on(const StreamSeries& f, const AnnulusDomain& annulus);

struct UnitTest {
  bool unit;
  DominanceResult witness;
};

UnitTest is_unit(const LaurentSeries& f, const AnnulusDomain& annulus);

/// f = lead * T^j * (1 + u) with tropicalize(u, w) >= gap > 0 on the window.
struct UnitDecomposition {
  long j;
  Element lead;
  LaurentSeries u;
  TropVal gap;
  bool uniform;
};

UnitDecomposition unit_decomposition(const LaurentSeries& f, const AnnulusDomain& annulus);

/// Truncated inverse g with tropicalize(f*g - 1, w) >= prec on the window.
///
/// g = lead^{-1} T^{-j} sum_{l=0}^{L} (-u)^l with L = ceil(prec / gap); terms
/// that are >= prec on the whole window are dropped as they appear and
/// accounted for in the tail certificate. When the gap is not uniform on the
/// annulus (it tends to zero at an open end) a compact `subwindow` must be
/// supplied; the inverse is then certified on that subwindow.
LaurentSeries invert(const LaurentSeries& f, const AnnulusDomain& annulus, const Rational& prec,
                     std::optional<LogRadiusWindow> subwindow = std::nullopt);

}  // namespace nonarch
