#pragma once

// Frobenius on Laurent series over F_p((s)).
//
// In characteristic p the p-th power map is additive, so
// (sum a_i T^i)^p = sum a_i^p T^{pi}; this makes f^{p^m} computable
// coefficientwise even for streams.

#include <optional>

#include "nonarch/series.hpp"
#include "nonarch/stream.hpp"

namespace nonarch {

LaurentSeries pth_power(const LaurentSeries& f);
LaurentSeries pth_root(const LaurentSeries& f);

enum class Verdict { kTrue, kFalse, kUndetermined };

std::string_view verdict_name(Verdict v);

/// Decides f^{p^m} * H == G from the coefficients of f visible at `depth`.
///
/// Returns kFalse as soon as a decidable coefficient of the residual
/// f^{p^m} H - G is nonzero, kTrue when every decidable coefficient vanishes,
/// G lies inside the decidable range, and the residual's remainder floor on
/// the stream's natural domain exceeds `precision` (default: the truncation
/// order of the field), and kUndetermined otherwise.
Verdict verify_power_identity(const StreamSeries& f, const LaurentSeries& G, const LaurentSeries& H,
                              long m, long depth,
                              std::optional<Rational> precision = std::nullopt);

}  // namespace nonarch
