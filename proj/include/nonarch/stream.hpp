#pragma once

// Lazily described series sum a_i T^i with possibly infinite support.
//
// A stream has a total coefficient oracle, a declared support shape, and a
// tail provider that certifies the remainder outside the exponent window
// [-depth, depth] on a requested log-radius domain. Whether infinitely many
// negative exponents occur cannot be discovered from finitely many
// coefficients, so the shape is declared by whoever builds the stream.

#include <functional>
#include <optional>
#include <string>

#include "nonarch/series.hpp"

namespace nonarch {

enum class ShapeKind { kFiniteBelow, kInfiniteBelow, kUnknown };

struct SupportShape {
  ShapeKind kind = ShapeKind::kUnknown;
  long j0 = 0;  // meaningful for kFiniteBelow: a_i = 0 for i < j0

  static SupportShape finite_below(long j0) { return {ShapeKind::kFiniteBelow, j0}; }
  static SupportShape infinite_below() { return {ShapeKind::kInfiniteBelow, 0}; }
  static SupportShape unknown() { return {ShapeKind::kUnknown, 0}; }

  std::string str() const;
  friend bool operator==(const SupportShape&, const SupportShape&) = default;
};

/// Exact window of coefficients plus, when one exists, the certificate for
/// everything outside it.
struct StreamWindow {
  LaurentSeries coefficients;  // no tail attached
  std::optional<TailCertificate> tail;

  /// The window as a certified LaurentSeries; throws kDomain without a tail.
  LaurentSeries certified() const;
};

class StreamSeries {
 public:
  using Oracle = std::function<Element(long)>;
  /// Lower bound for the tropical value of every term a_i T^i with |i| > depth
  /// on `domain`, or nullopt if no such bound exists.
  using TailProvider =
      std::function<std::optional<TropVal>(long depth, const LogRadiusWindow& domain)>;
  using Deepen = std::function<StreamWindow(long depth)>;

  StreamSeries(Field field, Oracle oracle, SupportShape shape, TailProvider tail,
               LogRadiusWindow natural_domain);

  static StreamSeries from_laurent(const LaurentSeries& f);
  /// sum_{n >= 0} coef * ratio^n * T^{shift + step*n}; step must be nonzero.
  static StreamSeries geometric(const Element& coef, const Element& ratio, long step, long shift,
                                LogRadiusWindow natural_domain);
  /// sum_{n >= 0} base^{n^2} * T^{sign*n} with sign = +1 or -1; v(base) > 0.
  static StreamSeries gaussian(const Element& base, int sign, LogRadiusWindow natural_domain);

  const Field& field() const { return field_; }
  const SupportShape& shape() const { return shape_; }
  const LogRadiusWindow& natural_domain() const { return natural_domain_; }

  Element coefficient(long i) const { return oracle_(i); }
  std::optional<TropVal> tail_floor(long depth, const LogRadiusWindow& domain) const {
    return tail_(depth, domain);
  }

  /// Coefficients on [-depth, depth] with the certificate on the natural domain.
  StreamWindow deepen(long depth) const;
  /// Same window, certified on `domain`.
  StreamWindow deepen(long depth, const LogRadiusWindow& domain) const;

  StreamSeries with_shape(SupportShape shape) const;
  StreamSeries with_natural_domain(LogRadiusWindow domain) const;
  /// Replaces the window producer; the oracle is left untouched.
  StreamSeries with_deepen(Deepen deepen) const;

  /// Product with a finite Laurent polynomial.
  StreamSeries times(const LaurentSeries& poly) const;
  /// Sum with a finite Laurent polynomial.
  StreamSeries plus(const LaurentSeries& poly) const;

 private:
  Field field_;
  Oracle oracle_;
  SupportShape shape_;
  TailProvider tail_;
  LogRadiusWindow natural_domain_;
  Deepen deepen_override_;
};

}  // namespace nonarch
