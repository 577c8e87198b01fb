#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/valcore.hpp"
#include "nonarch/window.hpp"

namespace nonarch {

/// Finitized convergence guarantee for a truncated series.
///
/// The stored terms differ from the true series by a remainder each of whose
/// terms has tropical value >= floor at every w in `domain`. All stored
/// support lies in [e_min, e_max]. When `exact_window` is set, the stored
/// coefficients are the true ones on the whole of [e_min, e_max], so the
/// remainder is supported outside that exponent window.
struct TailCertificate {
  long e_min = 0;
  long e_max = 0;
  LogRadiusWindow domain;
  TropVal floor;
  bool exact_window = true;

  friend bool operator==(const TailCertificate&, const TailCertificate&) = default;
};

/// sum a_i T^i with finitely many stored nonzero coefficients and an optional
/// tail certificate. Without a tail the series is its finite support.
class LaurentSeries {
 public:
  using Terms = std::map<long, Element>;

  explicit LaurentSeries(Field field) : field_(std::move(field)) {}
  LaurentSeries(Field field, Terms terms, std::optional<TailCertificate> tail = std::nullopt);

  static LaurentSeries monomial(const Element& c, long exponent);
  /// Builds a series from (exponent, rational) pairs embedded in `field`.
  static LaurentSeries from_rationals(const Field& field,
                                      const std::vector<std::pair<long, Rational>>& terms);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  const std::optional<TailCertificate>& tail() const { return tail_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::optional<long> min_exponent() const;
  std::optional<long> max_exponent() const;
  Element coefficient(long exponent) const;

  LaurentSeries without_tail() const { return LaurentSeries(field_, terms_); }
  LaurentSeries with_tail(std::optional<TailCertificate> tail) const;

  std::string str() const;

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  Field field_;
  Terms terms_;
  std::optional<TailCertificate> tail_;
};

LaurentSeries ser_add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries ser_sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries ser_neg(const LaurentSeries& f);
LaurentSeries ser_mul(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries ser_scale(const LaurentSeries& f, const Element& c);
/// Multiplies by T^k.
LaurentSeries ser_shift(const LaurentSeries& f, long k);
LaurentSeries ser_pow(const LaurentSeries& f, long n);

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return ser_add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return ser_sub(f, g); }
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return ser_mul(f, g); }

// ------------------------------------------------------------ tropical terms

/// v + i*w.
Rational term_value(const Rational& v, long i, const Rational& w);

/// Infimum of v + i*w over the closure of the window; nullopt means -inf.
std::optional<Rational> term_infimum(const Rational& v, long i, const LogRadiusWindow& window);
/// Supremum of v + i*w over the closure of the window; nullopt means +inf.
std::optional<Rational> term_supremum(const Rational& v, long i, const LogRadiusWindow& window);

/// Infimum over the window of the tropicalization of the stored terms:
/// +inf for the zero series, nullopt for -inf.
std::optional<TropVal> stored_infimum(const LaurentSeries::Terms& terms,
                                      const LogRadiusWindow& window);

}  // namespace nonarch
