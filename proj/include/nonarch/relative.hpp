#pragma once

// Relative series: Laurent series in t whose coefficients are polynomials in
// y_1..y_m over the coefficient field. The coefficient ring is the polynomial
// ring with the Gauss valuation at a declared log-polyradius u, which stands in
// for the sup norm on the polydisc {v(y_k) >= u_k}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonarch/series.hpp"

namespace nonarch {

using Degree = std::vector<long>;

class RelativePolynomial {
 public:
  /// Zero polynomial in `weights.size()` variables.
  RelativePolynomial(Field field, std::vector<Rational> weights);

  static RelativePolynomial constant(const Element& c, std::vector<Rational> weights);
  static RelativePolynomial monomial(const Element& c, Degree degree, std::vector<Rational> weights);

  const Field& field() const { return field_; }
  std::size_t variable_count() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::map<Degree, Element>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff only the constant monomial occurs.
  bool is_constant() const;

  /// min over monomials of v(coefficient) + degree . weights.
  TropVal gauss_valuation() const;

  Element evaluate(const std::vector<Element>& point) const;

  std::string str(const std::vector<std::string>& names) const;

  friend RelativePolynomial operator+(const RelativePolynomial& a, const RelativePolynomial& b);
  friend RelativePolynomial operator-(const RelativePolynomial& a);
  friend RelativePolynomial operator*(const RelativePolynomial& a, const RelativePolynomial& b);
  friend bool operator==(const RelativePolynomial&, const RelativePolynomial&) = default;

 private:
  void add_term(const Degree& degree, const Element& c);
  void require_compatible(const RelativePolynomial& other) const;

  Field field_;
  std::vector<Rational> weights_;
  std::map<Degree, Element> terms_;
};

TropVal gval(const RelativePolynomial& p);

/// sum b_i t^i with b_i relative polynomials; the optional tail certificate
/// bounds gval(b_i) + i*w for omitted terms.
class RelativeSeries {
 public:
  using Terms = std::map<long, RelativePolynomial>;

  RelativeSeries(Field field, std::vector<Rational> weights);
  RelativeSeries(Field field, std::vector<Rational> weights, Terms terms,
                 std::optional<TailCertificate> tail = std::nullopt);

  const Field& field() const { return field_; }
  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t variable_count() const { return weights_.size(); }
  const Terms& terms() const { return terms_; }
  const std::optional<TailCertificate>& tail() const { return tail_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<long> min_exponent() const;

  /// Terms with exponent >= `exponent`; the tail is kept.
  RelativeSeries restricted_from(long exponent) const;

  friend bool operator==(const RelativeSeries&, const RelativeSeries&) = default;

 private:
  Field field_;
  std::vector<Rational> weights_;
  Terms terms_;
  std::optional<TailCertificate> tail_;
};

RelativeSeries ser_add(const RelativeSeries& f, const RelativeSeries& g);
RelativeSeries ser_mul(const RelativeSeries& f, const RelativeSeries& g);

}  // namespace nonarch
