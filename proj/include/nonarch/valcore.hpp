#pragma once

// Value groups and exactly represented coefficient fields.
//
// Valuations are additive and normalized so that the uniformizer (p for the
// p-adic rationals, s for a formal Laurent field) has valuation 1. Absolute
// values never appear; a radius r is always carried as its log-radius
// w = -log r in units of the uniformizer norm.

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

/// Element of Q together with an absorbing +infinity.
class TropVal {
 public:
  TropVal() : infinite_(true) {}
  TropVal(Rational q) : infinite_(false), value_(std::move(q)) {}  // NOLINT
  TropVal(long q) : infinite_(false), value_(q) {}                 // NOLINT

  static TropVal infinity() { return TropVal(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Throws if infinite.
  const Rational& value() const;

  std::string str() const;

  friend TropVal operator+(const TropVal& a, const TropVal& b);
  friend bool operator==(const TropVal& a, const TropVal& b);
  friend std::strong_ordering operator<=>(const TropVal& a, const TropVal& b);

 private:
  bool infinite_;
  Rational value_;
};

TropVal min(const TropVal& a, const TropVal& b);

/// Lexicographically ordered tuple of rationals, or +infinity. Only tuples of
/// equal length are comparable.
class LexVal {
 public:
  LexVal() : infinite_(true) {}
  explicit LexVal(std::vector<Rational> components)
      : infinite_(false), components_(std::move(components)) {}

  static LexVal infinity() { return LexVal(); }

  bool is_infinite() const { return infinite_; }
  const std::vector<Rational>& components() const { return components_; }
  std::string str() const;

  friend LexVal operator+(const LexVal& a, const LexVal& b);
  friend bool operator==(const LexVal& a, const LexVal& b);
  friend std::strong_ordering operator<=>(const LexVal& a, const LexVal& b);

 private:
  bool infinite_;
  std::vector<Rational> components_;
};

/// Rank-one shadow of a lexicographic value.
TropVal lex_project(const LexVal& x);

struct PAdicRationals {
  long p = 2;
  friend bool operator==(const PAdicRationals&, const PAdicRationals&) = default;
};

enum class ResidueKind { kPrimeField, kRationals };

/// k((s)) with k = F_p or Q; elements are Laurent polynomials in s whose
/// degrees never exceed `truncation`.
struct FormalLaurent {
  ResidueKind residue = ResidueKind::kRationals;
  long p = 0;  // 0 when residue is Q
  std::string symbol = "s";
  long truncation = 0;
  friend bool operator==(const FormalLaurent&, const FormalLaurent&) = default;
};

class Field {
 public:
  static Field padic(long p);
  static Field formal_laurent(ResidueKind residue, long p, std::string symbol, long truncation);

  bool is_padic() const { return std::holds_alternative<PAdicRationals>(desc_); }
  bool is_formal_laurent() const { return std::holds_alternative<FormalLaurent>(desc_); }
  const PAdicRationals& padic_desc() const { return std::get<PAdicRationals>(desc_); }
  const FormalLaurent& laurent_desc() const { return std::get<FormalLaurent>(desc_); }

  /// 0 for Q_p and Q((s)); p for F_p((s)).
  long characteristic() const;
  /// p for Q_p and F_p((s)); 0 for Q((s)).
  long residue_characteristic() const;

  /// Text form used by the job file format, e.g. "padic 5", "laurent F5 s 12".
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::variant<PAdicRationals, FormalLaurent> desc) : desc_(std::move(desc)) {}
  std::variant<PAdicRationals, FormalLaurent> desc_;
};

/// Exact element of a CoefficientField. For the p-adic rationals this is a
/// rational number; for k((s)) it is a finite map from s-degree to a nonzero
/// residue coefficient (reduced into [0, p) over F_p).
class Element {
 public:
  explicit Element(Field field);  // zero

  static Element zero(const Field& field) { return Element(field); }
  static Element one(const Field& field);
  /// Image of q in the field. Over F_p((s)) the denominator must be prime to p.
  static Element from_rational(const Field& field, const Rational& q);
  static Element from_long(const Field& field, long n) { return from_rational(field, Rational(n)); }
  /// c * s^degree over k((s)); c * p^degree over Q_p.
  static Element monomial(const Field& field, const Rational& c, long degree);
  static Element uniformizer(const Field& field) { return monomial(field, Rational(1), 1); }
  /// Over k((s)): builds an element from raw terms, rejecting degrees above the
  /// truncation order and coefficients outside the residue field.
  static Element from_terms(const Field& field, const std::map<long, Rational>& terms);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Underlying rational (p-adic rationals only).
  const Rational& rational() const;
  /// s-degree -> coefficient (formal Laurent only).
  const std::map<long, Rational>& terms() const;

  /// Normalized additive valuation; infinity iff zero.
  TropVal valuation() const;
  /// Integer valuation of a nonzero element.
  long order() const;

  /// Residue-field image of x / pi^{v(x)} for nonzero x. Over Q_p and F_p((s))
  /// the result lies in [0, p); over Q((s)) it is the leading coefficient.
  Rational normalized_residue() const;

  std::string str() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

 private:
  Field field_;
  Rational rational_;
  std::map<long, Rational> terms_;
};

TropVal val(const Element& c);

Element field_add(const Element& a, const Element& b);
Element field_mul(const Element& a, const Element& b);
/// Multiplicative inverse. Over k((s)) a non-monomial inverse is the series
/// inverse cut at the truncation order.
Element field_inv(const Element& c);
Element field_div(const Element& a, const Element& b);
Element field_pow(const Element& c, long n);

/// x -> x^p on a characteristic-p field; exact (never truncates).
Element frobenius(const Element& c);
/// Inverse of frobenius; throws kNoPthRoot when some s-degree is not divisible
/// by p.
Element frobenius_root(const Element& c);

void require_same_field(const Field& a, const Field& b);

}  // namespace nonarch
