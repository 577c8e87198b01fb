#pragma once

// The polyradius field k_r: finite Laurent combinations sum a_I T^I in n
// auxiliary variables whose radii are multiplicatively independent modulo the
// value group of k. Independence is modeled by ranking the valuation of a
// term as the lexicographic tuple (v(a_I), I_1, ..., I_n); the minimal term
// is then unique and the valuation is multiplicative.

#include <map>
#include <vector>

#include "nonarch/valcore.hpp"

namespace nonarch {

using MultiIndex = std::vector<long>;

class PolyradiusElement {
 public:
  PolyradiusElement(Field base, std::size_t aux_count);

  static PolyradiusElement constant(const Element& c, std::size_t aux_count);
  static PolyradiusElement monomial(const Element& c, MultiIndex index);

  const Field& base() const { return base_; }
  std::size_t aux_count() const { return aux_count_; }
  const std::map<MultiIndex, Element>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff the only auxiliary monomial present is T^0.
  bool is_aux_constant() const;
  /// Coefficient of T^0.
  Element constant_term() const;

  LexVal valuation() const;
  std::string str() const;

  friend PolyradiusElement operator+(const PolyradiusElement& a, const PolyradiusElement& b);
  friend PolyradiusElement operator-(const PolyradiusElement& a);
  friend PolyradiusElement operator*(const PolyradiusElement& a, const PolyradiusElement& b);
  friend bool operator==(const PolyradiusElement& a, const PolyradiusElement& b);

 private:
  void add_term(const MultiIndex& index, const Element& c);
  void require_compatible(const PolyradiusElement& other) const;

  Field base_;
  std::size_t aux_count_;
  std::map<MultiIndex, Element> terms_;
};

/// Valuation of one term c*T^I as (v(c), I_1, ..., I_n).
LexVal term_valuation(const Element& c, const MultiIndex& index);

}  // namespace nonarch
