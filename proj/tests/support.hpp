#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "nonarch/series.hpp"

namespace testing_support {

using nonarch::Element;
using nonarch::Field;
using nonarch::Integer;
using nonarch::LaurentSeries;
using nonarch::Rational;

inline Rational Q(const char* text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

inline LaurentSeries poly(const Field& field, const std::vector<std::pair<long, Rational>>& terms) {
  return LaurentSeries::from_rationals(field, terms);
}

/// Exponent of p in a nonzero integer, by repeated division.
inline long oracle_int_valuation(Integer n, long p) {
  if (n < 0) n = -n;
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline long oracle_valuation(const Rational& q, long p) {
  return oracle_int_valuation(q.get_num(), p) - oracle_int_valuation(q.get_den(), p);
}

/// Direct evaluation of min_i (v(a_i) + i*w) and its argmin set.
inline std::pair<Rational, std::set<long>> oracle_minimizers(
    const std::vector<std::pair<long, Rational>>& points, const Rational& w) {
  Rational best;
  std::set<long> at;
  bool first = true;
  for (const auto& [i, v] : points) {
    const Rational value = v + Rational(i) * w;
    if (first || value < best) {
      best = value;
      at = {i};
      first = false;
    } else if (value == best) {
      at.insert(i);
    }
  }
  return {best, at};
}

class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Rational with the given p-adic valuation and a small unit part.
  Rational with_valuation(long p, long v) {
    long a = 0;
    do {
      a = uniform(-12, 12);
    } while (a == 0 || a % p == 0);
    long b = 0;
    do {
      b = uniform(1, 7);
    } while (b % p == 0);
    Rational q(a, b);
    q.canonicalize();
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(v < 0 ? -v : v));
    return v >= 0 ? Rational(q * pk) : Rational(q / pk);
  }

  /// Rational with denominator in 1..max_den.
  Rational small_rational(long lo, long hi, long max_den) {
    const long d = uniform(1, max_den);
    Rational q(uniform(lo * d, hi * d), d);
    q.canonicalize();
    return q;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Random Laurent polynomial over Q_p with support in [lo, hi] and valuations
/// in [vlo, vhi]; at least one term.
inline LaurentSeries random_padic_series(Rng& rng, const Field& field, long lo, long hi, long vlo, long vhi,
                                         long max_terms) {
  const long p = field.padic_desc().p;
  std::vector<std::pair<long, Rational>> terms;
  std::set<long> used;
  const long count = rng.uniform(1, max_terms);
  for (long k = 0; k < count; ++k) {
    const long e = rng.uniform(lo, hi);
    if (!used.insert(e).second) continue;
    terms.emplace_back(e, rng.with_valuation(p, rng.uniform(vlo, vhi)));
  }
  return LaurentSeries::from_rationals(field, terms);
}

inline std::vector<std::pair<long, Rational>> points_of(const LaurentSeries& f) {
  std::vector<std::pair<long, Rational>> out;
  for (const auto& [e, c] : f.terms()) {
    out.emplace_back(e, Rational(oracle_valuation(c.rational(), c.field().padic_desc().p)));
  }
  return out;
}

}  // namespace testing_support
