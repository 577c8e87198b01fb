#include "nonarch/relative.hpp"

#include <algorithm>

#include "nonarch/error.hpp"

namespace nonarch {

RelativePolynomial::RelativePolynomial(Field field, std::vector<Rational> weights)
    : field_(std::move(field)), weights_(std::move(weights)) {}

RelativePolynomial RelativePolynomial::constant(const Element& c, std::vector<Rational> weights) {
  RelativePolynomial out(c.field(), std::move(weights));
  out.add_term(Degree(out.weights_.size(), 0), c);
  return out;
}

RelativePolynomial RelativePolynomial::monomial(const Element& c, Degree degree,
                                                std::vector<Rational> weights) {
  RelativePolynomial out(c.field(), std::move(weights));
  out.add_term(degree, c);
  return out;
}

void RelativePolynomial::add_term(const Degree& degree, const Element& c) {
  if (degree.size() != weights_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "monomial degree has wrong number of variables");
  }
  for (long e : degree) {
    if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree in polynomial");
  }
  require_same_field(field_, c.field());
  auto it = terms_.find(degree);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(degree, c);
    return;
  }
  Element sum = it->second + c;
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

void RelativePolynomial::require_compatible(const RelativePolynomial& other) const {
  require_same_field(field_, other.field_);
  if (weights_ != other.weights_) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomials over different polydiscs");
  }
}

bool RelativePolynomial::is_constant() const {
  for (const auto& [degree, c] : terms_) {
    if (std::any_of(degree.begin(), degree.end(), [](long e) { return e != 0; })) return false;
  }
  return true;
}

TropVal RelativePolynomial::gauss_valuation() const {
  TropVal best = TropVal::infinity();
  for (const auto& [degree, c] : terms_) {
    Rational value = c.valuation().value();
    for (std::size_t k = 0; k < degree.size(); ++k) value += Rational(degree[k]) * weights_[k];
    best = min(best, TropVal(value));
  }
  return best;
}

TropVal gval(const RelativePolynomial& p) { return p.gauss_valuation(); }

Element RelativePolynomial::evaluate(const std::vector<Element>& point) const {
  if (point.size() != weights_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " +
                    std::to_string(weights_.size()));
  }
  for (const auto& y : point) require_same_field(field_, y.field());
  Element sum = Element::zero(field_);
  for (const auto& [degree, c] : terms_) {
    Element term = c;
    for (std::size_t k = 0; k < degree.size(); ++k) {
      if (degree[k] != 0) term = term * field_pow(point[k], degree[k]);
    }
    sum = sum + term;
  }
  return sum;
}

std::string RelativePolynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [degree, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string monomial;
    for (std::size_t k = 0; k < degree.size(); ++k) {
      if (degree[k] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += k < names.size() ? names[k] : "y" + std::to_string(k + 1);
      if (degree[k] != 1) monomial += "^" + std::to_string(degree[k]);
    }
    if (monomial.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += monomial;
    } else {
      out += "(" + c.str() + ")*" + monomial;
    }
  }
  return out;
}

RelativePolynomial operator+(const RelativePolynomial& a, const RelativePolynomial& b) {
  a.require_compatible(b);
  RelativePolynomial out = a;
  for (const auto& [degree, c] : b.terms_) out.add_term(degree, c);
  return out;
}

RelativePolynomial operator-(const RelativePolynomial& a) {
  RelativePolynomial out(a.field_, a.weights_);
  for (const auto& [degree, c] : a.terms_) out.add_term(degree, -c);
  return out;
}

RelativePolynomial operator*(const RelativePolynomial& a, const RelativePolynomial& b) {
  a.require_compatible(b);
  RelativePolynomial out(a.field_, a.weights_);
  Degree sum(a.weights_.size());
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = da[k] + db[k];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

// ------------------------------------------------------------ RelativeSeries

RelativeSeries::RelativeSeries(Field field, std::vector<Rational> weights)
    : field_(std::move(field)), weights_(std::move(weights)) {}

RelativeSeries::RelativeSeries(Field field, std::vector<Rational> weights, Terms terms,
                               std::optional<TailCertificate> tail)
    : field_(std::move(field)), weights_(std::move(weights)), tail_(std::move(tail)) {
  for (auto& [exponent, b] : terms) {
    require_same_field(field_, b.field());
    if (b.weights() != weights_) {
      throw Error(ErrorCode::kDimensionMismatch, "coefficient over a different polydisc");
    }
    if (!b.is_zero()) terms_.emplace(exponent, std::move(b));
  }
  if (tail_ && !terms_.empty()) {
    if (terms_.begin()->first < tail_->e_min || terms_.rbegin()->first > tail_->e_max) {
      throw Error(ErrorCode::kInvalidArgument, "stored support escapes the certificate window");
    }
  }
}

std::optional<long> RelativeSeries::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

RelativeSeries RelativeSeries::restricted_from(long exponent) const {
  Terms kept;
  for (const auto& [i, b] : terms_) {
    if (i >= exponent) kept.emplace(i, b);
  }
  std::optional<TailCertificate> tail = tail_;
  if (tail && !kept.empty()) {
    tail->e_min = std::max(tail->e_min, kept.begin()->first);
  }
  return RelativeSeries(field_, weights_, std::move(kept), tail);
}

namespace {

std::optional<TropVal> gauss_infimum(const RelativeSeries::Terms& terms,
                                     const LogRadiusWindow& window) {
  TropVal best = TropVal::infinity();
  for (const auto& [exponent, b] : terms) {
    auto inf = term_infimum(b.gauss_valuation().value(), exponent, window);
    if (!inf) return std::nullopt;
    best = min(best, TropVal(*inf));
  }
  return best;
}

void require_same_space(const RelativeSeries& f, const RelativeSeries& g) {
  require_same_field(f.field(), g.field());
  if (f.weights() != g.weights()) {
    throw Error(ErrorCode::kDimensionMismatch, "relative series over different polydiscs");
  }
}

void accumulate(RelativeSeries::Terms& terms, long exponent, const RelativePolynomial& b) {
  auto it = terms.find(exponent);
  if (it == terms.end()) {
    if (!b.is_zero()) terms.emplace(exponent, b);
    return;
  }
  RelativePolynomial sum = it->second + b;
  if (sum.is_zero()) {
    terms.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

LogRadiusWindow joint(const std::optional<TailCertificate>& a,
                      const std::optional<TailCertificate>& b) {
  LogRadiusWindow out;
  for (const auto* t : {&a, &b}) {
    if (!*t) continue;
    auto next = out.intersect((*t)->domain);
    if (!next) throw Error(ErrorCode::kEmptyDomain, "tail certificate domains do not intersect");
    out = *next;
  }
  return out;
}

TropVal floor_of_tail(const std::optional<TailCertificate>& t) {
  return t ? t->floor : TropVal::infinity();
}

}  // namespace

RelativeSeries ser_add(const RelativeSeries& f, const RelativeSeries& g) {
  require_same_space(f, g);
  RelativeSeries::Terms terms = f.terms();
  for (const auto& [exponent, b] : g.terms()) accumulate(terms, exponent, b);
  if (!f.tail() && !g.tail()) return RelativeSeries(f.field(), f.weights(), std::move(terms));
  TailCertificate tail;
  tail.domain = joint(f.tail(), g.tail());
  tail.floor = min(floor_of_tail(f.tail()), floor_of_tail(g.tail()));
  long lo = terms.empty() ? 0 : terms.begin()->first;
  long hi = terms.empty() ? 0 : terms.rbegin()->first;
  for (const auto* t : {&f.tail(), &g.tail()}) {
    if (!*t) continue;
    lo = std::min(lo, (*t)->e_min);
    hi = std::max(hi, (*t)->e_max);
  }
  tail.e_min = lo;
  tail.e_max = hi;
  tail.exact_window = false;
  return RelativeSeries(f.field(), f.weights(), std::move(terms), tail);
}

RelativeSeries ser_mul(const RelativeSeries& f, const RelativeSeries& g) {
  require_same_space(f, g);
  RelativeSeries::Terms terms;
  for (const auto& [ef, bf] : f.terms()) {
    for (const auto& [eg, bg] : g.terms()) accumulate(terms, ef + eg, bf * bg);
  }
  if (!f.tail() && !g.tail()) return RelativeSeries(f.field(), f.weights(), std::move(terms));
  TailCertificate tail;
  tail.domain = joint(f.tail(), g.tail());
  const TropVal ff = floor_of_tail(f.tail());
  const TropVal fg = floor_of_tail(g.tail());
  auto cross = [](const TropVal& floor, const std::optional<TropVal>& inf) {
    if (floor.is_infinite()) return TropVal::infinity();
    if (!inf) {
      throw Error(ErrorCode::kInsufficientPrecision,
                  "tail interaction is unbounded below on an unbounded certificate domain");
    }
    return floor + *inf;
  };
  tail.floor = min(min(cross(ff, gauss_infimum(g.terms(), tail.domain)),
                       cross(fg, gauss_infimum(f.terms(), tail.domain))),
                   ff + fg);
  tail.e_min = terms.empty() ? 0 : terms.begin()->first;
  tail.e_max = terms.empty() ? 0 : terms.rbegin()->first;
  tail.exact_window = false;
  return RelativeSeries(f.field(), f.weights(), std::move(terms), tail);
}

}  // namespace nonarch
