#include "nonarch/valcore.hpp"

#include "nonarch/error.hpp"

namespace nonarch {

// ---------------------------------------------------------------- TropVal

const Rational& TropVal::value() const {
  if (infinite_) throw Error(ErrorCode::kInvalidArgument, "infinite valuation has no value");
  return value_;
}

std::string TropVal::str() const { return infinite_ ? "inf" : to_string(value_); }

TropVal operator+(const TropVal& a, const TropVal& b) {
  if (a.infinite_ || b.infinite_) return TropVal::infinity();
  return TropVal(a.value_ + b.value_);
}

bool operator==(const TropVal& a, const TropVal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const TropVal& a, const TropVal& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TropVal min(const TropVal& a, const TropVal& b) { return b < a ? b : a; }

// ---------------------------------------------------------------- LexVal

std::string LexVal::str() const {
  if (infinite_) return "inf";
  std::string out = "(";
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) out += ", ";
    out += to_string(components_[k]);
  }
  return out + ")";
}

namespace {
void require_same_rank(const LexVal& a, const LexVal& b) {
  if (a.components().size() != b.components().size()) {
    throw Error(ErrorCode::kInvalidArgument, "lexicographic values of different rank");
  }
}
}  // namespace

LexVal operator+(const LexVal& a, const LexVal& b) {
  if (a.infinite_ || b.infinite_) return LexVal::infinity();
  require_same_rank(a, b);
  std::vector<Rational> sum(a.components_.size());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = a.components_[k] + b.components_[k];
  return LexVal(std::move(sum));
}

bool operator==(const LexVal& a, const LexVal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.components_ == b.components_;
}

std::strong_ordering operator<=>(const LexVal& a, const LexVal& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  require_same_rank(a, b);
  for (std::size_t k = 0; k < a.components_.size(); ++k) {
    const int c = cmp(a.components_[k], b.components_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

TropVal lex_project(const LexVal& x) {
  if (x.is_infinite()) return TropVal::infinity();
  if (x.components().empty()) throw Error(ErrorCode::kInvalidArgument, "empty lexicographic value");
  return TropVal(x.components().front());
}

// ---------------------------------------------------------------- Field

Field Field::padic(long p) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  return Field(PAdicRationals{p});
}

Field Field::formal_laurent(ResidueKind residue, long p, std::string symbol, long truncation) {
  if (residue == ResidueKind::kPrimeField && !is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
  if (residue == ResidueKind::kRationals) p = 0;
  if (symbol.empty()) throw Error(ErrorCode::kInvalidArgument, "empty uniformizer symbol");
  if (truncation < 0) throw Error(ErrorCode::kInvalidArgument, "negative truncation order");
  return Field(FormalLaurent{residue, p, std::move(symbol), truncation});
}

long Field::characteristic() const {
  if (is_padic()) return 0;
  const auto& d = laurent_desc();
  return d.residue == ResidueKind::kPrimeField ? d.p : 0;
}

long Field::residue_characteristic() const {
  if (is_padic()) return padic_desc().p;
  return laurent_desc().p;
}

std::string Field::describe() const {
  if (is_padic()) return "padic " + std::to_string(padic_desc().p);
  const auto& d = laurent_desc();
  const std::string residue =
      d.residue == ResidueKind::kPrimeField ? "F" + std::to_string(d.p) : std::string("Q");
  return "laurent " + residue + " " + d.symbol + " " + std::to_string(d.truncation);
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFieldMismatch,
                "operands live in different fields: " + a.describe() + " vs " + b.describe());
  }
}

// ---------------------------------------------------------------- Element

namespace {

/// Reduces a rational into the residue field of a formal Laurent field.
Rational reduce_residue(const FormalLaurent& d, const Rational& q) {
  if (d.residue == ResidueKind::kRationals) return q;
  const long num = mod_floor(q.get_num(), d.p);
  const long den = mod_floor(q.get_den(), d.p);
  if (den == 0) {
    throw Error(ErrorCode::kRepresentation,
                to_string(q) + " has denominator divisible by " + std::to_string(d.p));
  }
  return Rational((num * mod_inverse(den, d.p)) % d.p);
}

Rational residue_inverse(const FormalLaurent& d, const Rational& q) {
  if (q == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero residue");
  if (d.residue == ResidueKind::kRationals) return 1 / q;
  return Rational(mod_inverse(q.get_num().get_si(), d.p));
}

void put_term(const FormalLaurent& d, std::map<long, Rational>& terms, long degree,
              const Rational& c) {
  Rational r = reduce_residue(d, c);
  if (r == 0) {
    terms.erase(degree);
  } else {
    terms[degree] = std::move(r);
  }
}

}  // namespace

Element::Element(Field field) : field_(std::move(field)), rational_(0) {}

Element Element::one(const Field& field) { return from_rational(field, Rational(1)); }

Element Element::from_rational(const Field& field, const Rational& q) {
  Element out(field);
  if (field.is_padic()) {
    out.rational_ = q;
  } else {
    put_term(field.laurent_desc(), out.terms_, 0, q);
  }
  return out;
}

Element Element::monomial(const Field& field, const Rational& c, long degree) {
  Element out(field);
  if (field.is_padic()) {
    Integer pk;
    const long p = field.padic_desc().p;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(degree < 0 ? -degree : degree));
    out.rational_ = degree >= 0 ? Rational(c * Rational(pk)) : Rational(c / Rational(pk));
    out.rational_.canonicalize();
    return out;
  }
  const auto& d = field.laurent_desc();
  if (degree > d.truncation && c != 0) {
    throw Error(ErrorCode::kTruncationExceeded,
                "degree " + std::to_string(degree) + " exceeds truncation order " +
                    std::to_string(d.truncation));
  }
  put_term(d, out.terms_, degree, c);
  return out;
}

Element Element::from_terms(const Field& field, const std::map<long, Rational>& terms) {
  if (field.is_padic()) {
    Element out(field);
    for (const auto& [degree, c] : terms) out = out + monomial(field, c, degree);
    return out;
  }
  const auto& d = field.laurent_desc();
  Element out(field);
  for (const auto& [degree, c] : terms) {
    if (c == 0) continue;
    if (degree > d.truncation) {
      throw Error(ErrorCode::kRepresentation,
                  "term of degree " + std::to_string(degree) + " beyond truncation order " +
                      std::to_string(d.truncation));
    }
    if (d.residue == ResidueKind::kPrimeField) {
      if (c.get_den() != 1 || c < 0 || c >= d.p) {
        throw Error(ErrorCode::kRepresentation,
                    to_string(c) + " is not a reduced residue modulo " + std::to_string(d.p));
      }
    }
    out.terms_[degree] = c;
  }
  return out;
}

bool Element::is_zero() const { return field_.is_padic() ? rational_ == 0 : terms_.empty(); }

bool Element::is_one() const {
  if (field_.is_padic()) return rational_ == 1;
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

const Rational& Element::rational() const {
  if (!field_.is_padic()) throw Error(ErrorCode::kFieldMismatch, "not a p-adic element");
  return rational_;
}

const std::map<long, Rational>& Element::terms() const {
  if (!field_.is_formal_laurent()) throw Error(ErrorCode::kFieldMismatch, "not a Laurent element");
  return terms_;
}

long Element::order() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "order of zero element");
  if (field_.is_padic()) {
    const Integer p(field_.padic_desc().p);
    return integer_valuation(rational_.get_num(), p) - integer_valuation(rational_.get_den(), p);
  }
  return terms_.begin()->first;
}

TropVal Element::valuation() const {
  if (is_zero()) return TropVal::infinity();
  return TropVal(order());
}

TropVal val(const Element& c) { return c.valuation(); }

Rational Element::normalized_residue() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "residue of zero element");
  if (field_.is_padic()) {
    const long p = field_.padic_desc().p;
    const Element unit = field_div(*this, monomial(field_, Rational(1), order()));
    const long num = mod_floor(unit.rational_.get_num(), p);
    const long den = mod_floor(unit.rational_.get_den(), p);
    return Rational((num * mod_inverse(den, p)) % p);
  }
  return terms_.begin()->second;
}

std::string Element::str() const {
  if (field_.is_padic()) return to_string(rational_);
  if (terms_.empty()) return "0";
  const auto& symbol = field_.laurent_desc().symbol;
  std::string out;
  bool first = true;
  for (const auto& [degree, c] : terms_) {
    Rational mag = c;
    const bool negative = c < 0;
    if (negative) mag = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (degree == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += symbol;
    if (degree != 1) out += "^" + std::to_string(degree);
  }
  return out;
}

Element operator+(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  Element out(a.field_);
  if (a.field_.is_padic()) {
    out.rational_ = a.rational_ + b.rational_;
    return out;
  }
  const auto& d = a.field_.laurent_desc();
  out.terms_ = a.terms_;
  for (const auto& [degree, c] : b.terms_) {
    auto it = out.terms_.find(degree);
    put_term(d, out.terms_, degree, it == out.terms_.end() ? c : it->second + c);
  }
  return out;
}

Element operator-(const Element& a) {
  Element out(a.field_);
  if (a.field_.is_padic()) {
    out.rational_ = -a.rational_;
    return out;
  }
  const auto& d = a.field_.laurent_desc();
  for (const auto& [degree, c] : a.terms_) put_term(d, out.terms_, degree, -c);
  return out;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  Element out(a.field_);
  if (a.field_.is_padic()) {
    out.rational_ = a.rational_ * b.rational_;
    return out;
  }
  if (a.is_zero() || b.is_zero()) return out;
  const auto& d = a.field_.laurent_desc();
  // The product of nonzero elements has exact valuation v(a)+v(b); if that
  // already lies beyond the truncation order nothing of it is representable.
  if (a.order() + b.order() > d.truncation) {
    throw Error(ErrorCode::kTruncationExceeded,
                "product valuation " + std::to_string(a.order() + b.order()) +
                    " exceeds truncation order " + std::to_string(d.truncation));
  }
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      const long degree = da + db;
      if (degree > d.truncation) break;
      auto it = out.terms_.find(degree);
      put_term(d, out.terms_, degree, it == out.terms_.end() ? Rational(ca * cb) : Rational(it->second + ca * cb));
    }
  }
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_padic()) return a.rational_ == b.rational_;
  return a.terms_ == b.terms_;
}

Element field_add(const Element& a, const Element& b) { return a + b; }
Element field_mul(const Element& a, const Element& b) { return a * b; }

Element field_inv(const Element& c) {
  if (c.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const Field& field = c.field();
  if (field.is_padic()) return Element::from_rational(field, 1 / c.rational());
  const auto& d = field.laurent_desc();
  const auto& terms = c.terms();
  const long lead = terms.begin()->first;
  if (-lead > d.truncation) {
    throw Error(ErrorCode::kTruncationUnderflow,
                "inverse of an element of valuation " + std::to_string(lead) +
                    " starts beyond truncation order " + std::to_string(d.truncation));
  }
  // c = s^lead * (c0 + c1 s + ...); invert the unit factor as a power series
  // and keep degrees -lead + k <= truncation.
  const long count = d.truncation + lead + 1;
  const Rational c0_inv = residue_inverse(d, terms.begin()->second);
  std::vector<Rational> unit(static_cast<std::size_t>(count), Rational(0));
  for (const auto& [degree, coeff] : terms) {
    const long k = degree - lead;
    if (k < count) unit[static_cast<std::size_t>(k)] = coeff;
  }
  std::vector<Rational> inv(static_cast<std::size_t>(count), Rational(0));
  inv[0] = c0_inv;
  for (long k = 1; k < count; ++k) {
    Rational acc = 0;
    for (long m = 1; m <= k; ++m) {
      const auto& um = unit[static_cast<std::size_t>(m)];
      if (um != 0) acc += um * inv[static_cast<std::size_t>(k - m)];
    }
    inv[static_cast<std::size_t>(k)] = reduce_residue(d, -c0_inv * acc);
  }
  std::map<long, Rational> out;
  for (long k = 0; k < count; ++k) {
    if (inv[static_cast<std::size_t>(k)] != 0) out[k - lead] = inv[static_cast<std::size_t>(k)];
  }
  return Element::from_terms(field, out);
}

Element field_div(const Element& a, const Element& b) { return a * field_inv(b); }

Element field_pow(const Element& c, long n) {
  if (n < 0) return field_pow(field_inv(c), -n);
  Element result = Element::one(c.field());
  Element base = c;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Element frobenius(const Element& c) {
  const Field& field = c.field();
  const long p = field.characteristic();
  if (p == 0) {
    throw Error(ErrorCode::kUnsupportedField, field.describe() + " is not of characteristic p");
  }
  const auto& d = field.laurent_desc();
  std::map<long, Rational> out;
  for (const auto& [degree, coeff] : c.terms()) {
    const long target = degree * p;
    if (target > d.truncation) {
      throw Error(ErrorCode::kTruncationExceeded,
                  "Frobenius image degree " + std::to_string(target) +
                      " exceeds truncation order " + std::to_string(d.truncation));
    }
    out[target] = coeff;  // a^p = a in F_p
  }
  return Element::from_terms(field, out);
}

Element frobenius_root(const Element& c) {
  const Field& field = c.field();
  const long p = field.characteristic();
  if (p == 0) {
    throw Error(ErrorCode::kUnsupportedField, field.describe() + " is not of characteristic p");
  }
  std::map<long, Rational> out;
  for (const auto& [degree, coeff] : c.terms()) {
    if (degree % p != 0) {
      throw Error(ErrorCode::kNoPthRoot, "coefficient " + c.str() + " has no " +
                                             std::to_string(p) + "-th root: degree " +
                                             std::to_string(degree) + " not divisible by p");
    }
    out[degree / p] = coeff;
  }
  return Element::from_terms(field, out);
}

}  // namespace nonarch
