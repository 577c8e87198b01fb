#include "nonarch/rational.hpp"

#include <cctype>

#include "nonarch/error.hpp"

namespace nonarch {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t k = 0;
  if (s[0] == '+' || s[0] == '-') k = 1;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return Integer(text, 10);
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) return std::nullopt;
    return Rational(integer_from(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || den.empty() || den[0] == '+' || den[0] == '-' ||
      !is_integer_literal(den)) {
    return std::nullopt;
  }
  Integer d = integer_from(den);
  if (d == 0) return std::nullopt;
  Rational q(integer_from(num), d);
  q.canonicalize();
  return q;
}

bool has_zero_denominator(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return false;
  const auto den = text.substr(slash + 1);
  return is_integer_literal(den) && integer_from(den) == 0;
}

bool is_unreduced_literal(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return false;
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) return false;
  Integer n = integer_from(num);
  Integer d = integer_from(den);
  if (d <= 0) return true;
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return g != 1 || d == 1;
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

long integer_valuation(const Integer& z, const Integer& p) {
  if (z == 0) throw Error(ErrorCode::kInvalidArgument, "valuation of zero integer");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long mod_floor(const Integer& z, long m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

long mod_inverse(long a, long m) {
  Integer out;
  Integer za(a), zm(m);
  if (mpz_invert(out.get_mpz_t(), za.get_mpz_t(), zm.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kDivisionByZero, "residue not invertible modulo " + std::to_string(m));
  }
  return out.get_si();
}

}  // namespace nonarch
