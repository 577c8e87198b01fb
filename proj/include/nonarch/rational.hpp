#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nonarch {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "n" for integers, "n/d" with d > 0 otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "n" or "n/d" (optional leading sign). Returns nullopt on syntax
/// errors; a zero denominator is reported separately by the caller via
/// `has_zero_denominator`.
std::optional<Rational> parse_rational(std::string_view text);
bool has_zero_denominator(std::string_view text);
/// True iff the literal is a fraction that is not in lowest terms.
bool is_unreduced_literal(std::string_view text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// p-adic valuation of a nonzero integer.
long integer_valuation(const Integer& z, const Integer& p);

/// Deterministic primality check, adequate for the small primes used as
/// residue characteristics.
bool is_prime(long p);

/// Nonnegative residue of z modulo m.
long mod_floor(const Integer& z, long m);
long mod_inverse(long a, long m);

}  // namespace nonarch
