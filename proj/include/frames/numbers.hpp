#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals
// plus the handful of numeric helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frames {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

// base^e for e >= 0.
Int pow_int(const Int& base, std::int64_t e);

// x^e for any integer e; throws std::domain_error on 0^negative.
Rat pow_rat(const Rat& x, std::int64_t e);

inline bool is_integer(const Rat& x) { return den(x) == 1; }

// Multiplicative inverse of a modulo m (m > 1, gcd(a, m) = 1).
Int mod_inverse(const Int& a, const Int& m);

// Canonical residue in [0, m) of a rational with denominator coprime to m.
Int residue_mod(const Rat& x, const Int& m);

// Deterministic primality test for the supported range (trial division).
bool is_prime_value(std::int64_t n);

// Prime factors of |n| in increasing order, without multiplicity.
std::vector<std::int64_t> prime_factors(const Int& n);

double to_double(const Rat& x);

}  // namespace frames
