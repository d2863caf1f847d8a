#pragma once

// Exact rational arithmetic for the terminating series and identity checks.

#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncqm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational pochhammer_exact(Rational const& a, unsigned m);

BigInt binomial_exact(unsigned n, unsigned k);

BigInt factorial_exact(unsigned n);

/// x^e for any integer e; x must be nonzero when e < 0.
Rational pow_exact(Rational const& x, long e);

/// ₂F₁(a, -n; c; z) as an exact polynomial in z.
Rational gauss_2f1_exact(Rational const& a, unsigned n, Rational const& c, Rational const& z);

/// φ(-n; c; z) as an exact polynomial in z.
Rational kummer_1f1_exact(unsigned n, Rational const& c, Rational const& z);

/// √x when x is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(Rational const& x);

/// Parses "p/q", integers and finite decimals such as "-0.25" or "1.5e-3".
Rational parse_rational(std::string_view text);

}  // namespace ncqm
