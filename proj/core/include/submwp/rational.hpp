#pragma once

#include <gmpxx.h>

#include <string>

namespace submwp {

/// Exact arbitrary-precision rational; the value type of every lemma-grade
/// computation in this library. Float64 is used only inside the subgradient
/// solver and Monte Carlo estimators.
using Rational = mpq_class;

/// Parses "p/q" or "p" (arbitrary precision, canonicalized). Throws DomainError
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

/// Renders as "p" or "p/q", lossless.
std::string rational_str(const Rational& r);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_of(double v);

double to_double(const Rational& r);

/// Nearest fraction with denominator `den` (round half away from zero).
Rational snap(double v, long den);

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

}  // namespace submwp
