#pragma once

#include <gmpxx.h>

#include <string>

namespace mhg {

/// Arbitrary-precision rational scalar. All exact computations in this
/// library run over this type; doubles are derived views.
using Rational = mpq_class;

/// Parse "3/4", "-2", or a plain decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& s);

/// Canonical "num/den" string ("num" when the denominator is 1).
std::string rat_str(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// True iff r is an integer <= 0 (a pole of the gamma function).
bool is_nonpositive_int(const Rational& r);

Rational rat_pow(const Rational& base, long e);

/// Rising factorial (x)_m = x (x+1) ... (x+m-1).
Rational rising(const Rational& x, int m);
double rising_d(double x, int m);

long to_long_checked(const Rational& r);

Rational factorial(int n);

}  // namespace mhg
