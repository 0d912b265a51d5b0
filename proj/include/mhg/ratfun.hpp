#pragma once

#include <vector>

#include "mhg/rational.hpp"

namespace mhg {

/// Dense univariate polynomial over Rational; coefficient of degree i at
/// index i, no trailing zeros.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> c);
  static Poly1 constant(const Rational& c);
  static Poly1 variable();  // the indeterminate itself

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational leading() const;

  Poly1& operator+=(const Poly1& g);
  Poly1& operator-=(const Poly1& g);
  friend Poly1 operator+(Poly1 f, const Poly1& g) { return f += g; }
  friend Poly1 operator-(Poly1 f, const Poly1& g) { return f -= g; }
  friend Poly1 operator*(const Poly1& f, const Poly1& g);
  friend Poly1 operator*(Poly1 f, const Rational& c);
  friend bool operator==(const Poly1& f, const Poly1& g) { return f.c_ == g.c_; }

  /// Quotient and remainder by a nonzero divisor.
  static std::pair<Poly1, Poly1> divmod(const Poly1& f, const Poly1& g);

  Poly1 monic() const;
  Rational eval(const Rational& x) const;
  /// f(u t + v) for the linear substitution t -> u t + v.
  Poly1 compose_linear(const Rational& u, const Rational& v) const;

 private:
  std::vector<Rational> c_;
  void trim();
};

Poly1 poly_gcd(Poly1 a, Poly1 b);

/// Rational function num/den over Rational, kept reduced with monic
/// denominator. Field operations throw on division by zero.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly1::constant(Rational(1))) {}
  RationalFunction(Poly1 num, Poly1 den);
  static RationalFunction constant(const Rational& c);
  static RationalFunction variable();

  const Poly1& num() const { return num_; }
  const Poly1& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
  friend bool operator==(const RationalFunction& f, const RationalFunction& g);

  Rational eval(const Rational& x) const;  // throws SingularParameterError on a pole
  RationalFunction compose_linear(const Rational& u, const Rational& v) const;

 private:
  Poly1 num_, den_;
  void reduce();
};

}  // namespace mhg
