#pragma once

#include <map>
#include <span>
#include <string>

#include "mhg/partition.hpp"

namespace mhg {

/// Exact symmetric function in the power-sum basis: a sparse map
/// partition -> rational, graded by |lambda|, with a degree cap.
/// Multiplication drops graded pieces above the cap and sets the
/// truncation flag; exact consumers refuse flagged inputs.
class PowerSumElement {
 public:
  static constexpr int kDefaultCap = 10;

  explicit PowerSumElement(int cap = kDefaultCap) : cap_(cap) {}

  static PowerSumElement one(int cap = kDefaultCap);
  /// The generator p_r.
  static PowerSumElement p(int r, int cap = kDefaultCap);
  /// c * p_lambda.
  static PowerSumElement term(const Partition& lam, const Rational& c, int cap = kDefaultCap);

  const std::map<Partition, Rational>& coeffs() const { return c_; }
  Rational coeff(const Partition& lam) const;
  int degree_cap() const { return cap_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const;  // max |lambda| with nonzero coefficient; -1 for zero

  PowerSumElement& add_term(const Partition& lam, const Rational& c);

  PowerSumElement& operator+=(const PowerSumElement& g);
  PowerSumElement& operator-=(const PowerSumElement& g);
  PowerSumElement& operator*=(const Rational& c);
  friend PowerSumElement operator+(PowerSumElement f, const PowerSumElement& g) { return f += g; }
  friend PowerSumElement operator-(PowerSumElement f, const PowerSumElement& g) { return f -= g; }
  friend PowerSumElement operator*(PowerSumElement f, const Rational& c) { return f *= c; }
  friend PowerSumElement operator*(const Rational& c, PowerSumElement f) { return f *= c; }
  friend PowerSumElement operator*(const PowerSumElement& f, const PowerSumElement& g);
  friend bool operator==(const PowerSumElement& f, const PowerSumElement& g) {
    return f.c_ == g.c_;
  }

  /// Formal partial derivative with respect to p_1.
  PowerSumElement d_dp1() const;

  /// Keep only the graded piece of the given degree.
  PowerSumElement graded_piece(int degree) const;

  /// Copy with a new degree cap (terms above the cap drop and set the flag).
  PowerSumElement with_cap(int cap) const;

  std::string json() const;  // {"[2,1]": "3/4", ...}
  static PowerSumElement from_json(const std::string& text, int cap = kDefaultCap);

 private:
  std::map<Partition, Rational> c_;
  int cap_;
  bool truncated_ = false;
  friend PowerSumElement mul_truncating(const PowerSumElement&, const PowerSumElement&, int cap);
};

/// <p_lambda, p_mu>_alpha = delta z_lambda alpha^{l(lambda)}, extended
/// bilinearly. Throws ExactnessError if either input is truncated.
Rational inner_product(const PowerSumElement& f, const PowerSumElement& g, const AlphaParam& alpha);

/// The algebra endomorphism with p_r -> (-1)^{r-1} alpha p_r.
PowerSumElement omega_alpha(const PowerSumElement& f, const AlphaParam& alpha);

/// Specialization p_r -> X for every r.
Rational eps_X(const PowerSumElement& f, const Rational& X);
/// Specialization p_1 -> 1, p_r -> 0 (r > 1): picks out the p_1^m coefficient
/// times m!.
Rational eps_delta(const PowerSumElement& f);

/// Numeric evaluation with p_r = sum_i x_i^r.
double eval_powersum(const PowerSumElement& f, std::span<const double> x);
Rational eval_powersum_exact(const PowerSumElement& f, std::span<const Rational> x);

}  // namespace mhg
