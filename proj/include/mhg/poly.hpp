#pragma once

#include <map>
#include <span>
#include <vector>

#include "mhg/partition.hpp"

namespace mhg {

class MonomialExpansion;

/// Exact polynomial in n variables, not necessarily symmetric. Sparse map
/// from exponent vectors to rational coefficients; the carrier for
/// differential-operator application and products.
class NVarPoly {
 public:
  explicit NVarPoly(int nvars) : n_(nvars) {}

  static NVarPoly constant(int nvars, const Rational& c);
  static NVarPoly var_pow(int nvars, int i, int r);  // x_i^r, 0-based i

  int nvars() const { return n_; }
  const std::map<std::vector<int>, Rational>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int total_degree() const;

  NVarPoly& add_term(std::vector<int> expo, const Rational& c);

  NVarPoly& operator+=(const NVarPoly& g);
  NVarPoly& operator-=(const NVarPoly& g);
  NVarPoly& operator*=(const Rational& c);
  friend NVarPoly operator+(NVarPoly f, const NVarPoly& g) { return f += g; }
  friend NVarPoly operator-(NVarPoly f, const NVarPoly& g) { return f -= g; }
  friend NVarPoly operator*(NVarPoly f, const Rational& c) { return f *= c; }
  friend NVarPoly operator*(const Rational& c, NVarPoly f) { return f *= c; }
  friend NVarPoly operator*(const NVarPoly& f, const NVarPoly& g);
  friend bool operator==(const NVarPoly& f, const NVarPoly& g) {
    return f.n_ == g.n_ && f.c_ == g.c_;
  }

  NVarPoly derivative(int i) const;      // d/dx_i
  NVarPoly mul_var_pow(int i, int r) const;  // * x_i^r
  NVarPoly shift_all(const Rational& c) const;  // x_i -> x_i + c, every i
  NVarPoly reflect() const;                     // x_i -> -x_i
  NVarPoly subst_one_minus() const;             // x_i -> 1 - x_i

  /// Exact division by (x_i - x_j); throws SymmetryError when a nonzero
  /// remainder shows the input was not symmetric in the pair.
  NVarPoly divide_diff(int i, int j) const;

  /// The homogeneous component of the given total degree.
  NVarPoly graded_piece(int degree) const;

  Rational eval(std::span<const Rational> x) const;
  double eval_d(std::span<const double> x) const;

  /// Collect into the monomial symmetric basis; throws SymmetryError if the
  /// polynomial is not symmetric.
  MonomialExpansion to_monomial_basis() const;

 private:
  int n_;
  std::map<std::vector<int>, Rational> c_;
};

/// Symmetric polynomial in n variables as a sparse map partition -> rational
/// over the monomial basis m_lambda (indices with l(lambda) <= n). Mixed
/// degrees are allowed; the constant term is keyed by the empty partition.
class MonomialExpansion {
 public:
  explicit MonomialExpansion(int nvars) : n_(nvars) {}

  /// The basis element m_lambda in n variables (zero when l(lambda) > n).
  static MonomialExpansion m(const Partition& lam, int nvars);
  static MonomialExpansion constant(const Rational& c, int nvars);
  /// Expansion of p_1^m in n variables.
  static MonomialExpansion p1_power(int m, int nvars);

  int nvars() const { return n_; }
  const std::map<Partition, Rational>& coeffs() const { return c_; }
  Rational coeff(const Partition& lam) const;
  bool is_zero() const { return c_.empty(); }
  int degree() const;
  bool is_homogeneous() const;

  MonomialExpansion& add_term(const Partition& lam, const Rational& c);

  MonomialExpansion& operator+=(const MonomialExpansion& g);
  MonomialExpansion& operator-=(const MonomialExpansion& g);
  MonomialExpansion& operator*=(const Rational& c);
  friend MonomialExpansion operator+(MonomialExpansion f, const MonomialExpansion& g) {
    return f += g;
  }
  friend MonomialExpansion operator-(MonomialExpansion f, const MonomialExpansion& g) {
    return f -= g;
  }
  friend MonomialExpansion operator*(MonomialExpansion f, const Rational& c) { return f *= c; }
  friend MonomialExpansion operator*(const Rational& c, MonomialExpansion f) { return f *= c; }
  friend MonomialExpansion operator*(const MonomialExpansion& f, const MonomialExpansion& g);
  friend bool operator==(const MonomialExpansion& f, const MonomialExpansion& g) {
    return f.n_ == g.n_ && f.c_ == g.c_;
  }

  MonomialExpansion graded_piece(int degree) const;

  NVarPoly expand() const;  // to the full exponent-vector representation

  Rational eval_exact(std::span<const Rational> x) const;
  double eval_d(std::span<const double> x) const;
  Rational eval_at_ones() const;  // value at (1,...,1)

  std::string json() const;
  static MonomialExpansion from_json(const std::string& text, int nvars);

 private:
  int n_;
  std::map<Partition, Rational> c_;
};

/// f(x_1 + 1, ..., x_n + 1) re-collected over the monomial basis.
MonomialExpansion shift_by_one(const MonomialExpansion& f);

/// f(1 - x_1, ..., 1 - x_n).
MonomialExpansion one_minus(const MonomialExpansion& f);

/// Multiply an m-basis expansion by the power sum p_r (formal rule; results
/// with l > nvars are dropped, matching the n-variable truncation).
MonomialExpansion mul_by_power_sum(const MonomialExpansion& f, int r);

}  // namespace mhg
