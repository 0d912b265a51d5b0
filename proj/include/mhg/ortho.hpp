#pragma once

#include "mhg/hyper.hpp"
#include "mhg/ratfun.hpp"

namespace mhg {

/// Finite expansion of an orthogonal-family member over {Omega_mu} or
/// {Jstar_mu}, with support inside the indexing partition.
class OmegaExpansion {
 public:
  enum class Basis { Omega, Jstar };

  OmegaExpansion(Basis basis, const AlphaParam& alpha, int nvars)
      : basis_(basis), alpha_(alpha), n_(nvars) {}

  Basis basis() const { return basis_; }
  int nvars() const { return n_; }
  const AlphaParam& alpha() const { return alpha_; }
  const std::map<Partition, Rational>& coeffs() const { return c_; }
  Rational coeff(const Partition& mu) const;

  OmegaExpansion& add_term(const Partition& mu, const Rational& c);

  /// Exact change of basis (scalar Jstar_mu(1_n) per term).
  OmegaExpansion to_basis(Basis b) const;

  /// Expand into the monomial basis.
  MonomialExpansion to_monomial() const;

  double eval_d(std::span<const double> x) const;
  Rational eval_exact(std::span<const Rational> x) const;

  friend bool operator==(const OmegaExpansion& f, const OmegaExpansion& g);

 private:
  Basis basis_;
  AlphaParam alpha_;
  int n_;
  std::map<Partition, Rational> c_;
};

/// Laguerre polynomial L^{(a)}_lambda: the alternating Jstar expansion with
/// coefficients a_{lambda/mu} (a+p)_lambda/(a+p)_mu. The equivalent Omega
/// form (binomial coefficients, rescaled by Jstar_lambda(1_n)) is computed
/// independently and equality is asserted.
OmegaExpansion laguerre(const Partition& lam, const Rational& a, const AlphaParam& alpha, int n);

/// Squared norm of f_lambda(x) = e^{-tr x} L^{(a)}_lambda(2x) under the
/// |x|^a weight: 2^{-n(a+p)} alpha^{-|lambda|} Gamma_n(a+p; lambda) Jstar_lambda(1_n).
double laguerre_norm(const Partition& lam, double a, const AlphaParam& alpha, int n);

/// Gamma-free norm ratio norm(lambda)/norm(0) = alpha^{-|lambda|}
/// (a+p)_lambda Jstar_lambda(1_n); this is the Monte Carlo target.
Rational laguerre_norm_ratio(const Partition& lam, const Rational& a, const AlphaParam& alpha,
                             int n);

/// Jacobi expansion coefficient c_{lambda/mu}(C): downward recursion from
/// c_{lambda/lambda} = 1; denominator C|lambda-mu| + 2 rho(lambda/mu).
Rational jacobi_c(const Partition& lam, const Partition& mu, const Rational& C,
                  const AlphaParam& alpha);
/// Symbolic variant: a rational function of C.
RationalFunction jacobi_c_sym(const Partition& lam, const Partition& mu, const AlphaParam& alpha);
/// Independent route: sum over standard tableaux of shape lambda/mu.
Rational jacobi_c_tableau(const Partition& lam, const Partition& mu, const Rational& C,
                          const AlphaParam& alpha);
RationalFunction jacobi_c_tableau_sym(const Partition& lam, const Partition& mu,
                                      const AlphaParam& alpha);

/// Jacobi polynomial G^{(a,b)}_lambda = sum (-1)^{|mu|}
/// [(a+p)_lambda/(a+p)_mu] c_{lambda/mu}(a+b+2p) Omega_mu.
OmegaExpansion jacobi(const Partition& lam, const Rational& a, const Rational& b,
                      const AlphaParam& alpha, int n);

/// Hermite polynomial H_lambda: eigenfunction expansion with top coefficient
/// 1, rescaled by 2^{|lambda|}; support only on gaps of even weight.
OmegaExpansion hermite(const Partition& lam, const AlphaParam& alpha, int n);

/// Full Hermite norm (with the Gaussian normalization constant c_n).
double hermite_norm(const Partition& lam, const AlphaParam& alpha, int n);
/// Gamma-free ratio norm(lambda)/norm(0) = 2^{|lambda|}/(alpha^{|lambda|} Jstar_lambda(1_n)).
Rational hermite_norm_ratio(const Partition& lam, const AlphaParam& alpha, int n);

/// Bessel function A_a(x) = Gamma_n(a+p)^{-1} 0F1(a+p; -x) and its kernel.
PfqResult bessel(double a, std::span<const double> x, const AlphaParam& alpha,
                 const Truncation& tr);
PfqResult bessel_two(double a, std::span<const double> x, std::span<const double> y,
                     const AlphaParam& alpha, const Truncation& tr);

/// Exact layer check of the Laguerre generating expansion:
/// e^{p1(y)} 0F1(a+p; -x, y) = sum_lambda alpha^{|lambda|}/(a+p)_lambda
/// L_lambda(x) Omega_lambda(y), per y-degree up to D.
IdentityReport check_laguerre_kernel_expansion(const Rational& a, const AlphaParam& alpha, int D, int n);

/// Exact layer check of sum_lambda alpha^{|lambda|} Omega_lambda(x)
/// L_lambda(y) = |1-x|^{-a-p} e(-x/(1-x), y), graded by x-degree up to D.
IdentityReport check_laguerre_sum_expansion(const Rational& a, const AlphaParam& alpha, int D, int n);

/// Jacobi reflection symmetry G^{(a,b)}(1-x) = (-1)^{|lambda|} G^{(b,a)}(x),
/// exact on the monomial expansion.
IdentityReport check_jacobi_symmetry(const Partition& lam, const Rational& a, const Rational& b,
                                     const AlphaParam& alpha, int n);

/// c_{lambda/mu}(C; alpha) = (-alpha)^{|lambda-mu|} c_{lambda'/mu'}(-alpha C; 1/alpha),
/// checked symbolically in C.
IdentityReport check_jacobi_c_duality(const Partition& lam, const Partition& mu,
                                      const AlphaParam& alpha);

/// Coefficient-level probe of the full Jacobi duality with the formal
/// parameter set (a', b', n') = (-alpha a, -alpha b, -n/alpha); n' is not a
/// positive integer, so this compares coefficient formulas only.
IdentityReport check_jacobi_full_duality(const Partition& lam, const Rational& a,
                                         const Rational& b, const Rational& n_formal,
                                         const AlphaParam& alpha);

}  // namespace mhg
