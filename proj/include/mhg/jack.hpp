#pragma once

#include <optional>

#include "mhg/poly.hpp"
#include "mhg/symfun.hpp"

namespace mhg {

/// Scalar rescalings of P_lambda. Conversion scalars:
///   Q = (h/h') P,  J = h P,  Jstar = P / h',  C = alpha^{|l|} |l|! Jstar,
///   Omega = J / J(1_n).
enum class NormalizationTag { P, Q, J, Jstar, C, Omega };

NormalizationTag parse_normalization(const std::string& name);
std::string normalization_name(NormalizationTag t);

/// Scalar s with  f_tag = s * P_lambda. Omega depends on n; the others do not.
Rational normalization_scalar(const Partition& lam, const AlphaParam& alpha, int n,
                              NormalizationTag tag);

/// The Jack polynomial P_lambda(x_1..x_n; alpha) over the monomial basis.
/// Returns the zero polynomial when l(lambda) > n. At alpha = infinity this
/// is m_lambda. Results are cached; the cache is safe for concurrent readers.
MonomialExpansion jack_P(const Partition& lam, const AlphaParam& alpha, int n);

/// Any normalization of the Jack polynomial.
MonomialExpansion jack(const Partition& lam, const AlphaParam& alpha, int n, NormalizationTag tag);

/// Exact rescaling of f (the `from` normalization of lambda) into `to`.
MonomialExpansion convert(const MonomialExpansion& f, const Partition& lam,
                          NormalizationTag from, NormalizationTag to, const AlphaParam& alpha,
                          int n);

/// J_lambda(1_n) = alpha^{|lambda|} (kn)_lambda, exact.
Rational jack_j_at_ones(const Partition& lam, const AlphaParam& alpha, int n);
/// J*_lambda(1_n) = alpha^{|lambda|} (kn)_lambda / (h h').
Rational jack_jstar_at_ones(const Partition& lam, const AlphaParam& alpha, int n);

/// Principal specialization of J_lambda: every power sum p_r -> X, giving
/// prod over boxes (X + alpha a'(s) - l'(s)).
Rational principal_spec(const Partition& lam, const AlphaParam& alpha, const Rational& X);

/// Generalized binomial coefficient: the coefficient of p_1^{|lambda - mu|}
/// in the skew element J_{lambda/mu}; zero when mu is not contained in lambda.
Rational binom(const Partition& lam, const Partition& mu, const AlphaParam& alpha);

/// Two independently computed values of the formal degree d_lambda:
/// the epsilon-product form (always available) and the double-product form
/// over xi = lambda + k delta (available when k = 1/alpha is a positive
/// integer).
struct FormalDegree {
  Rational eps_form;
  std::optional<Rational> product_form;
};
FormalDegree formal_degree(const Partition& lam, const AlphaParam& alpha, int n);

/// Monomial-basis coefficients of P_lambda in n variables computed by the
/// eigenfunction recurrence of the alpha Laplace-Beltrami operator; exact
/// over Rational, fast over double. Agrees with the Gram-Schmidt route.
template <class T>
std::map<Partition, T> jack_p_recurrence(const Partition& lam, const AlphaParam& alpha, int n);

extern template std::map<Partition, Rational> jack_p_recurrence<Rational>(const Partition&,
                                                                          const AlphaParam&, int);
extern template std::map<Partition, double> jack_p_recurrence<double>(const Partition&,
                                                                      const AlphaParam&, int);

}  // namespace mhg
