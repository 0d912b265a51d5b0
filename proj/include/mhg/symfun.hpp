#pragma once

#include "mhg/poly.hpp"
#include "mhg/powersum.hpp"

namespace mhg {

/// m_lambda as an element of the power-sum basis (formal ring, no variable
/// truncation). Cached per degree.
const PowerSumElement& monomial_in_powersums(const Partition& lam);

/// Convert a monomial expansion to the power-sum basis. Coefficients are
/// interpreted formally; when the expansion came from an n-variable
/// truncation with n < degree this is the documented projection.
PowerSumElement m_to_p(const MonomialExpansion& f);

/// Convert a power-sum element to an n-variable monomial expansion
/// (faithful when n >= degree, a projection otherwise). Refuses inputs
/// whose truncation flag is set.
MonomialExpansion p_to_m(const PowerSumElement& f, int nvars);

/// Same conversion for deliberately degree-capped series work: the caller
/// owns the truncation semantics, so the flag is accepted.
MonomialExpansion p_to_m_truncated(const PowerSumElement& f, int nvars);

/// The Jack polynomial P_lambda in the power-sum basis (monic on m_lambda,
/// orthogonal to dominance-lower monomials), computed by Gram-Schmidt over
/// the alpha inner product. Cached per (degree, alpha); thread-safe.
PowerSumElement jack_p_formal(const Partition& lam, const Rational& alpha);

/// <P_lambda, P_lambda>_alpha, from the same Gram-Schmidt pass.
Rational jack_p_norm(const Partition& lam, const Rational& alpha);

/// J_lambda = h_lambda P_lambda and J*_lambda = P_lambda / h'_lambda.
PowerSumElement jack_j_formal(const Partition& lam, const Rational& alpha);
PowerSumElement jack_jstar_formal(const Partition& lam, const Rational& alpha);

/// The skew element J_{lambda/mu}: the unique degree-|lambda|-|mu| element
/// with <J_{lambda/mu}, J*_nu> = <J_lambda, J*_mu J*_nu> for every nu.
/// Returns zero when mu is not contained in lambda (documented convention).
PowerSumElement skew_jack(const Partition& lam, const Partition& mu, const AlphaParam& alpha,
                          int cap = PowerSumElement::kDefaultCap);

}  // namespace mhg
