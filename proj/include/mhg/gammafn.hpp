#pragma once

#include <string>

#include "mhg/alpha.hpp"
#include "mhg/partition.hpp"

namespace mhg {

/// Gamma function for real non-pole arguments, Lanczos approximation with
/// reflection for x < 1/2. Relative error <= 1e-13 over the ranges used
/// here. Throws PoleError at nonpositive integers.
double gamma_fn(double x);

/// log |Gamma(x)| for x > 0.
double lgamma_fn(double x);

/// Gamma_n(a; alpha) = prod_{i=1}^n Gamma(a - k(i-1)).
double gamma_n(double a, const AlphaParam& alpha, int n);

/// Gamma_n(a; lambda; alpha) = prod_{i=1}^n Gamma(a + lambda_i - k(i-1)).
double gamma_n_partition(double a, const Partition& lam, const AlphaParam& alpha, int n);

/// B_n(a, b) = Gamma_n(a) Gamma_n(b) / Gamma_n(a+b).
double beta_n(double a, double b, const AlphaParam& alpha, int n);

/// c_n'(alpha) = prod_{i=1}^n Gamma(ik + 1) / Gamma(k + 1); equals 1 at
/// alpha = infinity (k = 0).
double c_n_prime(const AlphaParam& alpha, int n);

}  // namespace mhg
