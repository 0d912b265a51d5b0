#include "mhg/gammafn.hpp"

#include <cmath>

namespace mhg {

namespace {

// Lanczos g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_core(double x) {
  // Gamma(x) for x >= 0.5
  x -= 1.0;
  double a = kLanczos[0];
  double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw PoleError("gamma pole at nonpositive integer " + std::to_string(x));
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return M_PI / (std::sin(M_PI * x) * lanczos_core(1.0 - x));
  }
  return lanczos_core(x);
}

double lgamma_fn(double x) {
  if (x <= 0.0) throw PoleError("lgamma needs a positive argument");
  return std::lgamma(x);
}

double gamma_n(double a, const AlphaParam& alpha, int n) {
  double k = alpha.k_d();
  double out = 1.0;
  for (int i = 1; i <= n; ++i) {
    double arg = a - k * (i - 1);
    if (arg <= 0.0 && arg == std::floor(arg))
      throw PoleError("Gamma_n pole in factor i=" + std::to_string(i) + " (argument " +
                      std::to_string(arg) + ")");
    out *= gamma_fn(arg);
  }
  return out;
}

double gamma_n_partition(double a, const Partition& lam, const AlphaParam& alpha, int n) {
  double k = alpha.k_d();
  double out = 1.0;
  for (int i = 1; i <= n; ++i) {
    double arg = a + lam.part(i) - k * (i - 1);
    if (arg <= 0.0 && arg == std::floor(arg))
      throw PoleError("Gamma_n pole in factor i=" + std::to_string(i) + " (argument " +
                      std::to_string(arg) + ")");
    out *= gamma_fn(arg);
  }
  return out;
}

double beta_n(double a, double b, const AlphaParam& alpha, int n) {
  return gamma_n(a, alpha, n) * gamma_n(b, alpha, n) / gamma_n(a + b, alpha, n);
}

double c_n_prime(const AlphaParam& alpha, int n) {
  double k = alpha.k_d();
  double out = 1.0;
  for (int i = 1; i <= n; ++i) out *= gamma_fn(i * k + 1.0) / gamma_fn(k + 1.0);
  return out;
}

}  // namespace mhg
