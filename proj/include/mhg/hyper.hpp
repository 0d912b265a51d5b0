#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <span>

#include "mhg/gammafn.hpp"
#include "mhg/jack.hpp"

namespace mhg {

/// Parameter lists for a pFq series, exact form.
struct HyperParams {
  std::vector<Rational> upper, lower;
  AlphaParam alpha;
};

/// Parameter lists, numeric form.
struct HyperParamsD {
  std::vector<double> upper, lower;
  AlphaParam alpha;
};

/// Truncation is the only convergence control: partial sums run over
/// l(lambda) <= nvars, |lambda| <= max_degree. The reported tail is the
/// magnitude of the last degree layer (a heuristic, flagged as such).
struct Truncation {
  int max_degree = 30;
  int nvars = 0;  // 0: infer from the argument vector
};

struct PfqResult {
  double value = 0;
  double tail = 0;  // heuristic: |last degree layer|
  int degrees_used = 0;
};

/// Throws PoleError when some lower parameter b makes (b)_lambda vanish for
/// a lambda reachable under the truncation bound.
void pole_check(std::span<const double> lower, const AlphaParam& alpha, int n, int D);
void pole_check_exact(std::span<const Rational> lower, const AlphaParam& alpha, int n, int D);

/// One-argument series: sum over partitions of (a)_lam/(b)_lam alpha^|lam|
/// Jstar_lam(x). Deterministic degree-major summation, compensated within a
/// degree layer.
PfqResult pfq(const HyperParamsD& params, std::span<const double> x, const Truncation& tr);

/// Two-argument series with the extra 1/Jstar_lam(1_n) factor.
PfqResult pfq_two(const HyperParamsD& params, std::span<const double> x,
                  std::span<const double> y, const Truncation& tr);

/// Exponential kernel e(x, y) = two-argument 0F0. Evaluation recentres both
/// arguments (the kernel obeys e(x+c, y) = exp(c p1(y)) e(x, y)), which keeps
/// the truncated series well-conditioned for the Monte Carlo integrands.
PfqResult exp_kernel(std::span<const double> x, std::span<const double> y,
                     const AlphaParam& alpha, const Truncation& tr);

/// Graded exact layers of the series in n variables: layer d is
/// sum_{|lam|=d} (a)_lam/(b)_lam alpha^d Jstar_lam.
std::vector<MonomialExpansion> pfq_formal(const HyperParams& params, int D, int n);

/// The same layers in the formal power-sum basis (no variable truncation);
/// this is the carrier for the duality check, where omega acts.
std::vector<PowerSumElement> pfq_formal_p(const HyperParams& params, int D);

/// Exact value of the series at x = 1_n (all scalars, no polynomial work).
Rational pfq_at_ones_exact(const HyperParams& params, int D, int n);
double pfq_at_ones_d(const HyperParamsD& params, int D, int n);

// ---------------------------------------------------------------------------
// Bilinear layers: sums c_{mu,nu} m_mu(x) m_nu(y), used for the exact
// two-argument identity checks.
// ---------------------------------------------------------------------------

using TensorLayer = std::map<std::pair<Partition, Partition>, Rational>;

/// Layers of the two-argument series; layer d has bidegree (d, d).
std::vector<TensorLayer> pfq_two_formal(const HyperParams& params, int D, int nx, int ny);

TensorLayer tensor_apply_x(const TensorLayer& t, int nx,
                           const std::function<MonomialExpansion(const MonomialExpansion&)>& op);
TensorLayer tensor_apply_y(const TensorLayer& t, int ny,
                           const std::function<MonomialExpansion(const MonomialExpansion&)>& op);
bool tensor_is_zero(const TensorLayer& t);
TensorLayer tensor_sub(const TensorLayer& a, const TensorLayer& b);

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

struct IdentityReport {
  std::string name;
  bool exact = true;     // exact layer comparison vs float residual
  bool pass = false;
  double float_residual = 0.0;
  std::string detail;
};

/// Euler: 2F1(a,b;c;y) = |1-y|^{c-a-b} 2F1(c-a,c-b;c;y), exact layers <= D.
IdentityReport check_euler(const Rational& a, const Rational& b, const Rational& c,
                           const AlphaParam& alpha, int D, int n);

/// Kummer: 1F1(a;b;y) = e^{tr y} 1F1(b-a;b;-y), exact layers <= D.
IdentityReport check_kummer(const Rational& a, const Rational& b, const AlphaParam& alpha, int D,
                            int n);

/// omega_alpha pFq(a;b;x;alpha) = pFq(-alpha a; -alpha b;
/// (-1)^{p-q} alpha^{q-p+1} x; 1/alpha), exact formal layers <= D.
IdentityReport check_duality(const std::vector<Rational>& upper,
                             const std::vector<Rational>& lower, const AlphaParam& alpha, int D);

/// D_x e(x,y) = p1(y) e(x,y), exact per bidegree layer up to D.
IdentityReport check_kernel_deriv(const AlphaParam& alpha, int D, int n);

/// Terminating 3F2(a,b,-N; c,d; 1_n) with the balanced d = a+b-c-N+p equals
/// the rational product over the N^n box; zero tolerance.
IdentityReport check_saalschutz(const Rational& a, const Rational& b, const Rational& c, int N,
                                int n, const AlphaParam& alpha);

struct GaussReport {
  double value = 0, target = 0, rel_error = 0;
  bool monotone = false;  // residual decreasing over the last 10 degrees
  bool pass = false;
  std::vector<double> trailing_residuals;
};

/// 2F1(a,b;c;1_n) at truncation D against the Gamma_n ratio; a convergence
/// trend criterion, not an equality.
GaussReport check_gauss(double a, double b, double c, const AlphaParam& alpha, int n, int D);

/// 1F0(a; 1+x, y) = |1-y|^{-a} 1F0(a; x, y/(1-y)); float residual.
IdentityReport check_shifted_1F0(double a, const AlphaParam& alpha, int n,
                                 std::span<const double> x, std::span<const double> y, int D);

// ---------------------------------------------------------------------------
// Numeric two-argument series with one argument fixed: the Monte Carlo
// integrand kernels.
// ---------------------------------------------------------------------------

class TwoArgSeries {
 public:
  /// pFq(upper; lower; s x, y) with y fixed; s = -1 when negate_x.
  /// centre enables the shift-law recentring and is valid only for the
  /// parameterless exponential kernel.
  TwoArgSeries(std::vector<double> upper, std::vector<double> lower, const AlphaParam& alpha,
               int n, int D, std::vector<double> y, bool negate_x, bool centre);

  /// Value at x; *tail_ratio (optional) receives |last layer| / |value|.
  double eval(const double* x, double* tail_ratio = nullptr) const;

  int nvars() const { return n_; }

 private:
  AlphaParam alpha_;
  int n_, D_;
  double sign_;  // +1 or -1 applied to x
  std::vector<double> y_;
  bool inf_mode_ = false;  // alpha = infinity: permutation closed form
  struct Term {
    int degree;
    std::vector<std::pair<int, double>> pcoef;  // monomial index -> coefficient
    double factor;                              // per-lambda scalar incl. P(y_eff)/P(1_n)
  };
  std::vector<Term> terms_;
  std::vector<std::vector<std::vector<int>>> orbits_;  // per monomial index
  double p1y_ = 0;
  bool centered_ = false;
};

}  // namespace mhg
