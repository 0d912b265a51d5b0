#include "mhg/ortho.hpp"

#include <cmath>
#include <sstream>

namespace mhg {

// ---------------------------------------------------------------------------
// OmegaExpansion
// ---------------------------------------------------------------------------

Rational OmegaExpansion::coeff(const Partition& mu) const {
  auto it = c_.find(mu);
  return it == c_.end() ? Rational(0) : it->second;
}

OmegaExpansion& OmegaExpansion::add_term(const Partition& mu, const Rational& c) {
  if (c == 0) return *this;
  if (mu.length() > n_) throw ParameterError("expansion index longer than the variable count");
  Rational& slot = c_[mu];
  slot += c;
  if (slot == 0) c_.erase(mu);
  return *this;
}

OmegaExpansion OmegaExpansion::to_basis(Basis b) const {
  if (b == basis_) return *this;
  OmegaExpansion out(b, alpha_, n_);
  for (const auto& [mu, c] : c_) {
    Rational js1 = jack_jstar_at_ones(mu, alpha_, n_);
    // Omega_mu = Jstar_mu / Jstar_mu(1_n)
    out.add_term(mu, basis_ == Basis::Omega ? Rational(c / js1) : Rational(c * js1));
  }
  return out;
}

MonomialExpansion OmegaExpansion::to_monomial() const {
  MonomialExpansion out(n_);
  NormalizationTag tag =
      basis_ == Basis::Omega ? NormalizationTag::Omega : NormalizationTag::Jstar;
  for (const auto& [mu, c] : c_) out += jack(mu, alpha_, n_, tag) * c;
  return out;
}

double OmegaExpansion::eval_d(std::span<const double> x) const { return to_monomial().eval_d(x); }

Rational OmegaExpansion::eval_exact(std::span<const Rational> x) const {
  return to_monomial().eval_exact(x);
}

bool operator==(const OmegaExpansion& f, const OmegaExpansion& g) {
  if (f.n_ != g.n_ || !(f.alpha_ == g.alpha_)) return false;
  if (f.basis_ == g.basis_) return f.c_ == g.c_;
  return f.c_ == g.to_basis(f.basis_).coeffs();
}

// ---------------------------------------------------------------------------
// Laguerre polynomials
// ---------------------------------------------------------------------------

OmegaExpansion laguerre(const Partition& lam, const Rational& a, const AlphaParam& alpha, int n) {
  if (lam.length() > n) throw ParameterError("laguerre needs l(lambda) <= n");
  Rational p = alpha.k() * (n - 1) + 1;
  Rational ap = a + p;
  Rational top = gen_pochhammer(ap, lam, alpha);
  OmegaExpansion jstar_form(OmegaExpansion::Basis::Jstar, alpha, n);
  OmegaExpansion omega_form(OmegaExpansion::Basis::Omega, alpha, n);
  Rational js1_lam = jack_jstar_at_ones(lam, alpha, n);
  for (const Partition& mu : sub_partitions(lam)) {
    Rational denom = gen_pochhammer(ap, mu, alpha);
    if (denom == 0)
      throw PoleError("laguerre parameter pole: (a+p) Pochhammer vanished at " + mu.str());
    Rational bn = binom(lam, mu, alpha);
    Rational sign = (mu.weight() % 2 == 0) ? Rational(1) : Rational(-1);
    Rational ratio = top / denom;
    // alternating-form coefficient: a_{lam/mu} = binom * Jstar_lam(1)/Jstar_mu(1)
    jstar_form.add_term(mu, sign * bn * js1_lam / jack_jstar_at_ones(mu, alpha, n) * ratio);
    omega_form.add_term(mu, sign * bn * ratio);
  }
  // the Omega form differs from the Jstar form by the Jstar_lam(1_n) factor
  OmegaExpansion rescaled(OmegaExpansion::Basis::Omega, alpha, n);
  for (const auto& [mu, c] : omega_form.coeffs()) rescaled.add_term(mu, c * js1_lam);
  if (!(rescaled == jstar_form))
    throw ExactnessError("laguerre dual forms disagree for " + lam.str());
  return jstar_form;
}

double laguerre_norm(const Partition& lam, double a, const AlphaParam& alpha, int n) {
  double k = alpha.k_d();
  double p = k * (n - 1) + 1;
  double ap = a + p;
  return std::pow(2.0, -n * ap) * std::pow(alpha.alpha_d(), -lam.weight()) *
         gamma_n_partition(ap, lam, alpha, n) *
         to_double(jack_jstar_at_ones(lam, alpha, n));
}

Rational laguerre_norm_ratio(const Partition& lam, const Rational& a, const AlphaParam& alpha,
                             int n) {
  Rational p = alpha.k() * (n - 1) + 1;
  return gen_pochhammer(a + p, lam, alpha) * jack_jstar_at_ones(lam, alpha, n) /
         rat_pow(alpha.alpha(), lam.weight());
}

// ---------------------------------------------------------------------------
// Jacobi coefficients
// ---------------------------------------------------------------------------

namespace {

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational from(const Rational& r) { return r; }
  static bool is_zero(const Rational& r) { return r == 0; }
};

template <>
struct FieldOps<RationalFunction> {
  static RationalFunction from(const Rational& r) { return RationalFunction::constant(r); }
  static bool is_zero(const RationalFunction& r) { return r.is_zero(); }
};

template <class F>
F jacobi_c_rec(const Partition& lam, const Partition& mu, const F& C, const AlphaParam& alpha,
               std::map<Partition, F>& memo) {
  auto it = memo.find(mu);
  if (it != memo.end()) return it->second;
  if (mu == lam) {
    memo.emplace(mu, FieldOps<F>::from(Rational(1)));
    return memo.at(mu);
  }
  F acc = FieldOps<F>::from(Rational(0));
  for (const Partition& nu : add_one_box(mu, lam.length())) {
    if (!lam.contains(nu)) continue;
    Rational b = binom(nu, mu, alpha);
    if (b == 0) continue;
    acc = acc + FieldOps<F>::from(b) * jacobi_c_rec(lam, nu, C, alpha, memo);
  }
  F den = C * FieldOps<F>::from(Rational(lam.weight() - mu.weight())) +
          FieldOps<F>::from(2 * rho_skew(lam, mu, alpha));
  if (FieldOps<F>::is_zero(den))
    throw SingularParameterError("jacobi recursion denominator vanished at (" + lam.str() + ", " +
                                 mu.str() + ")");
  F val = acc / den;
  memo.emplace(mu, val);
  return memo.at(mu);
}

template <class F>
void tableau_chains(const Partition& lam, const Partition& cur, const Partition& mu, const F& C,
                    const AlphaParam& alpha, int step, F partial, F& total) {
  if (cur == mu) {
    total = total + partial;
    return;
  }
  for (const Partition& nxt : remove_one_box(cur)) {
    if (!nxt.contains(mu)) continue;
    Rational b = binom(cur, nxt, alpha);
    F den = C * FieldOps<F>::from(Rational(step)) +
            FieldOps<F>::from(Rational(2 * rho_skew(lam, nxt, alpha)));
    if (FieldOps<F>::is_zero(den))
      throw SingularParameterError("tableau denominator vanished below " + lam.str());
    F next_partial = partial * FieldOps<F>::from(b) / den;
    tableau_chains(lam, nxt, mu, C, alpha, step + 1, next_partial, total);
  }
}

}  // namespace

Rational jacobi_c(const Partition& lam, const Partition& mu, const Rational& C,
                  const AlphaParam& alpha) {
  if (!lam.contains(mu)) throw ContainmentError("jacobi_c needs mu inside lambda");
  std::map<Partition, Rational> memo;
  return jacobi_c_rec<Rational>(lam, mu, C, alpha, memo);
}

RationalFunction jacobi_c_sym(const Partition& lam, const Partition& mu,
                              const AlphaParam& alpha) {
  if (!lam.contains(mu)) throw ContainmentError("jacobi_c needs mu inside lambda");
  std::map<Partition, RationalFunction> memo;
  return jacobi_c_rec<RationalFunction>(lam, mu, RationalFunction::variable(), alpha, memo);
}

Rational jacobi_c_tableau(const Partition& lam, const Partition& mu, const Rational& C,
                          const AlphaParam& alpha) {
  if (!lam.contains(mu)) throw ContainmentError("jacobi_c needs mu inside lambda");
  Rational total(0);
  tableau_chains<Rational>(lam, lam, mu, C, alpha, 1, Rational(1), total);
  return total;
}

RationalFunction jacobi_c_tableau_sym(const Partition& lam, const Partition& mu,
                                      const AlphaParam& alpha) {
  if (!lam.contains(mu)) throw ContainmentError("jacobi_c needs mu inside lambda");
  RationalFunction total = RationalFunction::constant(Rational(0));
  tableau_chains<RationalFunction>(lam, lam, mu, RationalFunction::variable(), alpha, 1,
                                   RationalFunction::constant(Rational(1)), total);
  return total;
}

OmegaExpansion jacobi(const Partition& lam, const Rational& a, const Rational& b,
                      const AlphaParam& alpha, int n) {
  if (lam.length() > n) throw ParameterError("jacobi needs l(lambda) <= n");
  Rational p = alpha.k() * (n - 1) + 1;
  Rational A = a + p;
  Rational C = a + b + 2 * p;
  Rational top = gen_pochhammer(A, lam, alpha);
  OmegaExpansion out(OmegaExpansion::Basis::Omega, alpha, n);
  std::map<Partition, Rational> memo;
  for (const Partition& mu : sub_partitions(lam)) {
    Rational denom = gen_pochhammer(A, mu, alpha);
    if (denom == 0)
      throw PoleError("jacobi parameter pole: (a+p) Pochhammer vanished at " + mu.str());
    Rational c = jacobi_c_rec<Rational>(lam, mu, C, alpha, memo);
    Rational sign = (mu.weight() % 2 == 0) ? Rational(1) : Rational(-1);
    out.add_term(mu, sign * top / denom * c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermite polynomials
// ---------------------------------------------------------------------------

OmegaExpansion hermite(const Partition& lam, const AlphaParam& alpha, int n) {
  if (lam.length() > n) throw ParameterError("hermite needs l(lambda) <= n");
  if (alpha.is_infinite()) throw ParameterError("hermite needs finite alpha");
  // coefficients a_{lam,pi} over Omega_pi, gap |lam - pi| even, top = 1
  std::map<Partition, Rational> a;
  a[lam] = Rational(1);
  std::vector<Partition> subs = sub_partitions(lam);
  // by decreasing weight so every mu with a smaller gap is ready
  std::sort(subs.begin(), subs.end(), [](const Partition& x, const Partition& y) {
    if (x.weight() != y.weight()) return x.weight() > y.weight();
    return x < y;
  });
  for (const Partition& pi : subs) {
    if (pi == lam) continue;
    int gap = lam.weight() - pi.weight();
    if (gap % 2 != 0) continue;
    Rational acc(0);
    for (const Partition& nu : add_one_box(pi, lam.length())) {
      if (!lam.contains(nu)) continue;
      Rational b2 = binom(nu, pi, alpha);
      if (b2 == 0) continue;
      for (const Partition& mu : add_one_box(nu, lam.length())) {
        if (!lam.contains(mu)) continue;
        auto it = a.find(mu);
        if (it == a.end()) continue;
        Rational b1 = binom(mu, nu, alpha);
        if (b1 == 0) continue;
        acc += it->second * b1 * b2 *
               (rho_skew(mu, nu, alpha) - rho_skew(nu, pi, alpha));
      }
    }
    if (acc != 0) a[pi] = acc / Rational(-2 * gap);
  }
  OmegaExpansion out(OmegaExpansion::Basis::Omega, alpha, n);
  Rational scale = rat_pow(Rational(2), lam.weight());
  for (const auto& [pi, c] : a) out.add_term(pi, c * scale);
  return out;
}

double hermite_norm(const Partition& lam, const AlphaParam& alpha, int n) {
  double k = alpha.k_d();
  double cn = std::pow(M_PI, 0.5 * n) / std::pow(2.0, k * n * (n - 1) / 2.0);
  return cn * to_double(hermite_norm_ratio(lam, alpha, n));
}

Rational hermite_norm_ratio(const Partition& lam, const AlphaParam& alpha, int n) {
  return rat_pow(Rational(2), lam.weight()) /
         (rat_pow(alpha.alpha(), lam.weight()) * jack_jstar_at_ones(lam, alpha, n));
}

// ---------------------------------------------------------------------------
// Bessel functions
// ---------------------------------------------------------------------------

PfqResult bessel(double a, std::span<const double> x, const AlphaParam& alpha,
                 const Truncation& tr) {
  int n = static_cast<int>(x.size());
  double p = alpha.k_d() * (n - 1) + 1;
  double g = gamma_n(a + p, alpha, n);
  std::vector<double> neg(x.begin(), x.end());
  for (double& v : neg) v = -v;
  PfqResult r = pfq(HyperParamsD{{}, {a + p}, alpha}, neg, tr);
  r.value /= g;
  r.tail /= std::abs(g);
  return r;
}

PfqResult bessel_two(double a, std::span<const double> x, std::span<const double> y,
                     const AlphaParam& alpha, const Truncation& tr) {
  int n = static_cast<int>(x.size());
  double p = alpha.k_d() * (n - 1) + 1;
  double g = gamma_n(a + p, alpha, n);
  std::vector<double> neg(x.begin(), x.end());
  for (double& v : neg) v = -v;
  PfqResult r = pfq_two(HyperParamsD{{}, {a + p}, alpha}, neg, y, tr);
  r.value /= g;
  r.tail /= std::abs(g);
  return r;
}

// ---------------------------------------------------------------------------
// Exact generating-identity checks
// ---------------------------------------------------------------------------

namespace {
void tensor_accumulate(TensorLayer& t, const MonomialExpansion& fx, const MonomialExpansion& fy,
                       const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [mu, cx] : fx.coeffs())
    for (const auto& [nu, cy] : fy.coeffs()) {
      auto key = std::make_pair(mu, nu);
      Rational& slot = t[key];
      slot += scale * cx * cy;
      if (slot == 0) t.erase(key);
    }
}
}  // namespace

IdentityReport check_laguerre_kernel_expansion(const Rational& a, const AlphaParam& alpha, int D, int n) {
  const Rational& al = alpha.alpha();
  Rational p = alpha.k() * (n - 1) + 1;
  Rational ap = a + p;
  IdentityReport rep{"laguerre_kernel_expansion", true, true, 0.0, ""};
  // cache Jstar and Omega monomial forms and Laguerre expansions per lambda
  for (int d = 0; d <= D; ++d) {
    TensorLayer lhs, rhs;
    // lhs: sum_{j+m=d} sum_{|lam|=j} (-1)^j alpha^j/(ap)_lam
    //      Jstar_lam(x) (x) Jstar_lam(y) p1(y)^m / m!
    for (int j = 0; j <= d; ++j) {
      int m = d - j;
      MonomialExpansion p1m = MonomialExpansion::p1_power(m, n) * (Rational(1) / factorial(m));
      for (const Partition& lam : partitions(j, n)) {
        Rational den = gen_pochhammer(ap, lam, alpha) * jack_jstar_at_ones(lam, alpha, n);
        if (den == 0) throw PoleError("(a+p) Pochhammer vanished at " + lam.str());
        Rational scale = rat_pow(al, j) / den;
        if (j % 2 == 1) scale = -scale;
        MonomialExpansion js = jack(lam, alpha, n, NormalizationTag::Jstar);
        tensor_accumulate(lhs, js, js * p1m, scale);
      }
    }
    // rhs: sum_{|lam|=d} alpha^d/(ap)_lam  L_lam(x) (x) Omega_lam(y)
    for (const Partition& lam : partitions(d, n)) {
      Rational den = gen_pochhammer(ap, lam, alpha);
      Rational scale = rat_pow(al, d) / den;
      MonomialExpansion lx = laguerre(lam, a, alpha, n).to_monomial();
      MonomialExpansion oy = jack(lam, alpha, n, NormalizationTag::Omega);
      tensor_accumulate(rhs, lx, oy, scale);
    }
    if (!tensor_is_zero(tensor_sub(lhs, rhs))) {
      rep.pass = false;
      rep.detail = "first mismatch in y-degree " + std::to_string(d);
      return rep;
    }
  }
  rep.detail = "exact residual 0 through degree " + std::to_string(D);
  return rep;
}

IdentityReport check_laguerre_sum_expansion(const Rational& a, const AlphaParam& alpha, int D, int n) {
  const Rational& al = alpha.alpha();
  Rational p = alpha.k() * (n - 1) + 1;
  Rational ap = a + p;
  IdentityReport rep{"laguerre_sum_expansion", true, true, 0.0, ""};

  // rhs = |1-x|^{-(a+p)} e(-x/(1-x), y), expanded as a power series in x.
  // For each mu: Jstar_mu(u(x)) with u_i = -x_i/(1-x_i):
  //   p_r(u) = (-1)^r sum_{m>=r} binom(m-1, r-1) p_m(x), truncated at D.
  auto substitute_u = [&](const PowerSumElement& f) {
    PowerSumElement out(D);
    for (const auto& [rho_part, c] : f.coeffs()) {
      // expand prod_i p_{rho_i}(u)
      PowerSumElement acc = PowerSumElement::one(D);
      for (int i = 1; i <= rho_part.length(); ++i) {
        int r = rho_part.part(i);
        PowerSumElement pr(D);
        for (int m = r; m <= D; ++m) {
          Rational coef = factorial(m - 1) / (factorial(r - 1) * factorial(m - r));
          if (r % 2 == 1) coef = -coef;
          pr.add_term(Partition({m}), coef);
        }
        acc = acc * pr;
      }
      out += acc * c;
    }
    return out;
  };

  // x-graded pieces of B(x) = |1-x|^{-(a+p)}
  auto B = pfq_formal(HyperParams{{ap}, {}, alpha}, D, n);

  std::vector<TensorLayer> rhs(D + 1);
  for (int dm = 0; dm <= D; ++dm) {
    for (const Partition& mu : partitions(dm, n)) {
      PowerSumElement ju = substitute_u(jack_jstar_formal(mu, al).with_cap(D));
      MonomialExpansion jux = p_to_m_truncated(ju, n);  // x-degrees |mu| .. D
      MonomialExpansion oy = jack(mu, alpha, n, NormalizationTag::Omega);
      Rational scale = rat_pow(al, dm);
      for (int d = dm; d <= D; ++d) {
        // convolve with B so the total x-degree is d
        MonomialExpansion xpiece(n);
        for (int e = 0; e <= d; ++e) {
          MonomialExpansion jpart = jux.graded_piece(d - e);
          if (jpart.is_zero() || B[e].is_zero()) continue;
          xpiece += B[e] * jpart;
        }
        if (xpiece.is_zero()) continue;
        tensor_accumulate(rhs[d], xpiece, oy, scale);
      }
    }
  }

  for (int d = 0; d <= D; ++d) {
    TensorLayer lhs;
    for (const Partition& lam : partitions(d, n)) {
      MonomialExpansion ox = jack(lam, alpha, n, NormalizationTag::Omega);
      MonomialExpansion ly = laguerre(lam, a, alpha, n).to_monomial();
      tensor_accumulate(lhs, ox, ly, rat_pow(al, d));
    }
    if (!tensor_is_zero(tensor_sub(lhs, rhs[d]))) {
      rep.pass = false;
      rep.detail = "first mismatch in x-degree " + std::to_string(d);
      return rep;
    }
  }
  rep.detail = "exact residual 0 through degree " + std::to_string(D);
  return rep;
}

IdentityReport check_jacobi_symmetry(const Partition& lam, const Rational& a, const Rational& b,
                                     const AlphaParam& alpha, int n) {
  MonomialExpansion gab = jacobi(lam, a, b, alpha, n).to_monomial();
  MonomialExpansion gba = jacobi(lam, b, a, alpha, n).to_monomial();
  MonomialExpansion lhs = one_minus(gab);
  if (lam.weight() % 2 == 1) gba *= Rational(-1);
  IdentityReport rep{"jacobi_symmetry", true, lhs == gba, 0.0, ""};
  rep.detail = rep.pass ? "exact" : "reflection mismatch for " + lam.str();
  return rep;
}

IdentityReport check_jacobi_c_duality(const Partition& lam, const Partition& mu,
                                      const AlphaParam& alpha) {
  RationalFunction lhs = jacobi_c_sym(lam, mu, alpha);
  RationalFunction rhs_raw = jacobi_c_sym(conjugate(lam), conjugate(mu), alpha.reciprocal());
  const Rational& al = alpha.alpha();
  // substitute C -> -alpha C, then scale by (-alpha)^{|lam - mu|}
  RationalFunction rhs = rhs_raw.compose_linear(-al, Rational(0));
  Rational scale = rat_pow(-al, lam.weight() - mu.weight());
  rhs = rhs * RationalFunction::constant(scale);
  IdentityReport rep{"jacobi_c_duality", true, lhs == rhs, 0.0, ""};
  rep.detail = rep.pass ? "symbolic equality in C" : "mismatch at (" + lam.str() + ", " + mu.str() + ")";
  return rep;
}

IdentityReport check_jacobi_full_duality(const Partition& lam, const Rational& a,
                                         const Rational& b, const Rational& n_formal,
                                         const AlphaParam& alpha) {
  const Rational& al = alpha.alpha();
  Rational k = alpha.k();
  Rational p = k * (n_formal - 1) + 1;
  Rational A = a + p, C = a + b + 2 * p;
  AlphaParam inv = alpha.reciprocal();
  Rational ap2 = -al * a, bp2 = -al * b, n2 = -n_formal / al;
  Rational p2 = al * (n2 - 1) + 1;  // k' = alpha
  Rational A2 = ap2 + p2, C2 = ap2 + bp2 + 2 * p2;
  Partition lamc = conjugate(lam);

  auto coeff_J = [](const Partition& L, const Partition& M, const Rational& Av,
                    const Rational& Cv, const Rational& nv, const AlphaParam& alp) {
    // coefficient of J_M in G_L: (-1)^{|M|} (A)_L/(A)_M c_{L/M}(C) / (alpha^{|M|} (kn)_M)
    Rational den = gen_pochhammer(Av, M, alp) *
                   gen_pochhammer(alp.k() * nv, M, alp) * rat_pow(alp.alpha(), M.weight());
    if (den == 0) throw PoleError("formal-duality denominator vanished at " + M.str());
    Rational v = gen_pochhammer(Av, L, alp) * jacobi_c(L, M, Cv, alp) / den;
    return (M.weight() % 2 == 0) ? v : -v;
  };

  for (const Partition& mu : sub_partitions(lam)) {
    Rational lhs = rat_pow(al, mu.weight()) * coeff_J(lam, mu, A, C, n_formal, alpha);
    Rational rhs = coeff_J(lamc, conjugate(mu), A2, C2, n2, inv);
    if (mu.weight() % 2 == 1) rhs = -rhs;
    if (lhs != rhs) {
      IdentityReport rep{"jacobi_full_duality", true, false, 0.0,
                         "formal-only comparison: mismatch at " + mu.str()};
      return rep;
    }
  }
  return IdentityReport{"jacobi_full_duality", true, true, 0.0,
                        "formal-only comparison (n' is not a positive integer): exact"};
}

}  // namespace mhg
