#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mhg/hyper.hpp"
#include "mhg/rng.hpp"

using namespace mhg;

TEST_CASE("scalar gamma helpers") {
  AlphaParam a2{Rational(2)};
  CHECK(gamma_n(2.5, a2, 1) == doctest::Approx(std::tgamma(2.5)).epsilon(1e-13));
  CHECK(c_n_prime(a2, 1) == doctest::Approx(1.0));
  // c_n'(alpha=2) against n!/pi^{n/2} Gamma_n(n/2) at n = 2, 3
  for (int n : {2, 3}) {
    double lhs = c_n_prime(a2, n);
    double rhs = std::tgamma(n + 1.0) / std::pow(M_PI, n / 2.0) * gamma_n(n / 2.0, a2, n);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  // Gamma_n(a; lambda) = (a)_lambda Gamma_n(a)
  Partition lam({2, 1});
  for (double a : {2.3, 4.7}) {
    double lhs = gamma_n_partition(a, lam, a2, 3);
    double rhs = gen_pochhammer_d(a, lam, a2) * gamma_n(a, a2, 3);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gamma_n(1.0, AlphaParam{Rational(1)}, 2), PoleError);  // 1 - k = 0
  CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
}

TEST_CASE("closed forms of the lowest series") {
  AlphaParam a2{Rational(2)};
  PhiloxStream rng(23, 0);
  for (int n = 1; n <= 4; ++n) {
    Truncation tr{30, n};
    for (int t = 0; t < 10; ++t) {
      std::vector<double> x(n);
      for (double& v : x) v = 0.6 * rng.next_double() - 0.3;
      PfqResult r0 = pfq(HyperParamsD{{}, {}, a2}, x, tr);
      double s = 0;
      for (double v : x) s += v;
      CHECK(std::abs(r0.value - std::exp(s)) <= 1e-12);
      double a = 0.25 + 2.0 * rng.next_double();
      PfqResult r1 = pfq(HyperParamsD{{a}, {}, a2}, x, tr);
      double prod = 1;
      for (double v : x) prod *= std::pow(1.0 - v, -a);
      CHECK(std::abs(r1.value - prod) <= 1e-10);
    }
  }
}

TEST_CASE("two-argument series") {
  AlphaParam a2{Rational(2)};
  Truncation tr{30, 3};
  std::vector<double> x{0.2, -0.1, 0.3}, ones{1, 1, 1}, y{0.1, 0.25, -0.2};
  // reduction at y = 1_n
  PfqResult one_arg = pfq(HyperParamsD{{0.7}, {}, a2}, x, tr);
  PfqResult two_arg = pfq_two(HyperParamsD{{0.7}, {}, a2}, x, ones, tr);
  CHECK(two_arg.value == doctest::Approx(one_arg.value).epsilon(1e-14));
  // product kernel 1F0(kn; x, y) = prod (1 - x_i y_j)^{-k}
  double k = 0.5;
  PfqResult pk = pfq_two(HyperParamsD{{k * 3}, {}, a2}, x, y, tr);
  double target = 1;
  for (double xi : x)
    for (double yj : y) target *= std::pow(1 - xi * yj, -k);
  CHECK(std::abs(pk.value - target) <= 1e-9);
}

TEST_CASE("exponential kernel") {
  AlphaParam a2{Rational(2)}, a1{Rational(1)};
  Truncation tr{30, 2};
  std::vector<double> x{0.7, 0.2}, y{1.3, 0.4}, zero{0, 0}, ones{1, 1};
  // e(0, y) = 1 and e(1_n, y) = e^{tr y}
  CHECK(exp_kernel(zero, y, a2, tr).value == doctest::Approx(1.0));
  CHECK(exp_kernel(ones, y, a2, tr).value == doctest::Approx(std::exp(1.7)).epsilon(1e-12));
  // shift law e(x, y) e(1, y) = e(x + 1, y)
  std::vector<double> xp{1.7, 1.2};
  CHECK(exp_kernel(xp, y, a2, tr).value ==
        doctest::Approx(exp_kernel(x, y, a2, tr).value * std::exp(1.7)).epsilon(1e-8));
  // determinant oracle at alpha = 1 (well-known closed form, external to
  // the series machinery)
  double det = std::exp(x[0] * y[0] + x[1] * y[1]) - std::exp(x[0] * y[1] + x[1] * y[0]);
  double oracle = det / ((x[0] - x[1]) * (y[0] - y[1]));
  CHECK(exp_kernel(x, y, a1, tr).value == doctest::Approx(oracle).epsilon(1e-12));
  // permutation closed form at alpha = infinity
  double perm = 0.5 * (std::exp(x[0] * y[0] + x[1] * y[1]) + std::exp(x[0] * y[1] + x[1] * y[0]));
  CHECK(exp_kernel(x, y, AlphaParam::infinity(), tr).value == doctest::Approx(perm));
}

TEST_CASE("scalar reduction at n = 1 is alpha independent") {
  std::vector<double> x{0.3};
  Truncation tr{60, 1};
  double cls = 0;
  {
    double term = 1;
    for (int m = 0; m < 60; ++m) {
      if (m) term *= (0.5 + m - 1) * (1.5 + m - 1) / ((2.25 + m - 1) * m) * 0.3;
      cls += term;
    }
  }
  for (const Rational& av : {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
    PfqResult r = pfq(HyperParamsD{{0.5, 1.5}, {2.25}, AlphaParam{av}}, x, tr);
    CHECK(r.value == doctest::Approx(cls).epsilon(1e-14));
  }
}

TEST_CASE("pole detection") {
  AlphaParam a2{Rational(2)};
  std::vector<double> x{0.1, 0.1};
  Truncation tr{10, 2};
  // lower parameter 0 is an immediate pole
  CHECK_THROWS_AS(pfq(HyperParamsD{{1.0}, {0.0}, a2}, x, tr), PoleError);
  // b = -2 reachable within degree 10
  CHECK_THROWS_AS(pfq(HyperParamsD{{1.0}, {-2.0}, a2}, x, tr), PoleError);
  std::vector<Rational> lower{Rational(-2)};
  CHECK_THROWS_AS(pole_check_exact(lower, a2, 2, 10), PoleError);
  // the same value is safe when the truncation cannot reach it
  std::vector<Rational> lower_far{Rational(-40)};
  CHECK_NOTHROW(pole_check_exact(lower_far, a2, 2, 10));
}

TEST_CASE("formal layers") {
  AlphaParam a2{Rational(2)};
  int n = 3, D = 6;
  // 0F0 layer d = p1^d / d!
  auto l00 = pfq_formal(HyperParams{{}, {}, a2}, D, n);
  for (int d = 0; d <= D; ++d)
    CHECK(l00[d] == MonomialExpansion::p1_power(d, n) * (Rational(1) / factorial(d)));
  // 1F0(a) layer 1 = a p1
  Rational a(5, 7);
  auto l10 = pfq_formal(HyperParams{{a}, {}, a2}, D, n);
  CHECK(l10[1] == MonomialExpansion::p1_power(1, n) * a);
  // 1F0 layers against the expanded binomial product prod (1 - x_i)^{-a}
  NVarPoly prod = NVarPoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    NVarPoly series(n);
    for (int m = 0; m <= D; ++m) {
      std::vector<int> e(n, 0);
      e[i] = m;
      series.add_term(std::move(e), rising(a, m) / factorial(m));
    }
    prod = prod * series;
  }
  MonomialExpansion full(n);
  for (int d = 0; d <= D; ++d) full += prod.graded_piece(d).to_monomial_basis();
  MonomialExpansion sum(n);
  for (int d = 0; d <= D; ++d) sum += l10[d];
  CHECK(full == sum);
}

TEST_CASE("identity checks on sample instances") {
  AlphaParam a2{Rational(2)};
  CHECK(check_euler(Rational(1, 2), Rational(2), Rational(3), a2, 5, 2).pass);
  CHECK(check_kummer(Rational(1, 2), Rational(7, 3), AlphaParam{Rational(3)}, 6, 2).pass);
  CHECK(check_duality({Rational(1, 2), Rational(2)}, {Rational(3)}, a2, 5).pass);
  CHECK(check_kernel_deriv(AlphaParam{Rational(5, 2)}, 6, 3).pass);
  CHECK(check_saalschutz(Rational(1, 2), Rational(3, 4), Rational(5, 3), 2, 2, a2).pass);
}

TEST_CASE("terminating series reduce to the classical scalar sum") {
  // n = 1, N = 1: 3F2(a, b, -1; c, d; 1) = 1 - ab/(cd)
  Rational a(2, 3), b(5, 4), c(7, 5);
  AlphaParam alpha{Rational(2)};  // alpha is irrelevant at n = 1
  Rational p(1);
  Rational d = a + b - c - 1 + p;
  Rational classical = 1 - a * b / (c * d);
  Rational series(0);
  for (int m = 0; m <= 1; ++m)
    for (const Partition& lam : partitions(m, 1)) {
      Rational num = gen_pochhammer(a, lam, alpha) * gen_pochhammer(b, lam, alpha) *
                     gen_pochhammer(Rational(-1), lam, alpha);
      Rational den = gen_pochhammer(c, lam, alpha) * gen_pochhammer(d, lam, alpha);
      series += num / den * rat_pow(alpha.alpha(), m) * jack_jstar_at_ones(lam, alpha, 1);
    }
  CHECK(series == classical);
  CHECK(check_saalschutz(a, b, c, 1, 1, alpha).pass);
}

TEST_CASE("gauss summation trend") {
  GaussReport rep = check_gauss(0.3, 0.4, 4.5, AlphaParam{Rational(2)}, 2, 40);
  CHECK(rep.pass);
  CHECK(rep.rel_error <= 1e-3);
  CHECK(rep.monotone);
  CHECK_THROWS_AS(check_gauss(1.0, 1.0, 2.0, AlphaParam{Rational(2)}, 2, 40), ParameterError);
  // terminating case: exact rational equality with the Gamma_n ratio, which
  // collapses to box Pochhammers when one upper parameter is -N
  for (const Rational& av : {Rational(1), Rational(2), Rational(1, 2)}) {
    AlphaParam alpha{av};
    for (int N : {1, 2, 3}) {
      for (int n = 1; n <= 3; ++n) {
        Rational b(3, 7), c = alpha.k() * (n - 1) + Rational(19, 3);
        Rational lhs = pfq_at_ones_exact(HyperParams{{Rational(-N), b}, {c}, alpha}, N * n, n);
        Partition box(std::vector<int>(n, N));
        Rational rhs = gen_pochhammer(c - b, box, alpha) / gen_pochhammer(c, box, alpha);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("shifted-argument product law, numeric") {
  std::vector<double> x{0.05, 0.1}, y{0.15, 0.2};
  for (const Rational& av : {Rational(1), Rational(2), Rational(3)}) {
    IdentityReport rep = check_shifted_1F0(0.8, AlphaParam{av}, 2, x, y, 30);
    CHECK(rep.float_residual <= 1e-6);
  }
}

TEST_CASE("two-argument evaluator matches the direct series") {
  AlphaParam a2{Rational(2)};
  std::vector<double> y{0.8, 1.1};
  TwoArgSeries kernel({}, {}, a2, 2, 24, y, true, true);
  std::vector<double> x{0.9, 0.4};
  Truncation tr{24, 2};
  std::vector<double> negx{-0.9, -0.4};
  double direct = exp_kernel(negx, y, a2, tr).value;
  double tail = 0;
  CHECK(kernel.eval(x.data(), &tail) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(tail < 1e-10);
  // Bessel-type evaluator
  TwoArgSeries bess({}, {2.5}, a2, 2, 24, y, true, false);
  double bdirect = pfq_two(HyperParamsD{{}, {2.5}, a2}, negx, y, tr).value;
  CHECK(bess.eval(x.data()) == doctest::Approx(bdirect).epsilon(1e-12));
  CHECK_THROWS_AS(TwoArgSeries({1.0}, {}, a2, 2, 10, y, false, true), ParameterError);
}
