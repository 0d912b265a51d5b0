#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mhg/rng.hpp"
#include "mhg/symfun.hpp"

using namespace mhg;

namespace {
PowerSumElement p1_power(int m, int cap = PowerSumElement::kDefaultCap) {
  PowerSumElement f = PowerSumElement::one(cap);
  for (int i = 0; i < m; ++i) f = f * PowerSumElement::p(1, cap);
  return f;
}
}  // namespace

TEST_CASE("inner product diagonal rule") {
  AlphaParam a2{Rational(2)};
  CHECK(inner_product(PowerSumElement::p(1), PowerSumElement::p(1), a2) == 2);
  CHECK(inner_product(PowerSumElement::p(2), PowerSumElement::p(2), a2) == 4);
  // <p2, p2>_alpha = 2 alpha
  AlphaParam a3{Rational(3)};
  CHECK(inner_product(PowerSumElement::p(2), PowerSumElement::p(2), a3) == 6);
  // <p1^m, p1^m>_2 = 2^m m!
  for (int m = 0; m <= 6; ++m) {
    Rational expect = rat_pow(Rational(2), m) * factorial(m);
    CHECK(inner_product(p1_power(m), p1_power(m), a2) == expect);
  }
  // off-diagonal
  CHECK(inner_product(PowerSumElement::p(2), p1_power(2), a2) == 0);
}

TEST_CASE("truncation flag blocks exact operations") {
  PowerSumElement f = PowerSumElement::p(2, 3);
  PowerSumElement g = f * f;  // degree 4 > cap 3
  CHECK(g.truncated());
  CHECK_THROWS_AS(inner_product(g, g, AlphaParam{Rational(2)}), ExactnessError);
}

TEST_CASE("omega endomorphism") {
  AlphaParam a2{Rational(2)};
  // generator rule: p1 -> alpha p1
  PowerSumElement w1 = omega_alpha(PowerSumElement::p(1), a2);
  CHECK(w1.coeff(Partition({1})) == 2);
  // involution: omega_{1/alpha} after omega_alpha is the identity
  for (const Rational& av : {Rational(1, 2), Rational(2), Rational(5, 2)}) {
    AlphaParam alpha{av};
    PowerSumElement f(8);
    f.add_term(Partition({3, 2}), Rational(5, 7));
    f.add_term(Partition({2, 1, 1}), Rational(-1, 3));
    f.add_term(Partition({1}), Rational(4));
    CHECK(omega_alpha(omega_alpha(f, alpha), alpha.reciprocal()) == f);
  }
}

TEST_CASE("omega maps P to the conjugate Q") {
  for (const Rational& av : {Rational(1, 2), Rational(2), Rational(3)}) {
    AlphaParam alpha{av};
    for (int m = 1; m <= 6; ++m)
      for (const Partition& lam : partitions(m, m)) {
        PowerSumElement lhs = omega_alpha(jack_p_formal(lam, av), alpha);
        Partition lc = conjugate(lam);
        auto [h, hp] = hook_products(lc, alpha.reciprocal());
        PowerSumElement rhs = jack_p_formal(lc, Rational(1) / av) * Rational(h / hp);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("specializations") {
  PowerSumElement f = PowerSumElement::p(1) * PowerSumElement::p(1) * PowerSumElement::p(3);
  Rational X(7, 2);
  CHECK(eps_X(f, X) == rat_pow(X, 3));
  CHECK(eps_delta(f) == 0);
  CHECK(eps_delta(p1_power(4)) == 1);
  // truncated exponential: eps_delta of sum p1^m/m! accumulates 1/m!
  PowerSumElement expo(6);
  Rational expect(0);
  for (int m = 0; m <= 6; ++m) {
    expo += p1_power(m, 6) * (Rational(1) / factorial(m));
    expect += Rational(1) / factorial(m);
  }
  CHECK(eps_delta(expo) == expect);
  std::vector<double> x{1.0, 2.0};
  CHECK(eval_powersum(PowerSumElement::p(2), x) == doctest::Approx(5.0));
  std::vector<Rational> xr{Rational(1), Rational(2)};
  CHECK(eval_powersum_exact(PowerSumElement::p(2), xr) == 5);
}

TEST_CASE("monomial to power-sum conversion") {
  CHECK(monomial_in_powersums(Partition({1})) == PowerSumElement::p(1, 1));
  // m_(1,1) = (p1^2 - p2)/2
  PowerSumElement m11 = monomial_in_powersums(Partition({1, 1}));
  CHECK(m11.coeff(Partition({1, 1})) == Rational(1, 2));
  CHECK(m11.coeff(Partition({2})) == Rational(-1, 2));
  // round trip at full rank on a random degree-5 element
  PhiloxStream rng(3, 0);
  MonomialExpansion f(5);
  for (const Partition& lam : partitions(5, 5)) {
    Rational c(static_cast<long>(rng.next_u32() % 19) - 9, 4);
    c.canonicalize();
    f.add_term(lam, c);
  }
  CHECK(p_to_m(m_to_p(f), 5) == f);
  // and in the other direction on a degree-4 power-sum element
  PowerSumElement g(4);
  g.add_term(Partition({3, 1}), Rational(2, 3));
  g.add_term(Partition({2, 2}), Rational(-1, 5));
  g.add_term(Partition({4}), Rational(7));
  CHECK(m_to_p(p_to_m(g, 4)) == g);
}

TEST_CASE("Jack norms match the hook products") {
  for (const Rational& av :
       {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(5, 2)}) {
    AlphaParam alpha{av};
    for (int m = 0; m <= 8; ++m)
      for (const Partition& lam : partitions(m, m)) {
        auto [h, hp] = hook_products(lam, alpha);
        CHECK(jack_p_norm(lam, av) == hp / h);
        PowerSumElement J = jack_j_formal(lam, av);
        CHECK(inner_product(J, J, alpha) == h * hp);
      }
  }
}

TEST_CASE("Jack orthogonality") {
  for (const Rational& av : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
    AlphaParam alpha{av};
    for (int m = 1; m <= 6; ++m) {
      auto parts = partitions(m, m);
      for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
          CHECK(inner_product(jack_p_formal(parts[i], av), jack_p_formal(parts[j], av), alpha) ==
                0);
    }
  }
}

TEST_CASE("skew elements") {
  AlphaParam a2{Rational(2)};
  // J_{lam/lam} = 1
  PowerSumElement one = skew_jack(Partition({2, 1}), Partition({2, 1}), a2);
  CHECK(one.coeff(Partition()) == 1);
  CHECK(one.coeffs().size() == 1);
  // J_{(1)/()} = J_(1) = p1
  CHECK(skew_jack(Partition({1}), Partition(), a2) == PowerSumElement::p(1, 1));
  // mu not inside lambda: zero by convention
  CHECK(skew_jack(Partition({2}), Partition({1, 1}), a2).is_zero());
  // adjoint property <J_lam, J*_mu J*_nu> = <J_{lam/mu}, J*_nu>
  for (const Rational& av : {Rational(1, 2), Rational(2)}) {
    AlphaParam alpha{av};
    for (int m = 1; m <= 6; ++m)
      for (const Partition& lam : partitions(m, m))
        for (const Partition& mu : sub_partitions(lam)) {
          int r = lam.weight() - mu.weight();
          if (r == 0) continue;
          PowerSumElement skew = skew_jack(lam, mu, alpha, m);
          PowerSumElement jlam = jack_j_formal(lam, av).with_cap(m);
          PowerSumElement jsmu = jack_jstar_formal(mu, av).with_cap(m);
          for (const Partition& nu : partitions(r, r)) {
            PowerSumElement jsnu = jack_jstar_formal(nu, av).with_cap(m);
            CHECK(inner_product(jlam, jsmu * jsnu, alpha) ==
                  inner_product(skew, jsnu, alpha));
          }
        }
  }
}

TEST_CASE("derivative in p1 is adjoint to multiplication") {
  PhiloxStream rng(5, 0);
  for (const Rational& av : {Rational(1, 2), Rational(3)}) {
    AlphaParam alpha{av};
    for (int trial = 0; trial < 10; ++trial) {
      PowerSumElement f(6), g(6);
      for (const Partition& lam : partitions(4, 4)) {
        Rational cf(static_cast<long>(rng.next_u32() % 11) - 5, 2);
        cf.canonicalize();
        f.add_term(lam, cf);
      }
      for (const Partition& lam : partitions(3, 3)) {
        Rational cg(static_cast<long>(rng.next_u32() % 11) - 5, 3);
        cg.canonicalize();
        g.add_term(lam, cg);
      }
      Rational lhs = inner_product(f.d_dp1(), g, alpha);
      Rational rhs = inner_product(f, g * PowerSumElement::p(1, 6), alpha) / av;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("power-sum JSON round trip") {
  PowerSumElement f(5);
  f.add_term(Partition({2, 1}), Rational(3, 4));
  f.add_term(Partition(), Rational(-2));
  PowerSumElement g = PowerSumElement::from_json(f.json(), 5);
  CHECK(f == g);
}
