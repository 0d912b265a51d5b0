#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "json.hpp"
#include "mhg/jack.hpp"
#include "mhg/rng.hpp"

using namespace mhg;

TEST_CASE("basic Jack expansions") {
  AlphaParam a2{Rational(2)};
  CHECK(jack_P(Partition({1}), a2, 2) == MonomialExpansion::m(Partition({1}), 2));
  CHECK(jack_P(Partition({1, 1}), a2, 2) == MonomialExpansion::m(Partition({1, 1}), 2));
  // P_(2) = m_2 + (2/(alpha+1)) m_11
  for (const Rational& av : {Rational(1, 2), Rational(2), Rational(7, 3)}) {
    MonomialExpansion p2 = jack_P(Partition({2}), AlphaParam{av}, 2);
    CHECK(p2.coeff(Partition({2})) == 1);
    CHECK(p2.coeff(Partition({1, 1})) == Rational(2) / (av + 1));
  }
  // too many rows: zero polynomial
  CHECK(jack_P(Partition({1, 1, 1}), a2, 2).is_zero());
  // infinite alpha: the monomial basis itself
  CHECK(jack_P(Partition({2, 1}), AlphaParam::infinity(), 3) ==
        MonomialExpansion::m(Partition({2, 1}), 3));
}

TEST_CASE("normalization scalars are mutually consistent") {
  AlphaParam a{Rational(5, 2)};
  Partition lam({2, 1});
  int n = 3;
  using NT = NormalizationTag;
  MonomialExpansion P = jack_P(lam, a, n);
  for (NT t : {NT::Q, NT::J, NT::Jstar, NT::C, NT::Omega}) {
    MonomialExpansion f = jack(lam, a, n, t);
    CHECK(convert(f, lam, t, NT::P, a, n) == P);
    CHECK(convert(convert(P, lam, NT::P, t, a, n), lam, t, NT::P, a, n) == P);
  }
  // J_(1) = p1
  CHECK(jack(Partition({1}), a, 2, NT::J) == MonomialExpansion::p1_power(1, 2));
  // Omega(1_n) = 1
  CHECK(jack(lam, a, n, NT::Omega).eval_at_ones() == 1);
}

TEST_CASE("zonal-type completeness of the C normalization") {
  for (const Rational& av : {Rational(1), Rational(2), Rational(5, 2)}) {
    AlphaParam alpha{av};
    for (int m = 0; m <= 5; ++m)
      for (int n = 1; n <= 3; ++n) {
        MonomialExpansion sum(n);
        for (const Partition& lam : partitions(m, n))
          sum += jack(lam, alpha, n, NormalizationTag::C);
        CHECK(sum == MonomialExpansion::p1_power(m, n));
      }
  }
}

TEST_CASE("principal specialization") {
  AlphaParam a2{Rational(2)};
  Rational X(9, 4);
  CHECK(principal_spec(Partition({1}), a2, X) == X);
  CHECK(principal_spec(Partition({2}), a2, X) == X * (X + 2));
  // against evaluation at ones across weights
  for (const Rational& av : {Rational(1), Rational(2), Rational(5, 2)}) {
    AlphaParam alpha{av};
    for (int m = 0; m <= 6; ++m)
      for (const Partition& lam : partitions(m, m))
        for (int n : {lam.length(), lam.length() + 2}) {
          if (n == 0) continue;
          CHECK(principal_spec(lam, alpha, Rational(n)) ==
                jack(lam, alpha, n, NormalizationTag::J).eval_at_ones());
        }
  }
}

TEST_CASE("generalized binomial coefficients") {
  AlphaParam a2{Rational(2)};
  CHECK(binom(Partition({2, 1}), Partition({2, 1}), a2) == 1);
  CHECK(binom(Partition({2}), Partition({1}), a2) == 2);
  CHECK(binom(Partition({1, 1}), Partition({1}), a2) == 2);
  CHECK(binom(Partition({2}), Partition({1, 1}), a2) == 0);
  // binomials equal the delta specialization of the skew element
  for (const Rational& av : {Rational(1, 2), Rational(3)}) {
    AlphaParam alpha{av};
    for (int m = 1; m <= 5; ++m)
      for (const Partition& lam : partitions(m, m))
        for (const Partition& mu : sub_partitions(lam))
          CHECK(binom(lam, mu, alpha) == eps_delta(skew_jack(lam, mu, alpha, m)));
  }
}

TEST_CASE("binomial chain formula") {
  // eps(J_{lam/mu}) = (1/r!) sum over single-box chains of step products
  for (const Rational& av : {Rational(1, 2), Rational(2), Rational(5, 2)}) {
    AlphaParam alpha{av};
    for (int m = 1; m <= 5; ++m)
      for (const Partition& lam : partitions(m, m))
        for (const Partition& mu : sub_partitions(lam)) {
          int r = lam.weight() - mu.weight();
          if (r < 1 || r > 3) continue;
          // enumerate chains lam = c0 > c1 > ... > cr = mu
          std::function<Rational(const Partition&, int)> chains =
              [&](const Partition& cur, int left) -> Rational {
            if (left == 0) return cur == mu ? Rational(1) : Rational(0);
            Rational acc(0);
            for (const Partition& nxt : remove_one_box(cur)) {
              if (!nxt.contains(mu)) continue;
              acc += binom(cur, nxt, alpha) * chains(nxt, left - 1);
            }
            return acc;
          };
          CHECK(binom(lam, mu, alpha) == chains(lam, r) / factorial(r));
        }
  }
}

TEST_CASE("shift by one") {
  AlphaParam a2{Rational(2)};
  // m_(1)(x+1) at n=2: 2 + m_(1)
  MonomialExpansion shifted = shift_by_one(MonomialExpansion::m(Partition({1}), 2));
  CHECK(shifted.coeff(Partition()) == 2);
  CHECK(shifted.coeff(Partition({1})) == 1);
  // Omega_(2)(1+x) at n=1 is (1+x)^2
  MonomialExpansion om2 = jack(Partition({2}), a2, 1, NormalizationTag::Omega);
  MonomialExpansion sh = shift_by_one(om2);
  CHECK(sh.coeff(Partition()) == 1);
  CHECK(sh.coeff(Partition({1})) == 2);
  CHECK(sh.coeff(Partition({2})) == 1);
  // binomial expansion of the shift at a generic alpha
  AlphaParam a32{Rational(3, 2)};
  Partition lam({2, 1});
  int n = 3;
  MonomialExpansion lhs = shift_by_one(jack(lam, a32, n, NormalizationTag::Omega));
  MonomialExpansion rhs(n);
  for (const Partition& mu : sub_partitions(lam))
    rhs += jack(mu, a32, n, NormalizationTag::Omega) * binom(lam, mu, a32);
  CHECK(lhs == rhs);
}

TEST_CASE("complement evaluation identity") {
  // P_hat(x) = (x1...xn)^N P(1/x) checked at exact rational points,
  // and the same for the Omega normalization
  PhiloxStream rng(17, 0);
  for (const Rational& av : {Rational(1), Rational(2)}) {
    AlphaParam alpha{av};
    int n = 2, N = 2;
    Partition box(std::vector<int>(n, N));
    for (const Partition& mu : sub_partitions(box)) {
      Partition hat = complement(mu, N, n);
      for (int t = 0; t < 20; ++t) {
        std::vector<Rational> x(n), inv(n);
        for (int i = 0; i < n; ++i) {
          Rational xi(1 + static_cast<long>(rng.next_u32() % 13),
                      1 + static_cast<long>(rng.next_u32() % 5));
          xi.canonicalize();
          x[i] = xi;
          inv[i] = Rational(1) / xi;
        }
        Rational detN = rat_pow(x[0] * x[1], N);
        Rational lhs = jack_P(hat, alpha, n).eval_exact(x);
        Rational rhs = detN * jack_P(mu, alpha, n).eval_exact(inv);
        CHECK(lhs == rhs);
        if (jack_j_at_ones(mu, alpha, n) != 0) {
          Rational lo = jack(hat, alpha, n, NormalizationTag::Omega).eval_exact(x);
          Rational ro = detN * jack(mu, alpha, n, NormalizationTag::Omega).eval_exact(inv);
          CHECK(lo == ro);
        }
      }
    }
  }
}

TEST_CASE("formal degree") {
  AlphaParam a1{Rational(1)};
  FormalDegree fd0 = formal_degree(Partition(), a1, 2);
  CHECK(fd0.eps_form == 1);
  REQUIRE(fd0.product_form.has_value());
  CHECK(*fd0.product_form == 1);
  FormalDegree fd1 = formal_degree(Partition({1}), a1, 2);
  REQUIRE(fd1.product_form.has_value());
  CHECK(fd1.eps_form == *fd1.product_form);
  AlphaParam ah{Rational(1, 2)};
  FormalDegree fd2 = formal_degree(Partition({2, 1}), ah, 3);
  REQUIRE(fd2.product_form.has_value());
  CHECK(fd2.eps_form == *fd2.product_form);
  // non-integer k: only the specialization form
  FormalDegree fd3 = formal_degree(Partition({1}), AlphaParam{Rational(2)}, 2);
  CHECK(!fd3.product_form.has_value());
}

TEST_CASE("recurrence route matches Gram-Schmidt bit for bit") {
  for (const Rational& av : {Rational(1, 2), Rational(2), Rational(5, 2)}) {
    AlphaParam alpha{av};
    for (int n = 1; n <= 3; ++n)
      for (int m = 0; m <= 7; ++m)
        for (const Partition& lam : partitions(m, n)) {
          MonomialExpansion gs = jack_P(lam, alpha, n);
          std::map<Partition, Rational> rec = jack_p_recurrence<Rational>(lam, alpha, n);
          MonomialExpansion rm(n);
          for (const auto& [mu, c] : rec) rm.add_term(mu, c);
          CHECK(gs == rm);
        }
  }
}

TEST_CASE("golden coefficient fixtures") {
  // committed tables of P coefficients for |lambda| <= 6
  for (const std::string& name : {std::string("jack_p_alpha_1_2"), std::string("jack_p_alpha_1"),
                                  std::string("jack_p_alpha_2")}) {
    std::string fixture = "test-data/" + name + ".json";
    std::ifstream in(fixture);
    REQUIRE_MESSAGE(in.good(), ("missing fixture " + fixture).c_str());
    nlohmann::json j = nlohmann::json::parse(in);
    AlphaParam alpha = parse_alpha(j["alpha"].get<std::string>());
    int n = j["n"].get<int>();
    for (auto it = j["coeffs"].begin(); it != j["coeffs"].end(); ++it) {
      Partition lam = parse_partition(it.key());
      MonomialExpansion expect(n);
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
        expect.add_term(parse_partition(jt.key()), parse_rational(jt.value().get<std::string>()));
      CHECK(jack_P(lam, alpha, n) == expect);
    }
  }
}

TEST_CASE("on-disk cache directory honors the environment variable") {
  std::string dir = "build/test_cache_dir";
  setenv("MHYPERG_CACHE_DIR", dir.c_str(), 1);
  Partition lam({4, 2, 1});
  AlphaParam alpha{Rational(7, 3)};
  MonomialExpansion first = jack_P(lam, alpha, 3);
  bool found = false;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().string().find("jackP") != std::string::npos) found = true;
  CHECK(found);
  CHECK(jack_P(lam, alpha, 3) == first);
  unsetenv("MHYPERG_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST_CASE("expansion cache tolerates concurrent readers") {
  AlphaParam alpha{Rational(5, 2)};
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t]() {
      for (int m = 1; m <= 6; ++m)
        for (const Partition& lam : partitions(m, 3)) {
          MonomialExpansion f = jack_P(lam, alpha, 3);
          if (!lam.empty() && f.coeff(lam) != 1 && lam.length() <= 3) ok = false;
        }
    });
  for (auto& th : pool) th.join();
  CHECK(ok.load());
}
