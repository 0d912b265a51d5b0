// Acceptance harness: runs every asserted criterion at its pinned tolerance
// and prints one pass/fail line per criterion. The conjecture-evidence table
// is emitted as data and never gates the exit code.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "mhg/diffops.hpp"
#include "mhg/mc.hpp"
#include "mhg/report.hpp"
#include "mhg/rng.hpp"

using namespace mhg;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const std::string& what, bool pass, const std::string& detail,
            double seconds) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << what;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << " (" << seconds << " s)\n";
  std::cout.flush();
  if (!pass) ++g_failures;
}

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<AlphaParam> kFiveAlphas = {
    AlphaParam(Rational(1, 2)), AlphaParam(Rational(1)), AlphaParam(Rational(2)),
    AlphaParam(Rational(3)), AlphaParam(Rational(5, 2))};

const std::vector<AlphaParam> kFourAlphas = {AlphaParam(Rational(1, 2)), AlphaParam(Rational(1)),
                                             AlphaParam(Rational(2)), AlphaParam(Rational(3))};

void criterion1() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail = "sum of C over each weight m <= 8 equals p1^m, n <= 4, five alpha values";
  for (const AlphaParam& alpha : kFiveAlphas) {
    for (int m = 0; m <= 8 && pass; ++m)
      for (int n = 1; n <= 4 && pass; ++n) {
        MonomialExpansion sum(n);
        for (const Partition& lam : partitions(m, n))
          sum += jack(lam, alpha, n, NormalizationTag::C);
        if (!(sum == MonomialExpansion::p1_power(m, n))) {
          pass = false;
          detail = "mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                   " alpha=" + alpha.str();
        }
      }
  }
  double s = secs(t0);
  if (s >= 30.0) {
    pass = false;
    detail += " [runtime over the 30 s target]";
  }
  report(1, "exact zonal-type normalization", pass, detail, s);
}

void criterion2() {
  auto t0 = Clock::now();
  bool pass = true;
  double worst0 = 0, worst1 = 0;
  PhiloxStream rng(2026, 0);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 4;
    const AlphaParam& alpha = kFiveAlphas[t % kFiveAlphas.size()];
    std::vector<double> x(n);
    for (double& v : x) v = 0.6 * rng.next_double() - 0.3;
    Truncation tr{30, n};
    double s = 0;
    for (double v : x) s += v;
    double e0 = std::abs(pfq(HyperParamsD{{}, {}, alpha}, x, tr).value - std::exp(s));
    double a = 0.25 + 2.0 * rng.next_double();
    double prod = 1;
    for (double v : x) prod *= std::pow(1.0 - v, -a);
    double e1 = std::abs(pfq(HyperParamsD{{a}, {}, alpha}, x, tr).value - prod);
    worst0 = std::max(worst0, e0);
    worst1 = std::max(worst1, e1);
  }
  pass = worst0 <= 1e-12 && worst1 <= 1e-10;
  report(2, "closed forms of the lowest series", pass,
         "max abs errors " + std::to_string(worst0) + " (target 1e-12) and " +
             std::to_string(worst1) + " (target 1e-10), 100 points",
         secs(t0));
}

void criterion3() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail = "box-product specialization equals exact evaluation at 1_n, |lambda| <= 6";
  for (const AlphaParam& alpha : kFiveAlphas) {
    for (int m = 0; m <= 6 && pass; ++m)
      for (const Partition& lam : partitions(m, m)) {
        for (int n : {lam.length(), std::min(std::max(lam.length(), 1), 4), lam.length() + 1}) {
          if (n < lam.length() || n == 0) continue;
          if (principal_spec(lam, alpha, Rational(n)) !=
              jack(lam, alpha, n, NormalizationTag::J).eval_at_ones()) {
            pass = false;
            detail = "mismatch at " + lam.str() + " n=" + std::to_string(n) +
                     " alpha=" + alpha.str();
            break;
          }
        }
        if (!pass) break;
      }
  }
  report(3, "principal specialization", pass, detail, secs(t0));
}

void criterion4() {
  auto t0 = Clock::now();
  // 50 deterministic random rational sets over n <= 3, N <= 3
  bool pass = true;
  std::string detail = "50 balanced terminating sums, zero tolerance";
  PhiloxStream rng(4242, 0);
  int made = 0, guard = 0;
  while (made < 50 && guard < 2000) {
    ++guard;
    const AlphaParam& alpha = kFourAlphas[made % kFourAlphas.size()];
    int n = 1 + made % 3;
    int N = 1 + (made / 3) % 3;
    Rational a(1 + static_cast<long>(rng.next_u32() % 9),
               1 + static_cast<long>(rng.next_u32() % 3));
    a.canonicalize();
    Rational b = a + Rational(1 + static_cast<long>(rng.next_u32() % 6), 7);
    Rational c = a + b + Rational(2, 7) + static_cast<long>(rng.next_u32() % 4);
    try {
      IdentityReport rep = check_saalschutz(a, b, c, N, n, alpha);
      if (!rep.pass) {
        pass = false;
        detail = "failure at a=" + rat_str(a) + " b=" + rat_str(b) + " c=" + rat_str(c) +
                 " N=" + std::to_string(N) + " n=" + std::to_string(n);
        break;
      }
      ++made;
    } catch (const PoleError&) {
      continue;
    }
  }
  if (made < 50) pass = false;
  report(4, "terminating balanced summation", pass, detail, secs(t0));
}

void criterion5() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail =
      "euler, kummer, duality, kernel derivation, both generating expansions: exact through "
      "degree 6";
  for (const AlphaParam& alpha : kFourAlphas) {
    Rational k = alpha.k();
    for (int n = 1; n <= 3 && pass; ++n) {
      Rational clow = k * (n - 1) + Rational(7, 2);
      if (!check_euler(Rational(1, 2), Rational(2), clow, alpha, 6, n).pass) pass = false;
      if (!check_kummer(Rational(1, 2), k * (n - 1) + Rational(7, 3), alpha, 6, n).pass)
        pass = false;
      if (!check_kernel_deriv(alpha, 6, n).pass) pass = false;
      if (!check_laguerre_kernel_expansion(Rational(1, 2), alpha, 6, n).pass) pass = false;
      if (!check_laguerre_sum_expansion(Rational(1, 2), alpha, 6, n).pass) pass = false;
      if (!pass) detail = "failure at alpha=" + alpha.str() + " n=" + std::to_string(n);
    }
    if (pass) {
      Rational cdual = k * 5 + Rational(7, 2);
      if (!check_duality({Rational(1, 2), Rational(2)}, {cdual}, alpha, 6).pass ||
          !check_duality({Rational(3, 4)}, {}, alpha, 6).pass) {
        pass = false;
        detail = "duality failure at alpha=" + alpha.str();
      }
    }
  }
  report(5, "exact transformation identities", pass, detail, secs(t0));
}

void criterion6() {
  auto t0 = Clock::now();
  auto [pass, detail] = gauss_trend_summary();
  report(6, "gauss summation convergence trend", pass, detail, secs(t0));
}

void criterion7() {
  auto t0 = Clock::now();
  SuiteConfig cfg;
  cfg.suite = "operators";
  cfg.alphas = kFourAlphas;
  cfg.ns = {1, 2, 3};
  cfg.max_degree = 6;
  cfg.seed = 42;
  auto rows = suite_operators(cfg);
  bool pass = true;
  std::string detail = "eigenfunction and annihilation residuals all exactly zero";
  for (const auto& r : rows)
    if (r.failed()) {
      pass = false;
      detail = r.name + ": " + r.detail;
      break;
    }
  report(7, "differential-operator eigenchecks", pass, detail, secs(t0));
}

void criterion8() {
  auto t0 = Clock::now();
  auto [pass, detail] = jacobi_structure_summary(
      {AlphaParam(Rational(1, 2)), AlphaParam(Rational(2)), AlphaParam(Rational(3))});
  report(8, "jacobi coefficient structure", pass, detail, secs(t0));
}

void criterion9() {
  const std::uint64_t S = 1000000, seed = 42;
  bool pass = true;
  std::string detail;
  auto run = [&](const McReport& rep) {
    auto t0 = Clock::now();
    (void)t0;
    if (!rep.pass) {
      pass = false;
      if (detail.empty()) detail = rep.name + " at " + std::to_string(rep.sigmas) + " sigmas";
    }
    return rep;
  };
  auto t0 = Clock::now();
  AlphaParam a1{Rational(1)}, a2{Rational(2)};
  double slowest = 0;
  auto timed = [&](auto&& fn) {
    auto tt = Clock::now();
    auto rep = fn();
    slowest = std::max(slowest, secs(tt));
    return run(rep);
  };
  timed([&] { return selberg_kadell_check(Partition({1}), 2.0, 3.0, 2, a1, S, seed); });
  timed([&] { return selberg_kadell_check(Partition({2, 1}), 3.0, 3.0, 2, a2, S, seed + 1); });
  timed([&] { return laguerre_moment_check(Partition({1}), 2.0, 2, a1, S, seed + 2); });
  timed([&] {
    return orthogonality_check(WeightFamily::Kind::Laguerre, Partition({1}), Partition(), 2.0,
                               0.0, a1, 2, S, seed + 3);
  });
  timed([&] {
    return orthogonality_check(WeightFamily::Kind::Laguerre, Partition({1}), Partition({1}), 2.0,
                               0.0, a1, 2, S, seed + 4);
  });
  timed([&] {
    return orthogonality_check(WeightFamily::Kind::Hermite, Partition({2}), Partition({1, 1}),
                               0.0, 0.0, a2, 2, S, seed + 5);
  });
  timed([&] {
    return orthogonality_check(WeightFamily::Kind::Hermite, Partition({2}), Partition({2}), 0.0,
                               0.0, a2, 2, S, seed + 6);
  });
  std::vector<double> y{1.0, 1.5};
  timed([&] { return laplace_transform_check(Partition({1}), 3.0, a1, y, 2, S, seed + 7, 24, true); });
  timed([&] { return laplace_transform_check(Partition({1}), 3.0, a2, y, 2, S, seed + 8, 24, true); });
  timed([&] {
    return laplace_transform_check(Partition({1}), 3.0, AlphaParam::infinity(), y, 2, S, seed + 9, 24, true);
  });
  std::vector<double> yh{1.0, 1.3}, zh{0.2, 0.1}, yb{0.3, 0.2};
  timed([&] { return hankel_check(HankelKind::TransformLaw, Partition(), 1.0, yh, zh, a2, 2, S, seed + 10, 24); });
  timed([&] { return hankel_check(HankelKind::EigenRelation, Partition({1}), 1.0, yb, {}, a2, 2, S, seed + 11, 24); });
  timed([&] { return hermite_even_moment(Partition({1, 1}), a1, 2, S, seed + 12); });
  if (slowest >= 120.0) {
    pass = false;
    detail += " [a check exceeded the 2-minute target]";
  }
  report(9, "beta-ensemble Monte Carlo consistency", pass,
         pass ? "all statistical checks within 3 standard errors at 1e6 samples, slowest " +
                    std::to_string(slowest) + " s"
              : detail,
         secs(t0));
}

void criterion10() {
  auto t0 = Clock::now();
  SuiteConfig cfg;
  cfg.suite = "conjectures";
  cfg.alphas = kFiveAlphas;
  cfg.ns = {2, 3, 4};
  cfg.samples = 200000;
  cfg.seed = 42;
  SuiteReport rep;
  rep.config = cfg;
  rep.rows = suite_conjectures(cfg);
  bool emitted = true;
  std::string path = "acceptance_evidence.json";
  {
    std::ofstream out(path);
    if (!out) emitted = false;
    else out << report_json(rep);
  }
  bool all_evidence = true;
  for (const auto& r : rep.rows)
    if (r.status == "fail") all_evidence = false;  // conjecture rows never carry "fail"
  report(10, "conjecture evidence table", emitted && all_evidence,
         "machine-readable evidence written to " + path + " (" +
             std::to_string(rep.rows.size()) + " rows; informational only)",
         secs(t0));
}

}  // namespace

int main() {
  std::cout << "acceptance run: exact and statistical criteria\n";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures == 0) {
    std::cout << "all acceptance criteria satisfied\n";
    return 0;
  }
  std::cout << g_failures << " criterion(s) failed\n";
  return 1;
}
