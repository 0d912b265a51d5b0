#include "mhg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mhg/diffops.hpp"
#include "mhg/mc.hpp"
#include "mhg/report.hpp"

namespace mhg {

namespace {

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stod(tok));
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(parse_rational(tok));
  return out;
}

std::vector<AlphaParam> parse_alphas(const std::string& s) {
  std::vector<AlphaParam> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(parse_alpha(tok));
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open output path " + out_path);
    out << text;
  }
}

nlohmann::json mc_json(const McReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["estimate"] = r.estimate;
  j["stderr"] = r.stderr_;
  j["target"] = r.target;
  j["sigmas"] = r.sigmas;
  j["tail_allowance"] = r.tail_allowance;
  j["verdict"] = r.verdict();
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["detail"] = r.detail;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Jack polynomials, matrix-argument hypergeometric series, and their "
               "verification suites"};
  app.require_subcommand(1);

  // ---- jack ----
  auto* jackcmd = app.add_subcommand("jack", "print a Jack polynomial over the monomial basis");
  std::string j_lambda, j_alpha = "2", j_form = "P", j_out;
  int j_n = 2;
  jackcmd->add_option("--lambda", j_lambda, "partition, e.g. 2,1");
  jackcmd->add_option("--alpha", j_alpha, "Jack parameter (rational or inf)");
  jackcmd->add_option("--n", j_n, "number of variables");
  jackcmd->add_option("--form", j_form, "P | Q | J | Jstar | C | Omega");
  jackcmd->add_option("--out", j_out, "output path (default stdout)");

  // ---- pfq ----
  auto* pfqcmd = app.add_subcommand("pfq", "evaluate a truncated pFq series");
  std::string p_upper, p_lower, p_alpha = "2", p_x, p_y, p_out;
  int p_deg = 30;
  bool p_json = false;
  pfqcmd->add_option("--upper", p_upper, "upper parameters, comma separated");
  pfqcmd->add_option("--lower", p_lower, "lower parameters, comma separated");
  pfqcmd->add_option("--alpha", p_alpha, "Jack parameter");
  pfqcmd->add_option("--x", p_x, "argument vector")->required();
  pfqcmd->add_option("--y", p_y, "second argument vector (two-argument series)");
  pfqcmd->add_option("--max-degree", p_deg, "truncation degree");
  pfqcmd->add_flag("--json", p_json, "JSON output");
  pfqcmd->add_option("--out", p_out, "output path");

  // ---- ortho ----
  auto* orthocmd = app.add_subcommand("ortho", "orthogonal-family member");
  std::string o_family = "laguerre", o_lambda, o_a = "0", o_b = "0", o_alpha = "2", o_eval, o_out;
  int o_n = 2;
  orthocmd->add_option("--family", o_family, "laguerre | jacobi | hermite");
  orthocmd->add_option("--lambda", o_lambda, "partition");
  orthocmd->add_option("--a", o_a, "first parameter (rational)");
  orthocmd->add_option("--b", o_b, "second parameter (rational)");
  orthocmd->add_option("--alpha", o_alpha, "Jack parameter");
  orthocmd->add_option("--n", o_n, "number of variables");
  orthocmd->add_option("--eval", o_eval, "optional evaluation point");
  orthocmd->add_option("--out", o_out, "output path");

  // ---- opcheck ----
  auto* opcmd = app.add_subcommand("opcheck", "operator eigenfunction check");
  std::string w_op = "E_ab", w_a = "1/2", w_b = "1/3", w_alpha = "2", w_lambda;
  int w_n = 2;
  opcmd->add_option("--op", w_op, "E_ab | E_hermite | box2 | eps2");
  opcmd->add_option("--a", w_a, "parameter a");
  opcmd->add_option("--b", w_b, "parameter b");
  opcmd->add_option("--alpha", w_alpha, "Jack parameter");
  opcmd->add_option("--n", w_n, "number of variables");
  opcmd->add_option("--lambda", w_lambda, "partition");

  // ---- mc ----
  auto* mccmd = app.add_subcommand("mc", "Monte Carlo integral check");
  std::string m_check = "selberg", m_lambda, m_mu, m_alpha, m_y, m_z, m_out;
  double m_a = 2, m_b = 3, m_k = -1;
  int m_n = 2, m_deg = 24;
  std::uint64_t m_samples = 1000000, m_seed = 42;
  bool m_json = false;
  mccmd->add_option("--check", m_check,
                    "selberg | laguerre-moment | laguerre-orth | hermite-orth | jacobi-orth | laplace | "
                    "hankel-transform | hankel-eigen | hermite-moment | kernel-lift-laguerre | "
                    "kernel-lift-jacobi | self-adjoint");
  mccmd->add_option("--lambda", m_lambda, "partition");
  mccmd->add_option("--mu", m_mu, "second partition (orthogonality checks)");
  mccmd->add_option("--a", m_a, "weight parameter a");
  mccmd->add_option("--b", m_b, "weight parameter b");
  mccmd->add_option("--k", m_k, "Vandermonde exponent half (alpha = 1/k)");
  mccmd->add_option("--alpha", m_alpha, "Jack parameter (overrides --k)");
  mccmd->add_option("--y", m_y, "fixed argument vector");
  mccmd->add_option("--z", m_z, "second fixed argument vector");
  mccmd->add_option("--n", m_n, "dimension");
  mccmd->add_option("--samples", m_samples, "sample count");
  mccmd->add_option("--seed", m_seed, "RNG seed");
  mccmd->add_option("--max-degree", m_deg, "kernel truncation degree");
  mccmd->add_flag("--json", m_json, "JSON output");
  mccmd->add_option("--out", m_out, "output path");

  // ---- identity ----
  auto* idcmd = app.add_subcommand("identity", "run a single exact or float identity check");
  std::string i_name, i_a, i_b, i_c, i_N, i_alpha = "2", i_out;
  int i_n = 2, i_deg = 6;
  idcmd
      ->add_option("--name", i_name,
                   "euler | kummer | gauss | saalschutz | duality | kernel_deriv | "
                   "shifted_1F0 | laguerre_gen")
      ->required();
  idcmd->add_option("--a", i_a, "parameter a");
  idcmd->add_option("--b", i_b, "parameter b");
  idcmd->add_option("--c", i_c, "parameter c");
  idcmd->add_option("--N", i_N, "terminating integer N");
  idcmd->add_option("--alpha", i_alpha, "Jack parameter");
  idcmd->add_option("--n", i_n, "number of variables");
  idcmd->add_option("--max-degree", i_deg, "layer bound");
  idcmd->add_option("--out", i_out, "output path");

  // ---- suite ----
  auto* suitecmd = app.add_subcommand("suite", "run a verification suite");
  std::string s_name, s_alpha = "1/2,1,2,3", s_ns = "1,2,3", s_out, s_format;
  int s_deg = 6;
  std::uint64_t s_samples = 1000000, s_seed = 42;
  bool s_json = false, s_csv = false;
  suitecmd
      ->add_option("--name", s_name,
                   "exact-identities | conjectures | mc-integrals | ortho | operators")
      ->required();
  suitecmd->add_option("--alpha", s_alpha, "alpha grid, comma separated");
  suitecmd->add_option("--n", s_ns, "variable-count grid");
  suitecmd->add_option("--max-degree", s_deg, "series truncation degree");
  suitecmd->add_option("--samples", s_samples, "Monte Carlo sample count");
  suitecmd->add_option("--seed", s_seed, "RNG seed");
  suitecmd->add_flag("--json", s_json, "JSON report (default)");
  suitecmd->add_flag("--csv", s_csv, "CSV report");
  suitecmd->add_option("--out", s_out, "report path");

  // ---- table ----
  auto* tablecmd = app.add_subcommand("table", "emit a deterministic coefficient table");
  std::string t_kind = "jack-coeffs", t_alpha = "2", t_out, t_format = "json";
  int t_weight = 4, t_n = 4;
  tablecmd->add_option("--kind", t_kind, "jack-coeffs | binomials | jacobi-c | laguerre | hermite");
  tablecmd->add_option("--alpha", t_alpha, "Jack parameter");
  tablecmd->add_option("--max-weight", t_weight, "largest |lambda|");
  tablecmd->add_option("--n", t_n, "number of variables");
  tablecmd->add_option("--format", t_format, "json | csv");
  tablecmd->add_option("--out", t_out, "output path");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (jackcmd->parsed()) {
      Partition lam = parse_partition(j_lambda);
      AlphaParam alpha = parse_alpha(j_alpha);
      MonomialExpansion f = jack(lam, alpha, j_n, parse_normalization(j_form));
      nlohmann::json j;
      j["lambda"] = lam.str();
      j["alpha"] = alpha.str();
      j["n"] = j_n;
      j["form"] = j_form;
      j["coeffs"] = nlohmann::json::parse(f.json());
      emit(j.dump(2), j_out);
      return 0;
    }
    if (pfqcmd->parsed()) {
      AlphaParam alpha = parse_alpha(p_alpha);
      std::vector<double> x = parse_doubles(p_x);
      HyperParamsD params{parse_doubles(p_upper), parse_doubles(p_lower), alpha};
      Truncation tr{p_deg, static_cast<int>(x.size())};
      PfqResult r;
      if (!p_y.empty()) {
        std::vector<double> y = parse_doubles(p_y);
        r = pfq_two(params, x, y, tr);
      } else {
        r = pfq(params, x, tr);
      }
      nlohmann::json j;
      j["value"] = r.value;
      j["tail"] = r.tail;
      j["tail_note"] = "heuristic: magnitude of the last degree layer";
      j["degrees_used"] = r.degrees_used;
      emit(p_json ? j.dump(2) : std::to_string(r.value), p_out);
      return 0;
    }
    if (orthocmd->parsed()) {
      Partition lam = parse_partition(o_lambda);
      AlphaParam alpha = parse_alpha(o_alpha);
      OmegaExpansion f = [&]() {
        if (o_family == "laguerre") return laguerre(lam, parse_rational(o_a), alpha, o_n);
        if (o_family == "jacobi")
          return jacobi(lam, parse_rational(o_a), parse_rational(o_b), alpha, o_n);
        if (o_family == "hermite") return hermite(lam, alpha, o_n);
        throw UsageError("unknown family '" + o_family + "'");
      }();
      nlohmann::json j;
      j["family"] = o_family;
      j["lambda"] = lam.str();
      j["alpha"] = alpha.str();
      j["n"] = o_n;
      j["basis"] = f.basis() == OmegaExpansion::Basis::Omega ? "Omega" : "Jstar";
      nlohmann::json coeffs = nlohmann::json::object();
      for (const auto& [mu, c] : f.coeffs()) coeffs[mu.str()] = rat_str(c);
      j["coeffs"] = coeffs;
      if (!o_eval.empty()) {
        std::vector<double> pt = parse_doubles(o_eval);
        if (static_cast<int>(pt.size()) != o_n) throw UsageError("evaluation point has wrong arity");
        j["value"] = f.eval_d(pt);
      }
      emit(j.dump(2), o_out);
      return 0;
    }
    if (opcmd->parsed()) {
      Partition lam = parse_partition(w_lambda);
      AlphaParam alpha = parse_alpha(w_alpha);
      Rational a = parse_rational(w_a), b = parse_rational(w_b);
      Rational k = alpha.k();
      Rational p = k * (w_n - 1) + 1;
      NVarPoly f(w_n);
      Rational eig(0);
      OperatorExpr op(w_n, k);
      if (w_op == "E_ab") {
        op = OperatorExpr::E_ab(w_n, alpha, a, b);
        f = jacobi(lam, a, b, alpha, w_n).to_monomial().expand();
        eig = (a + b + 2 * p) * lam.weight() + 2 * rho(lam, alpha);
      } else if (w_op == "E_hermite") {
        op = OperatorExpr::E_hermite(w_n, alpha);
        f = hermite(lam, alpha, w_n).to_monomial().expand();
        eig = Rational(-2 * lam.weight());
      } else if (w_op == "box2") {
        op = OperatorExpr::box2(w_n, k);
        f = jack(lam, alpha, w_n, NormalizationTag::Omega).expand();
        eig = rho(lam, alpha);
      } else if (w_op == "eps2") {
        op = OperatorExpr::eps(w_n, k, 2);
        f = jack(lam, alpha, w_n, NormalizationTag::Omega).expand();
        eig = Rational(lam.weight());
      } else {
        throw UsageError("unknown operator '" + w_op + "'");
      }
      NVarPoly resid = eigencheck(op, f, eig);
      nlohmann::json j;
      j["op"] = w_op;
      j["lambda"] = lam.str();
      j["eigenvalue"] = rat_str(eig);
      j["residual_zero"] = resid.is_zero();
      std::cout << j.dump(2) << "\n";
      return resid.is_zero() ? 0 : 1;
    }
    if (mccmd->parsed()) {
      AlphaParam alpha = !m_alpha.empty() ? parse_alpha(m_alpha)
                         : m_k == 0.0     ? AlphaParam::infinity()
                         : m_k > 0        ? AlphaParam(Rational(1) / parse_rational(std::to_string(m_k)))
                                          : AlphaParam(Rational(2));
      Partition lam = parse_partition(m_lambda);
      Partition mu = parse_partition(m_mu);
      std::vector<double> y = m_y.empty() ? std::vector<double>{1.0, 1.5} : parse_doubles(m_y);
      std::vector<double> z = m_z.empty() ? std::vector<double>{0.2, 0.1} : parse_doubles(m_z);
      McReport rep;
      if (m_check == "selberg")
        rep = selberg_kadell_check(lam, m_a, m_b, m_n, alpha, m_samples, m_seed);
      else if (m_check == "laguerre-moment")
        rep = laguerre_moment_check(lam, m_a, m_n, alpha, m_samples, m_seed);
      else if (m_check == "laguerre-orth")
        rep = orthogonality_check(WeightFamily::Kind::Laguerre, lam, mu, m_a, m_b, alpha, m_n,
                                  m_samples, m_seed);
      else if (m_check == "hermite-orth")
        rep = orthogonality_check(WeightFamily::Kind::Hermite, lam, mu, m_a, m_b, alpha, m_n,
                                  m_samples, m_seed);
      else if (m_check == "jacobi-orth")
        rep = orthogonality_check(WeightFamily::Kind::Jacobi, lam, mu, m_a, m_b, alpha, m_n,
                                  m_samples, m_seed);
      else if (m_check == "laplace")
        rep = laplace_transform_check(lam, m_a, alpha, y, m_n, m_samples, m_seed, m_deg, true);
      else if (m_check == "hankel-transform")
        rep = hankel_check(HankelKind::TransformLaw, lam, m_a, y, z, alpha, m_n, m_samples, m_seed, m_deg);
      else if (m_check == "hankel-eigen")
        rep = hankel_check(HankelKind::EigenRelation, lam, m_a, y, z, alpha, m_n, m_samples, m_seed, m_deg);
      else if (m_check == "hermite-moment")
        rep = hermite_even_moment(lam, alpha, m_n, m_samples, m_seed);
      else if (m_check == "kernel-lift-laguerre")
        rep = hyper_integral_check(KernelLift::Laguerre, {}, {}, m_a, m_b, y, m_n, alpha, m_samples, m_seed, m_deg);
      else if (m_check == "kernel-lift-jacobi")
        rep = hyper_integral_check(KernelLift::Jacobi, {}, {}, m_a, m_b, y, m_n, alpha, m_samples, m_seed, m_deg);
      else if (m_check == "self-adjoint")
        rep = self_adjoint_check(parse_rational(std::to_string(m_a)),
                                 parse_rational(std::to_string(m_b)), alpha, m_n, m_samples,
                                 m_seed);
      else
        throw UsageError("unknown mc check '" + m_check + "'");
      nlohmann::json j = mc_json(rep);
      emit(m_json ? j.dump(2) : (rep.name + ": " + rep.verdict() + " (estimate " +
                                 std::to_string(rep.estimate) + ", target " +
                                 std::to_string(rep.target) + ", sigmas " +
                                 std::to_string(rep.sigmas) + ")"),
           m_out);
      return (rep.asserted && !rep.pass) ? 1 : 0;
    }
    if (idcmd->parsed()) {
      std::map<std::string, std::string> params;
      if (!i_a.empty()) params["a"] = i_a;
      if (!i_b.empty()) params["b"] = i_b;
      if (!i_c.empty()) params["c"] = i_c;
      if (!i_N.empty()) params["N"] = i_N;
      CheckRow row = identity_check(i_name, params, parse_alpha(i_alpha), i_deg, i_n);
      nlohmann::json j;
      j["name"] = row.name;
      j["status"] = row.status;
      j["numbers"] = row.numbers;
      j["detail"] = row.detail;
      emit(j.dump(2), i_out);
      return row.failed() ? 1 : 0;
    }
    if (suitecmd->parsed()) {
      SuiteConfig cfg;
      cfg.suite = s_name;
      cfg.alphas = parse_alphas(s_alpha);
      cfg.ns = parse_ints(s_ns);
      cfg.max_degree = s_deg;
      cfg.samples = s_samples;
      cfg.seed = s_seed;
      cfg.out_path = s_out;
      cfg.format = s_csv ? "csv" : "json";
      SuiteReport rep = run_suite(cfg);
      write_report(rep);
      int fails = 0;
      for (const auto& row : rep.rows)
        if (row.failed()) ++fails;
      if (fails > 0) {
        std::cerr << fails << " asserted check(s) failed\n";
        return 1;
      }
      return 0;
    }
    if (tablecmd->parsed()) {
      emit(emit_table(t_kind, parse_alpha(t_alpha), t_weight, t_n, t_format), t_out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mhg
