#include "mhg/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace mhg {

// ---------------------------------------------------------------------------
// Pole checks
// ---------------------------------------------------------------------------

void pole_check(std::span<const double> lower, const AlphaParam& alpha, int n, int D) {
  double k = alpha.k_d();
  for (double b : lower) {
    for (int i = 1; i <= n; ++i) {
      double t = b - k * (i - 1);
      double r = std::round(t);
      if (std::abs(t - r) < 1e-9 && r <= 0.0 && i * (1.0 - r) <= D + 1e-9)
        throw PoleError("lower parameter " + std::to_string(b) + " hits a Pochhammer zero in row " +
                        std::to_string(i));
    }
  }
}

void pole_check_exact(std::span<const Rational> lower, const AlphaParam& alpha, int n, int D) {
  Rational k = alpha.k();
  for (const Rational& b : lower) {
    for (int i = 1; i <= n; ++i) {
      Rational t = b - k * (i - 1);
      if (is_integer(t) && t <= 0 && Rational(i) * (1 - t) <= D)
        throw PoleError("lower parameter " + rat_str(b) + " hits a Pochhammer zero in row " +
                        std::to_string(i));
    }
  }
}

// ---------------------------------------------------------------------------
// Merge graph of the Laplace-Beltrami recurrence, per (degree, nvars)
// ---------------------------------------------------------------------------

namespace {

struct DegreeMerge {
  std::vector<Partition> parts;  // rev-lex descending (most dominant first)
  std::map<Partition, int> index;
  struct Edge {
    int mu;
    long w;  // (r - s) * pair count
  };
  std::vector<std::vector<Edge>> edges_of;  // per nu index
};

const DegreeMerge& degree_merge(int d, int n) {
  static std::map<std::pair<int, int>, DegreeMerge> cache;
  static std::shared_mutex mx;
  auto key = std::make_pair(d, n);
  {
    std::shared_lock lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lk(mx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  DegreeMerge g;
  g.parts = partitions(d, n);
  for (size_t i = 0; i < g.parts.size(); ++i) g.index[g.parts[i]] = static_cast<int>(i);
  g.edges_of.resize(g.parts.size());
  for (size_t vi = 0; vi < g.parts.size(); ++vi) {
    const Partition& nu = g.parts[vi];
    std::vector<std::pair<int, int>> mults;
    {
      int i = 1;
      while (i <= nu.length()) {
        int v = nu.part(i);
        int m = 0;
        while (i <= nu.length() && nu.part(i) == v) {
          ++m;
          ++i;
        }
        mults.push_back({v, m});
      }
    }
    for (size_t ai = 0; ai < mults.size(); ++ai) {
      for (size_t bi = ai; bi < mults.size(); ++bi) {
        int a = mults[ai].first, b = mults[bi].first;
        long pairs;
        if (ai == bi) {
          if (mults[ai].second < 2) continue;
          pairs = static_cast<long>(mults[ai].second) * (mults[ai].second - 1) / 2;
        } else {
          pairs = static_cast<long>(mults[ai].second) * mults[bi].second;
        }
        for (int t = 1; t <= b; ++t) {
          int r = a + t, s = b - t;
          std::vector<int> parts;
          parts.reserve(nu.length());
          bool ra = false, rb = false;
          for (int idx = 1; idx <= nu.length(); ++idx) {
            int v = nu.part(idx);
            if (!ra && v == a) {
              ra = true;
              continue;
            }
            if (!rb && v == b) {
              rb = true;
              continue;
            }
            parts.push_back(v);
          }
          parts.push_back(r);
          if (s > 0) parts.push_back(s);
          auto mit = g.index.find(Partition::from_unsorted(std::move(parts)));
          if (mit == g.index.end()) continue;
          g.edges_of[vi].push_back({mit->second, static_cast<long>(r - s) * pairs});
        }
      }
    }
  }
  auto [ins, ok] = cache.emplace(key, std::move(g));
  return ins->second;
}

// ---------------------------------------------------------------------------
// Numeric coefficient table for all P_lambda with |lambda| <= D, l <= n
// ---------------------------------------------------------------------------

struct SeriesTable {
  AlphaParam alpha;
  int n = 0, D = 0;
  std::vector<Partition> nus;
  std::map<Partition, int> nu_index;
  std::vector<std::vector<std::vector<int>>> orbits;
  struct Lam {
    int degree;
    int self_index;  // index of lambda itself in nus
    std::vector<std::pair<int, double>> pcoef;
    double apow_over_hp;
    double p_ones;
  };
  std::vector<Lam> lams;
  std::vector<std::pair<int, int>> deg_range;  // per degree, [begin,end) in lams

  void eval_powers(const double* x, std::vector<double>& pows) const {
    pows.assign(static_cast<size_t>(n) * (D + 1), 1.0);
    for (int i = 0; i < n; ++i)
      for (int e = 1; e <= D; ++e) pows[i * (D + 1) + e] = pows[i * (D + 1) + e - 1] * x[i];
  }
  void eval_monomials(const std::vector<double>& pows, std::vector<double>& work) const {
    work.resize(nus.size());
    for (size_t t = 0; t < nus.size(); ++t) {
      double s = 0;
      for (const auto& e : orbits[t]) {
        double m = 1;
        for (int i = 0; i < n; ++i) m *= pows[i * (D + 1) + e[i]];
        s += m;
      }
      work[t] = s;
    }
  }
  double eval_P(const Lam& l, const std::vector<double>& work) const {
    double s = 0;
    for (const auto& [idx, c] : l.pcoef) s += c * work[idx];
    return s;
  }
};

std::shared_ptr<const SeriesTable> series_table(const AlphaParam& alpha, int n, int D) {
  struct Key {
    bool inf;
    Rational a;
    int n, D;
    bool operator<(const Key& o) const {
      if (inf != o.inf) return o.inf;
      if (!inf && a != o.a) return a < o.a;
      if (n != o.n) return n < o.n;
      return D < o.D;
    }
  };
  static std::map<Key, std::shared_ptr<const SeriesTable>> cache;
  static std::shared_mutex mx;
  Key key{alpha.is_infinite(), alpha.is_infinite() ? Rational(0) : alpha.alpha(), n, D};
  {
    std::shared_lock lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto tbl = std::make_shared<SeriesTable>();
  tbl->alpha = alpha;
  tbl->n = n;
  tbl->D = D;
  for (int d = 0; d <= D; ++d)
    for (const Partition& nu : partitions(d, n)) {
      tbl->nu_index[nu] = static_cast<int>(tbl->nus.size());
      tbl->nus.push_back(nu);
      tbl->orbits.push_back(monomial_orbit(nu, n));
    }
  double kd = alpha.k_d();
  tbl->deg_range.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    int begin = static_cast<int>(tbl->lams.size());
    const DegreeMerge& g = degree_merge(d, n);
    std::vector<double> rho_of(g.parts.size());
    for (size_t i = 0; i < g.parts.size(); ++i) {
      const Partition& p = g.parts[i];
      rho_of[i] = static_cast<double>(n_stat(conjugate(p))) - kd * n_stat(p);
    }
    std::vector<double> u(g.parts.size());
    for (size_t L = 0; L < g.parts.size(); ++L) {
      std::fill(u.begin(), u.end(), 0.0);
      u[L] = 1.0;
      for (size_t vi = L + 1; vi < g.parts.size(); ++vi) {
        double acc = 0;
        for (const auto& e : g.edges_of[vi]) acc += e.w * u[e.mu];
        if (acc != 0.0) u[vi] = kd * acc / (rho_of[L] - rho_of[vi]);
      }
      SeriesTable::Lam lam;
      lam.degree = d;
      lam.self_index = tbl->nu_index.at(g.parts[L]);
      double p_ones = 0;
      for (size_t vi = L; vi < g.parts.size(); ++vi) {
        if (u[vi] == 0.0) continue;
        int gi = tbl->nu_index.at(g.parts[vi]);
        lam.pcoef.push_back({gi, u[vi]});
        p_ones += u[vi] * to_double(monomial_at_ones(g.parts[vi], n));
      }
      lam.p_ones = p_ones;
      if (alpha.is_infinite()) {
        lam.apow_over_hp = 1.0 / to_double(row_factorial(g.parts[L]));
      } else {
        auto [h, hp] = hook_products(g.parts[L], alpha);
        lam.apow_over_hp = std::pow(alpha.alpha_d(), d) / to_double(hp);
      }
      tbl->lams.push_back(std::move(lam));
    }
    tbl->deg_range[d] = {begin, static_cast<int>(tbl->lams.size())};
  }
  std::unique_lock lk(mx);
  auto [it, ok] = cache.emplace(key, std::move(tbl));
  return it->second;
}

double pochhammer_ratio_d(const std::vector<double>& upper, const std::vector<double>& lower,
                          const Partition& lam, const AlphaParam& alpha) {
  double r = 1.0;
  for (double a : upper) r *= gen_pochhammer_d(a, lam, alpha);
  for (double b : lower) r /= gen_pochhammer_d(b, lam, alpha);
  return r;
}

struct LayerAccum {  // compensated summation within a degree layer
  double sum = 0, comp = 0;
  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Numeric series
// ---------------------------------------------------------------------------

PfqResult pfq(const HyperParamsD& params, std::span<const double> x, const Truncation& tr) {
  int n = static_cast<int>(x.size());
  if (tr.nvars != 0 && tr.nvars != n)
    throw ParameterError("truncation nvars does not match the argument length");
  pole_check(params.lower, params.alpha, n, tr.max_degree);
  auto tbl = series_table(params.alpha, n, tr.max_degree);
  std::vector<double> pows, work;
  tbl->eval_powers(x.data(), pows);
  tbl->eval_monomials(pows, work);
  PfqResult out;
  double last = 0;
  for (int d = 0; d <= tr.max_degree; ++d) {
    LayerAccum layer;
    auto [b, e] = tbl->deg_range[d];
    for (int i = b; i < e; ++i) {
      const auto& lam = tbl->lams[i];
      double coef = pochhammer_ratio_d(params.upper, params.lower, tbl->nus[lam.self_index],
                                       params.alpha);
      if (coef == 0.0) continue;
      layer.add(coef * lam.apow_over_hp * tbl->eval_P(lam, work));
    }
    out.value += layer.sum;
    last = layer.sum;
    if (!std::isfinite(out.value)) throw AccuracyError("series overflow at degree " + std::to_string(d));
  }
  out.tail = std::abs(last);
  out.degrees_used = tr.max_degree;
  return out;
}

PfqResult pfq_two(const HyperParamsD& params, std::span<const double> x,
                  std::span<const double> y, const Truncation& tr) {
  int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n) throw ParameterError("x and y must have equal length");
  pole_check(params.lower, params.alpha, n, tr.max_degree);
  if (params.alpha.is_infinite() && params.upper.empty() && params.lower.empty()) {
    // exact permutation form of the exponential kernel
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double s = 0;
    long count = 0;
    do {
      double dot = 0;
      for (int i = 0; i < n; ++i) dot += x[i] * y[perm[i]];
      s += std::exp(dot);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {s / count, 0.0, 0};
  }
  auto tbl = series_table(params.alpha, n, tr.max_degree);
  std::vector<double> powx, powy, workx, worky;
  tbl->eval_powers(x.data(), powx);
  tbl->eval_monomials(powx, workx);
  tbl->eval_powers(y.data(), powy);
  tbl->eval_monomials(powy, worky);
  PfqResult out;
  double last = 0;
  for (int d = 0; d <= tr.max_degree; ++d) {
    LayerAccum layer;
    auto [b, e] = tbl->deg_range[d];
    for (int i = b; i < e; ++i) {
      const auto& lam = tbl->lams[i];
      double coef = pochhammer_ratio_d(params.upper, params.lower, tbl->nus[lam.self_index],
                                       params.alpha);
      if (coef == 0.0) continue;
      layer.add(coef * lam.apow_over_hp * tbl->eval_P(lam, workx) * tbl->eval_P(lam, worky) /
                lam.p_ones);
    }
    out.value += layer.sum;
    last = layer.sum;
    if (!std::isfinite(out.value)) throw AccuracyError("series overflow at degree " + std::to_string(d));
  }
  out.tail = std::abs(last);
  out.degrees_used = tr.max_degree;
  return out;
}

PfqResult exp_kernel(std::span<const double> x, std::span<const double> y,
                     const AlphaParam& alpha, const Truncation& tr) {
  int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n) throw ParameterError("x and y must have equal length");
  HyperParamsD params{{}, {}, alpha};
  if (alpha.is_infinite()) return pfq_two(params, x, y, tr);
  // recentre both arguments: e(x, y) = exp(xbar p1(y)) e(x - xbar, y)
  // and p1(x - xbar) = 0 kills the second shift factor.
  double xbar = 0, ybar = 0, p1y = 0;
  for (double v : x) xbar += v;
  for (double v : y) {
    ybar += v;
    p1y += v;
  }
  xbar /= n;
  ybar /= n;
  std::vector<double> xc(x.begin(), x.end()), yc(y.begin(), y.end());
  for (double& v : xc) v -= xbar;
  for (double& v : yc) v -= ybar;
  PfqResult r = pfq_two(params, xc, yc, tr);
  double factor = std::exp(xbar * p1y);
  r.value *= factor;
  r.tail *= factor;
  return r;
}

// ---------------------------------------------------------------------------
// Exact layers
// ---------------------------------------------------------------------------

namespace {
Rational pochhammer_ratio(const HyperParams& params, const Partition& lam) {
  Rational r(1);
  for (const Rational& a : params.upper) r *= gen_pochhammer(a, lam, params.alpha);
  for (const Rational& b : params.lower) {
    Rational d = gen_pochhammer(b, lam, params.alpha);
    if (d == 0) throw PoleError("lower Pochhammer vanished at " + lam.str());
    r /= d;
  }
  return r;
}
}  // namespace

std::vector<MonomialExpansion> pfq_formal(const HyperParams& params, int D, int n) {
  pole_check_exact(params.lower, params.alpha, n, D);
  std::vector<MonomialExpansion> layers;
  layers.reserve(D + 1);
  for (int d = 0; d <= D; ++d) {
    MonomialExpansion layer(n);
    for (const Partition& lam : partitions(d, n)) {
      Rational coef = pochhammer_ratio(params, lam);
      if (coef == 0) continue;
      if (params.alpha.is_infinite()) {
        layer += MonomialExpansion::m(lam, n) * (coef / row_factorial(lam));
      } else {
        Rational scale = coef * rat_pow(params.alpha.alpha(), d);
        layer += jack(lam, params.alpha, n, NormalizationTag::Jstar) * scale;
      }
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

std::vector<PowerSumElement> pfq_formal_p(const HyperParams& params, int D) {
  if (params.alpha.is_infinite())
    throw ParameterError("formal power-sum layers need finite alpha");
  pole_check_exact(params.lower, params.alpha, D, D);
  std::vector<PowerSumElement> layers;
  const Rational& a = params.alpha.alpha();
  for (int d = 0; d <= D; ++d) {
    PowerSumElement layer(std::max(D, 1));
    for (const Partition& lam : partitions(d, d)) {
      Rational coef = pochhammer_ratio(params, lam);
      if (coef == 0) continue;
      layer += jack_jstar_formal(lam, a).with_cap(std::max(D, 1)) * (coef * rat_pow(a, d));
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

Rational pfq_at_ones_exact(const HyperParams& params, int D, int n) {
  if (params.alpha.is_infinite()) throw ParameterError("exact at-ones sums need finite alpha");
  Rational out(0);
  for (int d = 0; d <= D; ++d)
    for (const Partition& lam : partitions(d, n)) {
      Rational coef = pochhammer_ratio(params, lam);
      if (coef == 0) continue;
      out += coef * rat_pow(params.alpha.alpha(), d) * jack_jstar_at_ones(lam, params.alpha, n);
    }
  return out;
}

double pfq_at_ones_d(const HyperParamsD& params, int D, int n) {
  pole_check(params.lower, params.alpha, n, D);
  double out = 0;
  for (int d = 0; d <= D; ++d) {
    LayerAccum layer;
    for (const Partition& lam : partitions(d, n)) {
      double coef = pochhammer_ratio_d(params.upper, params.lower, lam, params.alpha);
      if (coef == 0) continue;
      auto [h, hp] = hook_products_d(lam, params.alpha);
      layer.add(coef * std::pow(params.alpha.alpha_d(), d) *
                to_double(jack_j_at_ones(lam, params.alpha, n)) / (h * hp));
    }
    out += layer.sum;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bilinear layers
// ---------------------------------------------------------------------------

std::vector<TensorLayer> pfq_two_formal(const HyperParams& params, int D, int nx, int ny) {
  int n = std::min(nx, ny);
  pole_check_exact(params.lower, params.alpha, n, D);
  if (params.alpha.is_infinite()) throw ParameterError("bilinear layers need finite alpha");
  const Rational& a = params.alpha.alpha();
  std::vector<TensorLayer> layers(D + 1);
  for (int d = 0; d <= D; ++d) {
    for (const Partition& lam : partitions(d, n)) {
      Rational coef = pochhammer_ratio(params, lam);
      if (coef == 0) continue;
      Rational js1 = jack_jstar_at_ones(lam, params.alpha, n);
      Rational scale = coef * rat_pow(a, d) / js1;
      MonomialExpansion jx = jack(lam, params.alpha, nx, NormalizationTag::Jstar);
      MonomialExpansion jy = nx == ny ? jx : jack(lam, params.alpha, ny, NormalizationTag::Jstar);
      for (const auto& [mu, cx] : jx.coeffs())
        for (const auto& [nu, cy] : jy.coeffs()) {
          Rational v = scale * cx * cy;
          auto key = std::make_pair(mu, nu);
          Rational& slot = layers[d][key];
          slot += v;
          if (slot == 0) layers[d].erase(key);
        }
    }
  }
  return layers;
}

TensorLayer tensor_apply_x(const TensorLayer& t, int nx,
                           const std::function<MonomialExpansion(const MonomialExpansion&)>& op) {
  TensorLayer out;
  std::map<Partition, MonomialExpansion> images;
  for (const auto& [key, c] : t) {
    const auto& [mu, nu] = key;
    auto it = images.find(mu);
    if (it == images.end()) it = images.emplace(mu, op(MonomialExpansion::m(mu, nx))).first;
    for (const auto& [rho, a] : it->second.coeffs()) {
      auto k2 = std::make_pair(rho, nu);
      Rational& slot = out[k2];
      slot += c * a;
      if (slot == 0) out.erase(k2);
    }
  }
  return out;
}

TensorLayer tensor_apply_y(const TensorLayer& t, int ny,
                           const std::function<MonomialExpansion(const MonomialExpansion&)>& op) {
  TensorLayer out;
  std::map<Partition, MonomialExpansion> images;
  for (const auto& [key, c] : t) {
    const auto& [mu, nu] = key;
    auto it = images.find(nu);
    if (it == images.end()) it = images.emplace(nu, op(MonomialExpansion::m(nu, ny))).first;
    for (const auto& [rho, a] : it->second.coeffs()) {
      auto k2 = std::make_pair(mu, rho);
      Rational& slot = out[k2];
      slot += c * a;
      if (slot == 0) out.erase(k2);
    }
  }
  return out;
}

bool tensor_is_zero(const TensorLayer& t) { return t.empty(); }

TensorLayer tensor_sub(const TensorLayer& a, const TensorLayer& b) {
  TensorLayer out = a;
  for (const auto& [key, c] : b) {
    Rational& slot = out[key];
    slot -= c;
    if (slot == 0) out.erase(key);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

namespace {
IdentityReport layers_equal_report(const std::string& name,
                                   const std::vector<MonomialExpansion>& lhs,
                                   const std::vector<MonomialExpansion>& rhs, int upto) {
  IdentityReport rep{name, true, true, 0.0, ""};
  for (int d = 0; d <= upto; ++d) {
    if (!(lhs[d] == rhs[d])) {
      rep.pass = false;
      rep.detail = "first mismatch in degree " + std::to_string(d);
      return rep;
    }
  }
  rep.detail = "exact residual 0 through degree " + std::to_string(upto);
  return rep;
}

std::vector<MonomialExpansion> convolve_layers(const std::vector<MonomialExpansion>& a,
                                               const std::vector<MonomialExpansion>& b, int D,
                                               int n) {
  std::vector<MonomialExpansion> out(D + 1, MonomialExpansion(n));
  for (int d = 0; d <= D; ++d)
    for (int j = 0; j <= d; ++j) {
      if (a[j].is_zero() || b[d - j].is_zero()) continue;
      out[d] += a[j] * b[d - j];
    }
  return out;
}
}  // namespace

IdentityReport check_euler(const Rational& a, const Rational& b, const Rational& c,
                           const AlphaParam& alpha, int D, int n) {
  HyperParams lhs{{a, b}, {c}, alpha};
  HyperParams rhs{{c - a, c - b}, {c}, alpha};
  HyperParams pre{{a + b - c}, {}, alpha};  // |1-y|^{c-a-b} as a 1F0
  auto L = pfq_formal(lhs, D, n);
  auto R = convolve_layers(pfq_formal(pre, D, n), pfq_formal(rhs, D, n), D, n);
  return layers_equal_report("euler", L, R, D);
}

IdentityReport check_kummer(const Rational& a, const Rational& b, const AlphaParam& alpha, int D,
                            int n) {
  HyperParams lhs{{a}, {b}, alpha};
  HyperParams rhs{{b - a}, {b}, alpha};
  auto L = pfq_formal(lhs, D, n);
  auto R2 = pfq_formal(rhs, D, n);
  std::vector<MonomialExpansion> expl(D + 1, MonomialExpansion(n));
  for (int m = 0; m <= D; ++m) expl[m] = MonomialExpansion::p1_power(m, n) * (Rational(1) / factorial(m));
  for (int d = 0; d <= D; ++d)
    if (d % 2 == 1) R2[d] *= Rational(-1);  // argument -y flips odd layers
  auto R = convolve_layers(expl, R2, D, n);
  return layers_equal_report("kummer", L, R, D);
}

IdentityReport check_duality(const std::vector<Rational>& upper,
                             const std::vector<Rational>& lower, const AlphaParam& alpha, int D) {
  const Rational& a = alpha.alpha();
  HyperParams lhs{upper, lower, alpha};
  std::vector<Rational> up2, lo2;
  for (const Rational& u : upper) up2.push_back(-a * u);
  for (const Rational& l : lower) lo2.push_back(-a * l);
  AlphaParam inv = alpha.reciprocal();
  HyperParams rhs{up2, lo2, inv};
  int p = static_cast<int>(upper.size()), q = static_cast<int>(lower.size());
  Rational s = rat_pow(a, q - p + 1);
  if ((p - q) % 2 != 0) s = -s;
  auto L = pfq_formal_p(lhs, D);
  auto R = pfq_formal_p(rhs, D);
  IdentityReport rep{"duality", true, true, 0.0, ""};
  for (int d = 0; d <= D; ++d) {
    PowerSumElement lw = omega_alpha(L[d], alpha);
    PowerSumElement rw = R[d] * rat_pow(s, d);
    if (!(lw == rw)) {
      rep.pass = false;
      rep.detail = "first mismatch in degree " + std::to_string(d);
      return rep;
    }
  }
  rep.detail = "exact residual 0 through degree " + std::to_string(D);
  return rep;
}

IdentityReport check_kernel_deriv(const AlphaParam& alpha, int D, int n) {
  HyperParams params{{}, {}, alpha};
  auto T = pfq_two_formal(params, D, n, n);
  auto dsum = [](const MonomialExpansion& f) {
    NVarPoly p = f.expand();
    NVarPoly acc(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) acc += p.derivative(i);
    return acc.to_monomial_basis();
  };
  auto mulp1 = [](const MonomialExpansion& f) { return mul_by_power_sum(f, 1); };
  IdentityReport rep{"kernel_deriv", true, true, 0.0, ""};
  for (int d = 1; d <= D; ++d) {
    TensorLayer lhs = tensor_apply_x(T[d], n, dsum);
    TensorLayer rhs = tensor_apply_y(T[d - 1], n, mulp1);
    if (!tensor_is_zero(tensor_sub(lhs, rhs))) {
      rep.pass = false;
      rep.detail = "first mismatch in degree " + std::to_string(d);
      return rep;
    }
  }
  rep.detail = "exact residual 0 through degree " + std::to_string(D);
  return rep;
}

IdentityReport check_saalschutz(const Rational& a, const Rational& b, const Rational& c, int N,
                                int n, const AlphaParam& alpha) {
  Rational k = alpha.k();
  Rational p = k * (n - 1) + 1;
  Rational d = a + b - c - N + p;
  Partition box = N == 0 ? Partition() : Partition(std::vector<int>(n, N));
  // terminating sum over lambda inside the N^n box
  Rational lhs(0);
  for (int m = 0; m <= N * n; ++m)
    for (const Partition& lam : partitions(m, n)) {
      if (lam.part(1) > N) continue;
      Rational den = gen_pochhammer(c, lam, alpha) * gen_pochhammer(d, lam, alpha);
      if (den == 0)
        throw PoleError("saalschutz lower Pochhammer vanished at " + lam.str());
      Rational num = gen_pochhammer(a, lam, alpha) * gen_pochhammer(b, lam, alpha) *
                     gen_pochhammer(Rational(-N), lam, alpha);
      lhs += num / den * rat_pow(alpha.alpha(), m) * jack_jstar_at_ones(lam, alpha, n);
    }
  Rational den_box = gen_pochhammer(c, box, alpha) * gen_pochhammer(c - a - b, box, alpha);
  if (den_box == 0) throw PoleError("saalschutz product form has a vanishing denominator");
  Rational rhs = gen_pochhammer(c - a, box, alpha) * gen_pochhammer(c - b, box, alpha) / den_box;
  IdentityReport rep{"saalschutz", true, lhs == rhs, 0.0, ""};
  rep.detail = rep.pass ? "exact equality" : "sum " + rat_str(lhs) + " != product " + rat_str(rhs);
  return rep;
}

GaussReport check_gauss(double a, double b, double c, const AlphaParam& alpha, int n, int D) {
  GaussReport rep;
  if (D < 11) throw ParameterError("gauss trend check needs max degree >= 11");
  double k = alpha.k_d();
  double p = k * (n - 1) + 1;
  if (c - a - b < p - 1)
    throw ParameterError("gauss check needs c - a - b above the convergence margin");
  rep.target = gamma_n(c, alpha, n) * gamma_n(c - a - b, alpha, n) /
               (gamma_n(c - a, alpha, n) * gamma_n(c - b, alpha, n));
  std::vector<double> partial(D + 1, 0.0);
  double acc = 0;
  for (int d = 0; d <= D; ++d) {
    LayerAccum layer;
    for (const Partition& lam : partitions(d, n)) {
      double coef = gen_pochhammer_d(a, lam, alpha) * gen_pochhammer_d(b, lam, alpha) /
                    gen_pochhammer_d(c, lam, alpha);
      auto [h, hp] = hook_products_d(lam, alpha);
      layer.add(coef * std::pow(alpha.alpha_d(), d) *
                to_double(jack_j_at_ones(lam, alpha, n)) / (h * hp));
    }
    acc += layer.sum;
    partial[d] = acc;
  }
  rep.value = acc;
  rep.rel_error = std::abs(acc - rep.target) / std::abs(rep.target);
  rep.monotone = true;
  for (int d = D - 10; d < D; ++d) {
    double r0 = std::abs(partial[d] - rep.target);
    double r1 = std::abs(partial[d + 1] - rep.target);
    rep.trailing_residuals.push_back(r1 / std::abs(rep.target));
    if (r1 >= r0) rep.monotone = false;
  }
  rep.pass = rep.rel_error <= 1e-3 && rep.monotone;
  return rep;
}

IdentityReport check_shifted_1F0(double a, const AlphaParam& alpha, int n,
                                 std::span<const double> x, std::span<const double> y, int D) {
  Truncation tr{D, n};
  HyperParamsD params{{a}, {}, alpha};
  std::vector<double> xs(x.begin(), x.end());
  for (double& v : xs) v += 1.0;
  PfqResult lhs = pfq_two(params, xs, y, tr);
  double det = 1.0;
  std::vector<double> yt(y.begin(), y.end());
  for (double& v : yt) {
    det *= 1.0 - v;
    v = v / (1.0 - v);
  }
  PfqResult rhs = pfq_two(params, x, yt, tr);
  double target = std::pow(det, -a) * rhs.value;
  IdentityReport rep{"shifted_1F0", false, false, std::abs(lhs.value - target), ""};
  rep.pass = rep.float_residual <= 1e-6;
  std::ostringstream os;
  os << "lhs=" << lhs.value << " rhs=" << target << " tails=(" << lhs.tail << "," << rhs.tail
     << ")";
  rep.detail = os.str();
  return rep;
}

// ---------------------------------------------------------------------------
// TwoArgSeries
// ---------------------------------------------------------------------------

TwoArgSeries::TwoArgSeries(std::vector<double> upper, std::vector<double> lower,
                           const AlphaParam& alpha, int n, int D, std::vector<double> y,
                           bool negate_x, bool centre)
    : alpha_(alpha), n_(n), D_(D), sign_(negate_x ? -1.0 : 1.0), y_(std::move(y)) {
  if (static_cast<int>(y_.size()) != n_) throw ParameterError("fixed argument length mismatch");
  if (centre && (!upper.empty() || !lower.empty()))
    throw ParameterError("recentring is valid only for the exponential kernel");
  if (alpha_.is_infinite()) {
    if (!upper.empty() || !lower.empty())
      throw ParameterError("alpha = infinity is supported for the exponential kernel only");
    inf_mode_ = true;
    return;
  }
  pole_check(lower, alpha_, n_, D_);
  centered_ = centre;
  auto tbl = series_table(alpha_, n_, D_);
  std::vector<double> yeff = y_;
  if (centered_) {
    double ybar = 0;
    p1y_ = 0;
    for (double v : y_) {
      ybar += v;
      p1y_ += v;
    }
    ybar /= n_;
    for (double& v : yeff) v -= ybar;
  }
  std::vector<double> pows, work;
  tbl->eval_powers(yeff.data(), pows);
  tbl->eval_monomials(pows, work);
  orbits_ = tbl->orbits;
  for (const auto& lam : tbl->lams) {
    Term t;
    t.degree = lam.degree;
    t.pcoef = lam.pcoef;
    double f = lam.apow_over_hp * tbl->eval_P(lam, work) / lam.p_ones;
    f *= pochhammer_ratio_d(upper, lower, tbl->nus[lam.self_index], alpha_);
    t.factor = f;
    terms_.push_back(std::move(t));
  }
}

double TwoArgSeries::eval(const double* x, double* tail_ratio) const {
  if (inf_mode_) {
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    double s = 0;
    long count = 0;
    do {
      double dot = 0;
      for (int i = 0; i < n_; ++i) dot += sign_ * x[i] * y_[perm[i]];
      s += std::exp(dot);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (tail_ratio) *tail_ratio = 0;
    return s / count;
  }
  thread_local std::vector<double> u, pows, work;
  u.assign(n_, 0.0);
  double ubar = 0;
  for (int i = 0; i < n_; ++i) u[i] = sign_ * x[i];
  if (centered_) {
    for (int i = 0; i < n_; ++i) ubar += u[i];
    ubar /= n_;
    for (int i = 0; i < n_; ++i) u[i] -= ubar;
  }
  pows.assign(static_cast<size_t>(n_) * (D_ + 1), 1.0);
  for (int i = 0; i < n_; ++i)
    for (int e = 1; e <= D_; ++e) pows[i * (D_ + 1) + e] = pows[i * (D_ + 1) + e - 1] * u[i];
  work.assign(orbits_.size(), 0.0);
  for (size_t t = 0; t < orbits_.size(); ++t) {
    double s = 0;
    for (const auto& e : orbits_[t]) {
      double m = 1;
      for (int i = 0; i < n_; ++i) m *= pows[i * (D_ + 1) + e[i]];
      s += m;
    }
    work[t] = s;
  }
  double total = 0, last = 0;
  int cur = -1;
  double layer = 0;
  for (const auto& t : terms_) {
    if (t.degree != cur) {
      total += layer;
      last = layer;
      layer = 0;
      cur = t.degree;
    }
    double pv = 0;
    for (const auto& [idx, c] : t.pcoef) pv += c * work[idx];
    layer += t.factor * pv;
  }
  total += layer;
  last = layer;
  double scale = centered_ ? std::exp(ubar * p1y_) : 1.0;
  if (tail_ratio) *tail_ratio = std::abs(last) / (std::abs(total) + 1e-300);
  return scale * total;
}

}  // namespace mhg
