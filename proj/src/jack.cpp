#include "mhg/jack.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <shared_mutex>

namespace mhg {

NormalizationTag parse_normalization(const std::string& name) {
  if (name == "P") return NormalizationTag::P;
  if (name == "Q") return NormalizationTag::Q;
  if (name == "J") return NormalizationTag::J;
  if (name == "Jstar" || name == "J*") return NormalizationTag::Jstar;
  if (name == "C") return NormalizationTag::C;
  if (name == "Omega") return NormalizationTag::Omega;
  throw ParameterError("unknown normalization tag '" + name + "'");
}

std::string normalization_name(NormalizationTag t) {
  switch (t) {
    case NormalizationTag::P: return "P";
    case NormalizationTag::Q: return "Q";
    case NormalizationTag::J: return "J";
    case NormalizationTag::Jstar: return "Jstar";
    case NormalizationTag::C: return "C";
    case NormalizationTag::Omega: return "Omega";
  }
  throw ParameterError("bad normalization tag");
}

Rational jack_j_at_ones(const Partition& lam, const AlphaParam& alpha, int n) {
  // alpha^{|lambda|} (kn)_lambda == prod over boxes (n + alpha a'(s) - l'(s))
  if (alpha.is_infinite()) throw ParameterError("J(1_n) scalar needs finite alpha");
  const Rational& a = alpha.alpha();
  Rational out(1);
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j) out *= Rational(n) + a * (j - 1) - (i - 1);
  return out;
}

Rational jack_jstar_at_ones(const Partition& lam, const AlphaParam& alpha, int n) {
  auto [h, hp] = hook_products(lam, alpha);
  return jack_j_at_ones(lam, alpha, n) / (h * hp);
}

Rational normalization_scalar(const Partition& lam, const AlphaParam& alpha, int n,
                              NormalizationTag tag) {
  if (tag == NormalizationTag::P) return Rational(1);
  if (alpha.is_infinite())
    throw ParameterError("normalization scalars need finite alpha (P is m at infinity)");
  auto [h, hp] = hook_products(lam, alpha);
  switch (tag) {
    case NormalizationTag::P: return Rational(1);
    case NormalizationTag::Q: return h / hp;
    case NormalizationTag::J: return h;
    case NormalizationTag::Jstar: return Rational(1) / hp;
    case NormalizationTag::C:
      return rat_pow(alpha.alpha(), lam.weight()) * factorial(lam.weight()) / hp;
    case NormalizationTag::Omega: {
      Rational j1 = jack_j_at_ones(lam, alpha, n);
      if (j1 == 0) throw ParameterError("Omega normalization undefined: J(1_n) = 0");
      return h / j1;
    }
  }
  throw ParameterError("bad normalization tag");
}

// ---------------------------------------------------------------------------
// Cached monomial expansions of P_lambda
// ---------------------------------------------------------------------------

namespace {

struct PKey {
  Partition lam;
  bool inf;
  Rational alpha;
  int n;
  bool operator<(const PKey& o) const {
    if (lam != o.lam) return lam < o.lam;
    if (inf != o.inf) return o.inf;
    if (!inf && alpha != o.alpha) return alpha < o.alpha;
    return n < o.n;
  }
};

std::map<PKey, MonomialExpansion> g_pcache;
std::shared_mutex g_pcache_mx;

std::filesystem::path cache_dir_from_env() {
  const char* dir = std::getenv("MHYPERG_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir);
}

std::string cache_file_name(const PKey& key) {
  std::string a = key.inf ? "inf" : rat_str(key.alpha);
  for (auto& ch : a)
    if (ch == '/') ch = '_';
  std::string l;
  for (int i = 1; i <= key.lam.length(); ++i) {
    if (i > 1) l += '-';
    l += std::to_string(key.lam.part(i));
  }
  if (l.empty()) l = "0";
  return "jackP_a" + a + "_n" + std::to_string(key.n) + "_l" + l + ".json";
}

}  // namespace

MonomialExpansion jack_P(const Partition& lam, const AlphaParam& alpha, int n) {
  if (n < 0) throw ParameterError("variable count must be >= 0");
  if (lam.length() > n) return MonomialExpansion(n);  // documented: zero
  PKey key{lam, alpha.is_infinite(), alpha.is_infinite() ? Rational(0) : alpha.alpha(), n};
  {
    std::shared_lock lk(g_pcache_mx);
    auto it = g_pcache.find(key);
    if (it != g_pcache.end()) return it->second;
  }
  std::filesystem::path dir = cache_dir_from_env();
  if (!dir.empty()) {
    std::ifstream in(dir / cache_file_name(key));
    if (in) {
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      MonomialExpansion f = MonomialExpansion::from_json(text, n);
      std::unique_lock lk(g_pcache_mx);
      auto [it, ok] = g_pcache.emplace(key, std::move(f));
      return it->second;
    }
  }
  MonomialExpansion result(n);
  if (alpha.is_infinite()) {
    result = MonomialExpansion::m(lam, n);
  } else {
    result = p_to_m(jack_p_formal(lam, alpha.alpha()), n);
  }
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(dir / cache_file_name(key));
    if (out) out << result.json();
  }
  std::unique_lock lk(g_pcache_mx);
  auto [it, ok] = g_pcache.emplace(key, std::move(result));
  return it->second;
}

MonomialExpansion jack(const Partition& lam, const AlphaParam& alpha, int n,
                       NormalizationTag tag) {
  MonomialExpansion p = jack_P(lam, alpha, n);
  if (tag == NormalizationTag::P || p.is_zero()) return p;
  return p * normalization_scalar(lam, alpha, n, tag);
}

MonomialExpansion convert(const MonomialExpansion& f, const Partition& lam,
                          NormalizationTag from, NormalizationTag to, const AlphaParam& alpha,
                          int n) {
  if (from == to) return f;
  Rational s = normalization_scalar(lam, alpha, n, to) / normalization_scalar(lam, alpha, n, from);
  return f * s;
}

Rational principal_spec(const Partition& lam, const AlphaParam& alpha, const Rational& X) {
  if (alpha.is_infinite()) throw ParameterError("principal specialization needs finite alpha");
  const Rational& a = alpha.alpha();
  Rational out(1);
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j) out *= X + a * (j - 1) - (i - 1);
  return out;
}

// ---------------------------------------------------------------------------
// Generalized binomial coefficients
// ---------------------------------------------------------------------------

namespace {
struct BinomKey {
  Partition lam, mu;
  Rational alpha;
  bool operator<(const BinomKey& o) const {
    if (lam != o.lam) return lam < o.lam;
    if (mu != o.mu) return mu < o.mu;
    return alpha < o.alpha;
  }
};
}  // namespace

Rational binom(const Partition& lam, const Partition& mu, const AlphaParam& alpha) {
  if (alpha.is_infinite()) throw ParameterError("binomial coefficients need finite alpha");
  if (!lam.contains(mu)) return Rational(0);
  static std::map<BinomKey, Rational> cache;
  static std::shared_mutex mx;
  BinomKey key{lam, mu, alpha.alpha()};
  {
    std::shared_lock lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // coefficient of p_1^r in J_{lambda/mu} = <J_lambda, J*_mu p_1^r> / (r! alpha^r)
  int r = lam.weight() - mu.weight();
  int cap = lam.weight();
  const Rational& a = alpha.alpha();
  PowerSumElement p1r = PowerSumElement::one(std::max(cap, 1));
  for (int i = 0; i < r; ++i) p1r = p1r * PowerSumElement::p(1, std::max(cap, 1));
  PowerSumElement rhs = jack_jstar_formal(mu, a).with_cap(std::max(cap, 1)) * p1r;
  Rational val = inner_product(jack_j_formal(lam, a).with_cap(std::max(cap, 1)), rhs, alpha) /
                 (factorial(r) * rat_pow(a, r));
  std::unique_lock lk(mx);
  cache.emplace(key, val);
  return val;
}

// ---------------------------------------------------------------------------
// Formal degree
// ---------------------------------------------------------------------------

FormalDegree formal_degree(const Partition& lam, const AlphaParam& alpha, int n) {
  if (alpha.is_infinite()) throw ParameterError("formal degree needs finite alpha");
  if (lam.length() > n) throw ParameterError("formal degree needs l(lambda) <= n");
  const Rational& a = alpha.alpha();
  auto [h, hp] = hook_products(lam, alpha);
  Rational p = alpha.k() * (n - 1) + 1;
  // eps_n(P_lam) * eps_{n-1+alpha}(Q_lam) = alpha^{2|lambda|} (kn)_lam (p)_lam / (h h')
  Rational eps_form = rat_pow(a, 2 * lam.weight()) * gen_pochhammer(alpha.k() * n, lam, alpha) *
                      gen_pochhammer(p, lam, alpha) / (h * hp);

  FormalDegree out{eps_form, std::nullopt};
  Rational kq = alpha.k();
  if (is_integer(kq) && kq > 0) {
    long k = to_long_checked(kq);
    // xi = lambda + k delta, delta = (n-1, ..., 1, 0)
    std::vector<Rational> xi(n), kd(n);
    for (int i = 0; i < n; ++i) {
      xi[i] = Rational(lam.part(i + 1)) + Rational(k) * (n - 1 - i);
      kd[i] = Rational(k) * (n - 1 - i);
    }
    Rational prod(1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        prod *= rising(xi[i] - xi[j], static_cast<int>(k));
        prod /= rising(kd[i] - kd[j], static_cast<int>(k));
      }
    }
    out.product_form = prod;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eigenfunction recurrence for the monomial coefficients of P_lambda
// ---------------------------------------------------------------------------

namespace {

template <class T>
struct Scalar;

template <>
struct Scalar<Rational> {
  static Rational from(const Rational& r) { return r; }
};
template <>
struct Scalar<double> {
  static double from(const Rational& r) { return to_double(r); }
};

}  // namespace

template <class T>
std::map<Partition, T> jack_p_recurrence(const Partition& lam, const AlphaParam& alpha, int n) {
  std::map<Partition, T> u;
  if (lam.length() > n) return u;
  const Rational k = alpha.k();
  const T kT = Scalar<T>::from(k);
  const int d = lam.weight();
  std::vector<Partition> order = partitions(d, n);  // lex-descending, most dominant first
  std::map<Partition, Rational> rho_of;
  for (const Partition& nu : order) rho_of[nu] = rho(nu, alpha);
  bool seen = false;
  for (const Partition& nu : order) {
    if (nu == lam) {
      u[nu] = Scalar<T>::from(Rational(1));
      seen = true;
      continue;
    }
    if (!seen) continue;  // nu lex-above lambda cannot be in the support
    // accumulate contributions from all mu > nu reachable by merging a value
    // pair {a,b} of nu into {a+t, b-t}
    T acc{};
    bool any = false;
    std::vector<std::pair<int, int>> mults;  // (value, multiplicity), values > 0
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
          bool removed_a = false, removed_b = false;
          for (int idx = 1; idx <= nu.length(); ++idx) {
            int v = nu.part(idx);
            if (!removed_a && v == a) {
              removed_a = true;
              continue;
            }
            if (!removed_b && v == b) {
              removed_b = true;
              continue;
            }
            parts.push_back(v);
          }
          parts.push_back(r);
          if (s > 0) parts.push_back(s);
          Partition mu = Partition::from_unsorted(std::move(parts));
          auto it = u.find(mu);
          if (it == u.end()) continue;
          T contrib = kT * Scalar<T>::from(Rational(r - s)) * Scalar<T>::from(Rational(pairs)) *
                      it->second;
          acc = any ? acc + contrib : contrib;
          any = true;
        }
      }
    }
    if (!any) continue;
    Rational gap = rho_of[lam] - rho_of[nu];  // > 0 for nu strictly below lambda
    T val = acc / Scalar<T>::from(gap);
    if constexpr (std::is_same_v<T, Rational>) {
      if (val != 0) u[nu] = val;
    } else {
      if (val != 0.0) u[nu] = val;
    }
  }
  return u;
}

template std::map<Partition, Rational> jack_p_recurrence<Rational>(const Partition&,
                                                                   const AlphaParam&, int);
template std::map<Partition, double> jack_p_recurrence<double>(const Partition&,
                                                               const AlphaParam&, int);

}  // namespace mhg
