#include "mhg/symfun.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace mhg {

namespace {

// ---------------------------------------------------------------------------
// Power sums in the monomial basis and the inverse transition, per degree.
// ---------------------------------------------------------------------------

struct DegreeTables {
  // p_lambda expanded over m_nu (formal: enough variables for the degree)
  std::map<Partition, std::map<Partition, Rational>> p_in_m;
  // m_lambda expanded over p_nu
  std::map<Partition, PowerSumElement> m_in_p;
};

const DegreeTables& degree_tables(int d) {
  static std::map<int, DegreeTables> cache;
  static std::shared_mutex mx;
  {
    std::shared_lock lk(mx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lk(mx);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  DegreeTables t;
  std::vector<Partition> parts_desc = partitions(d, d);  // lex-descending
  // p_lambda in the m-basis: fold generators (formal = d variables suffice)
  for (const Partition& lam : parts_desc) {
    MonomialExpansion acc = MonomialExpansion::constant(Rational(1), d == 0 ? 1 : d);
    for (int i = 1; i <= lam.length(); ++i) acc = mul_by_power_sum(acc, lam.part(i));
    t.p_in_m[lam] = acc.coeffs();
  }
  // invert: iterate most-dominant first; p_nu = A_{nu,nu} m_nu + sum over
  // strictly dominance-higher rows, so back-substitution works downward.
  for (const Partition& nu : parts_desc) {
    const auto& row = t.p_in_m[nu];
    PowerSumElement expr(std::max(d, 1));
    expr.add_term(nu, Rational(1));  // p_nu itself
    Rational diag;
    PowerSumElement rest(std::max(d, 1));
    for (const auto& [mu, a] : row) {
      if (mu == nu) {
        diag = a;
        continue;
      }
      // mu strictly dominates nu here; m_mu already expressed in p
      const PowerSumElement& known = t.m_in_p.at(mu);
      for (const auto& [rho, c] : known.coeffs()) rest.add_term(rho, c * a);
    }
    expr -= rest;
    expr *= Rational(1) / diag;
    t.m_in_p[nu] = expr;
  }
  auto [ins, ok] = cache.emplace(d, std::move(t));
  return ins->second;
}

}  // namespace

const PowerSumElement& monomial_in_powersums(const Partition& lam) {
  return degree_tables(lam.weight()).m_in_p.at(lam);
}

PowerSumElement m_to_p(const MonomialExpansion& f) {
  int cap = std::max(f.degree(), 1);
  PowerSumElement out(cap);
  for (const auto& [lam, c] : f.coeffs()) {
    const PowerSumElement& base = monomial_in_powersums(lam);
    for (const auto& [rho, v] : base.coeffs()) out.add_term(rho, v * c);
  }
  return out;
}

MonomialExpansion p_to_m_truncated(const PowerSumElement& f, int nvars) {
  MonomialExpansion out(nvars);
  for (const auto& [lam, c] : f.coeffs()) {
    MonomialExpansion acc = MonomialExpansion::constant(c, nvars);
    for (int i = 1; i <= lam.length(); ++i) acc = mul_by_power_sum(acc, lam.part(i));
    out += acc;
  }
  return out;
}

MonomialExpansion p_to_m(const PowerSumElement& f, int nvars) {
  if (f.truncated()) throw ExactnessError("p_to_m refuses truncated inputs");
  return p_to_m_truncated(f, nvars);
}

// ---------------------------------------------------------------------------
// Formal Jack polynomials by Gram-Schmidt, cached per (degree, alpha).
// ---------------------------------------------------------------------------

namespace {

struct JackBlock {
  std::map<Partition, PowerSumElement> P;
  std::map<Partition, Rational> norm;  // <P,P>_alpha
};

struct BlockKey {
  int d;
  Rational alpha;
  bool operator<(const BlockKey& o) const {
    if (d != o.d) return d < o.d;
    return alpha < o.alpha;
  }
};

const JackBlock& jack_block(int d, const Rational& alpha) {
  static std::map<BlockKey, JackBlock> cache;
  static std::shared_mutex mx;
  BlockKey key{d, alpha};
  {
    std::shared_lock lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lk(mx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  JackBlock blk;
  AlphaParam ap(alpha);
  std::vector<Partition> order = partitions(d, d);      // lex-descending
  std::reverse(order.begin(), order.end());             // process minimal first
  std::vector<const Partition*> done;
  for (const Partition& lam : order) {
    PowerSumElement v = monomial_in_powersums(lam);
    for (const Partition* mu : done) {
      Rational c = inner_product(v, blk.P.at(*mu), ap) / blk.norm.at(*mu);
      if (c != 0) v -= blk.P.at(*mu) * c;
    }
    blk.norm[lam] = inner_product(v, v, ap);
    blk.P[lam] = std::move(v);
    done.push_back(&lam);
  }
  auto [ins, ok] = cache.emplace(key, std::move(blk));
  return ins->second;
}

}  // namespace

PowerSumElement jack_p_formal(const Partition& lam, const Rational& alpha) {
  return jack_block(lam.weight(), alpha).P.at(lam);
}

Rational jack_p_norm(const Partition& lam, const Rational& alpha) {
  return jack_block(lam.weight(), alpha).norm.at(lam);
}

PowerSumElement jack_j_formal(const Partition& lam, const Rational& alpha) {
  auto [h, hp] = hook_products(lam, AlphaParam(alpha));
  return jack_p_formal(lam, alpha) * h;
}

PowerSumElement jack_jstar_formal(const Partition& lam, const Rational& alpha) {
  auto [h, hp] = hook_products(lam, AlphaParam(alpha));
  return jack_p_formal(lam, alpha) * (Rational(1) / hp);
}

PowerSumElement skew_jack(const Partition& lam, const Partition& mu, const AlphaParam& alpha,
                          int cap) {
  if (alpha.is_infinite()) throw ParameterError("skew elements need finite rational alpha");
  int usable_cap = std::max(cap, lam.weight());
  PowerSumElement out(usable_cap);
  if (!lam.contains(mu)) return out;  // documented convention: zero
  const Rational& a = alpha.alpha();
  int r = lam.weight() - mu.weight();
  PowerSumElement jlam = jack_j_formal(lam, a).with_cap(usable_cap);
  PowerSumElement jstar_mu = jack_jstar_formal(mu, a).with_cap(usable_cap);
  for (const Partition& nu : partitions(r, r)) {
    PowerSumElement jstar_nu = jack_jstar_formal(nu, a).with_cap(usable_cap);
    Rational c = inner_product(jlam, jstar_mu * jstar_nu, alpha);
    if (c != 0) out += jack_j_formal(nu, a) * c;
  }
  return out;
}

}  // namespace mhg
