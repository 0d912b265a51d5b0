#include "mhg/poly.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace mhg {

// ---------------------------------------------------------------------------
// NVarPoly
// ---------------------------------------------------------------------------

NVarPoly NVarPoly::constant(int nvars, const Rational& c) {
  NVarPoly f(nvars);
  f.add_term(std::vector<int>(nvars, 0), c);
  return f;
}

NVarPoly NVarPoly::var_pow(int nvars, int i, int r) {
  NVarPoly f(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = r;
  f.add_term(std::move(e), Rational(1));
  return f;
}

int NVarPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : c_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return c_.empty() ? -1 : d;
}

NVarPoly& NVarPoly::add_term(std::vector<int> expo, const Rational& c) {
  if (static_cast<int>(expo.size()) != n_) throw ParameterError("exponent arity mismatch");
  if (c == 0) return *this;
  auto [it, inserted] = c_.try_emplace(std::move(expo), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
  return *this;
}

NVarPoly& NVarPoly::operator+=(const NVarPoly& g) {
  if (g.n_ != n_) throw ParameterError("variable count mismatch");
  for (const auto& [e, c] : g.c_) add_term(e, c);
  return *this;
}

NVarPoly& NVarPoly::operator-=(const NVarPoly& g) {
  if (g.n_ != n_) throw ParameterError("variable count mismatch");
  for (const auto& [e, c] : g.c_) add_term(e, -c);
  return *this;
}

NVarPoly& NVarPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [e, v] : c_) v *= c;
  return *this;
}

NVarPoly operator*(const NVarPoly& f, const NVarPoly& g) {
  if (f.n_ != g.n_) throw ParameterError("variable count mismatch");
  NVarPoly out(f.n_);
  for (const auto& [ef, cf] : f.c_) {
    for (const auto& [eg, cg] : g.c_) {
      std::vector<int> e(f.n_);
      for (int i = 0; i < f.n_; ++i) e[i] = ef[i] + eg[i];
      out.add_term(std::move(e), cf * cg);
    }
  }
  return out;
}

NVarPoly NVarPoly::derivative(int i) const {
  NVarPoly out(n_);
  for (const auto& [e, c] : c_) {
    if (e[i] == 0) continue;
    std::vector<int> d = e;
    d[i] -= 1;
    out.add_term(std::move(d), c * e[i]);
  }
  return out;
}

NVarPoly NVarPoly::mul_var_pow(int i, int r) const {
  NVarPoly out(n_);
  for (const auto& [e, c] : c_) {
    std::vector<int> d = e;
    d[i] += r;
    out.add_term(std::move(d), c);
  }
  return out;
}

namespace {
Rational binom_rat(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }
}  // namespace

NVarPoly NVarPoly::shift_all(const Rational& c) const {
  NVarPoly out(n_);
  for (const auto& [e, coef] : c_) {
    // expand prod_i (x_i + c)^{e_i}
    std::vector<std::pair<std::vector<int>, Rational>> acc{{std::vector<int>(n_, 0), coef}};
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      std::vector<std::pair<std::vector<int>, Rational>> next;
      for (const auto& [base, bc] : acc) {
        for (int t = 0; t <= e[i]; ++t) {
          std::vector<int> d = base;
          d[i] = t;
          next.emplace_back(std::move(d), bc * binom_rat(e[i], t) * rat_pow(c, e[i] - t));
        }
      }
      acc = std::move(next);
    }
    for (auto& [d, v] : acc) out.add_term(std::move(d), v);
  }
  return out;
}

NVarPoly NVarPoly::reflect() const {
  NVarPoly out(n_);
  for (const auto& [e, c] : c_) {
    int s = 0;
    for (int v : e) s += v;
    out.add_term(e, (s % 2 == 0) ? c : -c);
  }
  return out;
}

NVarPoly NVarPoly::subst_one_minus() const {
  // f(1 - x) = g(-x) with g(x) = f(x + 1)
  return shift_all(Rational(1)).reflect();
}

NVarPoly NVarPoly::divide_diff(int i, int j) const {
  // Quotient of *this by (x_i - x_j); synthetic division along x_i.
  NVarPoly q(n_);
  NVarPoly rem(n_);
  for (const auto& [e, c] : c_) {
    int m = e[i];
    if (m > 0) {
      for (int u = 0; u < m; ++u) {
        std::vector<int> d = e;
        d[i] = u;
        d[j] += m - 1 - u;
        q.add_term(std::move(d), c);
      }
    }
    std::vector<int> r = e;
    r[j] += r[i];
    r[i] = 0;
    rem.add_term(std::move(r), c);
  }
  if (!rem.is_zero())
    throw SymmetryError("pairwise division left a remainder: input not symmetric in the pair");
  return q;
}

NVarPoly NVarPoly::graded_piece(int degree) const {
  NVarPoly out(n_);
  for (const auto& [e, c] : c_) {
    int s = 0;
    for (int v : e) s += v;
    if (s == degree) out.add_term(e, c);
  }
  return out;
}

Rational NVarPoly::eval(std::span<const Rational> x) const {
  Rational out(0);
  for (const auto& [e, c] : c_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i) t *= rat_pow(x[i], e[i]);
    out += t;
  }
  return out;
}

double NVarPoly::eval_d(std::span<const double> x) const {
  double out = 0;
  for (const auto& [e, c] : c_) {
    double t = to_double(c);
    for (int i = 0; i < n_; ++i) t *= std::pow(x[i], e[i]);
    out += t;
  }
  return out;
}

MonomialExpansion NVarPoly::to_monomial_basis() const {
  MonomialExpansion out(n_);
  for (const auto& [e, c] : c_) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (sorted == e) out.add_term(Partition(sorted), c);
  }
  // round-trip check: symmetric iff re-expansion reproduces the input
  if (!(out.expand() == *this))
    throw SymmetryError("polynomial is not symmetric; cannot collect to monomial basis");
  return out;
}

// ---------------------------------------------------------------------------
// MonomialExpansion
// ---------------------------------------------------------------------------

MonomialExpansion MonomialExpansion::m(const Partition& lam, int nvars) {
  MonomialExpansion f(nvars);
  f.add_term(lam, Rational(1));
  return f;
}

MonomialExpansion MonomialExpansion::constant(const Rational& c, int nvars) {
  MonomialExpansion f(nvars);
  f.add_term(Partition(), c);
  return f;
}

MonomialExpansion MonomialExpansion::p1_power(int m, int nvars) {
  MonomialExpansion f = constant(Rational(1), nvars);
  for (int i = 0; i < m; ++i) f = mul_by_power_sum(f, 1);
  return f;
}

Rational MonomialExpansion::coeff(const Partition& lam) const {
  auto it = c_.find(lam);
  return it == c_.end() ? Rational(0) : it->second;
}

int MonomialExpansion::degree() const {
  int d = -1;
  for (const auto& [lam, c] : c_) d = std::max(d, lam.weight());
  return d;
}

bool MonomialExpansion::is_homogeneous() const {
  int d = -1;
  for (const auto& [lam, c] : c_) {
    if (d < 0) d = lam.weight();
    if (lam.weight() != d) return false;
  }
  return true;
}

MonomialExpansion& MonomialExpansion::add_term(const Partition& lam, const Rational& c) {
  if (c == 0 || lam.length() > n_) return *this;
  Rational& slot = c_[lam];
  slot += c;
  if (slot == 0) c_.erase(lam);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator+=(const MonomialExpansion& g) {
  if (g.n_ != n_) throw ParameterError("variable count mismatch");
  for (const auto& [lam, c] : g.c_) add_term(lam, c);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator-=(const MonomialExpansion& g) {
  if (g.n_ != n_) throw ParameterError("variable count mismatch");
  for (const auto& [lam, c] : g.c_) add_term(lam, -c);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [lam, v] : c_) v *= c;
  return *this;
}

MonomialExpansion operator*(const MonomialExpansion& f, const MonomialExpansion& g) {
  return (f.expand() * g.expand()).to_monomial_basis();
}

MonomialExpansion MonomialExpansion::graded_piece(int degree) const {
  MonomialExpansion out(n_);
  for (const auto& [lam, c] : c_)
    if (lam.weight() == degree) out.add_term(lam, c);
  return out;
}

NVarPoly MonomialExpansion::expand() const {
  NVarPoly out(n_);
  for (const auto& [lam, c] : c_)
    for (const auto& e : monomial_orbit(lam, n_)) out.add_term(e, c);
  return out;
}

Rational MonomialExpansion::eval_exact(std::span<const Rational> x) const {
  Rational out(0);
  for (const auto& [lam, c] : c_) {
    Rational s(0);
    for (const auto& e : monomial_orbit(lam, n_)) {
      Rational t(1);
      for (int i = 0; i < n_; ++i) t *= rat_pow(x[i], e[i]);
      s += t;
    }
    out += c * s;
  }
  return out;
}

double MonomialExpansion::eval_d(std::span<const double> x) const {
  double out = 0;
  for (const auto& [lam, c] : c_) {
    double s = 0;
    for (const auto& e : monomial_orbit(lam, n_)) {
      double t = 1;
      for (int i = 0; i < n_; ++i) t *= std::pow(x[i], e[i]);
      s += t;
    }
    out += to_double(c) * s;
  }
  return out;
}

Rational MonomialExpansion::eval_at_ones() const {
  Rational out(0);
  for (const auto& [lam, c] : c_) out += c * monomial_at_ones(lam, n_);
  return out;
}

std::string MonomialExpansion::json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [lam, c] : c_) j[lam.str()] = rat_str(c);
  return j.dump();
}

MonomialExpansion MonomialExpansion::from_json(const std::string& text, int nvars) {
  nlohmann::json j = nlohmann::json::parse(text);
  MonomialExpansion out(nvars);
  for (auto it = j.begin(); it != j.end(); ++it)
    out.add_term(parse_partition(it.key()), parse_rational(it.value().get<std::string>()));
  return out;
}

MonomialExpansion shift_by_one(const MonomialExpansion& f) {
  return f.expand().shift_all(Rational(1)).to_monomial_basis();
}

MonomialExpansion one_minus(const MonomialExpansion& f) {
  return f.expand().subst_one_minus().to_monomial_basis();
}

MonomialExpansion mul_by_power_sum(const MonomialExpansion& f, int r) {
  if (r < 1) throw ParameterError("power sum index must be >= 1");
  // p_r * m_mu = sum over distinct part values v of mu (plus a zero part when
  // a free variable slot remains): grow one v to v + r; the target m_nu picks
  // up the multiplicity of v + r among nu's parts.
  MonomialExpansion out(f.nvars());
  for (const auto& [mu, c] : f.coeffs()) {
    std::vector<int> values;
    for (int i = 1; i <= mu.length(); ++i)
      if (i == 1 || mu.part(i) != mu.part(i - 1)) values.push_back(mu.part(i));
    if (mu.length() < f.nvars()) values.push_back(0);
    for (int v : values) {
      std::vector<int> parts = mu.parts();
      if (v == 0)
        parts.push_back(r);
      else {
        for (auto& p : parts)
          if (p == v) {
            p += r;
            break;
          }
      }
      Partition nu = Partition::from_unsorted(std::move(parts));
      int target = v + r;
      long mult = 0;
      for (int i = 1; i <= nu.length(); ++i)
        if (nu.part(i) == target) ++mult;
      out.add_term(nu, c * mult);
    }
  }
  return out;
}

}  // namespace mhg
