#include "mhg/powersum.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace mhg {

PowerSumElement PowerSumElement::one(int cap) { return term(Partition(), Rational(1), cap); }

PowerSumElement PowerSumElement::p(int r, int cap) {
  if (r < 1) throw ParameterError("power sum index must be >= 1");
  return term(Partition({r}), Rational(1), cap);
}

PowerSumElement PowerSumElement::term(const Partition& lam, const Rational& c, int cap) {
  PowerSumElement f(cap);
  f.add_term(lam, c);
  return f;
}

Rational PowerSumElement::coeff(const Partition& lam) const {
  auto it = c_.find(lam);
  return it == c_.end() ? Rational(0) : it->second;
}

int PowerSumElement::degree() const {
  int d = -1;
  for (const auto& [lam, c] : c_) d = std::max(d, lam.weight());
  return d;
}

PowerSumElement& PowerSumElement::add_term(const Partition& lam, const Rational& c) {
  if (c == 0) return *this;
  if (lam.weight() > cap_) {
    truncated_ = true;
    return *this;
  }
  Rational& slot = c_[lam];
  slot += c;
  if (slot == 0) c_.erase(lam);
  return *this;
}

PowerSumElement& PowerSumElement::operator+=(const PowerSumElement& g) {
  truncated_ = truncated_ || g.truncated_;
  for (const auto& [lam, c] : g.c_) add_term(lam, c);
  return *this;
}

PowerSumElement& PowerSumElement::operator-=(const PowerSumElement& g) {
  truncated_ = truncated_ || g.truncated_;
  for (const auto& [lam, c] : g.c_) add_term(lam, -c);
  return *this;
}

PowerSumElement& PowerSumElement::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [lam, v] : c_) v *= c;
  return *this;
}

namespace {
Partition concat_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}
}  // namespace

PowerSumElement operator*(const PowerSumElement& f, const PowerSumElement& g) {
  PowerSumElement out(std::min(f.degree_cap(), g.degree_cap()));
  out.truncated_ = f.truncated_ || g.truncated_;
  for (const auto& [lf, cf] : f.c_) {
    for (const auto& [lg, cg] : g.c_) {
      if (lf.weight() + lg.weight() > out.cap_) {
        out.truncated_ = true;
        continue;
      }
      out.add_term(concat_parts(lf, lg), cf * cg);
    }
  }
  return out;
}

PowerSumElement PowerSumElement::d_dp1() const {
  PowerSumElement out(cap_);
  out.truncated_ = truncated_;
  for (const auto& [lam, c] : c_) {
    int ones = 0;
    for (int i = 1; i <= lam.length(); ++i)
      if (lam.part(i) == 1) ++ones;
    if (ones == 0) continue;
    std::vector<int> parts = lam.parts();
    parts.pop_back();  // parts are sorted, so the last one is a 1
    out.add_term(Partition(std::move(parts)), c * ones);
  }
  return out;
}

PowerSumElement PowerSumElement::graded_piece(int degree) const {
  PowerSumElement out(cap_);
  out.truncated_ = truncated_;
  for (const auto& [lam, c] : c_)
    if (lam.weight() == degree) out.add_term(lam, c);
  return out;
}

PowerSumElement PowerSumElement::with_cap(int cap) const {
  PowerSumElement out(cap);
  out.truncated_ = truncated_;
  for (const auto& [lam, c] : c_) out.add_term(lam, c);
  return out;
}

Rational inner_product(const PowerSumElement& f, const PowerSumElement& g,
                       const AlphaParam& alpha) {
  if (f.truncated() || g.truncated())
    throw ExactnessError("inner product refuses truncated inputs");
  if (alpha.is_infinite()) throw ParameterError("inner product needs finite alpha");
  const Rational& a = alpha.alpha();
  Rational out(0);
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  const auto& small = fc.size() <= gc.size() ? fc : gc;
  const auto& large = fc.size() <= gc.size() ? gc : fc;
  for (const auto& [lam, c] : small) {
    auto it = large.find(lam);
    if (it == large.end()) continue;
    out += c * it->second * z_stat(lam) * rat_pow(a, lam.length());
  }
  return out;
}

PowerSumElement omega_alpha(const PowerSumElement& f, const AlphaParam& alpha) {
  if (alpha.is_infinite()) throw ParameterError("omega needs finite alpha");
  const Rational& a = alpha.alpha();
  PowerSumElement out(f.degree_cap());
  for (const auto& [lam, c] : f.coeffs()) {
    Rational factor = rat_pow(a, lam.length());
    int odd_sign = 0;
    for (int i = 1; i <= lam.length(); ++i)
      if (lam.part(i) % 2 == 0) ++odd_sign;  // (-1)^{r-1} is -1 for even r
    if (odd_sign % 2 == 1) factor = -factor;
    out.add_term(lam, c * factor);
  }
  return out;
}

Rational eps_X(const PowerSumElement& f, const Rational& X) {
  Rational out(0);
  for (const auto& [lam, c] : f.coeffs()) out += c * rat_pow(X, lam.length());
  return out;
}

Rational eps_delta(const PowerSumElement& f) {
  Rational out(0);
  for (const auto& [lam, c] : f.coeffs()) {
    if (lam.empty() || (lam.part(1) == 1)) out += c;  // only p_1^m survives
  }
  return out;
}

double eval_powersum(const PowerSumElement& f, std::span<const double> x) {
  int maxr = 0;
  for (const auto& [lam, c] : f.coeffs()) maxr = std::max(maxr, lam.part(1));
  std::vector<double> pows(static_cast<size_t>(maxr) + 1, 0.0);
  for (int r = 1; r <= maxr; ++r) {
    double s = 0;
    for (double xi : x) s += std::pow(xi, r);
    pows[r] = s;
  }
  double out = 0;
  for (const auto& [lam, c] : f.coeffs()) {
    double t = to_double(c);
    for (int i = 1; i <= lam.length(); ++i) t *= pows[lam.part(i)];
    out += t;
  }
  return out;
}

Rational eval_powersum_exact(const PowerSumElement& f, std::span<const Rational> x) {
  int maxr = 0;
  for (const auto& [lam, c] : f.coeffs()) maxr = std::max(maxr, lam.part(1));
  std::vector<Rational> pows(static_cast<size_t>(maxr) + 1, Rational(0));
  for (int r = 1; r <= maxr; ++r) {
    Rational s(0);
    for (const Rational& xi : x) s += rat_pow(xi, r);
    pows[r] = s;
  }
  Rational out(0);
  for (const auto& [lam, c] : f.coeffs()) {
    Rational t = c;
    for (int i = 1; i <= lam.length(); ++i) t *= pows[lam.part(i)];
    out += t;
  }
  return out;
}

std::string PowerSumElement::json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [lam, c] : c_) j[lam.str()] = rat_str(c);
  return j.dump();
}

PowerSumElement PowerSumElement::from_json(const std::string& text, int cap) {
  nlohmann::json j = nlohmann::json::parse(text);
  PowerSumElement out(cap);
  for (auto it = j.begin(); it != j.end(); ++it)
    out.add_term(parse_partition(it.key()), parse_rational(it.value().get<std::string>()));
  return out;
}

}  // namespace mhg
