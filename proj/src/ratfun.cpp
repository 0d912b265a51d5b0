#include "mhg/ratfun.hpp"

#include "mhg/common.hpp"

namespace mhg {

Poly1::Poly1(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly1 Poly1::constant(const Rational& c) { return Poly1(std::vector<Rational>{c}); }

Poly1 Poly1::variable() { return Poly1(std::vector<Rational>{Rational(0), Rational(1)}); }

Rational Poly1::leading() const {
  if (c_.empty()) throw ParameterError("zero polynomial has no leading coefficient");
  return c_.back();
}

Poly1& Poly1::operator+=(const Poly1& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), Rational(0));
  for (size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), Rational(0));
  for (size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
  trim();
  return *this;
}

Poly1 operator*(const Poly1& f, const Poly1& g) {
  if (f.is_zero() || g.is_zero()) return Poly1();
  std::vector<Rational> out(f.c_.size() + g.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < f.c_.size(); ++i)
    for (size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
  return Poly1(std::move(out));
}

Poly1 operator*(Poly1 f, const Rational& c) {
  if (c == 0) return Poly1();
  for (auto& v : f.c_) v *= c;
  return f;
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& f, const Poly1& g) {
  if (g.is_zero()) throw ParameterError("polynomial division by zero");
  std::vector<Rational> rem = f.c_;
  int dg = g.degree();
  if (f.degree() < dg) return {Poly1(), f};
  std::vector<Rational> quo(f.degree() - dg + 1, Rational(0));
  for (int i = f.degree(); i >= dg; --i) {
    Rational c = rem[i] / g.c_.back();
    if (c == 0) continue;
    quo[i - dg] = c;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= c * g.c_[j];
  }
  return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 Poly1::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Rational Poly1::eval(const Rational& x) const {
  Rational out(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
  return out;
}

Poly1 Poly1::compose_linear(const Rational& u, const Rational& v) const {
  Poly1 arg(std::vector<Rational>{v, u});
  Poly1 out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * arg + Poly1::constant(*it);
  return out;
}

Poly1 poly_gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    auto [q, r] = Poly1::divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(Poly1 num, Poly1 den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ParameterError("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly1::constant(Rational(1));
    return;
  }
  Poly1 g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly1::divmod(num_, g).first;
    den_ = Poly1::divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  den_ = den_ * (Rational(1) / lead);
  num_ = num_ * (Rational(1) / lead);
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(Poly1::constant(c), Poly1::constant(Rational(1)));
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Poly1::variable(), Poly1::constant(Rational(1)));
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) throw ParameterError("division by zero rational function");
  return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
}

bool operator==(const RationalFunction& f, const RationalFunction& g) {
  return f.num_ * g.den_ == g.num_ * f.den_;
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw SingularParameterError("rational function pole at " + rat_str(x));
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose_linear(const Rational& u, const Rational& v) const {
  return RationalFunction(num_.compose_linear(u, v), den_.compose_linear(u, v));
}

}  // namespace mhg
