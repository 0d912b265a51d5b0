#pragma once

#include <string>

#include "mhg/common.hpp"
#include "mhg/rational.hpp"

namespace mhg {

/// The Jack parameter alpha > 0, or the distinguished value infinity.
/// k = 1/alpha throughout (k = 0 at alpha = infinity).
class AlphaParam {
 public:
  AlphaParam() : inf_(false), a_(1) {}
  explicit AlphaParam(const Rational& a) : inf_(false), a_(a) {
    if (a <= 0) throw ParameterError("alpha must be positive, got " + rat_str(a));
  }
  explicit AlphaParam(long a) : AlphaParam(Rational(a)) {}

  static AlphaParam infinity() {
    AlphaParam p;
    p.inf_ = true;
    return p;
  }

  bool is_infinite() const { return inf_; }

  const Rational& alpha() const {
    if (inf_) throw ParameterError("alpha = infinity is not supported here");
    return a_;
  }

  Rational k() const { return inf_ ? Rational(0) : Rational(1) / a_; }

  double alpha_d() const;
  double k_d() const { return inf_ ? 0.0 : 1.0 / to_double(a_); }

  AlphaParam reciprocal() const {
    if (inf_) throw ParameterError("cannot invert alpha = infinity");
    return AlphaParam(Rational(1) / a_);
  }

  std::string str() const { return inf_ ? "inf" : rat_str(a_); }

  friend bool operator==(const AlphaParam& x, const AlphaParam& y) {
    return x.inf_ == y.inf_ && (x.inf_ || x.a_ == y.a_);
  }
  friend bool operator<(const AlphaParam& x, const AlphaParam& y) {
    if (x.inf_ != y.inf_) return y.inf_;
    if (x.inf_) return false;
    return x.a_ < y.a_;
  }

 private:
  bool inf_;
  Rational a_;
};

/// Parse "2", "1/2", "0.5" or "inf".
AlphaParam parse_alpha(const std::string& s);

}  // namespace mhg
