#include "mhg/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace mhg {

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParameterError("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r(s);
    if (r.get_den() == 0) throw ParameterError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational r(s);
    r.canonicalize();
    return r;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  long frac_len = static_cast<long>(s.size() - dot - 1);
  if (digits.empty() || digits == "-" || digits == "+") throw ParameterError("bad rational '" + s + "'");
  mpz_class num(digits);
  mpz_class den(1);
  for (long i = 0; i < frac_len; ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

bool is_nonpositive_int(const Rational& r) { return r.get_den() == 1 && r <= 0; }

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  bool neg = e < 0;
  unsigned long ue = static_cast<unsigned long>(neg ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ue);
  Rational r = neg ? Rational(den, num) : Rational(num, den);
  if (r.get_den() == 0) throw ParameterError("0 raised to a negative power");
  r.canonicalize();
  return r;
}

Rational rising(const Rational& x, int m) {
  Rational out(1);
  Rational t = x;
  for (int i = 0; i < m; ++i) {
    out *= t;
    t += 1;
  }
  return out;
}

double rising_d(double x, int m) {
  double out = 1.0;
  for (int i = 0; i < m; ++i) out *= (x + i);
  return out;
}

long to_long_checked(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw ParameterError("expected a small integer, got " + rat_str(r));
  return r.get_num().get_si();
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

double AlphaParam::alpha_d() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return to_double(a_);
}

AlphaParam parse_alpha(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return AlphaParam::infinity();
  return AlphaParam(parse_rational(s));
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParameterError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParameterError("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

Partition conjugate(const Partition& lam) {
  std::vector<int> cols;
  if (lam.empty()) return Partition();
  cols.resize(lam.part(1), 0);
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 0; j < lam.part(i); ++j) cols[j]++;
  return Partition(std::move(cols));
}

long n_stat(const Partition& lam) {
  long s = 0;
  for (int i = 1; i <= lam.length(); ++i) s += static_cast<long>(i - 1) * lam.part(i);
  return s;
}

Rational z_stat(const Partition& lam) {
  Rational z(1);
  int i = 1;
  while (i <= lam.length()) {
    int r = lam.part(i);
    int mult = 0;
    while (i <= lam.length() && lam.part(i) == r) {
      ++mult;
      ++i;
    }
    z *= rat_pow(Rational(r), mult) * factorial(mult);
  }
  return z;
}

Rational row_factorial(const Partition& lam) {
  Rational f(1);
  for (int i = 1; i <= lam.length(); ++i) f *= factorial(lam.part(i));
  return f;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.weight() != lam.weight())
    throw ParameterError("dominance order compares equal weights only");
  long smu = 0, slam = 0;
  int len = std::max(mu.length(), lam.length());
  for (int i = 1; i <= len; ++i) {
    smu += mu.part(i);
    slam += lam.part(i);
    if (smu > slam) return false;
  }
  return true;
}

namespace {
void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(cur));
    return;
  }
  if (max_len <= 0) return;
  for (int f = std::min(remaining, max_part); f >= 1; --f) {
    if (static_cast<long>(remaining - f) > static_cast<long>(f) * (max_len - 1)) continue;
    cur.push_back(f);
    gen_partitions(remaining - f, f, max_len - 1, cur, fn);
    cur.pop_back();
  }
}
}  // namespace

void for_each_partition(int m, int max_len, const std::function<void(const Partition&)>& fn) {
  if (m < 0 || max_len < 0) throw ParameterError("partition enumeration needs m >= 0, max_len >= 0");
  std::vector<int> cur;
  gen_partitions(m, m, max_len, cur, fn);
}

std::vector<Partition> partitions(int m, int max_len) {
  std::vector<Partition> out;
  for_each_partition(m, max_len, [&](const Partition& p) { out.push_back(p); });
  return out;
}

namespace {
void gen_subs(const Partition& lam, int row, int prev, std::vector<int>& cur,
              std::vector<Partition>& out) {
  if (row > lam.length()) {
    out.push_back(Partition(cur));
    return;
  }
  int hi = std::min(lam.part(row), prev);
  for (int v = hi; v >= 0; --v) {
    if (v > 0) cur.push_back(v);
    gen_subs(lam, row + 1, v == 0 ? 0 : v, cur, out);
    if (v > 0) cur.pop_back();
    if (v == 0) break;  // once a row is empty all later rows are empty
  }
}
}  // namespace

std::vector<Partition> sub_partitions(const Partition& lam) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_subs(lam, 1, lam.empty() ? 0 : lam.part(1), cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> add_one_box(const Partition& mu, int max_len) {
  std::vector<Partition> out;
  for (int i = 1; i <= mu.length() + 1; ++i) {
    if (i > max_len) break;
    int newv = mu.part(i) + 1;
    if (i == 1 || newv <= mu.part(i - 1)) {
      std::vector<int> parts = mu.parts();
      if (i <= mu.length())
        parts[i - 1] = newv;
      else
        parts.push_back(1);
      out.push_back(Partition(std::move(parts)));
    }
  }
  return out;
}

std::vector<Partition> remove_one_box(const Partition& lam) {
  std::vector<Partition> out;
  for (int i = 1; i <= lam.length(); ++i) {
    int newv = lam.part(i) - 1;
    if (i == lam.length() || newv >= lam.part(i + 1)) {
      std::vector<int> parts = lam.parts();
      parts[i - 1] = newv;
      out.push_back(Partition(std::move(parts)));
    }
  }
  return out;
}

std::pair<Rational, Rational> hook_products(const Partition& lam, const AlphaParam& alpha) {
  if (alpha.is_infinite())
    throw ParameterError("hook products need finite alpha; use the monomial limit paths");
  const Rational& a = alpha.alpha();
  Partition conj = conjugate(lam);
  Rational h(1), hp(1);
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      int arm = lam.part(i) - j;
      int leg = conj.part(j) - i;
      h *= a * arm + leg + 1;
      hp *= a * arm + leg + a;
    }
  }
  return {h, hp};
}

std::pair<double, double> hook_products_d(const Partition& lam, const AlphaParam& alpha) {
  auto [h, hp] = hook_products(lam, alpha);
  return {to_double(h), to_double(hp)};
}

Rational gen_pochhammer(const Rational& a, const Partition& lam, const AlphaParam& alpha) {
  Rational k = alpha.k();
  Rational out(1);
  for (int i = 1; i <= lam.length(); ++i) out *= rising(a - k * (i - 1), lam.part(i));
  return out;
}

double gen_pochhammer_d(double a, const Partition& lam, const AlphaParam& alpha) {
  double k = alpha.k_d();
  double out = 1.0;
  for (int i = 1; i <= lam.length(); ++i) out *= rising_d(a - k * (i - 1), lam.part(i));
  return out;
}

Rational rho(const Partition& lam, const AlphaParam& alpha) {
  if (alpha.is_infinite()) return Rational(n_stat(conjugate(lam)));
  return Rational(n_stat(conjugate(lam))) - alpha.k() * n_stat(lam);
}

Rational rho_skew(const Partition& lam, const Partition& mu, const AlphaParam& alpha) {
  return rho(lam, alpha) - rho(mu, alpha);
}

double rho_d(const Partition& lam, const AlphaParam& alpha) { return to_double(rho(lam, alpha)); }

Partition complement(const Partition& mu, int N, int n) {
  if (N < 0 || n < 0) throw ParameterError("complement box needs N >= 0, n >= 0");
  if (mu.length() > n || mu.part(1) > N)
    throw ContainmentError("partition " + mu.str() + " does not fit in the " + std::to_string(N) +
                           "^" + std::to_string(n) + " box");
  std::vector<int> parts;
  parts.reserve(n);
  for (int i = 1; i <= n; ++i) parts.push_back(N - mu.part(n + 1 - i));
  return Partition(std::move(parts));
}

Rational monomial_at_ones(const Partition& lam, int n) {
  if (lam.length() > n) return Rational(0);
  Rational count = factorial(n) / factorial(n - lam.length());
  int i = 1;
  while (i <= lam.length()) {
    int r = lam.part(i);
    int mult = 0;
    while (i <= lam.length() && lam.part(i) == r) {
      ++mult;
      ++i;
    }
    count /= factorial(mult);
  }
  return count;
}

std::vector<std::vector<int>> monomial_orbit(const Partition& lam, int n) {
  std::vector<std::vector<int>> out;
  if (lam.length() > n) return out;
  std::vector<int> v(n, 0);
  for (int i = 1; i <= lam.length(); ++i) v[i - 1] = lam.part(i);
  std::sort(v.begin(), v.end());
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string partition_json(const Partition& lam) { return lam.str(); }

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParameterError("unterminated partition literal: " + text);
    body = body.substr(1, body.size() - 2);
  }
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition::from_unsorted(std::move(parts));
}

Partition partition_from_json(const std::string& text) { return parse_partition(text); }

}  // namespace mhg
