#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhg/alpha.hpp"
#include "mhg/common.hpp"
#include "mhg/rational.hpp"

namespace mhg {

/// A partition: weakly decreasing positive parts; trailing zeros are never
/// stored, so the empty partition is the zero partition.
class Partition {
 public:
  Partition() = default;
  /// Validates monotonicity and strips trailing zeros; throws ParameterError
  /// on a negative or increasing sequence.
  explicit Partition(std::vector<int> parts);
  static Partition from_unsorted(std::vector<int> parts);

  int weight() const { return weight_; }   // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }  // l(lambda)
  /// 1-based row access; rows past the length read as 0.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool contains(const Partition& mu) const;  // mu subseteq lambda row-wise

  std::string str() const;  // "[3,1,1]", "[]" for empty

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on the part vectors; a deterministic total order for keys.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

Partition conjugate(const Partition& lam);

/// n(lambda) = sum (i-1) lambda_i.
long n_stat(const Partition& lam);

/// z_lambda = prod_r r^{m_r} m_r!.
Rational z_stat(const Partition& lam);

/// lambda! = prod_i lambda_i! (row factorial product).
Rational row_factorial(const Partition& lam);

/// Dominance order within a fixed weight. Throws if weights differ.
bool dominance_leq(const Partition& mu, const Partition& lam);

/// All partitions of m with length <= max_len, in descending lexicographic
/// order (so the most dominant partition comes first).
std::vector<Partition> partitions(int m, int max_len);

/// Streaming variant of partitions(); visits in the same order.
void for_each_partition(int m, int max_len, const std::function<void(const Partition&)>& fn);

/// All mu with mu subseteq lambda (any weight), deterministic order.
std::vector<Partition> sub_partitions(const Partition& lam);

/// Partitions obtained from mu by adding one box, with length <= max_len.
std::vector<Partition> add_one_box(const Partition& mu, int max_len);
/// Partitions obtained from lam by removing one box.
std::vector<Partition> remove_one_box(const Partition& lam);

/// Hook products: h = prod (alpha a(s) + l(s) + 1), h' = prod (alpha a(s) + l(s) + alpha)
/// over the boxes s of lambda. Requires finite alpha.
std::pair<Rational, Rational> hook_products(const Partition& lam, const AlphaParam& alpha);
std::pair<double, double> hook_products_d(const Partition& lam, const AlphaParam& alpha);

/// Generalized Pochhammer symbol (a)_lambda = prod_i (a - k(i-1))_{lambda_i},
/// k = 1/alpha (k = 0 at alpha = infinity).
Rational gen_pochhammer(const Rational& a, const Partition& lam, const AlphaParam& alpha);
double gen_pochhammer_d(double a, const Partition& lam, const AlphaParam& alpha);

/// rho(lambda) = n(lambda') - k n(lambda); finite alpha.
Rational rho(const Partition& lam, const AlphaParam& alpha);
/// rho(lambda/mu) = rho(lambda) - rho(mu).
Rational rho_skew(const Partition& lam, const Partition& mu, const AlphaParam& alpha);
double rho_d(const Partition& lam, const AlphaParam& alpha);

/// Complement of mu inside the N x n box: hat mu_i = N - mu_{n+1-i}.
/// Throws ContainmentError unless mu fits in the box.
Partition complement(const Partition& mu, int N, int n);

/// Number of distinct rearrangements of lambda padded to n coordinates,
/// i.e. the value m_lambda(1_n). Zero when l(lambda) > n.
Rational monomial_at_ones(const Partition& lam, int n);

/// Distinct permutations of lambda padded with zeros to n entries.
std::vector<std::vector<int>> monomial_orbit(const Partition& lam, int n);

std::string partition_json(const Partition& lam);       // "[3,1,1]"
Partition partition_from_json(const std::string& text); // accepts "[3,1,1]"
Partition parse_partition(const std::string& text);     // accepts "3,1,1" or "[3,1,1]" or ""

}  // namespace mhg
