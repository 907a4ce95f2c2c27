#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hstrata/partition.hpp"

namespace hstrata {

/// The tail H(R/(V))_{>= j} of a Hilbert function: values (h_j, h_{j+1}, ...)
/// listed down to the first repetition.  The last listed value is the stable
/// value c, which equals the number of base points (the gcd degree).
class HilbertTail {
 public:
  HilbertTail(int j, std::vector<int> values);

  int j() const { return j_; }
  const std::vector<int>& values() const { return values_; }
  int length() const { return static_cast<int>(values_.size()); }

  /// Stable value c = lim h_i.
  int c() const { return values_.back(); }

  /// Codimension of V in R_j: h_j = j + 1 - d.
  int d() const { return j_ + 1 - values_.front(); }

  /// h_i for i >= j, extending by the stable value.
  int value_at(int i) const;

  /// e_i = h_{i-1} - h_i for i >= j+1 (uses the stable extension).
  int e(int i) const { return value_at(i - 1) - value_at(i); }

  int tau() const { return 1 + e(j_ + 1); }

  std::string to_string() const;

  bool operator==(const HilbertTail&) const = default;

 private:
  int j_;
  std::vector<int> values_;
};

/// Termwise partial order on tails of the same j, comparing the infinite
/// extensions (tails are padded with their stable value).
bool termwise_leq(const HilbertTail& a, const HilbertTail& b);

/// Recover (lambda, c) from a tail: the difference sequence
/// (e_{j+1}, e_{j+2}, ...) is the conjugate of lambda.
std::pair<Partition, int> lambda_of(const HilbertTail& tail);

/// Relation degrees D = (lambda_1+1, ..., lambda_{tau-1}+1, 1^{d-tau}),
/// a partition of j - c into exactly d-1 parts.
Partition relation_degrees(const Partition& lambda, int d);

/// Inverse of lambda_of: h_{j+i} = c + sum_u |lambda_u - i|^+ .
HilbertTail tail_from_lambda(const Partition& lambda, int c, int j, int d);

}  // namespace hstrata
