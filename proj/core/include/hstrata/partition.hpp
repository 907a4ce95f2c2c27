#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hstrata {

/// Integer partition: weakly decreasing, strictly positive parts.  The empty
/// partition is the partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Sorts descending and drops zeros before validating.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int sum() const;

  /// i-th part, 0 beyond the end.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// Transpose of the Ferrers diagram; an involution.
  Partition conjugate() const;

  /// "(3,1)"; the empty partition prints as "(0)".
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
};

/// Bruhat (dominance) order via prefix sums, zero-padded to equal length.
/// Only defined for partitions of the same integer; throws otherwise.
bool bruhat_leq(const Partition& p, const Partition& q);

/// All partitions of n with at most (or, with exact=true, exactly) max_parts
/// parts, sorted lexicographically ascending.
std::vector<Partition> enumerate_partitions(int n, int max_parts, bool exact = false);

/// ell(P) = c*(d-1) + sum_{u<v} (P_u - P_v - 1)^+ .  Serves both as the
/// codimension of a relation-degree stratum (P = D, inside the Grassmannian)
/// and, with P = lambda or P = A, as the codimension inside the tau stratum.
int ell_partition(const Partition& p, int c, int d);

}  // namespace hstrata
