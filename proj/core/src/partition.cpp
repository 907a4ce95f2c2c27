#include "hstrata/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hstrata {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool bruhat_leq(const Partition& p, const Partition& q) {
  if (p.sum() != q.sum())
    throw std::invalid_argument("bruhat_leq: order undefined for partitions of different totals");
  int n = std::max(p.length(), q.length());
  int sp = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) return false;
  }
  return true;
}

namespace {

void gen_partitions(int n, int max_parts, std::vector<int>& acc,
                    std::vector<Partition>& out, bool exact) {
  if (n == 0) {
    if (!exact || static_cast<int>(acc.size()) == max_parts)
      out.emplace_back(Partition(acc));
    return;
  }
  if (static_cast<int>(acc.size()) >= max_parts) return;
  int slots = max_parts - static_cast<int>(acc.size());
  // Next part ascending gives overall lexicographic order.
  int lo = (n + slots - 1) / slots;
  int hi = acc.empty() ? n : std::min(n, acc.back());
  for (int first = lo; first <= hi; ++first) {
    acc.push_back(first);
    gen_partitions(n - first, max_parts, acc, out, exact);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_parts, bool exact) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    if (!exact || max_parts == 0) out.emplace_back();
    return out;
  }
  if (max_parts <= 0) return out;
  std::vector<int> acc;
  gen_partitions(n, max_parts, acc, out, exact);
  return out;
}

int ell_partition(const Partition& p, int c, int d) {
  int s = c * (d - 1);
  for (int u = 0; u < p.length(); ++u)
    for (int v = u + 1; v < p.length(); ++v)
      s += std::max(p.part(u) - p.part(v) - 1, 0);
  return s;
}

}  // namespace hstrata
