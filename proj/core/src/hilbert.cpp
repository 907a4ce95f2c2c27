#include "hstrata/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace hstrata {

HilbertTail::HilbertTail(int j, std::vector<int> values)
    : j_(j), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("HilbertTail: empty value list");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw std::invalid_argument("HilbertTail: negative value");
    // Strictly decreasing until the stable value: the list is truncated at
    // the first repetition, and e_i cannot re-increase afterwards.
    if (i + 1 < values_.size() && values_[i] <= values_[i + 1])
      throw std::invalid_argument("HilbertTail: values must strictly decrease to the stable value");
  }
}

int HilbertTail::value_at(int i) const {
  if (i < j_) throw std::out_of_range("HilbertTail: degree below j");
  int idx = i - j_;
  if (idx >= length()) idx = length() - 1;
  return values_[static_cast<std::size_t>(idx)];
}

std::string HilbertTail::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values_[i]);
  }
  return s + ")";
}

bool termwise_leq(const HilbertTail& a, const HilbertTail& b) {
  if (a.j() != b.j())
    throw std::invalid_argument("termwise_leq: tails live in different degrees");
  int n = a.j() + std::max(a.length(), b.length());
  for (int i = a.j(); i < n; ++i)
    if (a.value_at(i) > b.value_at(i)) return false;
  return true;
}

std::pair<Partition, int> lambda_of(const HilbertTail& tail) {
  std::vector<int> diffs;
  for (int i = tail.j() + 1; i < tail.j() + tail.length(); ++i)
    diffs.push_back(tail.e(i));
  while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
  // (e_{j+1}, e_{j+2}, ...) is weakly decreasing for admissible tails; its
  // conjugate is lambda.
  Partition conj = Partition::from_unsorted(std::move(diffs));
  return {conj.conjugate(), tail.c()};
}

Partition relation_degrees(const Partition& lambda, int d) {
  if (lambda.length() > d - 1)
    throw std::invalid_argument("relation_degrees: lambda has more than d-1 parts");
  std::vector<int> parts;
  for (int p : lambda.parts()) parts.push_back(p + 1);
  parts.resize(static_cast<std::size_t>(d - 1), 1);
  return Partition(std::move(parts));
}

HilbertTail tail_from_lambda(const Partition& lambda, int c, int j, int d) {
  if (c < 0 || d < 1 || d > j + 1)
    throw std::invalid_argument("tail_from_lambda: bad (j, d, c)");
  if (lambda.sum() != j + 1 - d - c)
    throw std::invalid_argument("tail_from_lambda: lambda does not partition j+1-d-c");
  std::vector<int> values;
  for (int i = 0;; ++i) {
    int h = c;
    for (int p : lambda.parts()) h += std::max(p - i, 0);
    if (!values.empty() && h == values.back()) break;
    values.push_back(h);
  }
  return HilbertTail(j, std::move(values));
}

}  // namespace hstrata
