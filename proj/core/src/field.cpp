#include "hstrata/field.hpp"

namespace hstrata {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

GF::GF(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (1ULL << 31))
    throw std::invalid_argument("GF: prime must satisfy 2 <= p < 2^31");
  if (!is_prime_u64(p)) throw std::invalid_argument("GF: modulus is not prime");
}

GF::Elem GF::inv(Elem a) const {
  if (a == 0) throw std::domain_error("GF: inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<Elem>(t);
}

GF::Elem GF::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  Elem base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace hstrata
