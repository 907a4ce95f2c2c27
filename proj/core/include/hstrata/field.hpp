#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace hstrata {

/// Default prime 2^31 - 1: single-word modular arithmetic, and large enough
/// that random sampling lands in the generic stratum with overwhelming
/// probability.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

bool is_prime_u64(std::uint64_t n);

/// The prime field F_p, p < 2^31 so that products fit in 64 bits.
/// Elements are bare residues; the field object carries p, so spaces and
/// matrices store one GF alongside their entries.
class GF {
 public:
  using Elem = std::uint64_t;

  explicit GF(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const { return a != 0; }

  bool operator==(const GF&) const = default;

 private:
  std::uint64_t p_;
};

/// The rationals, backed by boost::multiprecision::cpp_rational, which keeps
/// every value canonical: positive denominator, gcd(num, den) = 1.
struct QQ {
  using Elem = boost::multiprecision::cpp_rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t n) const { return Elem(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("QQ: inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_unit(const Elem& a) const { return a != 0; }

  bool operator==(const QQ&) const = default;
};

/// First-order (dual-number) element a + b*eps over F_p, with eps^2 = 0.
struct Dual {
  std::uint64_t primal = 0;
  std::uint64_t tangent = 0;
  bool operator==(const Dual&) const = default;
};

/// F_p[eps]/(eps^2).  Not a field: a dual is a unit iff its primal part is.
/// Elimination pivots only on units, so rank over DualGF is the rank of the
/// primal matrix while tangents ride along.
class DualGF {
 public:
  using Elem = Dual;

  explicit DualGF(GF base) : base_(base) {}
  const GF& base() const { return base_; }

  Elem zero() const { return {}; }
  Elem one() const { return {base_.one(), 0}; }
  Elem from_int(std::int64_t n) const { return {base_.from_int(n), 0}; }

  Elem add(Elem a, Elem b) const {
    return {base_.add(a.primal, b.primal), base_.add(a.tangent, b.tangent)};
  }
  Elem sub(Elem a, Elem b) const {
    return {base_.sub(a.primal, b.primal), base_.sub(a.tangent, b.tangent)};
  }
  Elem neg(Elem a) const { return {base_.neg(a.primal), base_.neg(a.tangent)}; }
  Elem mul(Elem a, Elem b) const {
    return {base_.mul(a.primal, b.primal),
            base_.add(base_.mul(a.primal, b.tangent), base_.mul(a.tangent, b.primal))};
  }
  // (a + b eps)^-1 = a^-1 - b a^-2 eps
  Elem inv(Elem a) const {
    GF::Elem ai = base_.inv(a.primal);
    return {ai, base_.neg(base_.mul(a.tangent, base_.mul(ai, ai)))};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a.primal == 0 && a.tangent == 0; }
  bool is_unit(Elem a) const { return a.primal != 0; }

  bool operator==(const DualGF&) const = default;

 private:
  GF base_;
};

}  // namespace hstrata
