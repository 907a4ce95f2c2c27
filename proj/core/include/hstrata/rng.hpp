#pragma once

#include <cstdint>
#include <initializer_list>

#include "hstrata/field.hpp"

namespace hstrata {

/// splitmix64 step.  Chosen over std engines for bit-exact reproducibility of
/// seeds across platforms and standard library versions.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based stream derivation: every experiment trial owns the stream
/// keyed by (master seed, suite id, trial index, ...), so any single trial is
/// replayable in isolation.
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
  std::uint64_t s = seed;
  for (std::uint64_t id : ids) {
    s ^= id + 0x9E3779B97F4A7C15ULL + (s << 6) + (s >> 2);
    splitmix64(s);
  }
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, n).  Plain modulo: the bias is < 2^-32 for our moduli and
  /// determinism matters more than perfect uniformity here.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  GF::Elem element(const GF& k) { return below(k.prime()); }
  GF::Elem nonzero(const GF& k) { return 1 + below(k.prime() - 1); }

 private:
  std::uint64_t state_;
};

}  // namespace hstrata
