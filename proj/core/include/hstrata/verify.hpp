#pragma once

#include <cstdint>
#include <string>

#include "hstrata/field.hpp"

namespace hstrata {

struct VerifyOptions {
  int j = -1;           // -1: use the suite's default (j, d) grid
  int d = -1;
  int trials = -1;      // -1: suite default
  std::uint64_t seed = 1;
  int max_j = 12;       // orders suite
  int max_n = 20;       // mu suite
  int retries = 10;     // closure suite
};

struct VerifyResult {
  bool pass = false;
  std::string json;  // machine-readable summary; failures carry counterexamples
};

/// Runs one verification suite: "dims", "orders", "closure", "semicontinuity"
/// or "mu".  Throws std::invalid_argument for an unknown suite name.
VerifyResult verify_suite(const GF& k, const std::string& suite, const VerifyOptions& opt);

}  // namespace hstrata
