#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hstrata/form_space.hpp"

namespace hstrata {

/// Malformed input document; the CLI maps this to exit code 2.  Messages
/// name the offending row where one exists.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A form-space document: the JSON interchange format
///   { "field": "rational" | {"prime": p},
///     "j": <degree>,
///     "forms": [[c_0, ..., c_j], ...] }
/// with row entry i the coefficient of x^(j-i) y^i.  Rational entries are
/// "num/den" strings (or plain integers); modular entries are integers.
/// Rows must be linearly independent; this is validated on load.
class FormSpaceDocument {
 public:
  static FormSpaceDocument parse(std::istream& in);
  static FormSpaceDocument parse_string(const std::string& text);

  static FormSpaceDocument from_space(const FormSpace<GF>& v);
  static FormSpaceDocument from_space(const FormSpace<QQ>& v);

  bool modular() const { return modular_; }
  std::uint64_t prime() const { return prime_; }
  int j() const { return j_; }
  int d() const;

  /// Typed views; call the one matching the mode.
  const FormSpace<GF>& gf_space() const;
  const FormSpace<QQ>& qq_space() const;

  /// Canonical bytes: stable field order, two-space indent, trailing newline.
  std::string serialize() const;

 private:
  FormSpaceDocument() = default;

  bool modular_ = true;
  std::uint64_t prime_ = kDefaultPrime;
  int j_ = 0;
  std::vector<FormSpace<GF>> gf_;  // 0 or 1 elements
  std::vector<FormSpace<QQ>> qq_;
  std::vector<std::vector<std::string>> raw_rows_;  // input echo, as written
};

}  // namespace hstrata
