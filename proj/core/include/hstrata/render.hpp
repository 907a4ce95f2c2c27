#pragma once

#include <optional>
#include <string>

#include "hstrata/document.hpp"
#include "hstrata/partition.hpp"

namespace hstrata {

/// Marks the rows lying in the closure of the (lambda, c) stratum with a
/// trailing '*' column in the enumerate table.
struct StarMark {
  Partition lambda;
  int c = 0;
};

std::string enumerate_csv(int j, int d, const std::optional<StarMark>& star = std::nullopt);
std::string enumerate_json(int j, int d, const std::optional<StarMark>& star = std::nullopt);

std::string nose_csv(int j, int d);
std::string nose_json(int j, int d);

/// DOT digraph of the closure poset: node labels "lambda | tail | dim",
/// edges are covering relations from each stratum into its closure.
std::string poset_dot(int j, int d);
std::string poset_json(int j, int d);

/// Full invariant report for a parsed document, as JSON.
std::string analyze_report(const FormSpaceDocument& doc);

}  // namespace hstrata
