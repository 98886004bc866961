#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpjac/int_matrix.hpp"

namespace gpjac {

/// Machine-readable result of one (n, k) computation. Big integers travel as decimal strings.
struct OutputRecord {
  long n = 0;
  long k = 0;
  std::string tau;
  std::optional<std::vector<std::string>> invariant_factors;
  std::optional<long> free_rank;
  std::string method;
  long elapsed_ms = 0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
void from_json(const nlohmann::json& j, OutputRecord& r);

std::vector<std::string> decimal_strings(const std::vector<Integer>& values);

/// Factors joined by 'x', e.g. "5x15"; used inside a single CSV field.
std::string join_factors(const std::vector<std::string>& factors, std::string_view sep = "x");

/// "Z_5 ⊕ Z_15" from decimal strings.
std::string group_string(const std::vector<std::string>& factors);

}  // namespace gpjac
