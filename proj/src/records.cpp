#include "gpjac/records.hpp"

namespace gpjac {

void to_json(nlohmann::json& j, const OutputRecord& r) {
  j = nlohmann::json{{"n", r.n}, {"k", r.k}, {"tau", r.tau}, {"method", r.method}, {"elapsed_ms", r.elapsed_ms}};
  if (r.invariant_factors) j["invariant_factors"] = *r.invariant_factors;
  if (r.free_rank) j["free_rank"] = *r.free_rank;
}

void from_json(const nlohmann::json& j, OutputRecord& r) {
  j.at("n").get_to(r.n);
  j.at("k").get_to(r.k);
  j.at("tau").get_to(r.tau);
  j.at("method").get_to(r.method);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  r.invariant_factors.reset();
  r.free_rank.reset();
  if (j.contains("invariant_factors")) r.invariant_factors = j.at("invariant_factors").get<std::vector<std::string>>();
  if (j.contains("free_rank")) r.free_rank = j.at("free_rank").get<long>();
}

std::vector<std::string> decimal_strings(const std::vector<Integer>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

std::string join_factors(const std::vector<std::string>& factors, std::string_view sep) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += sep;
    out += f;
  }
  return out;
}

std::string group_string(const std::vector<std::string>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z_" + f;
  }
  return out;
}

}  // namespace gpjac
