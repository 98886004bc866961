#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace gpjac {

/// One published row: Jac(GP(n,k)) as printed (factor order not necessarily canonical) and its order.
struct GoldenRow {
  long n;
  std::vector<std::string_view> factors;
  std::string_view tau;
};

struct GoldenTable {
  int number;
  long k;
  std::vector<GoldenRow> rows;
};

/// The reference tables for k = 2, 3, 4.
std::span<const GoldenTable> golden_tables();

}  // namespace gpjac
