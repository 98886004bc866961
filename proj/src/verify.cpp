#include "gpjac/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "gpjac/golden.hpp"
#include "gpjac/jacobian.hpp"
#include "gpjac/parallel.hpp"
#include "gpjac/tree_count.hpp"

namespace gpjac {

VerificationRoutes VerificationRoutes::library() {
  VerificationRoutes r;
  r.tau_kirchhoff = gpjac::tau_kirchhoff;
  r.tau_theorem1 = gpjac::tau_theorem1;
  r.jacobian_laplacian = gpjac::jacobian_via_laplacian;
  r.jacobian_companion = gpjac::jacobian_via_companion;
  r.tau_prism = gpjac::tau_prism;
  r.tau_k2_quadratic = [](long n) { return gpjac::tau_k2_quadratic(n).tau; };
  r.tau_k2_recurrence = gpjac::tau_k2_recurrence;
  r.tau_k3_recurrence = gpjac::tau_k3_recurrence;
  r.tau_k4_recurrence = gpjac::tau_k4_recurrence;
  return r;
}

bool VerifyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const PropertyResult* VerifyReport::find(std::string_view name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

namespace {

// Either a value or the message of the exception the route threw.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::string error;

  std::string describe() const;
};

template <>
std::string Outcome<Integer>::describe() const {
  return value ? to_decimal(*value) : "error: " + error;
}

template <>
std::string Outcome<AbelianGroup>::describe() const {
  return value ? value->to_string() : "error: " + error;
}

template <class T, class F>
Outcome<T> attempt(F&& f) {
  Outcome<T> out;
  try {
    out.value = f();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

struct Cell {
  long n = 0;
  long k = 0;
  Outcome<Integer> kirchhoff;
  Outcome<Integer> theorem1;
  Outcome<AbelianGroup> via_laplacian;
  Outcome<AbelianGroup> via_companion;
  Outcome<AbelianGroup> mirrored;  // Laplacian route on GP(n, n-k)
  std::map<std::string, Outcome<Integer>> closed;
};

PropertyResult property(std::string name) {
  PropertyResult p;
  p.name = std::move(name);
  return p;
}

std::string where(long n, long k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

template <class T>
void compare(PropertyResult& prop, long n, long k, const char* lhs_name, const Outcome<T>& lhs, const char* rhs_name,
             const Outcome<T>& rhs) {
  ++prop.checked;
  if (lhs.value && rhs.value && *lhs.value == *rhs.value) return;
  prop.failures.push_back(where(n, k) + " " + lhs_name + " = " + lhs.describe() + ", " + rhs_name + " = " +
                          rhs.describe());
}

void evaluate_cell(Cell& cell, const VerificationRoutes& routes) {
  const long n = cell.n;
  const long k = cell.k;
  cell.kirchhoff = attempt<Integer>([&] { return routes.tau_kirchhoff(n, k); });
  cell.theorem1 = attempt<Integer>([&] { return routes.tau_theorem1(n, k); });
  cell.via_laplacian = attempt<AbelianGroup>([&] { return routes.jacobian_laplacian(n, k); });
  cell.via_companion = attempt<AbelianGroup>([&] { return routes.jacobian_companion(n, k); });
  cell.mirrored = attempt<AbelianGroup>([&] { return routes.jacobian_laplacian(n, n - k); });
  if (k == 1) cell.closed["tau_prism"] = attempt<Integer>([&] { return routes.tau_prism(n); });
  if (k == 2) {
    cell.closed["tau_k2_quadratic"] = attempt<Integer>([&] { return routes.tau_k2_quadratic(n); });
    cell.closed["tau_k2_recurrence"] = attempt<Integer>([&] { return routes.tau_k2_recurrence(n); });
  }
  if (k == 3 && n >= 4) cell.closed["tau_k3_recurrence"] = attempt<Integer>([&] { return routes.tau_k3_recurrence(n); });
  if (k == 4 && n >= 5) cell.closed["tau_k4_recurrence"] = attempt<Integer>([&] { return routes.tau_k4_recurrence(n); });
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options, const VerificationRoutes& routes) {
  if (options.n_max < 3) throw std::invalid_argument("verify: n_max must be >= 3");
  if (options.k_max < 1) throw std::invalid_argument("verify: k_max must be >= 1");

  std::vector<Cell> cells;
  for (long n = 3; n <= options.n_max; ++n)
    for (long k = 1; k <= std::min(n - 1, options.k_max); ++k) {
        Cell cell;
        cell.n = n;
        cell.k = k;
        cells.push_back(std::move(cell));
      }

  parallel_for(cells.size(), options.jobs, [&](std::size_t i) { evaluate_cell(cells[i], routes); });

  PropertyResult methods = property("jacobian_methods_agree");
  PropertyResult symmetry = property("jacobian_symmetry");
  PropertyResult theorem1 = property("tau_theorem1");
  PropertyResult order = property("group_order");
  std::map<std::string, PropertyResult> closed;
  for (const char* name :
       {"tau_prism", "tau_k2_quadratic", "tau_k2_recurrence", "tau_k3_recurrence", "tau_k4_recurrence"}) {
    closed.emplace(name, property(name));
  }

  std::map<std::pair<long, long>, const Cell*> by_key;
  for (const auto& c : cells) {
    by_key[{c.n, c.k}] = &c;
    compare(methods, c.n, c.k, "laplacian", c.via_laplacian, "companion", c.via_companion);
    compare(symmetry, c.n, c.k, "jacobian(n,k)", c.via_laplacian, "jacobian(n,n-k)", c.mirrored);
    compare(theorem1, c.n, c.k, "tau_theorem1", c.theorem1, "tau_kirchhoff", c.kirchhoff);

    Outcome<Integer> group_order;
    if (c.via_laplacian.value) {
      group_order.value = c.via_laplacian.value->torsion_order();
    } else {
      group_order.error = c.via_laplacian.error;
    }
    compare(order, c.n, c.k, "|Jac|", group_order, "tau_kirchhoff", c.kirchhoff);
    if (c.via_laplacian.value && c.via_laplacian.value->free_rank != 0) {
      order.failures.push_back(where(c.n, c.k) + " torsion part reported a free rank");
    }

    for (const auto& [name, outcome] : c.closed) {
      compare(closed.at(name), c.n, c.k, name.c_str(), outcome, "tau_kirchhoff", c.kirchhoff);
    }
  }

  VerifyReport report;
  report.properties = {methods, symmetry, theorem1, order};
  for (auto& [name, prop] : closed) {
    if (prop.checked > 0) report.properties.push_back(prop);
  }

  for (const auto& table : golden_tables()) {
    PropertyResult golden = property("golden_table_" + std::to_string(table.number));
    for (const auto& row : table.rows) {
      auto it = by_key.find({row.n, table.k});
      if (it == by_key.end()) continue;
      const Cell& c = *it->second;
      std::vector<Integer> printed;
      for (auto f : row.factors) printed.push_back(parse_integer(f));
      Outcome<AbelianGroup> expected_group;
      expected_group.value = AbelianGroup::from_cyclic_orders(printed);
      compare(golden, row.n, table.k, "computed Jac", c.via_laplacian, "published Jac", expected_group);
      Outcome<Integer> expected_tau;
      expected_tau.value = parse_integer(row.tau);
      const Integer printed_order = expected_group.value->torsion_order();
      if (*expected_tau.value != printed_order) {
        // A printed tau that disagrees with its own printed factors is checked against the factor product.
        golden.notes.push_back(where(row.n, table.k) + " published tau " + std::string(row.tau) +
                               " differs from the product of the published factors, " + to_decimal(printed_order));
        expected_tau.value = printed_order;
      }
      compare(golden, row.n, table.k, "computed tau", c.kirchhoff, "published factor product", expected_tau);
    }
    if (golden.checked > 0) report.properties.push_back(std::move(golden));
  }
  return report;
}

}  // namespace gpjac
