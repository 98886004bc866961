#include "gpjac/cli.hpp"

#include <chrono>
#include <exception>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gpjac/errors.hpp"
#include "gpjac/gp_graph.hpp"
#include "gpjac/jacobian.hpp"
#include "gpjac/parallel.hpp"
#include "gpjac/records.hpp"
#include "gpjac/tree_count.hpp"
#include "gpjac/verify.hpp"

namespace gpjac {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms_since(Clock::time_point start) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

struct Options {
  long n = 0;
  long k = 0;
  long n_min = 3;
  long n_max = 20;
  long k_max = 4;
  long count = 10;
  long from = 0;
  unsigned jobs = 1;
  std::string method = "auto";
  std::string format;
};

OutputRecord jacobian_record(long n, long k, const std::string& method_name) {
  const auto start = Clock::now();
  AbelianGroup group;
  std::string used;
  if (method_name == "all") {
    const AbelianGroup lap = jacobian_via_laplacian(n, k);
    const AbelianGroup comp = jacobian_via_companion(n, k);
    if (lap != comp) {
      throw InconsistencyError("jacobian methods disagree for GP(" + std::to_string(n) + "," + std::to_string(k) +
                               "): laplacian " + lap.to_string() + ", companion " + comp.to_string());
    }
    group = lap;
    used = "all";
  } else {
    const JacobianMethod method = parse_jacobian_method(method_name);
    build_gp(n, k);
    used = to_string(resolve_jacobian_method(n, k, method));
    group = jacobian(n, k, method);
  }
  OutputRecord r;
  r.n = n;
  r.k = k;
  r.tau = to_decimal(group.torsion_order());
  r.invariant_factors = decimal_strings(group.invariant_factors);
  r.free_rank = 1;  // free rank of coker L, enforced by the jacobian routes
  r.method = used;
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

OutputRecord tau_record(long n, long k, const std::string& method_name) {
  const auto start = Clock::now();
  Integer value;
  std::string used;
  if (method_name == "all") {
    value = tau_kirchhoff(n, k);
    std::vector<std::pair<std::string, Integer>> others{{"theorem1", tau_theorem1(n, k)}};
    if (has_closed_form(n, k)) others.emplace_back("closed", tau(n, k, TauMethod::Closed));
    for (const auto& [name, other] : others) {
      if (other != value) {
        throw InconsistencyError("tau methods disagree for GP(" + std::to_string(n) + "," + std::to_string(k) +
                                 "): kirchhoff " + to_decimal(value) + ", " + name + " " + to_decimal(other));
      }
    }
    used = "all";
  } else {
    const TauMethod method = parse_tau_method(method_name);
    build_gp(n, k);
    const TauMethod resolved = resolve_tau_method(n, k, method);
    if (resolved == TauMethod::Closed && !has_closed_form(n, k)) {
      throw std::invalid_argument("method 'closed' needs k reduced into 1..4, got k = " + std::to_string(k));
    }
    used = to_string(resolved);
    value = tau(n, k, method);
  }
  OutputRecord r;
  r.n = n;
  r.k = k;
  r.tau = to_decimal(value);
  r.method = used;
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

// One table row: Jacobian and tau by their default routes, which must agree on the group order.
OutputRecord table_record(long n, long k) {
  const auto start = Clock::now();
  build_gp(n, k);
  const JacobianMethod jm = resolve_jacobian_method(n, k, JacobianMethod::Auto);
  const TauMethod tm = resolve_tau_method(n, k, TauMethod::Auto);
  const AbelianGroup group = jacobian(n, k, jm);
  const Integer t = tau(n, k, tm);
  if (group.torsion_order() != t) {
    throw InconsistencyError("GP(" + std::to_string(n) + "," + std::to_string(k) + "): |Jac| = " +
                             to_decimal(group.torsion_order()) + " but tau = " + to_decimal(t));
  }
  OutputRecord r;
  r.n = n;
  r.k = k;
  r.tau = to_decimal(t);
  r.invariant_factors = decimal_strings(group.invariant_factors);
  r.free_rank = 1;
  r.method = "jacobian:" + to_string(jm) + ",tau:" + to_string(tm);
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

void render_table(std::ostream& out, long k, const std::vector<OutputRecord>& rows, const std::string& format) {
  if (format == "json") {
    out << nlohmann::json(rows).dump(2) << '\n';
  } else if (format == "csv") {
    out << "n,k,tau,jacobian\n";
    for (const auto& r : rows) out << r.n << ',' << r.k << ',' << r.tau << ',' << join_factors(*r.invariant_factors) << '\n';
  } else {
    out << "| n | Jac(GP(n," << k << ")) | tau |\n|---:|:---|---:|\n";
    for (const auto& r : rows) out << "| " << r.n << " | " << group_string(*r.invariant_factors) << " | " << r.tau << " |\n";
  }
}

void print_sequence(std::ostream& out, const std::string& label, const std::vector<Integer>& terms, bool labelled) {
  if (labelled) out << label << ": ";
  out << join_factors(decimal_strings(terms), ",") << '\n';
}

int cmd_verify(std::ostream& out, const Options& o) {
  VerifyOptions vo;
  vo.n_max = o.n_max;
  vo.k_max = o.k_max;
  vo.jobs = o.jobs;
  const VerifyReport report = run_verification(vo);
  for (const auto& p : report.properties) {
    out << (p.passed() ? "PASS " : "FAIL ") << p.name << " (" << p.checked << " checks)\n";
    for (const auto& f : p.failures) out << "  " << f << '\n';
    for (const auto& note : p.notes) out << "  note: " << note << '\n';
  }
  out << (report.all_passed() ? "all properties passed\n" : "verification FAILED\n");
  return report.all_passed() ? kExitOk : kExitInconsistent;
}

int cmd_sequence(std::ostream& out, const Options& o) {
  if (o.k < 2 || o.k > 4) throw std::invalid_argument("sequence: --k must be 2, 3 or 4");
  if (o.count < 1) throw std::invalid_argument("sequence: --count must be >= 1");
  const auto count = static_cast<std::size_t>(o.count);
  std::vector<std::pair<std::string, std::vector<Integer>>> series;
  if (o.k == 2) series.emplace_back("a", recurrence_terms(k2_sequence(), o.from, count));
  if (o.k == 3) {
    series.emplace_back("a", recurrence_terms(k3_even_sequence(), o.from, count));
    series.emplace_back("b", recurrence_terms(k3_odd_sequence(), o.from, count));
  }
  if (o.k == 4) series.emplace_back("a", recurrence_terms(k4_sequence(), o.from, count));

  if (o.format == "json") {
    nlohmann::json j{{"k", o.k}, {"from", o.from}, {"count", o.count}};
    for (const auto& [name, terms] : series) j[name] = decimal_strings(terms);
    out << j.dump() << '\n';
  } else {
    for (const auto& [name, terms] : series) print_sequence(out, name, terms, series.size() > 1);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobian group and spanning-tree counts of generalized Petersen graphs GP(n,k)", "gpjac"};
  app.require_subcommand(1);
  Options o;

  auto add_nk = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "outer cycle length (n >= 3)")->required();
    sub->add_option("--k", o.k, "inner step (1 <= k <= n-1)")->required();
  };

  auto* jac = app.add_subcommand("jacobian", "invariant factors of Jac(GP(n,k))");
  add_nk(jac);
  jac->add_option("--method", o.method, "auto | laplacian | companion | all")
      ->check(CLI::IsMember({"auto", "laplacian", "companion", "all"}));
  jac->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* tau_cmd = app.add_subcommand("tau", "number of spanning trees of GP(n,k)");
  add_nk(tau_cmd);
  tau_cmd->add_option("--method", o.method, "auto | kirchhoff | theorem1 | closed | all")
      ->check(CLI::IsMember({"auto", "kirchhoff", "theorem1", "closed", "all"}));
  tau_cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "one row per n: tau and Jac(GP(n,k))");
  table->add_option("--k", o.k, "inner step")->required();
  table->add_option("--n-min", o.n_min, "first n");
  table->add_option("--n-max", o.n_max, "last n");
  table->add_option("--format", o.format, "markdown | csv | json")->check(CLI::IsMember({"markdown", "csv", "json"}));
  table->add_option("--jobs", o.jobs, "concurrent rows")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "cross-method verification sweep");
  verify->add_option("--n-max", o.n_max, "largest n (>= 3)");
  verify->add_option("--k-max", o.k_max, "largest k");
  verify->add_option("--jobs", o.jobs, "concurrent grid cells")->check(CLI::PositiveNumber);

  auto* sequence = app.add_subcommand("sequence", "integer sequences whose squares give tau for k = 2, 3, 4");
  sequence->add_option("--k", o.k, "2, 3 or 4")->required();
  sequence->add_option("--count", o.count, "number of terms");
  sequence->add_option("--from", o.from, "first index");
  sequence->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (jac->parsed()) {
      const OutputRecord r = jacobian_record(o.n, o.k, o.method);
      if (o.format == "json") {
        out << nlohmann::json(r).dump() << '\n';
      } else {
        out << group_string(*r.invariant_factors) << '\n';
      }
    } else if (tau_cmd->parsed()) {
      const OutputRecord r = tau_record(o.n, o.k, o.method);
      if (o.format == "json") {
        out << nlohmann::json(r).dump() << '\n';
      } else {
        out << r.tau << '\n';
      }
    } else if (table->parsed()) {
      if (o.format.empty()) o.format = "markdown";
      std::vector<long> ns;
      for (long n = o.n_min; n <= o.n_max; ++n) {
        build_gp(n, o.k);
        ns.push_back(n);
      }
      std::vector<OutputRecord> rows(ns.size());
      std::vector<std::exception_ptr> errors(ns.size());
      parallel_for(ns.size(), o.jobs, [&](std::size_t i) {
        try {
          rows[i] = table_record(ns[i], o.k);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
      render_table(out, o.k, rows, o.format);
    } else if (verify->parsed()) {
      return cmd_verify(out, o);
    } else if (sequence->parsed()) {
      return cmd_sequence(out, o);
    }
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace gpjac
