#include <doctest.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpjac/cli.hpp"
#include "gpjac/gp_graph.hpp"
#include "gpjac/polynomial.hpp"
#include "gpjac/records.hpp"
#include "gpjac/tree_count.hpp"
#include "gpjac/verify.hpp"

using namespace gpjac;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

TEST_CASE("jacobian command") {
  const Run text = run({"jacobian", "--n", "3", "--k", "2"});
  CHECK(text.code == kExitOk);
  CHECK(text.out == "Z_5 ⊕ Z_15\n");

  const Run js = run({"jacobian", "--n", "5", "--k", "2", "--format", "json"});
  REQUIRE(js.code == kExitOk);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["invariant_factors"] == nlohmann::json({"2", "10", "10", "10"}));
  CHECK(j["tau"] == "2000");
  CHECK(j["free_rank"] == 1);
  CHECK(j["n"] == 5);
  CHECK(j["k"] == 2);

  for (const char* method : {"laplacian", "companion", "all"})
    CHECK(run({"jacobian", "--n", "6", "--k", "4", "--method", method}).out == run({"jacobian", "--n", "6", "--k", "2"}).out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"jacobian", "--n", "3", "--k", "3"}).code == kExitUsage);
  CHECK(run({"jacobian", "--n", "2", "--k", "1"}).code == kExitUsage);
  CHECK(run({"tau", "--n", "7"}).code == kExitUsage);
  CHECK(run({"tau", "--n", "7", "--k", "2", "--method", "bogus"}).code == kExitUsage);
  CHECK(run({"tau", "--n", "12", "--k", "5", "--method", "closed"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"sequence", "--k", "5"}).code == kExitUsage);
  CHECK(run({"sequence", "--k", "2", "--count", "0"}).code == kExitUsage);
  CHECK(run({"table", "--k", "4", "--n-min", "3", "--n-max", "6"}).code == kExitUsage);
  CHECK(run({"verify", "--n-max", "2"}).code == kExitUsage);
  CHECK_FALSE(run({"jacobian", "--n", "3", "--k", "3"}).err.empty());
}

TEST_CASE("tau command") {
  CHECK(run({"tau", "--n", "7", "--k", "2"}).out == "48223\n");
  CHECK(run({"tau", "--n", "20", "--k", "4", "--method", "theorem1"}).out == "66513184046420\n");
  CHECK(run({"tau", "--n", "4", "--k", "1", "--method", "closed"}).out == "384\n");
  for (const char* method : {"auto", "kirchhoff", "theorem1", "closed", "all"})
    CHECK(run({"tau", "--n", "7", "--k", "2", "--method", method}).out == "48223\n");

  const Run js = run({"tau", "--n", "9", "--k", "3", "--format", "json", "--method", "kirchhoff"});
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["tau"] == "751689");
  CHECK(j["method"] == "kirchhoff");
  CHECK_FALSE(j.contains("invariant_factors"));
}

TEST_CASE("OutputRecord JSON round trip") {
  OutputRecord r;
  r.n = 20;
  r.k = 2;
  r.tau = "28295350272000";
  r.invariant_factors = std::vector<std::string>{"4", "24", "120", "49560", "49560"};
  r.free_rank = 1;
  r.method = "companion";
  r.elapsed_ms = 17;
  CHECK(nlohmann::json::parse(nlohmann::json(r).dump()).get<OutputRecord>() == r);

  OutputRecord bare;
  bare.n = 3;
  bare.k = 1;
  bare.tau = "75";
  bare.method = "closed";
  CHECK(nlohmann::json(bare).get<OutputRecord>() == bare);

  const Run js = run({"jacobian", "--n", "8", "--k", "3", "--format", "json"});
  const auto parsed = nlohmann::json::parse(js.out);
  CHECK(nlohmann::json(parsed.get<OutputRecord>()) == parsed);
}

TEST_CASE("table formats carry identical content") {
  const std::vector<std::string> base{"table", "--k", "3", "--n-min", "4", "--n-max", "12"};
  auto with = [&](const char* format) {
    auto args = base;
    args.insert(args.end(), {"--format", format});
    return run(args);
  };
  const Run csv = with("csv");
  const Run md = with("markdown");
  const Run js = with("json");
  REQUIRE(csv.code == kExitOk);
  REQUIRE(md.code == kExitOk);
  REQUIRE(js.code == kExitOk);

  const auto csv_lines = lines(csv.out);
  REQUIRE(csv_lines.size() == 10);
  CHECK(csv_lines[0] == "n,k,tau,jacobian");
  std::map<std::string, std::pair<std::string, std::string>> from_csv;
  for (std::size_t i = 1; i < csv_lines.size(); ++i) {
    const auto f = split(csv_lines[i], ',');
    REQUIRE(f.size() == 4);
    CHECK(f[1] == "3");
    from_csv[f[0]] = {f[2], f[3]};
  }

  const auto md_lines = lines(md.out);
  REQUIRE(md_lines.size() == 11);
  std::map<std::string, std::pair<std::string, std::string>> from_md;
  for (std::size_t i = 2; i < md_lines.size(); ++i) {
    const auto f = split(md_lines[i], '|');
    REQUIRE(f.size() == 5);
    std::string factors = trim(f[2]);
    std::string joined;
    for (const auto& part : split(factors, ' ')) {
      if (part.rfind("Z_", 0) != 0) continue;
      if (!joined.empty()) joined += "x";
      joined += part.substr(2);
    }
    from_md[trim(f[1])] = {trim(f[3]), joined};
  }
  CHECK(from_csv == from_md);

  const auto rows = nlohmann::json::parse(js.out).get<std::vector<OutputRecord>>();
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == static_cast<long>(4 + i));
    const auto& [tau_text, factors] = from_csv.at(std::to_string(rows[i].n));
    CHECK(rows[i].tau == tau_text);
    CHECK(join_factors(*rows[i].invariant_factors) == factors);
  }
  CHECK(from_csv.at("9").first == "751689");
}

TEST_CASE("table reproduces published rows and keeps n order under parallel evaluation") {
  const Run serial = run({"table", "--k", "2", "--n-min", "3", "--n-max", "20", "--format", "csv"});
  const Run parallel = run({"table", "--k", "2", "--n-min", "3", "--n-max", "20", "--format", "csv", "--jobs", "4"});
  CHECK(serial.out == parallel.out);
  const auto rows = lines(serial.out);
  REQUIRE(rows.size() == 19);
  CHECK(rows[1] == "3,2,75,5x15");
  CHECK(rows[18] == "20,2,28295350272000,4x24x120x49560x49560");
}

TEST_CASE("empty table range prints only the header") {
  const Run csv = run({"table", "--k", "2", "--n-min", "9", "--n-max", "8", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out == "n,k,tau,jacobian\n");
  const Run js = run({"table", "--k", "2", "--n-min", "9", "--n-max", "8", "--format", "json"});
  CHECK(nlohmann::json::parse(js.out).empty());
}

TEST_CASE("verify command") {
  const Run small = run({"verify", "--n-max", "3", "--k-max", "1"});
  CHECK(small.code == kExitOk);
  CHECK(small.out.find("FAIL") == std::string::npos);

  const Run full = run({"verify", "--n-max", "20", "--k-max", "4", "--jobs", "2"});
  CHECK(full.code == kExitOk);
  for (const char* name : {"PASS golden_table_1", "PASS golden_table_2", "PASS golden_table_3", "PASS tau_theorem1",
                           "PASS jacobian_methods_agree", "PASS tau_k4_recurrence"})
    CHECK(full.out.find(name) != std::string::npos);
}

TEST_CASE("verify reports a corrupted h_3 under tau_theorem1") {
  LaurentPolynomial bad_h3 = build_h(3);
  auto c = bad_h3.ascending();
  c[0] += 1;
  bad_h3 = LaurentPolynomial::from_ascending(c);

  VerificationRoutes routes = VerificationRoutes::library();
  routes.tau_theorem1 = [bad_h3](long n, long k) {
    return reduced_step(n, k) == 3 ? tau_theorem1_from_h(n, bad_h3) : tau_theorem1(n, k);
  };
  VerifyOptions options;
  options.n_max = 10;
  options.k_max = 4;
  const VerifyReport report = run_verification(options, routes);
  CHECK_FALSE(report.all_passed());
  const PropertyResult* broken = report.find("tau_theorem1");
  REQUIRE(broken != nullptr);
  CHECK_FALSE(broken->passed());
  REQUIRE_FALSE(broken->failures.empty());
  CHECK(broken->failures.front().find("k=3") != std::string::npos);
  for (const auto& p : report.properties)
    if (p.name != "tau_theorem1") CHECK_MESSAGE(p.passed(), p.name);
}

TEST_CASE("sequence command") {
  CHECK(run({"sequence", "--k", "2", "--count", "6"}).out == "0,1,1,5,7,20\n");
  const Run k3 = run({"sequence", "--k", "3", "--count", "8"});
  CHECK(k3.out == "a: 0,1,4,9,72,320,1332,6889\nb: 1,1,20,83,289,1693,7775,34820\n");
  CHECK(run({"sequence", "--k", "4", "--count", "4", "--from", "5"}).out == "19,35,83,73\n");
  CHECK(run({"sequence", "--k", "4", "--count", "1", "--from", "-7"}).out == "-83\n");

  const auto j = nlohmann::json::parse(run({"sequence", "--k", "3", "--count", "3", "--format", "json"}).out);
  CHECK(j["b"] == nlohmann::json({"1", "1", "20"}));
  CHECK(j["a"] == nlohmann::json({"0", "1", "4"}));
}

TEST_CASE("--method all reports success when routes agree") {
  const Run jac = run({"jacobian", "--n", "12", "--k", "5", "--method", "all", "--format", "json"});
  CHECK(jac.code == kExitOk);
  CHECK(nlohmann::json::parse(jac.out)["method"] == "all");
  CHECK(run({"tau", "--n", "12", "--k", "5", "--method", "all"}).code == kExitOk);
}
