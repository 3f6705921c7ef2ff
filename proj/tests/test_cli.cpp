#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "estab/cli.hpp"
#include "json.hpp"

using nlohmann::json;
using std::numbers::pi;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = estab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::pair<long, long> counts(const json& report) {
  return {report.at("index").get<long>(), report.at("nullity").get<long>()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("estab_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

using P = std::pair<long, long>;

}  // namespace

TEST_CASE("index on built-in spheres") {
  const Result s4 = run({"index", "--dim", "4", "--lambda", "3", "--functional", "all"});
  REQUIRE(s4.code == 0);
  const json doc = json::parse(s4.out);
  const json& reports = doc.at("reports");
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].at("functional") == "energy");
  CHECK(counts(reports[0]) == P{5, 10});
  CHECK(counts(reports[1]) == P{0, 10});
  CHECK(counts(reports[2]) == P{0, 15});
  CHECK(doc.at("space").at("scalar_curvature") == "12");
  CHECK(reports[0].at("contributing_bands")[0].at("jacobi_eigenvalue") == "-2");

  const Result s9 = run({"index", "--dim", "9", "--lambda", "8", "--functional", "e2c"});
  REQUIRE(s9.code == 0);
  CHECK(counts(json::parse(s9.out).at("reports")[0]) == P{10, 45});

  const Result s2 = run({"index", "--dim", "2", "--lambda", "1", "--functional", "e2c"});
  REQUIRE(s2.code == 0);
  CHECK(counts(json::parse(s2.out).at("reports")[0]) == P{0, 6});

  const Result s1 = run({"index", "--dim", "1", "--functional", "e"});
  REQUIRE(s1.code == 0);
  CHECK(counts(json::parse(s1.out).at("reports")[0]) == P{0, 1});

  // Rescaled S^5 (lambda = 2/3) has the unit-sphere counts.
  const Result scaled = run({"index", "--dim", "5", "--lambda", "2/3", "--functional", "e2c"});
  REQUIRE(scaled.code == 0);
  CHECK(counts(json::parse(scaled.out).at("reports")[0]) == P{6, 15});
}

TEST_CASE("index usage errors") {
  CHECK(run({"index"}).code == 64);
  CHECK(run({"index", "--dim", "4"}).code == 64);
  CHECK(run({"index", "--dim", "4", "--lambda", "x"}).code == 64);
  CHECK(run({"index", "--dim", "4", "--lambda", "0"}).code == 64);
  CHECK(run({"index", "--dim", "4", "--lambda", "3", "--functional", "e3"}).code == 64);
  CHECK(run({"index", "--dim", "4", "--spectrum-file", "x.json"}).code == 64);
  CHECK(run({"index", "--dim", "0", "--lambda", "1"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("spectrum dump and round trip through index") {
  const Result dump = run({"spectrum", "--dim", "4", "--lambda", "3", "--up-to", "6"});
  REQUIRE(dump.code == 0);
  const json doc = json::parse(dump.out);
  REQUIRE(doc.at("bands").size() == 2);
  CHECK(doc.at("bands")[0] == json({{"eigenvalue", "4"}, {"multiplicity", 5}, {"kind", "gradient"}}));
  CHECK(doc.at("bands")[1] ==
        json({{"eigenvalue", "6"}, {"multiplicity", 10}, {"kind", "divergence_free"}}));
  CHECK(doc.at("complete_up_to") == "6");

  const std::string path = temp_file("s4.json", dump.out);
  const Result from_file = run({"index", "--spectrum-file", path, "--strict"});
  const Result built_in = run({"index", "--dim", "4", "--lambda", "3"});
  REQUIRE(from_file.code == 0);
  REQUIRE(built_in.code == 0);
  CHECK(json::parse(from_file.out).at("reports") == json::parse(built_in.out).at("reports"));
  std::filesystem::remove(path);

  const Result circle = run({"spectrum", "--dim", "1"});
  REQUIRE(circle.code == 0);
  const json c = json::parse(circle.out);
  CHECK(c.at("einstein_constant") == "0");
  CHECK(c.at("bands").size() == 1);

  const Result csv = run({"spectrum", "--dim", "3", "--up-to", "9", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "eigenvalue,multiplicity,kind\n3,4,gradient\n4,6,divergence_free\n8,9,gradient\n9,16,divergence_free\n");

  CHECK(run({"spectrum", "--dim", "0"}).code == 64);
  CHECK(run({"spectrum", "--dim", "4", "--up-to", "-1"}).code == 64);
}

TEST_CASE("spectrum files: file errors and strict validation") {
  CHECK(run({"index", "--spectrum-file", "/nonexistent/estab.json"}).code == 66);
  const std::string broken = temp_file("broken.json", "{\"dimension\": 4,");
  CHECK(run({"index", "--spectrum-file", broken}).code == 66);
  const std::string zero = temp_file("zero.json", R"({"dimension": 4, "einstein_constant": "3",
    "bands": [{"eigenvalue": "4", "multiplicity": 0, "kind": "gradient"}]})");
  CHECK(run({"index", "--spectrum-file", zero}).code == 66);

  const std::string below_obata = temp_file("obata.json", R"({"dimension": 4,
    "einstein_constant": "3", "complete_up_to": "6",
    "bands": [{"eigenvalue": "3", "multiplicity": 1, "kind": "gradient"}]})");
  const Result lenient = run({"index", "--spectrum-file", below_obata});
  CHECK(lenient.code == 0);
  CHECK(lenient.err.find("Obata") != std::string::npos);
  CHECK(run({"index", "--spectrum-file", below_obata, "--strict"}).code == 2);

  const std::string undeclared = temp_file("undeclared.json", R"({"dimension": 4,
    "einstein_constant": "3",
    "bands": [{"eigenvalue": "4", "multiplicity": 5, "kind": "gradient"}]})");
  const Result warn = run({"index", "--spectrum-file", undeclared, "--functional", "e"});
  REQUIRE(warn.code == 0);
  CHECK(json::parse(warn.out).at("reports")[0].at("warnings").size() == 1);
  CHECK(run({"index", "--spectrum-file", undeclared, "--strict"}).code == 2);

  const std::string short_decl = temp_file("short.json", R"({"dimension": 4,
    "einstein_constant": "3", "complete_up_to": "5",
    "bands": [{"eigenvalue": "4", "multiplicity": 5, "kind": "gradient"}]})");
  CHECK(run({"index", "--spectrum-file", short_decl, "--functional", "e2c"}).code == 2);

  const std::string extra = temp_file("extra.json", R"({"dimension": 4, "einstein_constant": "3",
    "complete_up_to": "6", "comment": "hand made",
    "bands": [{"eigenvalue": "4", "multiplicity": 5, "kind": "gradient"}]})");
  CHECK(run({"index", "--spectrum-file", extra}).code == 0);
  CHECK(run({"index", "--spectrum-file", extra, "--strict"}).code == 66);

  for (const auto& p : {broken, zero, below_obata, undeclared, short_decl, extra}) {
    std::filesystem::remove(p);
  }
}

TEST_CASE("energy tables") {
  const Result csv = run({"energy", "--dim", "4", "--t", "0.5,1,2"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,energy,energy_error,bienergy,bienergy_error,c_bienergy,c_bienergy_error");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<double> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(std::stod(cell));
    REQUIRE(fields.size() == 7);
    CHECK(std::abs(fields[5] - 32 * pi * pi / 3) / (32 * pi * pi / 3) <= 1e-8);
  }
  CHECK(rows == 3);

  const Result js = run({"energy", "--dim", "5", "--t", "1", "--format", "json"});
  REQUIRE(js.code == 0);
  const json row = json::parse(js.out).at("rows")[0];
  CHECK(row.at("c_bienergy").get<double>() ==
        doctest::Approx(40.0 / 3.0 * pi * pi * pi).epsilon(1e-12));
  CHECK(std::abs(row.at("bienergy").get<double>()) <= 1e-10);

  CHECK(run({"energy", "--dim", "5", "--t", "1e9"}).code == 64);
  CHECK(run({"energy", "--dim", "5", "--t", "0"}).code == 64);
  CHECK(run({"energy", "--dim", "1", "--t", "1"}).code == 64);
  CHECK(run({"energy", "--dim", "5", "--t", "1", "--format", "xml"}).code == 64);
  CHECK(run({"energy", "--dim", "5"}).code == 64);
}

TEST_CASE("energy honours the tolerance override") {
  ::setenv("ESTAB_QUAD_RTOL", "fast", 1);
  CHECK(run({"energy", "--dim", "5", "--t", "1"}).code == 64);
  // Panels can still agree bitwise at 1e-300; either way output is all or nothing.
  ::setenv("ESTAB_QUAD_RTOL", "1e-300", 1);
  const Result strict = run({"energy", "--dim", "5", "--t", "1,0.3"});
  CHECK((strict.code == 0 || strict.code == 3));
  if (strict.code == 3) CHECK(strict.out.empty());
  if (strict.code == 0) CHECK(std::count(strict.out.begin(), strict.out.end(), '\n') == 3);
  ::unsetenv("ESTAB_QUAD_RTOL");
}

TEST_CASE("output is byte-identical across invocations") {
  const std::vector<std::string> args{"energy", "--dim", "6", "--t", "0.3,3", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> idx{"index", "--dim", "7", "--lambda", "6"};
  CHECK(run(idx).out == run(idx).out);
  // 17 significant digits.
  const json row = json::parse(run(args).out).at("rows")[0];
  CHECK(run(args).out.find("\"t\": 0.29999999999999999") != std::string::npos);
  CHECK(row.at("t").get<double>() == 0.3);
}

TEST_CASE("verify") {
  const Result tables = run({"verify", "--suites", "tables"});
  CHECK(tables.code == 0);
  const json doc = json::parse(tables.out);
  CHECK(doc.at("passed") == true);
  CHECK(doc.at("checks").size() > 30);
  for (const json& c : doc.at("checks")) {
    CHECK(c.contains("expected"));
    CHECK(c.contains("tolerance"));
  }
  const Result two = run({"verify", "--suites", "constancy,epsilon"});
  CHECK(two.code == 0);
  CHECK(two.err.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--suites", "everything"}).code == 64);
}

TEST_CASE("the installed binary maps exit codes") {
  const std::string cli = ESTAB_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("index --dim 4 --lambda 3") == 0);
  CHECK(status("energy --dim 5 --t 1e9") == 64);
  CHECK(status("index --spectrum-file /nonexistent.json") == 66);
}
