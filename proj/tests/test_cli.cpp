#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pivotal/check_result.hpp"
#include "pivotal/cli.hpp"
#include "pivotal/families.hpp"
#include "pivotal/truth_table_io.hpp"

using doctest::Approx;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pivotal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "pivotal_cli_test") {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("analyze an expression") {
  const auto r = run({"analyze", "--expr", "MAJ(x1,x2,x3)", "--p", "0.5"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["schema"] == "pivotal.report/1");
  CHECK(j["function"]["n"] == 3);
  CHECK(j["function"]["monotone"] == true);
  const auto& b = j["blocks"][0];
  CHECK(b["p"] == 0.5);
  CHECK(b["influence"]["p"] == 0.5);
  CHECK(b["influence"]["total"].get<double>() == Approx(1.5));
  CHECK(b["conditional"]["cond_sn"].get<double>() == Approx(3.0));
  for (const auto& c : b["checks"]) CHECK(c["p"] == 0.5);
  CHECK(j["etalag_scan"]["p"] == 0.5);
}

TEST_CASE("analyze a table file") {
  TempDir dir;
  const auto path = (dir.path / "dict3.tt").string();
  pivotal::write_truth_table(path, pivotal::family::dictator(3, 1));
  const auto r = run({"analyze", "--table", path, "--p", "0.3"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["blocks"][0]["mean"].get<double>() == Approx(0.3));
  CHECK(j["function"]["origin"] == "table:" + path);
}

TEST_CASE("analyze at an endpoint nulls character fields") {
  const auto r = run({"analyze", "--family", "majority:3", "--p", "0"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["blocks"][0]["mean"] == 0.0);
  CHECK(j["blocks"][0]["mean_derivative"].is_null());
  CHECK(j["blocks"][0]["conditional"].is_null());
}

TEST_CASE("usage and input errors exit 2 with one diagnostic line") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--expr", "MAJ(x1,x2)"},
           {"analyze"},
           {"analyze", "--expr", "x1", "--family", "and:2"},
           {"analyze", "--family", "majority:4"},
           {"analyze", "--table", "/nonexistent/file.tt"},
           {"analyze", "--expr", "x1", "--p", "1.5"},
           {"analyze", "--family", "majority:101"},
           {"check", "--family", "majority:101"},
           {"frobnicate"},
           {},
           {"tail", "--n", "100", "--p", "1", "--u", "4"},
           {"tail", "--n", "100", "--p", "0.5", "--u", "0"},
           {"tail", "--n", "100", "--p", "0.5", "--u", "abc"},
           {"estimate", "--expr", "0", "--m", "0"},
           {"estimate", "--expr", "x1", "--delta", "1"},
           {"sweep", "--family", "majority:3", "--p-grid", "0.5:0.5:3"},
           {"sweep", "--family", "majority:3", "--p-grid", "0:0.9:3"},
           {"sweep", "--family", "majority:3", "--p-grid", "0.1:0.9:1"},
           {"sweep", "--family", "majority:3", "--p-grid", "0.1:0.9"},
           {"check", "--family", "majority:3", "--format", "xml"},
       }) {
    CAPTURE(args.size() ? args[0] : std::string("<none>"));
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
  const auto parse = run({"analyze", "--expr", "AND(x1, x0)"});
  CHECK(parse.err.find("offset 8") != std::string::npos);
}

TEST_CASE("corrupted table file exits 2") {
  TempDir dir;
  const auto path = (dir.path / "bad.tt").string();
  std::ofstream(path) << "n=3\n0101\n";
  CHECK(run({"check", "--table", path}).code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
}

TEST_CASE("check majority(3) over the default grid") {
  const auto r = run({"check", "--family", "majority:3", "--format", "csv"});
  CHECK(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(!rows.empty());
  CHECK(r.out.substr(0, r.out.find('\n')) ==
        "check,p,lhs,rhs,slack,tolerance,holds,applicable,notes");
  std::set<std::string> names;
  std::set<std::string> ps;
  for (std::size_t j = 1; j < rows.size(); ++j) {
    names.insert(rows[j][0]);
    ps.insert(rows[j][1]);
    CHECK(rows[j][6] == "1");
    CHECK(rows[j][7] == "1");
  }
  CHECK(ps.size() == 9);
  CHECK(rows.size() - 1 == 9 * names.size());
  for (const char* main : {"theorem1", "bessel", "margulis_russo.le", "bth", "imme", "rth", "crth",
                           "talag_explicit", "stagi"}) {
    CHECK(names.count(main) == 1);
  }
  const auto json = run({"check", "--family", "majority:3"});
  CHECK(json.code == 0);
  CHECK(Json::parse(json.out)["all_hold"] == true);
}

TEST_CASE("check parity(3) marks monotone-only rows inapplicable") {
  const auto r = run({"check", "--expr", "XOR(x1,x2,x3)", "--format", "csv"});
  CHECK(r.code == 0);
  bool saw_inapplicable = false;
  for (const auto& row : csv_rows(r.out)) {
    if (row[0] == "theorem1") {
      CHECK(row[7] == "0");
      saw_inapplicable = true;
    }
    if (row[0] == "bth") CHECK(row[6] == "1");
  }
  CHECK(saw_inapplicable);
}

TEST_CASE("sweep columns") {
  const auto r = run({"sweep", "--family", "majority:3", "--p-grid", "0.1:0.9:9"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"p", "mean", "dmean_dp", "total_influence"});
  for (std::size_t j = 1; j < rows.size(); ++j) {
    const double p = std::stod(rows[j][0]);
    CHECK(p == Approx(0.1 * j));
    const double d = std::stod(rows[j][2]);
    CHECK(d == Approx(6 * p * (1 - p)).epsilon(1e-12));
    CHECK(std::stod(rows[j][3]) == Approx(d).epsilon(1e-9));
  }
  CHECK(rows[3][0] == "0.3");

  const auto dict = csv_rows(run({"sweep", "--family", "dictator:3,1"}).out);
  for (std::size_t j = 1; j < dict.size(); ++j) {
    CHECK(std::stod(dict[j][1]) == Approx(std::stod(dict[j][0])));
    CHECK(std::stod(dict[j][2]) == Approx(1.0));
  }
  const auto tribes = csv_rows(run({"sweep", "--family", "tribes:3,4", "--p-grid", "0.05:0.95:19"}).out);
  for (std::size_t j = 2; j < tribes.size(); ++j) {
    CHECK(std::stod(tribes[j][1]) > std::stod(tribes[j - 1][1]));
  }
}

TEST_CASE("tail") {
  const auto r = run({"tail", "--n", "100", "--p", "0.5", "--u", "40"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"u", "exact", "bound_stated", "bound_proved"});
  CHECK(std::stod(rows[1][1]) == Approx(0.0569).epsilon(1e-3));
  CHECK(std::stod(rows[1][2]) == Approx(0.27067).epsilon(1e-4));
  const auto empty = run({"tail", "--n", "100", "--p", "0.5"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "u,exact,bound_stated,bound_proved\n");
  CHECK(csv_rows(run({"tail", "--n", "10", "--p", "0.3", "--u", "1,2", "3"}).out).size() == 4);
}

TEST_CASE("estimate") {
  const auto r = run({"estimate", "--family", "majority:101", "--p", "0.5", "--m", "100000",
                      "--coord", "1", "--seed", "7"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["seed"] == 7);
  CHECK(j["generator"] == "mt19937_64+seed_seq(seed,stream)/u53");
  const double lo = j["influence"]["lower"];
  const double hi = j["influence"]["upper"];
  CHECK(lo <= 0.0796);
  CHECK(hi >= 0.0796);
  const auto c = Json::parse(run({"estimate", "--expr", "OR(x1,1)", "--m", "1000"}).out);
  CHECK(c["mean"]["mean"] == 1.0);
  CHECK(c["total_influence"]["mean"] == 0.0);
}

TEST_CASE("analyze above the cap needs --estimate") {
  CHECK(run({"analyze", "--family", "majority:101"}).code == 2);
  const auto r = run({"analyze", "--family", "majority:101", "--estimate", "--m", "2000"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["blocks"][0]["total_influence"]["samples"] == 2000);
}

TEST_CASE("identical invocations give byte-identical output") {
  const std::vector<std::string> args{"estimate", "--family", "tribes:5,20", "--p", "0.4",
                                      "--m", "20000", "--seed", "3", "--workers", "3"};
  const auto a = run(args);
  auto single = args;
  single.back() = "1";
  CHECK(a.out == run(args).out);
  CHECK(a.out == run(single).out);
  const std::vector<std::string> check{"check", "--family", "tribes:2,3", "--format", "csv"};
  CHECK(run(check).out == run(check).out);
}

TEST_CASE("--out writes a file") {
  TempDir dir;
  const auto path = (dir.path / "sweep.csv").string();
  const auto r = run({"sweep", "--family", "majority:3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,mean,dmean_dp,total_influence");
}

TEST_CASE("exit code for check lists") {
  using pivotal::make_check;
  CHECK(pivotal::cli::check_exit_code({make_check("a", 0.5, 1, 2)}) == 0);
  CHECK(pivotal::cli::check_exit_code({make_check("a", 0.5, 1, 2), make_check("b", 0.5, 3, 2)}) ==
        1);
  CHECK(pivotal::cli::check_exit_code({pivotal::inapplicable("a", 0.5, "n/a")}) == 0);
}
