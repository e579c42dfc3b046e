#include "spaving/cli.hpp"
#include "spaving/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace spaving;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/spaving_test_" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("polynomial and integer JSON") {
  const Polynomial p({1, Rational(3, 2), Rational(-1, 2)});
  const auto j = polynomial_to_json(p);
  CHECK(j.dump() == R"(["1/1","3/2","-1/2"])");
  CHECK(polynomial_from_json(j) == p);
  CHECK(polynomial_to_json(Polynomial()).dump() == "[]");
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse("[1]")), std::invalid_argument);
  const Integer big("123456789012345678901234567890");
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_to_json(Integer(8398)) == 8398);
}

TEST_CASE("report JSON round-trips") {
  for (const auto& r : {make_report(20, 9, 8398, LambdaProvenance::kGsBound),
                        make_report(19, 9, 6726, LambdaProvenance::kExternalTable),
                        make_report(7, 3, 2, LambdaProvenance::kUser)}) {
    const auto j = report_to_json(r);
    CHECK(report_from_json(j) == r);
    CHECK(report_to_json(report_from_json(nlohmann::json::parse(j.dump()))).dump() == j.dump());
  }
  auto j = report_to_json(make_report(20, 9, 8398, LambdaProvenance::kGsBound));
  j["ehrhart_positive"] = true;
  CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
}

TEST_CASE("report CSV") {
  const auto row = report_to_csv_row(make_report(5, 2, 2, LambdaProvenance::kUser));
  CHECK(row.rfind("5,2,2,user,\"1/1;", 0) == 0);
  CHECK(row.substr(row.size() - 8) == ",\"\",true");
}

TEST_CASE("cli uniform") {
  const auto r = run({"uniform", "--n", "3", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/1, 3/2, 1/2") != std::string::npos);
  CHECK(r.out.find("1/2 t^2 + 3/2 t + 1") != std::string::npos);
  const auto j = run({"uniform", "--n", "3", "--k", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["coefficients"].dump() == R"(["1/1","3/2","1/2"])");
  const auto c = run({"uniform", "--n", "3", "--k", "1", "--format", "csv"});
  CHECK(c.out == "n,k,coefficients\n3,1,\"1/1;3/2;1/2\"\n");
}

TEST_CASE("cli minimal") {
  const auto r = run({"minimal", "--n", "3", "--k", "2", "--shifted", "--format", "csv"});
  CHECK(r.out == "n,k,coefficients\n3,2,\"0/1;1/2;1/2\"\n");
  CHECK(run({"minimal", "--n", "3", "--k", "3"}).code == cli::kArgumentError);
}

TEST_CASE("cli sparse") {
  const auto r = run({"sparse", "--n", "20", "--k", "9", "--lambda", "8398", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["negative_indices"] == nlohmann::json::parse("[2,3]"));
  CHECK(j["coefficients"][2] == "-142179543511/15437822400");
  CHECK(j["coefficients"][3] == "-4816883312963/51459408000");
  CHECK(j["provenance"] == "user");
  CHECK(j["ehrhart_positive"] == false);
  CHECK(report_to_json(report_from_json(j)).dump(2) + "\n" == r.out);

  const auto t = run({"sparse", "--n", "20", "--k", "9", "--lambda", "8398"});
  CHECK(t.out.find("negative coefficient degrees: {2, 3}") != std::string::npos);
  CHECK(t.out.find("t^2: -142179543511/15437822400") != std::string::npos);

  const auto gs = run({"sparse", "--n", "22", "--k", "7", "--format", "csv"});
  CHECK(gs.out.find("22,7,7752,gs-bound,") != std::string::npos);
  CHECK(gs.out.find(",\"3\",false") != std::string::npos);

  const auto ext = run({"sparse", "--n", "19", "--k", "9", "--lambda", "6726", "--provenance",
                        "external-table", "--format", "json"});
  CHECK(nlohmann::json::parse(ext.out)["provenance"] == "external-table");

  CHECK(run({"sparse", "--n", "18", "--k", "9", "--lambda", "5000"}).code == cli::kArgumentError);
  CHECK(run({"sparse", "--n", "18", "--k", "9", "--lambda", "x"}).code == cli::kArgumentError);
  CHECK(run({"sparse", "--n", "18", "--k", "9", "--lambda", "1", "--provenance", "guess"}).code ==
        cli::kArgumentError);
  CHECK(run({"sparse", "--n", "2000", "--k", "3"}).code == cli::kBudgetError);
}

TEST_CASE("cli matroid files") {
  const auto good = temp_file("good.txt", "6 3\n1 2 3\n4 5 6\n");
  const auto r = run({"sparse", "--matroid-file", good, "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["lambda"] == 2);
  const auto o = run({"oracle", "--matroid-file", good, "--t-max", "4", "--format", "json"});
  CHECK(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["agree"] == true);

  const auto bad = temp_file("bad.txt", "6 3\n1 2 3\n1 2 q\n");
  const auto e = run({"sparse", "--matroid-file", bad});
  CHECK(e.code == cli::kArgumentError);
  CHECK(e.err.find("line 3, column 5") != std::string::npos);
  CHECK(run({"oracle", "--matroid-file", "/nonexistent"}).code == cli::kArgumentError);

  const auto large = temp_file("large.txt", "10 5\n1 2 3 4 5\n");
  CHECK(run({"oracle", "--matroid-file", large, "--t-max", "9"}).code == cli::kBudgetError);
  std::remove(good.c_str());
  std::remove(bad.c_str());
  std::remove(large.c_str());
}

TEST_CASE("cli code") {
  const auto r = run({"code", "--n", "20", "--k", "9", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["class_sizes"].size() == 20);
  CHECK(j["class_sizes"][0] == 8398);
  CHECK(j["chosen_index"] == 0);
  CHECK(j["lower_bound"] == 8398);
  CHECK(j["upper_bound"] == 13996);
  const auto m = run({"code", "--n", "4", "--k", "2", "--matroid-out", "-"});
  CHECK(m.out == "4 2\n1 2\n3 4\n");
  CHECK(run({"code", "--n", "40", "--k", "20"}).code == cli::kBudgetError);
}

TEST_CASE("cli bounds") {
  const auto r = run({"bounds", "--n", "18", "--k", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("max_ch_upper_bound: 4862") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"bounds", "--n", "10439", "--k", "3", "--format", "json"}).out);
  CHECK(j["counterexample_inequality"] == true);
  CHECK(j["lower_bound_quad_minimal"] == "1/31314");
}

TEST_CASE("cli search is deterministic across thread counts") {
  const auto a = run({"search", "--n-range", "8:14", "--k-range", "2:6", "--format", "csv"});
  const auto b = run({"search", "--n-range", "8:14", "--k-range", "2:6", "--threads", "3",
                      "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,k,lambda,provenance,coefficients,negative_indices,ehrhart_positive\n", 0) == 0);
  const auto j = nlohmann::json::parse(run({"search", "--n-range", "20:20", "--k-range", "9:9",
                                            "--format", "json"}).out);
  CHECK(j["negative_indices"] == nlohmann::json::parse("[2,3]"));
  CHECK(run({"search", "--n-range", "9"}).code == 0);
  CHECK(run({"search", "--n-range", "a:b"}).code == cli::kArgumentError);
}

TEST_CASE("cli hstar") {
  const auto r = run({"hstar", "--n", "20", "--k", "9", "--lambda", "8398", "--check-real-rooted",
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["hstar"].size() == 20);
  CHECK(j["hstar"][0] == "1/1");
  CHECK(j["real_rooted"] == true);
}

TEST_CASE("cli verification subcommand") {
  const auto r = run({"verify-paper", "--only", "1,7", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1,pass,") != std::string::npos);
  CHECK(r.out.find("7,pass,") != std::string::npos);
  const auto skip = run({"verify-paper", "--only", "10", "--skip-heavy"});
  CHECK(skip.code == 0);
  CHECK(skip.out.find("[SKIP]") != std::string::npos);
}

TEST_CASE("cli argument errors") {
  CHECK(run({}).code == cli::kArgumentError);
  CHECK(run({"uniform", "--n", "3"}).code == cli::kArgumentError);
  CHECK(run({"uniform", "--n", "3", "--k", "1", "--bogus"}).code == cli::kArgumentError);
  CHECK(run({"uniform", "--n", "3", "--k", "1", "--format", "xml"}).code == cli::kArgumentError);
  CHECK(run({"uniform", "--n", "3", "--k", "4"}).code == cli::kArgumentError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"sparse", "--n", "16", "--k", "8", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}
