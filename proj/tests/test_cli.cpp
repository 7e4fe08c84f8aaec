#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lag2::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("constants") {
  CHECK(run({"lambda2", "[2;(1,1,3)*]", "--digits", "6"}).out == "sqrt(17)/4 ≈ 1.030776\n");
  CHECK(run({"lambda2", "[1;(1)*]"}).out == "sqrt(5)/4 ≈ 0.559017\n");
  CHECK(run({"lambda-n", "3", "--digits", "6"}).out.find("≈ 1.0426") != std::string::npos);
  CHECK(run({"lambda", "[1;(1)*]"}).out == "sqrt(5) ≈ 2.236068\n");
  CHECK(run({"dirichlet", "[1;(1)*]", "--digits", "3"}).out == "(3 + sqrt(5))/2 ≈ 2.618\n");
  CHECK(run({"eval", "[1;(2)*]", "--digits", "10"}).out == "1.4142135624\n");
  CHECK(run({"xi", "3"}).out == "[0;(1,1,1,1,3,1,1,3)*]\n");
}

TEST_CASE("surd conversion both ways") {
  CHECK(run({"surd", "[2;(1,1,3)*]"}).out == "(1 + sqrt(17))/2 ≈ 2.561553\n");
  CHECK(run({"surd", "(1 + sqrt(17))/2"}).out == "[2;(1,1,3)*]\n");
  CHECK(run({"surd", "(1+√5)/2"}).out == "[1;(1)*]\n");
}

TEST_CASE("output formats") {
  CHECK(run({"lambda2", "[1;(1)*]", "--format", "jsonl"}).out ==
        "{\"input\":\"[1;(1)*]\",\"value_exact\":\"sqrt(5)/4\",\"value_decimal\":\"0.559017\"}\n");
  CHECK(run({"lambda2", "[1;(1)*]", "--format", "csv"}).out ==
        "input,value_exact,value_decimal\n\"[1;(1)*]\",sqrt(5)/4,0.559017\n");
  CHECK(run({"lambda2", "[1;(1)*]", "--format", "xml"}).code == 1);
}

TEST_CASE("tables and verification") {
  const Result table = run({"table-lemma2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("1.103553") != std::string::npos);
  CHECK(table.out.find("1.054716") != std::string::npos);
  CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 9);
  const Result csv = run({"table-lemma2", "--format", "csv"});
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 9);
  const Result four = run({"verify", "lemma4", "--max-k", "12"});
  CHECK(four.code == 0);
  CHECK(four.out.find("PASS 13/13 instances\n") != std::string::npos);
  CHECK(run({"verify", "lemma4", "--max-k", "12", "--quiet"}).out == "PASS 13/13 instances\n");
  CHECK(run({"verify", "lemma5", "--quiet"}).out == "PASS 13/13 instances\n");
  CHECK(run({"verify", "lemma6", "--quiet"}).out == "PASS 4/4 checks\n");
  CHECK(run({"verify", "lemma7", "--quiet"}).out == "PASS 4/4 checks\n");
  CHECK(run({"verify", "lemma2-table", "--quiet"}).out == "PASS 8/8 rows\n");
  CHECK(run({"verify", "perron", "--quiet", "--cases", "50"}).out == "PASS 50/50 cases\n");
  CHECK(run({"verify", "eq11", "--quiet", "--cases", "50"}).out == "PASS 50/50 cases\n");
  CHECK(run({"verify", "nonsense"}).code == 1);
}

TEST_CASE("scan and family") {
  const Result scan = run({"scan", "--max-period", "8", "--max-quotient", "3", "--threshold", "lambda-inf"});
  CHECK(scan.code == 0);
  CHECK(std::count(scan.out.begin(), scan.out.end(), '\n') == 4);
  CHECK(scan.out.rfind("period_word,", 0) == 0);
  CHECK(run({"scan", "--max-period", "3", "--threshold", "sqrt(17)/4"}).out ==
        "period_word,value_exact,value_decimal_10,witness_position,dominant_kappa,below_lambda_inf\n"
        "\"1\",sqrt(5)/4,0.5590169944,0,golden,1\n");
  CHECK(run({"scan", "--max-period", "13"}).code == 1);
  const Result family = run({"family", "5", "6", "7", "--quiet"});
  CHECK(family.code == 0);
  CHECK(family.out.find("interior max kappa <= 1.03") != std::string::npos);
  CHECK(run({"family", "3", "2"}).code == 1);
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::string> args{"scan", "--max-period", "5", "--max-quotient", "3"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
  const Result parse = run({"eval", "[2;(1,1)"});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("at position") != std::string::npos);
  CHECK(run({"surd", "3/4"}).code == 2);
  CHECK(run({"lambda-n", "2"}).code == 1);
  CHECK(run({"lambda2", "[1;(1)*]", "--unknown"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"eval", "[1;(1)*]", "extra"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precision limit from the environment") {
  // sqrt(25e60 + 1)/1e37 is 5e-7 + 1e-68, just above a rounding boundary at 6 digits
  const std::string tie = "sqrt(25" + std::string(59, '0') + "1)/1" + std::string(37, '0');
  CHECK(run({"eval", tie}).out == "0.000001\n");
  ::setenv("LAG2_PRECISION_LIMIT", "2", 1);
  const Result capped = run({"eval", tie});
  ::unsetenv("LAG2_PRECISION_LIMIT");
  CHECK(capped.code == 3);
  ::setenv("LAG2_PRECISION_LIMIT", "zero", 1);
  CHECK(run({"lambda2", "[2;(1,1,3)*]"}).code == 1);
  ::unsetenv("LAG2_PRECISION_LIMIT");
  CHECK(run({"lambda2", "[2;(1,1,3)*]", "--digits", "500"}).code == 0);
  CHECK(run({"eval", "sqrt(2)", "--digits", "3"}).out == "1.414\n");
}
