#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gridarith/cli.hpp"

using namespace gridarith;
using namespace gridarith::cli;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;

  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
  std::string last() const {
    const auto v = lines();
    return v.empty() ? "" : v.back();
  }
};

Run run_cli(Invocation inv) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.status = run(inv, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Run run_cli(const std::string& expr, Output output = Output::result_only) {
  Invocation inv;
  inv.expression = expr;
  inv.output = output;
  return run_cli(inv);
}

std::size_t syntax_position(std::string_view text) {
  try {
    parse_expression(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  FAIL("accepted " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_expression") {
  const Command div = parse_expression("2075 / 25");
  REQUIRE(std::holds_alternative<BinaryCommand>(div));
  CHECK(std::get<BinaryCommand>(div).op == Operator::divide);
  CHECK(rejoin(std::get<BinaryCommand>(div).rhs) == "25");

  const Command neg = parse_expression("-3--2.5");
  REQUIRE(std::holds_alternative<BinaryCommand>(neg));
  CHECK(rejoin(std::get<BinaryCommand>(neg).lhs) == "-3");
  CHECK(std::get<BinaryCommand>(neg).op == Operator::subtract);
  CHECK(rejoin(std::get<BinaryCommand>(neg).rhs) == "-2.5");

  const Command chain = parse_expression("  chain( 425 ,23 ; 13,10 )  ");
  REQUIRE(std::holds_alternative<ChainCommand>(chain));
  const ChainCommand& c = std::get<ChainCommand>(chain);
  CHECK(c.dividend == 425);
  CHECK(c.divisor == 23);
  CHECK(c.partition.parts() == std::vector<chain::Integer>{13, 10});
  CHECK(c.depth == 0);
  CHECK(std::get<ChainCommand>(parse_expression("chain(425,23;13,10)@3")).depth == 3);
  CHECK(std::get<BinaryCommand>(parse_expression("ff * 2", BaseConfig(16))).op == Operator::multiply);

  CHECK_THROWS_WITH_AS(parse_expression("chain(425, 23; 13, 9)"), "parts sum 22 != 23", SyntaxError);
  CHECK(syntax_position("") == 0);
  CHECK(syntax_position("12 % 4") == 3);
  CHECK(syntax_position("12 + ") == 5);
  CHECK(syntax_position("12 + 4x") == 6);
  CHECK(syntax_position("1 + 2 3") == 6);
  CHECK(syntax_position("chain(425, 23 13)") == 14);
  CHECK(syntax_position("chain(425, 2.5; 2.5)") == 11);
  CHECK(syntax_position("chain(425, 23; 23)@x") == 19);
}

TEST_CASE("results and exit statuses") {
  Run r = run_cli("55 + 150");
  CHECK(r.status == 0);
  CHECK(r.out == "205\n");

  r = run_cli("1 / 0");
  CHECK(r.status == 2);
  CHECK(r.err == "division by zero\n");
  CHECK(r.out.empty());

  r = run_cli("1 +");
  CHECK(r.status == 1);
  CHECK(r.err.rfind("parse error: ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  CHECK(run_cli("chain(425, 23; 13, 9)").status == 1);
  CHECK(run_cli("2075 / 25").out == "83\n");
  CHECK(run_cli("425 / 23").out == "q=18 r=11\n");
  CHECK(run_cli("10450 - 555").out == "9895\n");
  CHECK(run_cli("0.7 + 0.05").out == "0.75\n");

  Invocation bin;
  bin.expression = "101 * 11";
  bin.base = 2;
  CHECK(run_cli(bin).out == "1111\n");
  bin.base = 99;
  CHECK(run_cli(bin).status == 1);
  bin.base = 10;
  bin.precision = -1;
  CHECK(run_cli(bin).status == 1);
}

TEST_CASE("text traces end with the grid and the result") {
  const Run r = run_cli("2507 * 852", Output::text_trace);
  REQUIRE(r.status == 0);
  CHECK(r.last() == "2135964");
  const std::string grid_tail = "  0 Units     | .  .  .  .  +  .  .  .  .  .\n2135964\n";
  CHECK(r.out.size() > grid_tail.size());
  CHECK(r.out.substr(r.out.size() - grid_tail.size()) == grid_tail);
  CHECK(r.lines().front() == "0 place: multiplier part 800 at (2,8)");
}

TEST_CASE("JSON traces are one event per line") {
  const Run r = run_cli("10450 - 555", Output::json_trace);
  const auto lines = r.lines();
  REQUIRE(lines.size() > 2);
  CHECK(lines.back() == "9895");
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    const auto j = nlohmann::ordered_json::parse(lines[i]);
    REQUIRE(j["step"] == i);
    REQUIRE(j.begin().key() == "step");
  }
}

TEST_CASE("chain commands") {
  Invocation inv;
  inv.expression = "chain(425, 23; 13, 10)";
  CHECK(run_cli(inv).out == "18.48\n");
  inv.output = Output::text_trace;
  CHECK(run_cli(inv).out ==
        "1. 425 / 13 = 32.69\n"
        "2. 32.69 * (10 / 23) = 14.21\n"
        "3. 32.69 - 14.21 = 18.48\n"
        "exact 425/23\n"
        "18.48\n");

  inv.expression = "chain(425, 23; 12, 9, 2)";
  inv.precision = 3;
  inv.output = Output::result_only;
  CHECK(run_cli(inv).out == "18.479\n");
  inv.rounding = chain::Rounding::half_up;
  CHECK(run_cli(inv).out == "18.478\n");
  inv.precision = 2;
  CHECK(run_cli(inv).out == "18.48\n");

  inv.expression = "chain(425, 23; 13, 10)@2";
  inv.output = Output::json_trace;
  const Run json = run_cli(inv);
  const auto lines = json.lines();
  REQUIRE(lines.size() == 3);
  const auto first = nlohmann::ordered_json::parse(lines[0]);
  CHECK(first["r_num"] == "425");
  CHECK(first["r_den"] == "13");

  const std::string path = "test_cli_chain.csv";
  inv.csv_path = path;
  inv.output = Output::result_only;
  CHECK(run_cli(inv).status == 0);
  std::ifstream csv(path);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "i,d,r_num,r_den,r_decimal");
  std::remove(path.c_str());

  inv.csv_path = "/nonexistent-dir/x.csv";
  CHECK(run_cli(inv).status == 1);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const char* expr : {"2507 * 852", "19 / 11", "chain(425, 23; 12, 9, 2)@1", "-0.5 - 12.25"}) {
    for (Output o : {Output::result_only, Output::text_trace, Output::json_trace}) {
      const Run a = run_cli(expr, o);
      const Run b = run_cli(expr, o);
      REQUIRE(a.out == b.out);
      REQUIRE(a.status == b.status);
    }
  }
}

TEST_CASE("seeded demo cases") {
  CHECK(demo_expression(7, 10) == demo_expression(7, 10));
  Invocation inv;
  inv.seed = 7;
  const Run r = run_cli(inv);
  CHECK(r.status == 0);
  inv.expression = demo_expression(7, 10);
  inv.seed.reset();
  CHECK(run_cli(inv).out == r.out);
  CHECK(run_cli(Invocation{}).status == 1);
}
