#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "app.hpp"
#include "latint/errors.hpp"
#include "model_io.hpp"

using namespace latint;
using nlohmann::json;

namespace {

const std::string kFixtures = LATINT_FIXTURES;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("latint_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("capacity shorthand: importance and pair interaction") {
    const Outcome o = run_cli({"interact", "--values", kFixtures + "/capacity2_values.json", "--threads", "1"});
    REQUIRE(o.code == cli::kExitOk);
    const json doc = json::parse(o.out);
    CHECK(doc["command"] == "interact");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["value"] == "1/2");
    CHECK(doc["rows"][1]["value"] == "1/2");
    CHECK(doc["rows"][2]["value"] == "1");
  }

  TEST_CASE("mobius of the capacity shorthand") {
    const Outcome o = run_cli({"mobius", "--values", kFixtures + "/capacity2_values.json"});
    REQUIRE(o.code == cli::kExitOk);
    const json doc = json::parse(o.out);
    std::vector<std::string> m;
    for (const json& row : doc["rows"]) m.push_back(row["m"]);
    CHECK(m == std::vector<std::string>{"0", "0", "0", "1"});
  }

  TEST_CASE("check reports structure flags") {
    const Outcome o = run_cli({"check", "--model", kFixtures + "/ternary2_model.json"});
    REQUIRE(o.code == cli::kExitOk);
    CHECK(o.out.find("\"is_distributive\": true") != std::string::npos);
    CHECK(o.out.find("\"is_linear\": true") != std::string::npos);
  }

  TEST_CASE("interact both on 3^2 agrees everywhere, csv output") {
    const Outcome o = run_cli({"interact", "--model", kFixtures + "/ternary2_model.json", "--values",
                               kFixtures + "/ternary2_values.json", "--method", "both", "--format", "csv"});
    REQUIRE(o.code == cli::kExitOk);
    std::istringstream lines(o.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "1,2,K,direct,direct_decimal,mobius,mobius_decimal,agree,status");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) {
      ++rows;
      CHECK(line.find(",true,ok") != std::string::npos);
    }
    CHECK(rows == 8);
  }

  TEST_CASE("diamond product: Möbius available, single target") {
    const Outcome o = run_cli({"interact", "--model", kFixtures + "/diamond_chain_model.json", "--values",
                               write_temp("dc_values.json",
                                          R"({"points": [{"point": ["top", "2"], "value": 1}], "default": 0})")
                                   .string(),
                               "--target", "(top,2)", "--method", "both"});
    REQUIRE(o.code == cli::kExitOk);
    const json doc = json::parse(o.out);
    CHECK(doc["extended"] == true);
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["agree"] == true);
  }

  TEST_CASE("derivative command") {
    const Outcome o = run_cli({"derivative", "--model", kFixtures + "/ternary2_model.json", "--values",
                               kFixtures + "/ternary2_values.json", "--x", "(-1,-1)", "--y", "(0,0)"});
    REQUIRE(o.code == cli::kExitOk);
    const json doc = json::parse(o.out);
    // v(0,0) - v(-1,0) - v(0,-1) + v(-1,-1)
    CHECK(doc["value"] == "1/4");
  }

  TEST_CASE("verify passes on the 3^2 fixture") {
    const Outcome o = run_cli({"verify", "--model", kFixtures + "/ternary2_model.json", "--values",
                               kFixtures + "/ternary2_values.json"});
    CHECK(o.code == cli::kExitOk);
  }

  TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli({"interact", "--values", "/nonexistent.json"}).code == cli::kExitInput);
    CHECK(run_cli({"interact", "--bogus"}).code == cli::kExitInput);
    const auto bad = write_temp("bad_values.json", R"({"order": "lex", "values": [1, 2]})");
    CHECK(run_cli({"interact", "--model", kFixtures + "/ternary2_model.json", "--values", bad.string()}).code ==
          cli::kExitInput);
  }

  TEST_CASE("element parsing keeps bracketed commas") {
    const auto model = cli::read_json(kFixtures + "/ternary2_model.json");
    const auto P = make_product(cli::parse_attributes(model));
    CHECK(cli::parse_element(*P, "(1,-1)") == P->parse({"1", "-1"}));
    CHECK(cli::parse_element(*P, "0,1") == P->parse({"0", "1"}));
    CHECK_THROWS_AS(cli::parse_element(*P, "(1)"), DimensionMismatch);
    const auto G = make_product({{"g", std::make_shared<const FiniteLattice>(make_boolean_lattice(2))}});
    CHECK(cli::parse_element(*G, "({1,2})") == G->parse({"{1,2}"}));
  }

  TEST_CASE("numbers") {
    CHECK(cli::parse_number(json(3), "x") == 3);
    CHECK(cli::parse_number(json(0.25), "x") == Rational(1, 4));
    CHECK(cli::parse_number(json("-2/6"), "x") == Rational(-1, 3));
    CHECK_THROWS_AS(cli::parse_number(json(true), "x"), ParseError);
  }
}
