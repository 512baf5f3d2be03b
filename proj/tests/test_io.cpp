#include "commands.hpp"
#include "doctest.h"
#include "iwkit/errors.hpp"
#include "iwkit/iwasawa_algebra.hpp"
#include "iwkit/json_io.hpp"

using namespace iwkit;

TEST_SUITE("io") {
  TEST_CASE("fnv1a reference values") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
  }

  TEST_CASE("balanced decimals and series text") {
    const Modulus m(3, 4);
    CHECK(balanced_decimal(m, 80) == "-1");
    CHECK(balanced_decimal(m, 40) == "40");
    CHECK(balanced_decimal(m, 41) == "-40");
    const SeriesRing ring(3, 24, 30);
    CHECK(series_to_text(phi(ring, 1)) == "3 3 1");
    CHECK(series_to_text(IwasawaSeries(ring)) == "0");
    const Json j = series_to_json(IwasawaSeries::from_integers(ring, {-2, 0, 1}));
    CHECK(j["prime"] == 3);
    CHECK(j["precision"] == 24);
    CHECK(j["coeffs"] == Json::array({"-2", "0", "1"}));
  }

  TEST_CASE("generator shorthands") {
    const SeriesRing ring(3, 24, 89);
    CHECK(generator_from_json(parse_json_text(R"([3, "1"])"), ring) == IwasawaSeries::from_integers(ring, {3, 1}));
    CHECK(generator_from_json(parse_json_text(R"({"phi": 2})"), ring) == phi(ring, 2));
    CHECK(generator_from_json(parse_json_text(R"({"phi": [1, 1]})"), ring) == phi(ring, 1).multiply_exact(phi(ring, 1)));
    CHECK(generator_from_json(parse_json_text(R"({"p_power": 2})"), ring) == IwasawaSeries::constant(ring, 9));
    CHECK(generator_from_json(parse_json_text(R"({"p_power": 1, "phi": 1})"), ring) == phi(ring, 1).scaled(3));
    CHECK(generator_from_json(parse_json_text(R"({"product": [[3, 1], {"phi": 0}]})"), ring) ==
          IwasawaSeries::from_integers(ring, {0, 3, 1}));
    CHECK(generator_from_json(parse_json_text(R"({"coeffs": ["-123456789012345678901234567890"]})"), ring) ==
          IwasawaSeries(ring, {ring.modulus.parse_decimal("-123456789012345678901234567890")}));
    CHECK_THROWS_AS(generator_from_json(parse_json_text(R"({"coeffs": [1], "prime": 5})"), ring), InputError);
    CHECK_THROWS_AS(generator_from_json(parse_json_text(R"({"coeffs": [1], "precision": 20})"), ring), InputError);
    CHECK_THROWS_AS(generator_from_json(parse_json_text(R"({"phi": -1})"), ring), InputError);
    CHECK_THROWS_AS(generator_from_json(parse_json_text(R"({"bogus": 1})"), ring), InputError);
    CHECK_THROWS_AS(generator_from_json(parse_json_text(R"("x")"), ring), InputError);
    CHECK_THROWS_AS(parse_json_text("{"), InputError);
  }

  TEST_CASE("modules, frobenius data and column values") {
    const SeriesRing ring(3, 24, 89);
    const auto m = module_from_json(parse_json_text(R"({"prime": 3, "generators": [{"p_power": 1}, {"phi": 1}],
                                                         "finite_part": [[9]]})"),
                                    ring);
    CHECK(m.generators().size() == 2);
    REQUIRE(m.finite_part());
    CHECK(module_invariants(*m.finite_part()).length == 2);
    CHECK_THROWS_AS(module_from_json(parse_json_text(R"({"generators": [[0]]})"), ring), InputError);
    CHECK_THROWS_AS(module_from_json(parse_json_text(R"({"generators": [[1]], "finite_part": [[0]]})"), ring),
                    InputError);
    CHECK_THROWS_AS(module_from_json(parse_json_text(R"({"prime": 5, "generators": []})"), ring), InputError);

    const auto f = frobenius_from_json(parse_json_text(R"({"g": 1, "matrix": [[0, -1], [1, 0]]})"), ring);
    CHECK(f.cp() == FrobeniusData::elliptic(ring).cp());
    CHECK_THROWS_AS(frobenius_from_json(parse_json_text(R"({"g": 2, "matrix": [[0, -1], [1, 0]]})"), ring),
                    InputError);
    CHECK_THROWS_AS(frobenius_from_json(parse_json_text(R"({"g": 1, "matrix": [[3, 0], [0, 1]]})"), ring),
                    InputError);

    const auto cols = col_values_from_json(parse_json_text(R"({"1,3": [1], "2,4": {"phi": 1}})"), ring, 2);
    REQUIRE(cols.size() == 6);
    CHECK(cols[1] == IwasawaSeries::constant(ring, 1));
    CHECK(cols[4] == phi(ring, 1));
    CHECK(cols[0].is_zero());
    CHECK_THROWS_AS(col_values_from_json(parse_json_text(R"({"1,5": [1]})"), ring, 2), InputError);
    CHECK_THROWS_AS(col_values_from_json(parse_json_text(R"([[1]])"), ring, 1), InputError);
  }

  TEST_CASE("scenarios") {
    const SeriesRing ring(3, 24, 89);
    const Scenario sc = scenario_from_json(
        parse_json_text(R"({"selmer": {"generators": [{"phi": 1, "coeffs": [3, 1]}]}, "mw_shape": [1],
                             "expected": [1, 1, 1, 1], "n0": 2})"),
        ring);
    CHECK(sc.selmer.lambda() == 3);
    CHECK(sc.shape.c_list == std::vector<int>{1});
    CHECK(sc.n0 == 2);
    REQUIRE(sc.expected);
    CHECK(sc.expected->size() == 4);
    CHECK_THROWS_AS(scenario_from_json(parse_json_text(R"({"mw_shape": [1]})"), ring), InputError);
    CHECK_THROWS_AS(scenario_from_json(parse_json_text(R"({"selmer": {"generators": []}, "mw_shape": [-1]})"), ring),
                    InputError);
  }

  TEST_CASE("minor table keys") {
    CHECK(index_key({1, 3}) == "1,3");
    const SeriesRing ring(3, 24, 89);
    const Json j = minor_table_to_json(minors(FrobeniusData::elliptic(ring), 2));
    REQUIRE(j.contains("minors"));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j["minors"].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"1|1", "1|2", "2|1", "2|2"});
    CHECK(j["minors"]["1|1"] == Json::array({"-3", "-3", "-1"}));
  }

  TEST_CASE("config defaults, overrides and validation") {
    Config cfg;
    CHECK(cfg.effective_degree_cap() == 89);
    CHECK_NOTHROW(cfg.validate());
    apply_config_json(cfg, parse_json_text(R"({"prime": 5, "n_max": 2, "format": "json"})"));
    CHECK(cfg.prime == 5);
    CHECK(cfg.effective_degree_cap() == 33);
    CHECK(cfg.format == OutputFormat::json);
    apply_config_json(cfg, parse_json_text(R"({"selmer": {"prime": 7}})"));
    CHECK(cfg.prime == 7);
    CHECK_THROWS_AS(apply_config_json(cfg, parse_json_text(R"({"prime": "x"})")), InputError);
    CHECK_THROWS_AS(parse_format("xml"), InputError);

    Config bad;
    bad.prime = 9;
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad = Config{};
    bad.margin = 24;
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad = Config{};
    bad.degree_cap = 10;
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad = Config{};
    bad.prime = 7;
    bad.precision = 23;
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad = Config{};
    bad.n_max = 0;
    CHECK_THROWS_AS(bad.validate(), InputError);

    const Json cj = config_to_json(Config{});
    CHECK(cj["prime"] == 3);
    CHECK(cj["degree_cap"] == 89);
    CHECK(cj["format"] == "csv");
  }

  TEST_CASE("command layer") {
    Config cfg;
    cfg.n_max = 3;
    const auto tower = cli::run_tower(parse_json_text(R"({"generators": [{"p_power": 1}]})"), cfg);
    CHECK(tower.exit_code == cli::kOk);
    CHECK(tower.csv.find("3,0,27,18,18,1") != std::string::npos);

    const auto undefined = cli::run_tower(parse_json_text(R"({"generators": [{"phi": 1}, {"phi": 2}, {"phi": 3}]})"), cfg);
    CHECK(undefined.exit_code == cli::kUndefined);

    const auto rk = cli::run_rksolve({0, 3}, false, cfg);
    CHECK(rk.csv == "k,e,a,r_plus,r_minus\n0,0,0,0,0\n1,3,2,2,3\n1,3,2,3,2\n");
    const auto rk2 = cli::run_rksolve({1, 3}, true, cfg);
    CHECK(rk2.json["e"] == Json::array({1, 1}));
  }
}
