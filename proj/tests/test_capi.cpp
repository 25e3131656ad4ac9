// Exercises the shared-library surface the way an external client would:
// only levyshuffle.h, opaque handles, status codes and JSON strings.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "levyshuffle/levyshuffle.h"

using nlohmann::json;

namespace {

std::string take(char* raw) {
  REQUIRE(raw != nullptr);
  std::string out = raw;
  levy_string_free(raw);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(levy_version()) > 0);
  CHECK(std::string(levy_status_name(LEVY_OK)) == "ok");
  CHECK(std::string(levy_status_name(LEVY_ERR_LIMIT_EXCEEDED)) == "limit exceeded");
}

TEST_CASE("moment table: values, agreement, errors") {
  levy_moment_table* table = nullptr;
  REQUIRE(levy_moment_table_compute(6, "1", 0, &table) == LEVY_OK);
  CHECK(levy_moment_table_rows(table) == 7);
  CHECK(levy_moment_table_agreement(table) == 1);
  char* raw = nullptr;
  REQUIRE(levy_moment_table_json(table, &raw) == LEVY_OK);
  levy_moment_table_free(table);
  const json doc = json::parse(take(raw));
  const std::vector<std::string> expected{"1", "0", "1/4", "0", "5/16", "0", "61/64"};
  REQUIRE(doc["rows"].size() == expected.size());
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(doc["rows"][n]["exact"] == expected[n]);
    CHECK(doc["rows"][n]["agreement"] == true);
    CHECK(doc["rows"][n]["pi_power"] == 0);
  }

  // scaled horizon carries pi symbolically
  levy_moment_table* scaled = nullptr;
  REQUIRE(levy_moment_table_compute(4, "2pi", 0, &scaled) == LEVY_OK);
  char* scaled_raw = nullptr;
  REQUIRE(levy_moment_table_json(scaled, &scaled_raw) == LEVY_OK);
  levy_moment_table_free(scaled);
  const json scaled_doc = json::parse(take(scaled_raw));
  CHECK(scaled_doc["rows"][2]["exact"] == "1");
  CHECK(scaled_doc["rows"][2]["pi_power"] == 2);
  CHECK(scaled_doc["rows"][4]["exact"] == "5");
  CHECK(scaled_doc["rows"][4]["pi_power"] == 4);

  levy_moment_table* bad = nullptr;
  CHECK(levy_moment_table_compute(9, "1", 8, &bad) == LEVY_ERR_LIMIT_EXCEEDED);
  CHECK(levy_moment_table_compute(4, "garbage", 0, &bad) == LEVY_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(levy_last_error()) > 0);
  CHECK(levy_moment_table_compute(4, "1", 0, nullptr) == LEVY_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify suites through the C surface") {
  levy_verify_report* report = nullptr;
  REQUIRE(levy_verify_run("all", 1, &report) == LEVY_OK);
  CHECK(levy_verify_report_passed(report) == 1);
  CHECK(levy_verify_report_check_count(report) > 5);
  char* raw = nullptr;
  REQUIRE(levy_verify_report_json(report, &raw) == LEVY_OK);
  levy_verify_report_free(report);
  const json doc = json::parse(take(raw));
  CHECK(doc["passed"] == true);
  CHECK(doc["suite"] == "all");
  for (const auto& check : doc["checks"]) CHECK(check["passed"] == true);

  levy_verify_report* bad = nullptr;
  CHECK(levy_verify_run("nonsense", 1, &bad) == LEVY_ERR_INVALID_ARGUMENT);
  CHECK(levy_verify_run("all", 0, &bad) == LEVY_ERR_INVALID_ARGUMENT);
}

TEST_CASE("number tables") {
  char* raw = nullptr;
  REQUIRE(levy_numbers_json("euler", 8, &raw) == LEVY_OK);
  const json euler = json::parse(take(raw));
  const std::vector<std::string> expected{"1", "0", "1", "0", "5", "0", "61", "0", "1385"};
  CHECK(euler["values"].get<std::vector<std::string>>() == expected);

  REQUIRE(levy_numbers_json("tangent", 4, &raw) == LEVY_OK);
  const json tangent = json::parse(take(raw));
  CHECK(tangent["values"].get<std::vector<std::string>>() ==
        std::vector<std::string>{"1", "2", "16", "272"});

  REQUIRE(levy_numbers_json("eulerian", 3, &raw) == LEVY_OK);
  const json eulerian = json::parse(take(raw));
  CHECK(eulerian["rows"][2].get<std::vector<std::string>>() ==
        std::vector<std::string>{"1", "4", "1"});

  CHECK(levy_numbers_json("fibonacci", 4, &raw) == LEVY_ERR_INVALID_ARGUMENT);
  CHECK(levy_numbers_json(nullptr, 4, &raw) == LEVY_ERR_INVALID_ARGUMENT);
}

TEST_CASE("matchings and expansions") {
  char* raw = nullptr;
  REQUIRE(levy_matchings_json("xxyyxxyy", 1, 1, &raw) == LEVY_OK);
  const json counted = json::parse(take(raw));
  CHECK(counted["count"] == "16");
  CHECK(counted["negativity_filter"] == 1);
  CHECK(counted["negativity_counts"]["0"] == "4");
  CHECK(counted["negativity_counts"]["1"] == "16");
  CHECK(counted["negativity_counts"]["2"] == "4");

  REQUIRE(levy_matchings_json("xy", -1, 0, &raw) == LEVY_OK);
  const json tiny = json::parse(take(raw));
  CHECK(tiny["count"] == "1");
  REQUIRE(tiny["matchings"].size() == 1);
  CHECK(tiny["matchings"][0]["negativity"] == 0);
  CHECK(tiny["matchings"][0]["sigma"] == json::array({2, 1}));

  CHECK(levy_matchings_json("xqy", -1, 0, &raw) == LEVY_ERR_INVALID_ARGUMENT);

  REQUIRE(levy_expansions_json("xxyyxxyy", 3, 1, 1, &raw) == LEVY_OK);
  CHECK(json::parse(take(raw))["count"] == "96");
  REQUIRE(levy_expansions_json("xxyy", 2, 0, 0, &raw) == LEVY_OK);
  const json exps = json::parse(take(raw));
  CHECK(exps["expansions"].size() == 4);
}

TEST_CASE("charfn helpers") {
  double value = 0;
  REQUIRE(levy_charfn_reference(0.25, &value) == LEVY_OK);
  CHECK(value == doctest::Approx(0.754940).epsilon(1e-5));
  double partial = 0;
  REQUIRE(levy_charfn_partial_sum(0.25, 20, &partial) == LEVY_OK);
  CHECK(std::abs(partial - value) < 1e-6);
  CHECK(levy_charfn_partial_sum(0.25, -1, &partial) == LEVY_ERR_INVALID_ARGUMENT);
}

TEST_CASE("monte carlo through the C surface") {
  const levy_mc_config config{20000, 32, 1.0, 4242, 2, 0};
  const int orders[2] = {2, 4};
  levy_mc_result* result = nullptr;
  REQUIRE(levy_mc_moments(orders, 2, &config, &result) == LEVY_OK);
  REQUIRE(levy_mc_result_count(result) == 2);
  double est = 0, se = 0, ref = 0;
  REQUIRE(levy_mc_result_row(result, 0, &est, &se, &ref) == LEVY_OK);
  CHECK(ref == doctest::Approx(0.25));
  CHECK(se > 0);
  CHECK(std::abs(est - 0.25 * (1 - 1.0 / 32)) <= 4 * se);
  CHECK(levy_mc_result_row(result, 5, &est, &se, &ref) == LEVY_ERR_INVALID_ARGUMENT);
  char* raw = nullptr;
  REQUIRE(levy_mc_result_json(result, &raw) == LEVY_OK);
  levy_mc_result_free(result);
  const json doc = json::parse(take(raw));
  REQUIRE(doc.is_array());
  CHECK(doc[0]["target"] == "E[A^2]");
  CHECK(doc[0]["samples"] == 20000);

  // identical (seed, workers) => identical output, through the C API too
  levy_mc_result* again = nullptr;
  REQUIRE(levy_mc_moments(orders, 2, &config, &again) == LEVY_OK);
  double est2 = 0;
  REQUIRE(levy_mc_result_row(again, 0, &est2, nullptr, nullptr) == LEVY_OK);
  CHECK(std::memcmp(&est, &est2, sizeof est) == 0);
  levy_mc_result_free(again);

  levy_mc_result* sig = nullptr;
  const levy_mc_config sig_config{5000, 32, 1.0, 7, 1, 0};
  REQUIRE(levy_mc_signature(2, &sig_config, &sig) == LEVY_OK);
  CHECK(levy_mc_result_count(sig) == 7);  // 1 + 2 + 4 entries
  REQUIRE(levy_mc_result_json(sig, &raw) == LEVY_OK);
  levy_mc_result_free(sig);
  const json sig_doc = json::parse(take(raw));
  CHECK(sig_doc["level"] == 2);
  CHECK(sig_doc["entries"].size() == 7);

  levy_mc_result* bad = nullptr;
  const levy_mc_config bad_config{0, 32, 1.0, 7, 1, 0};
  CHECK(levy_mc_moments(orders, 2, &bad_config, &bad) == LEVY_ERR_INVALID_ARGUMENT);
  CHECK(levy_mc_moments(nullptr, 2, &config, &bad) == LEVY_ERR_INVALID_ARGUMENT);
  CHECK(levy_mc_signature(9, &sig_config, &bad) == LEVY_ERR_INVALID_ARGUMENT);
}
