#include "levyshuffle/levyshuffle.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "levyshuffle/brownian.hpp"
#include "levyshuffle/json_io.hpp"
#include "levyshuffle/matchings.hpp"
#include "levyshuffle/moments.hpp"
#include "levyshuffle/special_numbers.hpp"
#include "levyshuffle/verify.hpp"

using namespace levyshuffle;

// Opaque handle bodies. The C surface owns plain heap objects; everything
// the CLI renders flows through JSON strings plus a few scalar accessors.
struct levy_moment_table {
  MomentTable table;
};

struct levy_verify_report {
  VerifyReport report;
};

struct levy_mc_result {
  nlohmann::json json;
  std::vector<double> estimates;
  std::vector<double> std_errors;
  std::vector<double> references;
};

namespace {

thread_local std::string g_last_error;

levy_status fail(levy_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

levy_status emit_json(const nlohmann::json& j, char** out_json) {
  *out_json = dup_string(j.dump());
  return *out_json == nullptr ? fail(LEVY_ERR_NOMEM, "out of memory") : LEVY_OK;
}

// Maps C++ failures onto the status enum; LIMIT is signalled by out_of_range.
template <class Fn>
levy_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::out_of_range& e) {
    return fail(LEVY_ERR_LIMIT_EXCEEDED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LEVY_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::length_error& e) {
    return fail(LEVY_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc& e) {
    return fail(LEVY_ERR_NOMEM, e.what());
  } catch (const std::exception& e) {
    return fail(LEVY_ERR_INTERNAL, e.what());
  }
}

McConfig convert_config(const levy_mc_config* config) {
  if (config == nullptr) throw std::invalid_argument("config is null");
  McConfig out;
  out.samples = config->samples;
  out.steps = config->steps;
  out.horizon = config->horizon;
  out.seed = config->seed;
  out.workers = config->workers;
  out.antithetic = config->antithetic != 0;
  return out;
}

levy_mc_result* pack_estimates(const std::vector<McEstimate>& estimates) {
  auto* result = new levy_mc_result;
  result->json = nlohmann::json::array();
  for (const auto& est : estimates) {
    result->json.push_back(to_json(est));
    result->estimates.push_back(est.estimate);
    result->std_errors.push_back(est.std_error);
    result->references.push_back(est.reference);
  }
  return result;
}

}  // namespace

extern "C" {

const char* levy_version(void) { return "0.1.0"; }

const char* levy_status_name(levy_status status) {
  switch (status) {
    case LEVY_OK: return "ok";
    case LEVY_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LEVY_ERR_LIMIT_EXCEEDED: return "limit exceeded";
    case LEVY_ERR_IDENTITY_FAILURE: return "identity failure";
    case LEVY_ERR_NOMEM: return "out of memory";
    case LEVY_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* levy_last_error(void) { return g_last_error.c_str(); }

void levy_string_free(char* text) { std::free(text); }

levy_status levy_moment_table_compute(int n_max, const char* scale, int n_limit,
                                      levy_moment_table** out_table) {
  if (out_table == nullptr) return fail(LEVY_ERR_INVALID_ARGUMENT, "out_table is null");
  return guarded([&]() -> levy_status {
    const PiScaled horizon = parse_scale(scale == nullptr ? "1" : scale);
    const int limit = n_limit > 0 ? n_limit : kDefaultMaxMomentOrder;
    if (n_max > limit)
      return fail(LEVY_ERR_LIMIT_EXCEEDED,
                  "n_max " + std::to_string(n_max) + " beyond limit " + std::to_string(limit));
    auto* handle = new levy_moment_table{compute_moment_table(n_max, horizon, limit)};
    *out_table = handle;
    return LEVY_OK;
  });
}

void levy_moment_table_free(levy_moment_table* table) { delete table; }

int levy_moment_table_rows(const levy_moment_table* table) {
  return table == nullptr ? 0 : static_cast<int>(table->table.rows.size());
}

int levy_moment_table_agreement(const levy_moment_table* table) {
  return table != nullptr && table->table.all_agree ? 1 : 0;
}

levy_status levy_moment_table_json(const levy_moment_table* table, char** out_json) {
  if (table == nullptr || out_json == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit_json(to_json(table->table), out_json); });
}

levy_status levy_verify_run(const char* suite, int m_max, levy_verify_report** out_report) {
  if (suite == nullptr || out_report == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> levy_status {
    auto* handle = new levy_verify_report{run_verify_suite(suite, m_max)};
    *out_report = handle;
    return LEVY_OK;
  });
}

void levy_verify_report_free(levy_verify_report* report) { delete report; }

int levy_verify_report_passed(const levy_verify_report* report) {
  return report != nullptr && report->report.passed() ? 1 : 0;
}

int levy_verify_report_check_count(const levy_verify_report* report) {
  return report == nullptr ? 0 : static_cast<int>(report->report.checks.size());
}

levy_status levy_verify_report_json(const levy_verify_report* report, char** out_json) {
  if (report == nullptr || out_json == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit_json(to_json(report->report), out_json); });
}

levy_status levy_numbers_json(const char* which, int count, char** out_json) {
  if (which == nullptr || out_json == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> levy_status {
    const std::string kind = which;
    nlohmann::json j;
    if (kind == "euler") {
      j = nlohmann::json{{"name", "euler"}, {"first_index", 0},
                         {"values", sequence_json(euler_numbers(count))}};
    } else if (kind == "tangent") {
      j = nlohmann::json{{"name", "tangent"}, {"first_index", 1},
                         {"values", sequence_json(tangent_numbers(count))}};
    } else if (kind == "eulerian") {
      if (count < 1) throw std::invalid_argument("eulerian: need count >= 1");
      nlohmann::json rows = nlohmann::json::array();
      for (int t = 1; t <= count; ++t) rows.push_back(sequence_json(eulerian_row(t)));
      j = nlohmann::json{{"name", "eulerian"}, {"first_index", 1}, {"rows", rows}};
    } else {
      throw std::invalid_argument("unknown sequence '" + kind + "'");
    }
    return emit_json(j, out_json);
  });
}

levy_status levy_matchings_json(const char* word, int negativity, int count_only,
                                char** out_json) {
  if (word == nullptr || out_json == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> levy_status {
    const Word w = Word::parse(word);
    nlohmann::json j{{"word", w.str()}};
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [t, n_t] : negativity_histogram(w)) hist[std::to_string(t)] = n_t.str();
    j["negativity_counts"] = hist;
    Integer total = 0;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& d : letter_matchings(w)) {
      if (negativity >= 0 && d.negativity() != negativity) continue;
      ++total;
      if (count_only == 0) list.push_back(to_json(d));
    }
    j["count"] = total.str();
    if (count_only == 0) j["matchings"] = list;
    if (negativity >= 0) j["negativity_filter"] = negativity;
    return emit_json(j, out_json);
  });
}

levy_status levy_expansions_json(const char* word, int s, int t, int count_only,
                                 char** out_json) {
  if (word == nullptr || out_json == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> levy_status {
    const Word w = Word::parse(word);
    const auto expansions = enumerate_expansions(w, s, t);
    nlohmann::json j{{"word", w.str()}, {"s", s}, {"t", t},
                     {"count", std::to_string(expansions.size())}};
    if (count_only == 0) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& e : expansions) list.push_back(to_json(e));
      j["expansions"] = list;
    }
    return emit_json(j, out_json);
  });
}

levy_status levy_charfn_partial_sum(double z, int n_terms, double* out_value) {
  if (out_value == nullptr) return fail(LEVY_ERR_INVALID_ARGUMENT, "out_value is null");
  return guarded([&]() -> levy_status {
    *out_value = charfn_partial_sum(z, n_terms);
    return LEVY_OK;
  });
}

levy_status levy_charfn_reference(double z, double* out_value) {
  if (out_value == nullptr) return fail(LEVY_ERR_INVALID_ARGUMENT, "out_value is null");
  *out_value = charfn_reference(z);
  return LEVY_OK;
}

levy_status levy_mc_moments(const int* orders, int order_count, const levy_mc_config* config,
                            levy_mc_result** out_result) {
  if (orders == nullptr || order_count <= 0 || out_result == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null or empty argument");
  return guarded([&]() -> levy_status {
    std::vector<int> order_list(orders, orders + order_count);
    *out_result = pack_estimates(estimate_moments(order_list, convert_config(config)));
    return LEVY_OK;
  });
}

levy_status levy_mc_charfn(const double* z_values, int z_count, const levy_mc_config* config,
                           levy_mc_result** out_result) {
  if (z_values == nullptr || z_count <= 0 || out_result == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null or empty argument");
  return guarded([&]() -> levy_status {
    std::vector<double> z_list(z_values, z_values + z_count);
    *out_result = pack_estimates(estimate_charfn(z_list, convert_config(config)));
    return LEVY_OK;
  });
}

levy_status levy_mc_signature(int level, const levy_mc_config* config,
                              levy_mc_result** out_result) {
  if (out_result == nullptr) return fail(LEVY_ERR_INVALID_ARGUMENT, "out_result is null");
  return guarded([&]() -> levy_status {
    const SignatureEstimate est = estimate_expected_signature(level, convert_config(config));
    auto* result = new levy_mc_result;
    result->json = to_json(est);
    for (int k = 0; k <= est.level; ++k) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        const Word w = Word::from_bits(bits, static_cast<std::size_t>(k));
        result->estimates.push_back(est.mean.at(w));
        result->std_errors.push_back(est.std_error.at(w));
        result->references.push_back(est.reference.at(w));
      }
    }
    *out_result = result;
    return LEVY_OK;
  });
}

void levy_mc_result_free(levy_mc_result* result) { delete result; }

int levy_mc_result_count(const levy_mc_result* result) {
  return result == nullptr ? 0 : static_cast<int>(result->estimates.size());
}

levy_status levy_mc_result_row(const levy_mc_result* result, int index, double* out_estimate,
                               double* out_std_error, double* out_reference) {
  if (result == nullptr) return fail(LEVY_ERR_INVALID_ARGUMENT, "result is null");
  if (index < 0 || index >= static_cast<int>(result->estimates.size()))
    return fail(LEVY_ERR_INVALID_ARGUMENT, "row index out of range");
  if (out_estimate != nullptr) *out_estimate = result->estimates[static_cast<std::size_t>(index)];
  if (out_std_error != nullptr)
    *out_std_error = result->std_errors[static_cast<std::size_t>(index)];
  if (out_reference != nullptr)
    *out_reference = result->references[static_cast<std::size_t>(index)];
  return LEVY_OK;
}

levy_status levy_mc_result_json(const levy_mc_result* result, char** out_json) {
  if (result == nullptr || out_json == nullptr)
    return fail(LEVY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit_json(result->json, out_json); });
}

}  // extern "C"
