// Command-line front end. Links the shared C API only; everything shown here
// arrives through levyshuffle.h handles and JSON strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "levyshuffle/levyshuffle.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIdentityFailure = 2;

std::string take_string(char* text) {
  std::string out = text == nullptr ? "" : text;
  levy_string_free(text);
  return out;
}

int report_error(levy_status status) {
  std::cerr << "levyshuffle: error: " << levy_status_name(status) << ": " << levy_last_error()
            << "\n";
  return kExitUsage;
}

std::string with_pi(const std::string& coefficient, int pi_power) {
  if (pi_power == 0 || coefficient == "0") return coefficient;
  const std::string pi = pi_power == 1 ? "pi" : "pi^" + std::to_string(pi_power);
  return coefficient == "1" ? pi : coefficient + "*" + pi;
}

void print_aligned(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

// ---- moments ---------------------------------------------------------------

int run_moments(int n_max, const std::string& scale, int max_n, const std::string& format) {
  levy_moment_table* table = nullptr;
  levy_status status = levy_moment_table_compute(n_max, scale.c_str(), max_n, &table);
  if (status != LEVY_OK) return report_error(status);
  char* raw = nullptr;
  status = levy_moment_table_json(table, &raw);
  const int agreement = levy_moment_table_agreement(table);
  levy_moment_table_free(table);
  if (status != LEVY_OK) return report_error(status);
  const json doc = json::parse(take_string(raw));

  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    const bool csv = format == "csv";
    rows.push_back({"n", "exact", "contraction", "xy_matching", "XY_exponential", "closed_form",
                    "agreement"});
    for (const auto& row : doc["rows"]) {
      const int pi_power = row["pi_power"].get<int>();
      const auto& routes = row["routes"];
      rows.push_back({std::to_string(row["n"].get<int>()),
                      with_pi(row["exact"].get<std::string>(), pi_power),
                      with_pi(routes["contraction"].get<std::string>(), pi_power),
                      with_pi(routes["xy_matching"].get<std::string>(), pi_power),
                      with_pi(routes["XY_exponential"].get<std::string>(), pi_power),
                      with_pi(routes["closed_form"].get<std::string>(), pi_power),
                      row["agreement"].get<bool>() ? "yes" : "NO"});
    }
    if (csv) {
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          std::cout << row[c] << (c + 1 < row.size() ? "," : "");
        std::cout << "\n";
      }
    } else {
      print_aligned(rows, std::cout);
    }
  }
  if (agreement == 0) {
    std::cerr << "levyshuffle: route disagreement detected\n";
    return kExitIdentityFailure;
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& suite, int m_max, const std::string& format) {
  levy_verify_report* report = nullptr;
  levy_status status = levy_verify_run(suite.c_str(), m_max, &report);
  if (status != LEVY_OK) return report_error(status);
  char* raw = nullptr;
  status = levy_verify_report_json(report, &raw);
  const int passed = levy_verify_report_passed(report);
  levy_verify_report_free(report);
  if (status != LEVY_OK) return report_error(status);
  const json doc = json::parse(take_string(raw));

  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& check : doc["checks"]) {
      std::cout << (check["passed"].get<bool>() ? "[ok]   " : "[FAIL] ")
                << check["name"].get<std::string>();
      if (check.contains("detail")) std::cout << " (" << check["detail"].get<std::string>() << ")";
      std::cout << "\n";
    }
    std::cout << (passed ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return passed ? kExitOk : kExitIdentityFailure;
}

// ---- mc ----------------------------------------------------------------------

int print_mc_result(levy_mc_result* result, const std::string& format) {
  char* raw = nullptr;
  levy_status status = levy_mc_result_json(result, &raw);
  levy_mc_result_free(result);
  if (status != LEVY_OK) return report_error(status);
  const json doc = json::parse(take_string(raw));

  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  const bool csv = format == "csv";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"target", "estimate", "std_error", "reference", "sigma_distance"});
  const json entries = doc.is_array() ? doc : doc["entries"];
  for (const auto& entry : entries) {
    const std::string target =
        entry.contains("target") ? entry["target"].get<std::string>()
                                 : "S[" + entry["word"].get<std::string>() + "]";
    const double est = entry["estimate"].get<double>();
    const double se = entry["std_error"].get<double>();
    const double ref = entry.contains("reference_value") ? entry["reference_value"].get<double>()
                                                         : entry["reference"].get<double>();
    const double sigma = se > 0 ? (est - ref) / se : 0.0;
    rows.push_back({target, fmt_double(est), fmt_double(se), fmt_double(ref), fmt_double(sigma)});
  }
  if (csv) {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        std::cout << row[c] << (c + 1 < row.size() ? "," : "");
      std::cout << "\n";
    }
  } else {
    print_aligned(rows, std::cout);
  }
  return kExitOk;
}

// ---- numbers / matchings ------------------------------------------------------

int run_numbers(const std::string& which, int count, const std::string& format) {
  char* raw = nullptr;
  levy_status status = levy_numbers_json(which.c_str(), count, &raw);
  if (status != LEVY_OK) return report_error(status);
  const json doc = json::parse(take_string(raw));
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  const char letter = which == "euler" ? 'E' : 'T';
  if (doc.contains("values")) {
    const int first = doc["first_index"].get<int>();
    int index = first;
    for (const auto& v : doc["values"]) {
      if (format == "csv") {
        std::cout << index << "," << v.get<std::string>() << "\n";
      } else {
        std::cout << letter << "_" << index << " = " << v.get<std::string>() << "\n";
      }
      ++index;
    }
  } else {
    int t = doc["first_index"].get<int>();
    for (const auto& row : doc["rows"]) {
      std::cout << (format == "csv" ? std::to_string(t) : "t=" + std::to_string(t) + ":");
      for (const auto& v : row) std::cout << (format == "csv" ? "," : " ") << v.get<std::string>();
      std::cout << "\n";
      ++t;
    }
  }
  return kExitOk;
}

int run_matchings(const std::string& word, int negativity, bool count_only,
                  const std::string& format) {
  char* raw = nullptr;
  levy_status status = levy_matchings_json(word.c_str(), negativity, count_only ? 1 : 0, &raw);
  if (status != LEVY_OK) return report_error(status);
  const json doc = json::parse(take_string(raw));
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  if (count_only) {
    std::cout << doc["count"].get<std::string>() << "\n";
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"word", "sigma", "negativity", "sign", "cycles"});
  if (doc.contains("matchings")) {
    for (const auto& m : doc["matchings"]) {
      std::string sigma;
      for (const auto& image : m["sigma"]) {
        if (!sigma.empty()) sigma += " ";
        sigma += std::to_string(image.get<int>());
      }
      rows.push_back({m["word"].get<std::string>(), "[" + sigma + "]",
                      std::to_string(m["negativity"].get<int>()),
                      std::to_string(m["sign"].get<int>()),
                      std::to_string(m["cycles"].get<int>())});
    }
  }
  print_aligned(rows, std::cout);
  std::cout << "count: " << doc["count"].get<std::string>() << "\n";
  std::cout << "negativity counts:";
  for (const auto& [t, n_t] : doc["negativity_counts"].items())
    std::cout << " N_" << t << "=" << n_t.get<std::string>();
  std::cout << "\n";
  return kExitOk;
}

int run_expansions(const std::string& word, int s, int t, bool count_only,
                   const std::string& format) {
  char* raw = nullptr;
  levy_status status = levy_expansions_json(word.c_str(), s, t, count_only ? 1 : 0, &raw);
  if (status != LEVY_OK) return report_error(status);
  const json doc = json::parse(take_string(raw));
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (count_only) {
    std::cout << doc["count"].get<std::string>() << "\n";
  } else {
    for (const auto& e : doc["expansions"]) {
      for (const auto& lab : e["labels"]) std::cout << lab.get<std::string>() << " ";
      std::cout << "\n";
    }
    std::cout << "count: " << doc["count"].get<std::string>() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo moments of the Levy area of planar Brownian motion"};
  app.require_subcommand(1);

  // defaults / resource limits
  int env_max_n = 8;
  if (const char* env = std::getenv("LEVY_SHUFFLE_MAX_N")) env_max_n = std::atoi(env);

  // moments
  auto* cmd_moments = app.add_subcommand("moments", "Exact moment table E[A_T^n], all routes");
  int n_max = 6, max_n = env_max_n;
  std::string scale = "1", mom_format = "table";
  cmd_moments->add_option("--n-max", n_max, "Largest moment order")->capture_default_str();
  cmd_moments->add_option("--T", scale, "Time horizon: rational, optionally times pi (e.g. 2pi)")
      ->capture_default_str();
  cmd_moments->add_option("--max-n", max_n, "Resource guard for the contraction route")
      ->capture_default_str();
  cmd_moments->add_option("--format", mom_format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Cross-route identity checks");
  std::string suite = "all", verify_format = "table";
  int m_max = 2;
  cmd_verify->add_option("--suite", suite, "shuffle | matchings | numbers | all")
      ->check(CLI::IsMember({"shuffle", "matchings", "numbers", "all"}))->capture_default_str();
  cmd_verify->add_option("--m-max", m_max, "Enumeration scale")->capture_default_str();
  cmd_verify->add_option("--format", verify_format, "table | json")
      ->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  // mc
  auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo estimators over Brownian paths");
  std::string kind, mc_format = "table";
  std::vector<int> orders{2};
  std::vector<double> z_values{0.25};
  int level = 2, steps = 256, workers = 1, max_level = 4;
  long long samples = 100000, max_samples = 10000000;
  double horizon = 1.0;
  std::uint64_t seed = 42;
  bool antithetic = false;
  cmd_mc->add_option("--kind", kind, "moments | charfn | signature")
      ->check(CLI::IsMember({"moments", "charfn", "signature"}))->required();
  cmd_mc->add_option("--n", orders, "Moment orders (repeatable)");
  cmd_mc->add_option("--z", z_values, "Charfn arguments (repeatable)");
  cmd_mc->add_option("--level", level, "Signature truncation level")->capture_default_str();
  cmd_mc->add_option("--samples", samples, "Sample paths")->capture_default_str();
  cmd_mc->add_option("--steps", steps, "Path steps")->capture_default_str();
  cmd_mc->add_option("--T", horizon, "Time horizon (charfn fixes T = 2*pi)")->capture_default_str();
  cmd_mc->add_option("--seed", seed, "RNG seed")->capture_default_str();
  cmd_mc->add_option("--workers", workers, "Worker threads")->capture_default_str();
  cmd_mc->add_flag("--antithetic", antithetic, "Pair each path with its negation");
  cmd_mc->add_option("--max-level", max_level, "Resource guard for --level (hard cap 6)")
      ->capture_default_str();
  cmd_mc->add_option("--max-samples", max_samples, "Resource guard for --samples")
      ->capture_default_str();
  cmd_mc->add_option("--format", mc_format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();

  // numbers
  auto* cmd_numbers = app.add_subcommand("numbers", "Euler / tangent / Eulerian tables");
  bool euler = false, tangent = false, eulerian = false;
  int count = 8;
  std::string num_format = "table";
  cmd_numbers->add_flag("--euler", euler, "Euler numbers E_0..E_count");
  cmd_numbers->add_flag("--tangent", tangent, "Tangent numbers T_1..T_count");
  cmd_numbers->add_flag("--eulerian", eulerian, "Eulerian triangle rows 1..count");
  cmd_numbers->add_option("--count", count, "Last index / row")->capture_default_str();
  cmd_numbers->add_option("--format", num_format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();

  // matchings
  auto* cmd_matchings = app.add_subcommand("matchings", "Enumerate matchings or expansions");
  std::string word, match_format = "table";
  int negativity = -1, exp_s = -1, exp_t = -1;
  bool count_only = false;
  cmd_matchings->add_option("--word", word, "Word over {x,y}")->required();
  cmd_matchings->add_option("--negativity", negativity, "Keep matchings of this negativity");
  cmd_matchings->add_flag("--count-only", count_only, "Print the count only");
  cmd_matchings->add_option("--expansions-s", exp_s, "Enumerate expansions: forward factor count");
  cmd_matchings->add_option("--expansions-t", exp_t, "Enumerate expansions: reversed factor count");
  cmd_matchings->add_option("--format", match_format, "table | json")
      ->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_moments->parsed()) {
    std::cerr << "config: moments n_max=" << n_max << " T=" << scale << " max_n=" << max_n
              << " format=" << mom_format << "\n";
    return run_moments(n_max, scale, max_n, mom_format);
  }
  if (cmd_verify->parsed()) {
    std::cerr << "config: verify suite=" << suite << " m_max=" << m_max << "\n";
    return run_verify(suite, m_max, verify_format);
  }
  if (cmd_mc->parsed()) {
    if (samples > max_samples) {
      std::cerr << "levyshuffle: error: samples " << samples << " beyond limit " << max_samples
                << " (raise --max-samples)\n";
      return kExitUsage;
    }
    if (level > max_level || max_level > 6) {
      std::cerr << "levyshuffle: error: level " << level << " beyond limit "
                << std::min(max_level, 6) << "\n";
      return kExitUsage;
    }
    levy_mc_config config{samples, steps, horizon, seed, workers, antithetic ? 1 : 0};
    std::cerr << "config: mc kind=" << kind << " samples=" << samples << " steps=" << steps
              << " T=" << horizon << " seed=" << seed << " workers=" << workers
              << " antithetic=" << (antithetic ? 1 : 0) << "\n";
    levy_mc_result* result = nullptr;
    levy_status status = LEVY_OK;
    if (kind == "moments") {
      status = levy_mc_moments(orders.data(), static_cast<int>(orders.size()), &config, &result);
    } else if (kind == "charfn") {
      status =
          levy_mc_charfn(z_values.data(), static_cast<int>(z_values.size()), &config, &result);
    } else {
      status = levy_mc_signature(level, &config, &result);
    }
    if (status != LEVY_OK) return report_error(status);
    return print_mc_result(result, mc_format);
  }
  if (cmd_numbers->parsed()) {
    const int chosen = (euler ? 1 : 0) + (tangent ? 1 : 0) + (eulerian ? 1 : 0);
    if (chosen != 1) {
      std::cerr << "levyshuffle: error: pick exactly one of --euler, --tangent, --eulerian\n";
      return kExitUsage;
    }
    const std::string which = euler ? "euler" : tangent ? "tangent" : "eulerian";
    std::cerr << "config: numbers which=" << which << " count=" << count << "\n";
    return run_numbers(which, count, num_format);
  }
  if (cmd_matchings->parsed()) {
    std::cerr << "config: matchings word=" << word << " negativity=" << negativity
              << " count_only=" << (count_only ? 1 : 0) << "\n";
    if ((exp_s >= 0) != (exp_t >= 0)) {
      std::cerr << "levyshuffle: error: --expansions-s and --expansions-t go together\n";
      return kExitUsage;
    }
    if (exp_s >= 0) return run_expansions(word, exp_s, exp_t, count_only, match_format);
    return run_matchings(word, negativity, count_only, match_format);
  }
  return kExitUsage;
}
