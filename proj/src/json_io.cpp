#include "levyshuffle/json_io.hpp"

#include <stdexcept>

namespace levyshuffle {

namespace {

nlohmann::json permutation_json(const Permutation& sigma) {
  nlohmann::json arr = nlohmann::json::array();
  for (int image : sigma) arr.push_back(image + 1);  // serialized form is 1-indexed
  return arr;
}

std::string scaled_str(const PiScaled& value) {
  if (value.pi_power == 0) return rational_str(value.coefficient);
  std::string out;
  if (value.coefficient != 1) out = rational_str(value.coefficient) + "*";
  out += value.pi_power == 1 ? "pi" : "pi^" + std::to_string(value.pi_power);
  return out;
}

}  // namespace

nlohmann::json to_json(const TensorPoly& poly) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [w, c] : poly.terms()) obj[w.str()] = rational_str(c);
  return obj;
}

TensorPoly tensor_poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("tensor poly json: expected an object");
  TensorPoly poly;
  for (const auto& [key, value] : j.items())
    poly.add_term(Word::parse(key), parse_rational(value.get<std::string>()));
  return poly;
}

nlohmann::json to_json(const LetterMatching& d) {
  return nlohmann::json{{"word", d.word.str()},
                        {"sigma", permutation_json(d.pairing)},
                        {"negativity", d.negativity()},
                        {"sign", d.sign()},
                        {"cycles", cycle_count(d.pairing)}};
}

nlohmann::json to_json(const BlockMatching& d) {
  return nlohmann::json{{"word", d.word.str(true)},
                        {"sigma", permutation_json(d.sigma)},
                        {"negativity", d.negativity()},
                        {"sign", d.sign()},
                        {"cycles", d.cycles()},
                        {"expanded_word", d.expanded_word().str()}};
}

nlohmann::json to_json(const ShuffleExpansion& e) {
  nlohmann::json labels = nlohmann::json::array();
  for (std::size_t p = 0; p < e.word.length(); ++p) {
    const ExpansionLabel& lab = e.labels[p];
    std::string text(1, letter_char(e.word.at(p)));
    text += lab.reversed ? "_" : "^";
    text += std::to_string(lab.index);
    labels.push_back(text);
  }
  return nlohmann::json{{"word", e.word.str()}, {"s", e.s}, {"t", e.t}, {"labels", labels}};
}

nlohmann::json sequence_json(const std::vector<Integer>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

nlohmann::json moment_row_json(const MomentReport& row, const PiScaled& horizon) {
  Rational scale_power = 1;
  for (int k = 0; k < row.n; ++k) scale_power *= horizon.coefficient;
  auto scaled = [&](const Rational& v) { return rational_str(v * scale_power); };
  return nlohmann::json{{"n", row.n},
                        {"exact", scaled(row.value())},
                        {"pi_power", horizon.pi_power * row.n},
                        {"routes",
                         {{"contraction", scaled(row.contraction)},
                          {"xy_matching", scaled(row.letter_matching)},
                          {"XY_exponential", scaled(row.exponential)},
                          {"closed_form", scaled(row.closed_form)}}},
                        {"agreement", row.agreement}};
}

nlohmann::json to_json(const MomentTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) rows.push_back(moment_row_json(row, table.horizon));
  return nlohmann::json{{"horizon", scaled_str(table.horizon)},
                        {"rows", rows},
                        {"agreement", table.all_agree}};
}

nlohmann::json to_json(const McEstimate& est) {
  nlohmann::json j{{"target", est.target},
                   {"estimate", est.estimate},
                   {"std_error", est.std_error},
                   {"reference_value", est.reference},
                   {"samples", est.config.samples},
                   {"steps", est.config.steps},
                   {"horizon", est.config.horizon},
                   {"seed", est.config.seed},
                   {"workers", est.config.workers},
                   {"antithetic", est.config.antithetic}};
  if (est.target.rfind("E[cos", 0) == 0) j["imag_estimate"] = est.imag_estimate;
  return j;
}

nlohmann::json to_json(const SignatureEstimate& est) {
  nlohmann::json entries = nlohmann::json::array();
  for (int k = 0; k <= est.level; ++k) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
      const Word w = Word::from_bits(bits, static_cast<std::size_t>(k));
      entries.push_back(nlohmann::json{{"word", w.str()},
                                       {"estimate", est.mean.at(w)},
                                       {"std_error", est.std_error.at(w)},
                                       {"reference", est.reference.at(w)}});
    }
  }
  return nlohmann::json{{"target", "expected signature"},
                        {"level", est.level},
                        {"entries", entries},
                        {"samples", est.config.samples},
                        {"steps", est.config.steps},
                        {"seed", est.config.seed},
                        {"workers", est.config.workers},
                        {"antithetic", est.config.antithetic}};
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : report.checks) {
    nlohmann::json j{{"name", check.name}, {"passed", check.passed}};
    if (!check.detail.empty()) j["detail"] = check.detail;
    checks.push_back(j);
  }
  return nlohmann::json{{"suite", report.suite},
                        {"m_max", report.m_max},
                        {"checks", checks},
                        {"passed", report.passed()}};
}

}  // namespace levyshuffle
