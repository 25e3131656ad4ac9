#pragma once

#include <json.hpp>

#include "levyshuffle/brownian.hpp"
#include "levyshuffle/matchings.hpp"
#include "levyshuffle/moments.hpp"
#include "levyshuffle/tensor_poly.hpp"
#include "levyshuffle/verify.hpp"

namespace levyshuffle {

// JSON is the normative machine format. Exact values serialize as "p/q"
// strings (never floats); the empty word serializes as "".

nlohmann::json to_json(const TensorPoly& poly);
TensorPoly tensor_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LetterMatching& d);
nlohmann::json to_json(const BlockMatching& d);
nlohmann::json to_json(const ShuffleExpansion& e);

nlohmann::json sequence_json(const std::vector<Integer>& values);

nlohmann::json moment_row_json(const MomentReport& row, const PiScaled& horizon);
nlohmann::json to_json(const MomentTable& table);

nlohmann::json to_json(const McEstimate& est);
nlohmann::json to_json(const SignatureEstimate& est);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace levyshuffle
