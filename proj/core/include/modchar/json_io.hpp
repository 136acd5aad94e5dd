/* JSON encoding of weights, coefficients and characters. Coefficients are
   arbitrary precision: values that fit a 64-bit signed integer are written
   as JSON numbers, everything else as decimal strings; both are accepted on
   input. Floating point input is rejected rather than silently rounded. */
#pragma once

#include <modchar/charring.hpp>
#include <modchar/rootsystem.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace modchar {

nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j, int expected_rank, const std::string& context);

nlohmann::json coeff_to_json(const Int& c);
Int coeff_from_json(const nlohmann::json& j, const std::string& context);

// list of {"weight":[...],"coeff":...} records in canonical order
// (height descending, then lexicographically descending)
nlohmann::json character_to_json(const RootSystem& rs, const Character& x);
Character character_from_json(const nlohmann::json& j, const RootSystem& rs,
                              const std::string& context);

}  // namespace modchar
