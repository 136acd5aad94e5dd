/* Independent brute-force ground truth for desk-scale verification. The SL2
   oracles use only closed-form rank-1 Weyl characters and the Steinberg
   tensor product; nothing here calls into the pipeline. */
#pragma once

#include <modchar/charring.hpp>
#include <modchar/rootsystem.hpp>
#include <modchar/weylchar.hpp>

#include <map>
#include <string>
#include <variant>

namespace modchar {

using DecompositionMap = std::map<Weight, Int>;

struct OracleResult {
    std::variant<Character, DecompositionMap> computed;
    std::string method;  // provenance tag, never empty

    const Character& character() const { return std::get<Character>(computed); }
    const DecompositionMap& table() const { return std::get<DecompositionMap>(computed); }
};

// ch L(lambda) for SL2 from the base-p digits: prod_r tw^r chi(lambda_r),
// with chi(n) = e(n) + e(n-2) + ... + e(-n) in closed form.
OracleResult sl2_simple_character(long long p, const Weight& lambda);

// The multiset {[Z_1(mu) : L_1(xi)]} for SL2, by greedy subtraction of
// oracle simple characters from ch Z_1(mu), highest weight first. Errors on
// a nonzero remainder (oracle inconsistency).
OracleResult sl2_baby_verma_decomposition(long long p, const Weight& mu);

// Unique integers {c_mu} with x = sum c_mu chi(mu) for Weyl-invariant x,
// greedy at dominant maxima. Negative entries are reported, not rejected;
// genuine tilting characters give nonnegative results.
OracleResult decompose_into_weyl_characters(WeylCharacterCache& cache, const Character& x);

}  // namespace modchar
