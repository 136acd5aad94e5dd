/* Weyl characters chi(lambda) via Freudenthal's multiplicity recursion,
   Steinberg characters chi((p^r-1)rho), and baby Verma characters
   ch Z_r(lambda) = chi((p^r-1)rho) e(lambda-(p^r-1)rho). */
#pragma once

#include <modchar/charring.hpp>
#include <modchar/rootsystem.hpp>

#include <map>
#include <shared_mutex>
#include <utility>

namespace modchar {

// Dominant weight multiplicities of the irreducible of highest weight lambda,
// by Freudenthal's recursion. Exact integer arithmetic throughout.
std::map<Weight, Int> dominant_weight_multiplicities(const RootSystem& rs, const Weight& lambda);

// chi(lambda) for dominant lambda; rejects non-dominant input.
Character weyl_character(const RootSystem& rs, const Weight& lambda);

// Independent route: Weyl's quotient of alternating orbit sums
// A_{lambda+rho} / A_rho, by long division in Z[X(T)]. Rank <= 3 only.
Character weyl_character_altsum(const RootSystem& rs, const Weight& lambda);

// Weyl dimension formula: prod <lambda+rho, beta^vee> / <rho, beta^vee>.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

Character steinberg_character(const RootSystem& rs, long long p, int r);
// lambda need not be dominant
Character baby_verma_character(const RootSystem& rs, long long p, int r, const Weight& lambda);

// Memoized chi(lambda) store. Reads are concurrent; insertion is serialized.
// Returned references stay valid for the cache's lifetime.
class WeylCharacterCache {
public:
    explicit WeylCharacterCache(const RootSystem& rs) : rs_(&rs) {}
    WeylCharacterCache(const WeylCharacterCache&) = delete;
    WeylCharacterCache& operator=(const WeylCharacterCache&) = delete;

    const RootSystem& rs() const { return *rs_; }
    const Character& weyl(const Weight& lambda);
    const Character& steinberg(long long p, int r);

private:
    const RootSystem* rs_;
    mutable std::shared_mutex mutex_;
    std::map<Weight, Character> store_;
};

Character baby_verma_character(WeylCharacterCache& cache, long long p, int r,
                               const Weight& lambda);

}  // namespace modchar
