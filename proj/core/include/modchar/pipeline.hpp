/* Tilting characters to simple G_1T-characters: stability bound, baby Verma
   multiplicity extraction, Brauer-Humphreys reciprocity, and the weight-space
   recursion that produces ch L_1(lambda). */
#pragma once

#include <modchar/charring.hpp>
#include <modchar/rootsystem.hpp>
#include <modchar/tiltingdata.hpp>
#include <modchar/weylchar.hpp>

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace modchar {

// Minimal N >= 0 with 1 + p + ... + p^N = (p^{N+1}-1)/(p-1) >= h-1; any such
// N is within the stable range, so extraction at r = N+1 is valid.
long long compute_stability_bound(const RootSystem& rs, long long p);

// Fixed (root system, p, N) for one pipeline run. Owns the Weyl character
// cache so chi((p^{N+1}-1)rho) is computed once per run. N may be overridden
// upward; values below the stability bound are rejected.
class PipelineConfig {
public:
    PipelineConfig(const RootSystem& rs, long long p,
                   std::optional<long long> n_override = std::nullopt);

    const RootSystem& rs() const { return *rs_; }
    long long p() const { return p_; }
    long long N() const { return N_; }
    long long n() const { return N_ + 1; }

    WeylCharacterCache& cache() const { return *cache_; }
    const Character& steinberg(int r) const { return cache_->steinberg(p_, r); }
    Character baby_verma(int r, const Weight& lambda) const;

private:
    const RootSystem* rs_;
    long long p_;
    long long N_;
    std::unique_ptr<WeylCharacterCache> cache_;
};

// All p-restricted weights, lexicographically ordered.
std::vector<Weight> restricted_weights(const RootSystem& rs, long long p);

// (2(p-1)rho + w0 lambda) + p(p^N - 1)rho; dominant for restricted lambda.
Weight stable_tilting_weight(const PipelineConfig& cfg, const Weight& lambda);

// The unique coefficients {b_mu} with x = sum b_mu ch Z_r(mu), by greedy
// subtraction at the running maximum (each ch Z_r(mu) has unique maximal
// term mu with coefficient 1, so the coefficients are unitriangular).
// Throws when x is not a nonnegative integral combination.
std::map<Weight, Int> extract_baby_verma_multiplicities(WeylCharacterCache& cache,
                                                        long long p, int r,
                                                        const Character& x);

// b_{mu,lambda} from the stable tilting characters, and the derived
// a_{mu,lambda} = b_{mu + p(p^N-1)rho, lambda} = [Z_1(mu) : L_1(lambda)].
class DecompositionTable {
public:
    using Row = std::map<Weight, Int>;  // mu -> multiplicity

    DecompositionTable(std::map<Weight, Row> b_rows, const Weight& shift);

    const std::map<Weight, Row>& b_rows() const { return b_; }
    const std::map<Weight, Row>& a_rows() const { return a_; }
    Int b(const Weight& mu, const Weight& lambda) const;
    Int a(const Weight& mu, const Weight& lambda) const;

private:
    std::map<Weight, Row> b_;  // keyed by restricted lambda
    std::map<Weight, Row> a_;
};

// extract_baby_verma_multiplicities over every restricted lambda, reading
// ch T(stable_tilting_weight(lambda)) from the dataset.
DecompositionTable build_table(const PipelineConfig& cfg, const TiltingDataset& dataset);

// [Z_1(mu) : L_1(xi)] = a(mu - p xi_1, xi_0) for xi = xi_0 + p xi_1 with
// xi_0 restricted; zero outside the table's support.
Int composition_multiplicity(const DecompositionTable& table, const PipelineConfig& cfg,
                             const Weight& mu, const Weight& xi);

// ch L_1(lambda) for the restricted transversal; everything else follows
// from ch L_1(lambda + p mu) = ch L_1(lambda) e(p mu).
class SimpleCharacterTable {
public:
    explicit SimpleCharacterTable(std::map<Weight, Character> restricted)
        : restricted_(std::move(restricted)) {}

    const std::map<Weight, Character>& restricted() const { return restricted_; }
    // any lambda, via the translation identity
    Character character(const PipelineConfig& cfg, const Weight& lambda) const;

private:
    std::map<Weight, Character> restricted_;
};

// The weight-space recursion: dim L_1(lambda)_nu = dim Z_1(lambda)_nu -
// sum_{mu < lambda} [Z_1(lambda):L_1(mu)] dim L_1(mu)_nu, by induction on
// ht(lambda - nu), with recursive calls reduced to the restricted
// transversal. Computes the full restricted table.
SimpleCharacterTable simple_characters(const DecompositionTable& table,
                                       const PipelineConfig& cfg);
// restricted to the requested weights (each reduced mod p first)
SimpleCharacterTable simple_characters(const DecompositionTable& table,
                                       const PipelineConfig& cfg,
                                       const std::vector<Weight>& lambdas);

// Steinberg tensor product assembly: ch L(lambda) = prod_r tw^r ch L_1(lambda_r)
// over the base-p digits of dominant lambda.
Character simple_g_character(const SimpleCharacterTable& simple_table,
                             const PipelineConfig& cfg, const Weight& lambda);

// ch Q_1(lambda) = sum_mu a(mu,lambda) ch Z_1(mu), by reciprocity.
Character pim_character(const DecompositionTable& table, const PipelineConfig& cfg,
                        const Weight& lambda);

// Character-level test whether T(2(p-1)rho + w0 lambda) equals Q_1(lambda).
// Relies on the dataset containing that tilting character. Equality of
// characters is the implemented criterion; Q_1(lambda) is always a summand
// of this tilting module, so equality decides the isomorphism.
bool check_tmc(const DecompositionTable& table, const PipelineConfig& cfg,
               const TiltingDataset& dataset, const Weight& lambda);

}  // namespace modchar
