#include <modchar/pipeline.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace modchar {

long long compute_stability_bound(const RootSystem& rs, long long p) {
    if (p < 2) throw std::invalid_argument("compute_stability_bound needs p >= 2");
    long long target = rs.coxeter_number() - 1;
    long long sum = 1;  // 1 + p + ... + p^N, starting at N = 0
    long long N = 0;
    while (sum < target) {
        sum += pow_ll(p, static_cast<int>(N) + 1);
        ++N;
    }
    return N;
}

PipelineConfig::PipelineConfig(const RootSystem& rs, long long p,
                               std::optional<long long> n_override)
    : rs_(&rs), p_(p) {
    if (p < 2) throw std::invalid_argument("pipeline needs p >= 2");
    long long minimal = compute_stability_bound(rs, p);
    N_ = n_override.value_or(minimal);
    if (N_ < minimal)
        throw std::invalid_argument("stability exponent N=" + std::to_string(N_) +
                                    " is below the bound " + std::to_string(minimal) +
                                    " required for " + rs.name() + ", p=" + std::to_string(p));
    cache_ = std::make_unique<WeylCharacterCache>(rs);
}

Character PipelineConfig::baby_verma(int r, const Weight& lambda) const {
    return baby_verma_character(*cache_, p_, r, lambda);
}

std::vector<Weight> restricted_weights(const RootSystem& rs, long long p) {
    std::vector<Weight> out;
    Weight w(static_cast<std::size_t>(rs.rank()));
    std::function<void(int)> walk = [&](int i) {
        if (i == rs.rank()) {
            out.push_back(w);
            return;
        }
        for (w[i] = 0; w[i] < p; ++w[i]) walk(i + 1);
        w[i] = 0;
    };
    walk(0);
    return out;
}

Weight stable_tilting_weight(const PipelineConfig& cfg, const Weight& lambda) {
    const RootSystem& rs = cfg.rs();
    if (!rs.is_restricted(lambda, cfg.p()))
        throw std::invalid_argument("stable_tilting_weight: " + lambda.str() +
                                    " is not p-restricted");
    long long p = cfg.p();
    Weight w = 2 * (p - 1) * rs.rho() + rs.apply_w0(lambda) +
               p * (pow_ll(p, static_cast<int>(cfg.N())) - 1) * rs.rho();
    if (!rs.is_dominant(w)) throw std::logic_error("stable tilting weight must be dominant");
    return w;
}

std::map<Weight, Int> extract_baby_verma_multiplicities(WeylCharacterCache& cache,
                                                        long long p, int r,
                                                        const Character& x) {
    const RootSystem& rs = cache.rs();
    std::map<Weight, Int> b;
    if (x.is_zero()) return b;
    if (static_cast<int>(x.rank()) != rs.rank())
        throw std::invalid_argument("character rank disagrees with the root system");

    const Character& st = cache.steinberg(p, r);
    const Weight st_weight = (pow_ll(p, r) - 1) * rs.rho();
    const Int verma_mass = st.total_mass();  // p^{r |Phi+|}

    Int mass = x.total_mass();
    if (mass <= 0 || mass % verma_mass != 0)
        throw std::runtime_error(
            "not a nonnegative baby-Verma combination: total mass " + mass.str() +
            " is not a positive multiple of the baby Verma dimension " + verma_mass.str());
    Int budget = mass / verma_mass;  // equals sum of the b_mu once extraction succeeds

    Character rem = x;
    Int extracted = 0;
    while (!rem.is_zero()) {
        Weight m = *max_weight(rs, rem);
        Int c = rem.coeff_at(m);
        if (c < 0)
            throw std::runtime_error(
                "not a nonnegative baby-Verma combination: coefficient " + c.str() +
                " at maximal weight " + m.str());
        extracted += c;
        if (extracted > budget)
            throw std::runtime_error(
                "not a nonnegative baby-Verma combination: extraction exceeds the mass bound");
        b.emplace(m, c);
        rem = subtract(rem, scale(translate(st, m - st_weight), c));
    }
    return b;
}

DecompositionTable::DecompositionTable(std::map<Weight, Row> b_rows, const Weight& shift)
    : b_(std::move(b_rows)) {
    for (const auto& [lambda, row] : b_) {
        Row arow;
        for (const auto& [mu_shifted, mult] : row) arow.emplace(mu_shifted - shift, mult);
        a_.emplace(lambda, std::move(arow));
    }
}

Int DecompositionTable::b(const Weight& mu, const Weight& lambda) const {
    auto row = b_.find(lambda);
    if (row == b_.end()) return 0;
    auto it = row->second.find(mu);
    return it == row->second.end() ? Int(0) : it->second;
}

Int DecompositionTable::a(const Weight& mu, const Weight& lambda) const {
    auto row = a_.find(lambda);
    if (row == a_.end()) return 0;
    auto it = row->second.find(mu);
    return it == row->second.end() ? Int(0) : it->second;
}

DecompositionTable build_table(const PipelineConfig& cfg, const TiltingDataset& dataset) {
    const RootSystem& rs = cfg.rs();
    long long p = cfg.p();
    Weight shift = p * (pow_ll(p, static_cast<int>(cfg.N())) - 1) * rs.rho();

    std::map<Weight, DecompositionTable::Row> b_rows;
    for (const Weight& lambda : restricted_weights(rs, p)) {
        Weight wt = stable_tilting_weight(cfg, lambda);
        const Character& tilt = dataset.require(wt);
        auto b = extract_baby_verma_multiplicities(cfg.cache(), p, static_cast<int>(cfg.n()),
                                                   tilt);
        b_rows.emplace(lambda, std::move(b));
    }
    DecompositionTable table(std::move(b_rows), shift);
    for (const Weight& lambda : restricted_weights(rs, p))
        if (table.a(lambda, lambda) != 1)
            throw std::runtime_error("decomposition table: a(lambda,lambda) != 1 at lambda=" +
                                     lambda.str() + "; tilting data is inconsistent");
    return table;
}

namespace {

// xi = xi0 + p*xi1 with xi0 restricted (floored division per coordinate)
std::pair<Weight, Weight> restricted_digit(const Weight& xi, long long p) {
    Weight xi0(xi.rank()), xi1(xi.rank());
    for (std::size_t i = 0; i < xi.rank(); ++i) {
        long long r = xi[i] % p;
        if (r < 0) r += p;
        xi0[i] = r;
        xi1[i] = (xi[i] - r) / p;
    }
    return {xi0, xi1};
}

}  // namespace

Int composition_multiplicity(const DecompositionTable& table, const PipelineConfig& cfg,
                             const Weight& mu, const Weight& xi) {
    cfg.rs().check_weight(mu);
    auto [xi0, xi1] = restricted_digit(xi, cfg.p());
    return table.a(mu - cfg.p() * xi1, xi0);
}

namespace {

// Composition factors (mu, [Z_1(lambda0):L_1(mu)]) of Z_1(lambda0) with
// mu != lambda0, read off the a-table: entries a(nu, xi0) with
// nu congruent to lambda0 mod p contribute mu = xi0 + lambda0 - nu.
struct SimpleCharSolver {
    const DecompositionTable& table;
    const PipelineConfig& cfg;
    const Character& st1;
    Weight st1_weight;

    std::map<Weight, std::vector<std::pair<Weight, Int>>> factor_cache;
    std::map<std::pair<Weight, Weight>, Int> dim_memo;

    SimpleCharSolver(const DecompositionTable& t, const PipelineConfig& c)
        : table(t), cfg(c), st1(c.steinberg(1)), st1_weight((c.p() - 1) * c.rs().rho()) {}

    const std::vector<std::pair<Weight, Int>>& factors(const Weight& lambda0) {
        auto it = factor_cache.find(lambda0);
        if (it != factor_cache.end()) return it->second;
        std::vector<std::pair<Weight, Int>> out;
        long long p = cfg.p();
        for (const auto& [xi0, row] : table.a_rows()) {
            for (const auto& [nu, mult] : row) {
                if (mult == 0) continue;
                bool congruent = true;
                for (std::size_t i = 0; i < nu.rank(); ++i)
                    if ((nu[i] - lambda0[i]) % p != 0) {
                        congruent = false;
                        break;
                    }
                if (!congruent) continue;
                Weight mu = xi0 + lambda0 - nu;
                if (mu == lambda0) continue;  // the diagonal entry a(lambda0,lambda0)
                if (!cfg.rs().dominance_leq(mu, lambda0))
                    throw std::runtime_error(
                        "decomposition table inconsistent: composition factor " + mu.str() +
                        " not below " + lambda0.str());
                out.emplace_back(mu, mult);
            }
        }
        return factor_cache.emplace(lambda0, std::move(out)).first->second;
    }

    // dim L_1(lambda0)_nu for restricted lambda0; induction on ht(lambda0-nu)
    Int dim(const Weight& lambda0, const Weight& nu) {
        if (nu == lambda0) return 1;
        if (!cfg.rs().dominance_leq(nu, lambda0)) return 0;
        auto key = std::make_pair(lambda0, nu);
        auto it = dim_memo.find(key);
        if (it != dim_memo.end()) return it->second;

        Int value = st1.coeff_at(nu - lambda0 + st1_weight);  // dim Z_1(lambda0)_nu
        for (const auto& [mu, mult] : factors(lambda0)) {
            auto [mu0, mu1] = restricted_digit(mu, cfg.p());
            value -= mult * dim(mu0, nu - cfg.p() * mu1);
        }
        if (value < 0)
            throw std::runtime_error("simple character recursion went negative at lambda=" +
                                     lambda0.str() + ", nu=" + nu.str() +
                                     "; tilting data is inconsistent");
        return dim_memo.emplace(std::move(key), std::move(value)).first->second;
    }

    Character simple(const Weight& lambda0) {
        Character z = cfg.baby_verma(1, lambda0);
        std::vector<Character::Term> terms;
        for (const auto& t : z.terms()) {
            Int d = dim(lambda0, t.weight);
            if (d != 0) terms.push_back({t.weight, std::move(d)});
        }
        return Character::from_terms(std::move(terms));
    }
};

}  // namespace

SimpleCharacterTable simple_characters(const DecompositionTable& table,
                                       const PipelineConfig& cfg) {
    return simple_characters(table, cfg, restricted_weights(cfg.rs(), cfg.p()));
}

SimpleCharacterTable simple_characters(const DecompositionTable& table,
                                       const PipelineConfig& cfg,
                                       const std::vector<Weight>& lambdas) {
    SimpleCharSolver solver(table, cfg);
    std::map<Weight, Character> out;
    for (const Weight& lambda : lambdas) {
        Weight lambda0 = restricted_digit(lambda, cfg.p()).first;
        if (!out.count(lambda0)) out.emplace(lambda0, solver.simple(lambda0));
    }
    return SimpleCharacterTable(std::move(out));
}

Character SimpleCharacterTable::character(const PipelineConfig& cfg,
                                          const Weight& lambda) const {
    Weight lambda0(lambda.rank()), lambda1(lambda.rank());
    for (std::size_t i = 0; i < lambda.rank(); ++i) {
        long long r = lambda[i] % cfg.p();
        if (r < 0) r += cfg.p();
        lambda0[i] = r;
        lambda1[i] = (lambda[i] - r) / cfg.p();
    }
    auto it = restricted_.find(lambda0);
    if (it == restricted_.end())
        throw std::invalid_argument("simple character table has no entry for " + lambda0.str());
    return translate(it->second, cfg.p() * lambda1);
}

Character simple_g_character(const SimpleCharacterTable& simple_table,
                             const PipelineConfig& cfg, const Weight& lambda) {
    const RootSystem& rs = cfg.rs();
    if (!rs.is_dominant(lambda))
        throw std::invalid_argument("simple_g_character: " + lambda.str() + " is not dominant");
    Character result = Character::unit(Weight(lambda.rank()));
    Weight rest = lambda;
    long long p = cfg.p();
    for (int r = 0;; ++r) {
        bool all_zero = true;
        Weight digit(lambda.rank());
        for (std::size_t i = 0; i < rest.rank(); ++i) {
            digit[i] = rest[i] % p;
            rest[i] /= p;
            if (rest[i] != 0) all_zero = false;
        }
        auto it = simple_table.restricted().find(digit);
        if (it == simple_table.restricted().end())
            throw std::invalid_argument("simple character table has no entry for digit " +
                                        digit.str());
        result = multiply(result, frobenius_twist(it->second, p, r));
        if (all_zero) break;
    }
    return result;
}

Character pim_character(const DecompositionTable& table, const PipelineConfig& cfg,
                        const Weight& lambda) {
    if (!cfg.rs().is_restricted(lambda, cfg.p()))
        throw std::invalid_argument("pim_character: " + lambda.str() + " is not p-restricted");
    auto row = table.a_rows().find(lambda);
    if (row == table.a_rows().end())
        throw std::invalid_argument("decomposition table has no row for " + lambda.str());
    Character q;
    for (const auto& [mu, mult] : row->second)
        q = add(q, scale(cfg.baby_verma(1, mu), mult));
    return q;
}

bool check_tmc(const DecompositionTable& table, const PipelineConfig& cfg,
               const TiltingDataset& dataset, const Weight& lambda) {
    const RootSystem& rs = cfg.rs();
    if (!rs.is_restricted(lambda, cfg.p()))
        throw std::invalid_argument("check_tmc: " + lambda.str() + " is not p-restricted");
    Weight wt = 2 * (cfg.p() - 1) * rs.rho() + rs.apply_w0(lambda);
    const Character& tilt = dataset.require(wt);
    return tilt == pim_character(table, cfg, lambda);
}

}  // namespace modchar
