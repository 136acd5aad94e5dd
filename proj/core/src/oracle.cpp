#include <modchar/oracle.hpp>

#include <stdexcept>

namespace modchar {

namespace {

// chi(n) for A1 in closed form
Character sl2_chi(long long n) {
    if (n < 0) throw std::invalid_argument("sl2 oracle: negative highest weight");
    std::vector<Character::Term> terms;
    for (long long k = n; k >= -n; k -= 2) terms.push_back({Weight{k}, 1});
    return Character::from_terms(std::move(terms));
}

void require_sl2_weight(const Weight& w) {
    if (w.rank() != 1) throw std::invalid_argument("sl2 oracle: weight must have rank 1");
}

// ch L(lambda) for dominant rank-1 lambda via base-p digits
Character sl2_simple(long long p, long long lambda) {
    if (lambda < 0) throw std::invalid_argument("sl2 oracle: weight must be dominant");
    Character out = Character::unit(Weight{0});
    long long rest = lambda;
    for (int r = 0; rest > 0 || r == 0; ++r) {
        long long digit = rest % p;
        rest /= p;
        out = multiply(out, frobenius_twist(sl2_chi(digit), p, r));
    }
    return out;
}

// ch L_1(xi) for arbitrary rank-1 xi: L_1(xi0 + p xi1) = L(xi0) e(p xi1)
Character sl2_g1t_simple(long long p, long long xi) {
    long long xi0 = xi % p;
    if (xi0 < 0) xi0 += p;
    long long xi1 = (xi - xi0) / p;
    return translate(sl2_simple(p, xi0), Weight{p * xi1});
}

}  // namespace

OracleResult sl2_simple_character(long long p, const Weight& lambda) {
    require_sl2_weight(lambda);
    if (p < 2) throw std::invalid_argument("sl2 oracle: p must be >= 2");
    return {sl2_simple(p, lambda[0]),
            "SL2 Steinberg tensor product of closed-form rank-1 Weyl characters"};
}

OracleResult sl2_baby_verma_decomposition(long long p, const Weight& mu) {
    require_sl2_weight(mu);
    if (p < 2) throw std::invalid_argument("sl2 oracle: p must be >= 2");
    // ch Z_1(mu) = chi(p-1) e(mu - (p-1))
    Character rem = translate(sl2_chi(p - 1), Weight{mu[0] - (p - 1)});
    DecompositionMap out;
    while (!rem.is_zero()) {
        // rank 1: maximal term is the last one in lex order
        const auto& top = rem.terms().back();
        if (top.coeff < 0)
            throw std::runtime_error("sl2 oracle inconsistency: negative multiplicity at " +
                                     top.weight.str());
        out.emplace(top.weight, top.coeff);
        rem = subtract(rem, scale(sl2_g1t_simple(p, top.weight[0]), top.coeff));
    }
    return {std::move(out), "greedy subtraction of SL2 simple G1T-characters"};
}

OracleResult decompose_into_weyl_characters(WeylCharacterCache& cache, const Character& x) {
    const RootSystem& rs = cache.rs();
    DecompositionMap out;
    Character rem = x;
    while (!rem.is_zero()) {
        Weight m = *max_weight(rs, rem);
        if (!rs.is_dominant(m))
            throw std::invalid_argument(
                "decompose_into_weyl_characters: input is not Weyl-invariant (maximal "
                "support weight " + m.str() + " is not dominant)");
        Int c = rem.coeff_at(m);
        out.emplace(m, c);
        rem = subtract(rem, scale(cache.weyl(m), c));
    }
    return {std::move(out), "greedy subtraction of Weyl characters at dominant maxima"};
}

}  // namespace modchar
