#include <modchar/weylchar.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace modchar {

namespace {

void require_dominant(const RootSystem& rs, const Weight& lambda, const char* who) {
    rs.check_weight(lambda);
    if (!rs.is_dominant(lambda))
        throw std::invalid_argument(std::string(who) + ": weight " + lambda.str() +
                                    " is not dominant");
}

// All dominant mu <= lambda in dominance order, together with lambda - mu in
// root coordinates. Walks the integer box 0 <= c <= root_coords(lambda).
struct DominantBelow {
    Weight mu;
    std::vector<long long> drop;  // root coords of lambda - mu
};

std::vector<DominantBelow> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
    int n = rs.rank();
    auto top = rs.root_coords_scaled(lambda);
    std::vector<long long> bound(n);
    for (int i = 0; i < n; ++i) bound[i] = top[i] / rs.cartan_det();  // floor; top[i] >= 0

    std::vector<DominantBelow> out;
    std::vector<long long> c(n, 0);
    Weight mu = lambda;
    // depth-first over the box, updating mu incrementally
    std::function<void(int)> walk = [&](int i) {
        if (i == n) {
            if (rs.is_dominant(mu)) out.push_back({mu, c});
            return;
        }
        walk(i + 1);
        const Weight& alpha = rs.cartan()[i];
        for (c[i] = 1; c[i] <= bound[i]; ++c[i]) {
            mu = mu - alpha;
            walk(i + 1);
        }
        mu = mu + bound[i] * alpha;
        c[i] = 0;
    };
    walk(0);
    return out;
}

}  // namespace

std::map<Weight, Int> dominant_weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "dominant_weight_multiplicities");
    auto below = dominant_weights_below(rs, lambda);
    // increasing ht(lambda - mu), so everything above mu is known when mu is reached
    std::sort(below.begin(), below.end(), [](const DominantBelow& a, const DominantBelow& b) {
        long long ha = 0, hb = 0;
        for (long long v : a.drop) ha += v;
        for (long long v : b.drop) hb += v;
        if (ha != hb) return ha < hb;
        return a.mu < b.mu;
    });

    std::map<Weight, Int> mult;
    for (const auto& entry : below) {
        const Weight& mu = entry.mu;
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        // Freudenthal: ((l+r,l+r)-(m+r,m+r)) m_mu = 2 sum_{b>0,k>=1} m_{mu+kb} (mu+kb, b)
        Int num = 0;
        for (const auto& beta : rs.positive_roots()) {
            long long pairing = rs.coroot_pairing(mu, beta);
            Weight nu = mu;
            for (long long k = 1;; ++k) {
                nu = nu + beta.fund;
                auto it = mult.find(rs.dominant_conjugate(nu));
                if (it == mult.end()) break;  // weights form unbroken root strings
                num += it->second * (beta.half_square * (pairing + 2 * k));
            }
        }
        // (lambda+mu+2rho, lambda-mu), via the root coordinates of the drop
        long long den = 0;
        for (int j = 0; j < rs.rank(); ++j)
            den += entry.drop[j] * rs.simple_half_squares()[j] * (lambda[j] + mu[j] + 2);
        if (den <= 0) throw std::logic_error("Freudenthal denominator must be positive");
        Int m = 2 * num;
        if (m % den != 0) throw std::logic_error("Freudenthal division is not exact");
        mult[mu] = m / den;
    }
    return mult;
}

Character weyl_character(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "weyl_character");
    auto dom = dominant_weight_multiplicities(rs, lambda);
    std::vector<Character::Term> terms;
    for (const auto& [mu, m] : dom)
        for (const auto& nu : rs.weyl_orbit(mu)) terms.push_back({nu, m});
    return Character::from_terms(std::move(terms));
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "weyl_dimension");
    Int num = 1, den = 1;
    const Weight shifted = lambda + rs.rho();
    for (const auto& beta : rs.positive_roots()) {
        num *= rs.coroot_pairing(shifted, beta);
        den *= rs.coroot_pairing(rs.rho(), beta);
    }
    if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
    return num / den;
}

namespace {

// sum over W of det(w) e(w(v)) for strictly dominant (regular) v
Character alternating_orbit_sum(const RootSystem& rs, const Weight& v) {
    std::map<Weight, int> sign{{v, 1}};
    std::deque<Weight> queue{v};
    while (!queue.empty()) {
        Weight x = queue.front();
        queue.pop_front();
        int s = sign[x];
        for (int i = 0; i < rs.rank(); ++i) {
            Weight y = rs.simple_reflection(i, x);
            if (sign.emplace(y, -s).second) queue.push_back(y);
        }
    }
    std::vector<Character::Term> terms;
    terms.reserve(sign.size());
    for (const auto& [w, s] : sign) terms.push_back({w, s});
    return Character::from_terms(std::move(terms));
}

}  // namespace

Character weyl_character_altsum(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "weyl_character_altsum");
    if (rs.rank() > 3)
        throw std::invalid_argument("weyl_character_altsum is limited to rank <= 3");
    Character numer = alternating_orbit_sum(rs, lambda + rs.rho());
    Character denom = alternating_orbit_sum(rs, rs.rho());
    // long division; the divisor has unique maximal term e(rho) with coefficient 1
    Character quotient, rem = numer;
    while (!rem.is_zero()) {
        Weight m = *max_weight(rs, rem);
        Int c = rem.coeff_at(m);
        Character piece = scale(Character::unit(m - rs.rho()), c);
        quotient = add(quotient, piece);
        rem = subtract(rem, multiply(piece, denom));
    }
    return quotient;
}

Character steinberg_character(const RootSystem& rs, long long p, int r) {
    if (p < 2) throw std::invalid_argument("steinberg_character needs p >= 2");
    if (r < 1) throw std::invalid_argument("steinberg_character needs r >= 1");
    return weyl_character(rs, (pow_ll(p, r) - 1) * rs.rho());
}

Character baby_verma_character(const RootSystem& rs, long long p, int r, const Weight& lambda) {
    rs.check_weight(lambda);
    Weight st = (pow_ll(p, r) - 1) * rs.rho();
    return translate(weyl_character(rs, st), lambda - st);
}

const Character& WeylCharacterCache::weyl(const Weight& lambda) {
    {
        std::shared_lock lock(mutex_);
        auto it = store_.find(lambda);
        if (it != store_.end()) return it->second;
    }
    Character value = weyl_character(*rs_, lambda);
    std::unique_lock lock(mutex_);
    return store_.emplace(lambda, std::move(value)).first->second;
}

const Character& WeylCharacterCache::steinberg(long long p, int r) {
    if (p < 2 || r < 1) throw std::invalid_argument("steinberg needs p >= 2, r >= 1");
    return weyl((pow_ll(p, r) - 1) * rs_->rho());
}

Character baby_verma_character(WeylCharacterCache& cache, long long p, int r,
                               const Weight& lambda) {
    Weight st = (pow_ll(p, r) - 1) * cache.rs().rho();
    return translate(cache.steinberg(p, r), lambda - st);
}

}  // namespace modchar
