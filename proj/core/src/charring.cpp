#include <modchar/charring.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace modchar {

namespace {

void require_compatible(const Character& x, const Character& y) {
    if (!x.is_zero() && !y.is_zero() && x.rank() != y.rank())
        throw std::invalid_argument("character rank mismatch");
}

}  // namespace

Character Character::unit(const Weight& w) {
    return from_terms({Term{w, 1}});
}

Character Character::adopt_sorted(std::vector<Term> terms) {
    Character x;
    x.terms_ = std::move(terms);
    return x;
}

Character Character::from_terms(std::vector<Term> terms) {
    if (terms.empty()) return Character();
    for (const auto& t : terms)
        if (t.weight.rank() != terms.front().weight.rank())
            throw std::invalid_argument("character terms of mixed rank");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.weight < b.weight; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().weight == t.weight)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coeff == 0; }),
                 merged.end());
    return adopt_sorted(std::move(merged));
}

Int Character::coeff_at(const Weight& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Weight& v) { return t.weight < v; });
    if (it != terms_.end() && it->weight == w) return it->coeff;
    return 0;
}

Int Character::total_mass() const {
    Int m = 0;
    for (const auto& t : terms_) m += t.coeff;
    return m;
}

Character add(const Character& x, const Character& y) {
    require_compatible(x, y);
    std::vector<Character::Term> out;
    out.reserve(x.terms().size() + y.terms().size());
    auto a = x.terms().begin(), ae = x.terms().end();
    auto b = y.terms().begin(), be = y.terms().end();
    while (a != ae && b != be) {
        if (a->weight < b->weight) {
            out.push_back(*a++);
        } else if (b->weight < a->weight) {
            out.push_back(*b++);
        } else {
            Int c = a->coeff + b->coeff;
            if (c != 0) out.push_back({a->weight, std::move(c)});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return Character::adopt_sorted(std::move(out));
}

Character negate(const Character& x) {
    std::vector<Character::Term> out = x.terms();
    for (auto& t : out) t.coeff = -t.coeff;
    return Character::adopt_sorted(std::move(out));
}

Character subtract(const Character& x, const Character& y) {
    return add(x, negate(y));
}

Character scale(const Character& x, const Int& k) {
    if (k == 0) return Character();
    std::vector<Character::Term> out = x.terms();
    for (auto& t : out) t.coeff *= k;
    return Character::adopt_sorted(std::move(out));
}

Character multiply(const Character& x, const Character& y) {
    require_compatible(x, y);
    if (x.is_zero() || y.is_zero()) return Character();
    const Character& small = x.support_size() <= y.support_size() ? x : y;
    const Character& large = x.support_size() <= y.support_size() ? y : x;
    std::map<Weight, Int> acc;
    for (const auto& s : small.terms())
        for (const auto& t : large.terms()) acc[s.weight + t.weight] += s.coeff * t.coeff;
    std::vector<Character::Term> out;
    out.reserve(acc.size());
    for (auto& [w, c] : acc)
        if (c != 0) out.push_back({w, std::move(c)});
    return Character::from_terms(std::move(out));
}

Character translate(const Character& x, const Weight& mu) {
    if (x.is_zero()) return x;
    if (x.rank() != mu.rank()) throw std::invalid_argument("translation weight rank mismatch");
    std::vector<Character::Term> out = x.terms();
    for (auto& t : out) t.weight = t.weight + mu;  // lex order is shift-invariant
    return Character::adopt_sorted(std::move(out));
}

Character frobenius_twist(const Character& x, long long p, int r) {
    if (p < 2) throw std::invalid_argument("frobenius_twist needs p >= 2");
    if (r < 0) throw std::invalid_argument("frobenius_twist needs r >= 0");
    if (r == 0 || x.is_zero()) return x;
    long long q = pow_ll(p, r);
    std::vector<Character::Term> out = x.terms();
    for (auto& t : out) t.weight = q * t.weight;  // positive scaling keeps lex order
    return Character::adopt_sorted(std::move(out));
}

bool is_weyl_invariant(const RootSystem& rs, const Character& x) {
    for (const auto& t : x.terms())
        for (int i = 0; i < rs.rank(); ++i)
            if (x.coeff_at(rs.simple_reflection(i, t.weight)) != t.coeff) return false;
    return true;
}

std::optional<Weight> max_weight(const RootSystem& rs, const Character& x) {
    if (x.is_zero()) return std::nullopt;
    const Weight* best = nullptr;
    long long best_ht = 0;
    for (const auto& t : x.terms()) {
        long long ht = rs.height_scaled(t.weight);
        if (!best || ht > best_ht || (ht == best_ht && best->coords() < t.weight.coords())) {
            best = &t.weight;
            best_ht = ht;
        }
    }
    return *best;
}

std::vector<Character::Term> canonical_terms(const RootSystem& rs, const Character& x) {
    std::vector<std::pair<long long, const Character::Term*>> keyed;
    keyed.reserve(x.terms().size());
    for (const auto& t : x.terms()) keyed.emplace_back(rs.height_scaled(t.weight), &t);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return b.second->weight < a.second->weight;
    });
    std::vector<Character::Term> out;
    out.reserve(keyed.size());
    for (const auto& [ht, t] : keyed) out.push_back(*t);
    return out;
}

std::string pretty(const RootSystem& rs, const Character& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : canonical_terms(rs, x)) {
        if (!first) os << " + ";
        first = false;
        if (t.coeff == -1)
            os << '-';
        else if (t.coeff != 1)
            os << t.coeff.str();
        os << 'e' << t.weight.str();
    }
    return os.str();
}

}  // namespace modchar
