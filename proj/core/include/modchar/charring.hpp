/* Exact sparse arithmetic in the group ring Z[X(T)]: formal integer
   combinations of weights with convolution product. */
#pragma once

#include <modchar/rootsystem.hpp>

#include <optional>
#include <string>
#include <vector>

namespace modchar {

// Finite formal sum of weights with nonzero arbitrary-precision integer
// coefficients. Terms are kept sorted by weight (lex increasing) with no
// explicit zeros; the zero element is the empty sum. Values are immutable
// once built, so sharing across threads is safe.
class Character {
public:
    struct Term {
        Weight weight;
        Int coeff;
        bool operator==(const Term& o) const { return weight == o.weight && coeff == o.coeff; }
    };

    Character() = default;
    static Character unit(const Weight& w);  // e(w)
    // merges duplicate weights, drops zero coefficients
    static Character from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    // zero rank means "empty"; all nonempty operands of a binary op must agree
    std::size_t rank() const { return terms_.empty() ? 0 : terms_.front().weight.rank(); }

    Int coeff_at(const Weight& w) const;
    Int total_mass() const;

    bool operator==(const Character& o) const { return terms_ == o.terms_; }
    bool operator!=(const Character& o) const { return !(*this == o); }

private:
    // input already lex-sorted, merged, zero-free
    static Character adopt_sorted(std::vector<Term> terms);
    friend Character add(const Character&, const Character&);
    friend Character negate(const Character&);
    friend Character scale(const Character&, const Int&);
    friend Character translate(const Character&, const Weight&);
    friend Character frobenius_twist(const Character&, long long, int);

    std::vector<Term> terms_;
};

Character add(const Character& x, const Character& y);
Character subtract(const Character& x, const Character& y);
Character negate(const Character& x);
Character scale(const Character& x, const Int& k);
// convolution: coefficient at nu is sum over mu of x(mu) * y(nu - mu)
Character multiply(const Character& x, const Character& y);
// every term shifted by mu; equals multiply(x, e(mu))
Character translate(const Character& x, const Weight& mu);
// each term weight scaled by p^r, coefficients unchanged
Character frobenius_twist(const Character& x, long long p, int r);

// coefficients constant along every simple reflection of the support
bool is_weyl_invariant(const RootSystem& rs, const Character& x);
// support weight of maximal height, ties broken lexicographically largest
// first; empty for the zero character. The result is dominance-maximal.
std::optional<Weight> max_weight(const RootSystem& rs, const Character& x);

// presentation order: height descending, then lexicographically descending
std::vector<Character::Term> canonical_terms(const RootSystem& rs, const Character& x);
// "e[3] + 2e[1] + 2e[-1] + e[-3]", canonical order; "0" for the zero element
std::string pretty(const RootSystem& rs, const Character& x);

}  // namespace modchar
