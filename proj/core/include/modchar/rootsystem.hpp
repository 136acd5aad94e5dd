/* Cartan data and Weyl-group combinatorics for the simple, simply
   connected types A-G: weights, roots, dominance order, heights, and
   the distinguished elements rho, alpha_0, w_0, h. */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace modchar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<long long>;

// A weight of X(T) in the fundamental-weight basis: coords()[i] = <w, alpha_i^vee>.
// For simply connected G this basis spans the full weight lattice, so integer
// coordinate vectors are exactly the weights.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : c_(rank, 0) {}
    Weight(std::initializer_list<long long> xs) : c_(xs) {}
    explicit Weight(std::vector<long long> xs) : c_(std::move(xs)) {}

    std::size_t rank() const { return c_.size(); }
    long long operator[](std::size_t i) const { return c_[i]; }
    long long& operator[](std::size_t i) { return c_[i]; }
    const std::vector<long long>& coords() const { return c_; }

    bool operator==(const Weight& o) const { return c_ == o.c_; }
    bool operator!=(const Weight& o) const { return c_ != o.c_; }
    // lexicographic; gives Weight a total order usable as a map key
    bool operator<(const Weight& o) const { return c_ < o.c_; }

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a);
    friend Weight operator*(long long k, const Weight& a);

    std::string str() const;  // "[1,0,-2]"

private:
    std::vector<long long> c_;
};

long long pow_ll(long long base, int exp);
Int pow_int(const Int& base, unsigned exp);

// One positive root, stored in both bases.
struct PositiveRoot {
    Weight fund;                   // fundamental-weight coordinates
    std::vector<long long> root;   // simple-root coordinates (nonnegative integers)
    long long half_square;         // (beta,beta)/2 in the normalization (short,short)=2
};

class RootSystem {
public:
    // Valid pairs: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F 4, G 2.
    // D3 is rejected; use A3. Numbering of nodes follows Bourbaki.
    static RootSystem build(char type_letter, int rank);

    char type_letter() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const;  // "B3"

    // cartan()[i] = fundamental coordinates of the simple root alpha_i,
    // i.e. cartan()[i][j] = <alpha_i, alpha_j^vee>.
    const std::vector<Weight>& cartan() const { return cartan_; }
    const std::vector<long long>& simple_half_squares() const { return d_; }
    long long cartan_det() const { return det_; }
    std::vector<std::vector<Rational>> inverse_cartan() const;

    const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
    const Weight& rho() const { return rho_; }
    const Weight& highest_root() const { return highest_root_; }
    const Weight& alpha0() const { return alpha0_; }  // maximal short root
    long long coxeter_number() const { return h_; }

    bool is_dominant(const Weight& w) const;
    // all coordinates in [0, p^r - 1]
    bool is_restricted(const Weight& w, long long p, int r = 1) const;

    // coordinates of w in the simple-root basis, exact rationals
    std::vector<Rational> root_coords(const Weight& w) const;
    // same, scaled by cartan_det(): integer numerators over the common denominator
    std::vector<long long> root_coords_scaled(const Weight& w) const;
    // w lies in the nonnegative span of the simple roots
    bool in_root_lattice_nonneg(const Weight& w) const;
    // b - a is a nonnegative integer combination of simple roots
    bool dominance_leq(const Weight& a, const Weight& b) const;

    Rational height(const Weight& w) const;
    // cartan_det() * height(w); integer, monotone in height, cheap to compare
    long long height_scaled(const Weight& w) const;

    Weight simple_reflection(int i, const Weight& w) const;
    Weight apply_w0(const Weight& w) const;
    Weight dominant_conjugate(const Weight& w) const;
    std::set<Weight> weyl_orbit(const Weight& w) const;

    // <w, beta^vee> for a root beta given by root coordinates and half square length
    long long coroot_pairing(const Weight& w, const PositiveRoot& beta) const;
    // the W-invariant form (w, v) where v = sum v_root[j] alpha_j; integer for
    // v in the root lattice
    long long form_with_root_vector(const Weight& w, const std::vector<long long>& v_root) const;

    void check_weight(const Weight& w) const;  // throws on rank mismatch

private:
    RootSystem() = default;

    char type_ = 0;
    int rank_ = 0;
    std::vector<Weight> cartan_;        // row i = alpha_i
    std::vector<long long> d_;          // d_i = (alpha_i,alpha_i)/2
    long long det_ = 0;                 // det of the Cartan matrix (> 0)
    std::vector<std::vector<long long>> adjT_;  // adjugate of C^T: root_coords_scaled = adjT * v
    std::vector<PositiveRoot> positive_;
    Weight rho_;
    Weight highest_root_;
    Weight alpha0_;
    long long h_ = 0;
    std::vector<Weight> w0_cols_;       // column i = w0(omega_i)
};

}  // namespace modchar
