#include <modchar/rootsystem.hpp>

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modchar {

Weight operator+(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("weight rank mismatch in addition");
    Weight r = a;
    for (std::size_t i = 0; i < r.rank(); ++i) r[i] += b[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("weight rank mismatch in subtraction");
    Weight r = a;
    for (std::size_t i = 0; i < r.rank(); ++i) r[i] -= b[i];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r = a;
    for (std::size_t i = 0; i < r.rank(); ++i) r[i] = -r[i];
    return r;
}

Weight operator*(long long k, const Weight& a) {
    Weight r = a;
    for (std::size_t i = 0; i < r.rank(); ++i) r[i] *= k;
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ']';
    return os.str();
}

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Int pow_int(const Int& base, unsigned exp) {
    Int r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

namespace {

using Matrix = std::vector<std::vector<long long>>;

// determinant by cofactor expansion; rank <= 8 so cost is irrelevant
long long det_ll(const Matrix& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(n - 1, std::vector<long long>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        long long term = m[0][j] * det_ll(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

// adjugate: adj(m) * m = det(m) * I
Matrix adjugate(const Matrix& m) {
    std::size_t n = m.size();
    Matrix adj(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix minor(n - 1, std::vector<long long>(n - 1));
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;  // adj = transpose of cofactor matrix
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            long long cof = det_ll(minor);
            adj[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

struct CartanData {
    Matrix c;
    std::vector<long long> d;
};

CartanData cartan_table(char type, int n) {
    auto chain = [](int n) {
        Matrix c(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) {
            c[i][i] = 2;
            if (i + 1 < n) { c[i][i + 1] = -1; c[i + 1][i] = -1; }
        }
        return c;
    };
    auto reject = [&](const std::string& why) -> CartanData {
        throw std::invalid_argument("invalid type/rank pair " + std::string(1, type) +
                                    std::to_string(n) + ": " + why);
    };
    switch (type) {
        case 'A': {
            if (n < 1) return reject("type A needs rank >= 1");
            return {chain(n), std::vector<long long>(n, 1)};
        }
        case 'B': {
            if (n < 2) return reject("type B needs rank >= 2");
            Matrix c = chain(n);
            c[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
            std::vector<long long> d(n, 2);
            d[n - 1] = 1;
            return {c, d};
        }
        case 'C': {
            if (n < 2) return reject("type C needs rank >= 2");
            Matrix c = chain(n);
            c[n - 1][n - 2] = -2;  // alpha_n long
            std::vector<long long> d(n, 1);
            d[n - 1] = 2;
            return {c, d};
        }
        case 'D': {
            if (n == 3) return reject("D3 is isomorphic to A3; use A3");
            if (n < 4) return reject("type D needs rank >= 4");
            Matrix c = chain(n - 1);
            for (auto& row : c) row.resize(n, 0);
            c.emplace_back(n, 0);
            c[n - 1][n - 1] = 2;
            c[n - 3][n - 1] = -1;  // fork: alpha_n attached to alpha_{n-2}
            c[n - 1][n - 3] = -1;
            return {c, std::vector<long long>(n, 1)};
        }
        case 'E': {
            if (n < 6 || n > 8) return reject("type E needs rank 6, 7 or 8");
            Matrix c(n, std::vector<long long>(n, 0));
            for (int i = 0; i < n; ++i) c[i][i] = 2;
            std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            if (n >= 7) edges.push_back({6, 7});
            if (n == 8) edges.push_back({7, 8});
            for (auto [a, b] : edges) {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            }
            return {c, std::vector<long long>(n, 1)};
        }
        case 'F': {
            if (n != 4) return reject("type F needs rank 4");
            Matrix c = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
            return {c, {2, 2, 1, 1}};
        }
        case 'G': {
            if (n != 2) return reject("type G needs rank 2");
            Matrix c = {{2, -1}, {-3, 2}};
            return {c, {1, 3}};
        }
        default:
            return reject("type letter must be one of A,B,C,D,E,F,G");
    }
}

}  // namespace

RootSystem RootSystem::build(char type_letter, int rank) {
    CartanData cd = cartan_table(type_letter, rank);

    RootSystem rs;
    rs.type_ = type_letter;
    rs.rank_ = rank;
    rs.d_ = cd.d;
    rs.cartan_.reserve(rank);
    for (int i = 0; i < rank; ++i) rs.cartan_.emplace_back(cd.c[i]);

    // the symmetrization D*C must come out symmetric; guards the tables above
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (cd.c[i][j] * cd.d[j] != cd.c[j][i] * cd.d[i])
                throw std::logic_error("Cartan matrix fails symmetrizability check");

    Matrix ct(rank, std::vector<long long>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) ct[i][j] = cd.c[j][i];
    rs.det_ = det_ll(ct);
    if (rs.det_ <= 0) throw std::logic_error("Cartan determinant must be positive");
    rs.adjT_ = adjugate(ct);

    rs.rho_ = Weight(std::vector<long long>(rank, 1));

    // all roots = closure of the simple roots under simple reflections
    std::set<Weight> roots(rs.cartan_.begin(), rs.cartan_.end());
    std::deque<Weight> queue(rs.cartan_.begin(), rs.cartan_.end());
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank; ++i) {
            Weight s = rs.simple_reflection(i, w);
            if (roots.insert(s).second) queue.push_back(s);
        }
    }
    for (const auto& beta : roots) {
        auto scaled = rs.root_coords_scaled(beta);
        bool nonneg = true;
        std::vector<long long> rc(rank);
        for (int j = 0; j < rank; ++j) {
            if (scaled[j] % rs.det_ != 0) throw std::logic_error("root outside the root lattice");
            rc[j] = scaled[j] / rs.det_;
            if (rc[j] < 0) nonneg = false;
        }
        if (!nonneg) continue;
        long long hs2 = rs.form_with_root_vector(beta, rc);
        if (hs2 % 2 != 0 || hs2 <= 0) throw std::logic_error("bad root length");
        rs.positive_.push_back(PositiveRoot{beta, rc, hs2 / 2});
    }
    std::sort(rs.positive_.begin(), rs.positive_.end(),
              [&](const PositiveRoot& a, const PositiveRoot& b) {
                  long long ha = std::accumulate(a.root.begin(), a.root.end(), 0LL);
                  long long hb = std::accumulate(b.root.begin(), b.root.end(), 0LL);
                  if (ha != hb) return ha < hb;
                  return a.fund < b.fund;
              });

    // highest root: the unique dominant root of maximal height
    long long best_ht = -1;
    for (const auto& beta : rs.positive_) {
        long long ht = std::accumulate(beta.root.begin(), beta.root.end(), 0LL);
        if (ht > best_ht) {
            best_ht = ht;
            rs.highest_root_ = beta.fund;
        }
    }
    rs.h_ = best_ht + 1;
    if (2 * static_cast<long long>(rs.positive_.size()) != static_cast<long long>(rank) * rs.h_)
        throw std::logic_error("positive root count disagrees with rank*h/2");

    // maximal short root: the dominant root of minimal length
    bool found = false;
    for (const auto& beta : rs.positive_) {
        if (beta.half_square != 1) continue;
        if (rs.is_dominant(beta.fund)) {
            if (found) throw std::logic_error("short dominant root is not unique");
            rs.alpha0_ = beta.fund;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no short dominant root found");

    // w0 on the basis: each fundamental weight sent to the antidominant
    // representative of its orbit
    rs.w0_cols_.reserve(rank);
    for (int i = 0; i < rank; ++i) {
        Weight w(static_cast<std::size_t>(rank));
        w[i] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int j = 0; j < rank; ++j) {
                if (w[j] > 0) {
                    w = rs.simple_reflection(j, w);
                    changed = true;
                }
            }
        }
        rs.w0_cols_.push_back(w);
    }
    for (int i = 0; i < rank; ++i) {
        Weight w(static_cast<std::size_t>(rank));
        w[i] = 1;
        if (rs.apply_w0(rs.apply_w0(w)) != w)
            throw std::logic_error("w0 is not an involution");
    }

    return rs;
}

std::string RootSystem::name() const {
    return std::string(1, type_) + std::to_string(rank_);
}

std::vector<std::vector<Rational>> RootSystem::inverse_cartan() const {
    // adjT_ is adj(C^T); (C^-1)_{ij} = adj(C)_{ij}/det = adjT_{ji}/det
    std::vector<std::vector<Rational>> inv(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) inv[i][j] = Rational(adjT_[j][i], det_);
    return inv;
}

void RootSystem::check_weight(const Weight& w) const {
    if (static_cast<int>(w.rank()) != rank_)
        throw std::invalid_argument("weight " + w.str() + " has rank " +
                                    std::to_string(w.rank()) + ", expected " +
                                    std::to_string(rank_));
}

bool RootSystem::is_dominant(const Weight& w) const {
    check_weight(w);
    for (int i = 0; i < rank_; ++i)
        if (w[i] < 0) return false;
    return true;
}

bool RootSystem::is_restricted(const Weight& w, long long p, int r) const {
    check_weight(w);
    long long bound = pow_ll(p, r) - 1;
    for (int i = 0; i < rank_; ++i)
        if (w[i] < 0 || w[i] > bound) return false;
    return true;
}

std::vector<long long> RootSystem::root_coords_scaled(const Weight& w) const {
    check_weight(w);
    std::vector<long long> x(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) x[i] += adjT_[i][j] * w[j];
    return x;
}

std::vector<Rational> RootSystem::root_coords(const Weight& w) const {
    auto scaled = root_coords_scaled(w);
    std::vector<Rational> x(rank_);
    for (int i = 0; i < rank_; ++i) x[i] = Rational(scaled[i], det_);
    return x;
}

bool RootSystem::in_root_lattice_nonneg(const Weight& w) const {
    auto scaled = root_coords_scaled(w);
    for (long long v : scaled)
        if (v < 0 || v % det_ != 0) return false;
    return true;
}

bool RootSystem::dominance_leq(const Weight& a, const Weight& b) const {
    return in_root_lattice_nonneg(b - a);
}

Rational RootSystem::height(const Weight& w) const {
    return Rational(height_scaled(w), det_);
}

long long RootSystem::height_scaled(const Weight& w) const {
    auto scaled = root_coords_scaled(w);
    return std::accumulate(scaled.begin(), scaled.end(), 0LL);
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
    check_weight(w);
    Weight r = w;
    long long c = w[i];
    if (c != 0)
        for (int j = 0; j < rank_; ++j) r[j] -= c * cartan_[i][j];
    return r;
}

Weight RootSystem::apply_w0(const Weight& w) const {
    check_weight(w);
    Weight r(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        if (w[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) r[j] += w[i] * w0_cols_[i][j];
    }
    return r;
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
    check_weight(w);
    Weight v = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank_; ++i) {
            if (v[i] < 0) {
                v = simple_reflection(i, v);
                changed = true;
            }
        }
    }
    return v;
}

std::set<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    check_weight(w);
    std::set<Weight> orbit{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight x = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            Weight y = simple_reflection(i, x);
            if (orbit.insert(y).second) queue.push_back(y);
        }
    }
    return orbit;
}

long long RootSystem::coroot_pairing(const Weight& w, const PositiveRoot& beta) const {
    long long num = form_with_root_vector(w, beta.root);
    if (num % beta.half_square != 0) throw std::logic_error("non-integral coroot pairing");
    return num / beta.half_square;
}

long long RootSystem::form_with_root_vector(const Weight& w,
                                            const std::vector<long long>& v_root) const {
    check_weight(w);
    // (w, sum_j v_j alpha_j) = sum_j v_j d_j <w, alpha_j^vee>
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += v_root[j] * d_[j] * w[j];
    return s;
}

}  // namespace modchar
