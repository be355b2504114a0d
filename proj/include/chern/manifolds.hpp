#pragma once

#include "chern/chern_polynomial.hpp"
#include "chern/partitions.hpp"
#include "chern/rational.hpp"

#include <stdexcept>
#include <vector>

namespace chern {

/// A complex surface identified with its pair of Chern numbers. The signature
/// (c1_sq - 2 c2)/3 must be an integer.
struct SurfaceData {
    long long c1_sq = 0;
    long long c2 = 0;

    SurfaceData() = default;
    SurfaceData(long long c1_squared, long long euler)
        : c1_sq(c1_squared), c2(euler) {
        if ((c1_sq - 2 * c2) % 3 != 0)
            throw std::domain_error(
                "SurfaceData: c1^2 - 2e must be divisible by 3");
    }

    ChernVector chern_vector() const {
        // partitions of 2 in canonical order: (2), (1,1)
        return ChernVector(2, {Rational(c2), Rational(c1_sq)});
    }

    friend bool operator==(const SurfaceData& a, const SurfaceData& b) {
        return a.c1_sq == b.c1_sq && a.c2 == b.c2;
    }
};

inline long long signature(const SurfaceData& x) {
    return (x.c1_sq - 2 * x.c2) / 3;
}

/// The orientation-reversed homeomorphic partner: same Euler number, signature
/// of opposite sign, so c1^2 becomes 4e - c1^2. Involutive.
inline SurfaceData fake_partner(const SurfaceData& x) {
    return SurfaceData(4 * x.c2 - x.c1_sq, x.c2);
}

/// Chern vector of CP^n: c_I = prod_{i in I} binomial(n+1, i).
inline ChernVector cp(int n) {
    if (n < 1) throw std::domain_error("cp: n must be positive");
    auto binom = [](int a, int b) {
        Integer r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return Rational(r);
    };
    std::vector<Rational> vals;
    for (const auto& part : partitions_of(n)) {
        Rational v(1);
        for (int i : part) v *= binom(n + 1, i);
        vals.push_back(v);
    }
    return ChernVector(n, std::move(vals));
}

/// Chern numbers of A x B via the Kuenneth expansion of the Whitney sum
/// formula: c_k(AxB) = sum_{i+j=k} c_i(A) c_j(B), evaluated against the
/// product fundamental class. Bilinear in (a, b).
inline ChernVector product(const ChernVector& a, const ChernVector& b) {
    int n = a.dim + b.dim;
    auto parts_n = partitions_of(n);
    std::vector<Rational> vals;
    vals.reserve(parts_n.size());
    for (const auto& I : parts_n) {
        Rational total(0);
        // Assign each part r of I a split (i, r-i); keep assignments whose
        // A-weight is exactly dim(a).
        struct Frame {};
        std::vector<int> splits(I.size(), 0);
        // iterative product over split choices
        auto rec = [&](auto&& self, std::size_t pos, int wa, Partition& ia,
                       Partition& ib) -> void {
            if (wa > a.dim) return;
            if (pos == I.size()) {
                if (wa != a.dim) return;
                Partition sa = ia, sb = ib;
                std::sort(sa.begin(), sa.end(), std::greater<int>());
                std::sort(sb.begin(), sb.end(), std::greater<int>());
                total += a.at(sa) * b.at(sb);
                return;
            }
            int r = I[pos];
            for (int i = 0; i <= r; ++i) {
                if (i > 0) ia.push_back(i);
                if (r - i > 0) ib.push_back(r - i);
                self(self, pos + 1, wa + i, ia, ib);
                if (i > 0) ia.pop_back();
                if (r - i > 0) ib.pop_back();
            }
        };
        Partition ia, ib;
        rec(rec, 0, 0, ia, ib);
        vals.push_back(total);
    }
    return ChernVector(n, std::move(vals));
}

/// Closed form for A x CP^1: each Chern number is twice the sum over positions
/// j of the Chern number of A with index r_j lowered by one. Lowering an index
/// 1 deletes the factor; indices above dim(A) read as 0.
inline ChernVector times_cp1(const ChernVector& a) {
    int n = a.dim + 1;
    auto parts_n = partitions_of(n);
    std::vector<Rational> vals;
    vals.reserve(parts_n.size());
    for (const auto& I : parts_n) {
        Rational sum(0);
        for (std::size_t j = 0; j < I.size(); ++j) {
            Partition lowered;
            bool dead = false;
            for (std::size_t i = 0; i < I.size(); ++i) {
                int r = I[i] - (i == j ? 1 : 0);
                if (r == 0) continue;
                if (r > a.dim) {
                    dead = true;
                    break;
                }
                lowered.push_back(r);
            }
            if (dead) continue;
            std::sort(lowered.begin(), lowered.end(), std::greater<int>());
            sum += a.at(lowered);
        }
        vals.push_back(2 * sum);
    }
    return ChernVector(n, std::move(vals));
}

/// k-fold application of times_cp1.
inline ChernVector stabilize(ChernVector a, int k) {
    if (k < 0) throw std::domain_error("stabilize: k must be non-negative");
    for (int i = 0; i < k; ++i) a = times_cp1(a);
    return a;
}

/// Hodge numbers h^{p,q} of an n-fold, with the Kaehler symmetries enforced.
struct HodgeDiamond {
    int n = 0;
    std::vector<std::vector<long long>> h;  // (n+1) x (n+1)

    HodgeDiamond() = default;
    HodgeDiamond(int dim, std::vector<std::vector<long long>> grid)
        : n(dim), h(std::move(grid)) {
        validate();
    }

    /// The diamond of CP^n: h^{p,p} = 1, all else 0.
    static HodgeDiamond projective_space(int dim) {
        std::vector<std::vector<long long>> g(
            dim + 1, std::vector<long long>(dim + 1, 0));
        for (int p = 0; p <= dim; ++p) g[p][p] = 1;
        return HodgeDiamond(dim, std::move(g));
    }

    void validate() const {
        if (n < 0 || h.size() != static_cast<std::size_t>(n + 1))
            throw std::domain_error("HodgeDiamond: grid must be (n+1)x(n+1)");
        for (const auto& row : h)
            if (row.size() != static_cast<std::size_t>(n + 1))
                throw std::domain_error("HodgeDiamond: grid must be (n+1)x(n+1)");
        if (h[0][0] != 1 || h[n][n] != 1)
            throw std::domain_error("HodgeDiamond: h^{0,0} and h^{n,n} must be 1");
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                if (h[p][q] < 0)
                    throw std::domain_error("HodgeDiamond: negative entry");
                if (h[p][q] != h[q][p])
                    throw std::domain_error("HodgeDiamond: h^{p,q} != h^{q,p}");
                if (h[p][q] != h[n - p][n - q])
                    throw std::domain_error(
                        "HodgeDiamond: h^{p,q} != h^{n-p,n-q}");
            }
    }
};

/// chi_p = sum_q (-1)^q h^{p,q}.
inline long long chi_p_from_hodge(const HodgeDiamond& d, int p) {
    if (p < 0 || p > d.n)
        throw std::domain_error("chi_p_from_hodge: p out of range");
    long long acc = 0;
    for (int q = 0; q <= d.n; ++q)
        acc += (q % 2 == 0 ? 1 : -1) * d.h[p][q];
    return acc;
}

/// Geography checks for manifolds with ample canonical bundle.
struct YauReport {
    int dim = 0;
    // dim 3: c1^3 < 0 and c1^3 >= (8/3) c1c2
    // dim 4: 0 < c1^4, c1^4 <= (5/2) c1^2c2, c1^4 <= (5/3)(4 c1^2c2 - c1^4)
    std::vector<bool> checks;
    bool all() const {
        for (bool b : checks)
            if (!b) return false;
        return true;
    }
};

inline YauReport yau_validate(const ChernVector& v) {
    YauReport r;
    r.dim = v.dim;
    if (v.dim == 3) {
        Rational c13 = v.at({1, 1, 1});
        Rational c1c2 = v.at({2, 1});
        r.checks = {c13 < 0, 3 * c13 >= 8 * c1c2};
    } else if (v.dim == 4) {
        Rational c14 = v.at({1, 1, 1, 1});
        Rational c12c2 = v.at({2, 1, 1});
        r.checks = {c14 > 0, 2 * c14 <= 5 * c12c2,
                    3 * c14 <= 5 * (4 * c12c2 - c14)};
    } else {
        throw std::domain_error("yau_validate: dimension must be 3 or 4");
    }
    return r;
}

}  // namespace chern
