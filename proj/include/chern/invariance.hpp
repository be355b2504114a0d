#pragma once

#include "chern/chern_polynomial.hpp"
#include "chern/linalg.hpp"
#include "chern/manifolds.hpp"
#include "chern/partitions.hpp"
#include "chern/projbundle.hpp"
#include "chern/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chern {

/// Dual vector to ChernVector: a linear combination of Chern numbers in
/// dimension n, one coefficient per partition of n in canonical order.
struct Functional {
    int dim = 0;
    RationalVector coeffs;

    Functional() = default;
    Functional(int n, RationalVector c) : dim(n), coeffs(std::move(c)) {
        if (coeffs.size() != partition_count(dim))
            throw std::domain_error("Functional: expected one coefficient per partition");
    }

    /// Coordinate functional of a single Chern monomial c_I.
    static Functional coordinate(const Partition& I, int n) {
        RationalVector c(partition_count(n), Rational(0));
        c[index_of(I, n)] = 1;
        return Functional(n, std::move(c));
    }

    /// Coefficient vector of a homogeneous weight-n polynomial.
    static Functional from_polynomial(const ChernPolynomial& p, int n) {
        RationalVector c(partition_count(n), Rational(0));
        for (const auto& [k, v] : p.terms()) {
            if (weight(k) != n)
                throw std::domain_error("Functional: polynomial not homogeneous of weight n");
            c[index_of(k, n)] = v;
        }
        return Functional(n, std::move(c));
    }

    Rational apply(const ChernVector& v) const {
        if (v.dim != dim) throw std::domain_error("Functional: dimension mismatch");
        Rational acc(0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            acc += coeffs[i] * v.values[i];
        return acc;
    }

    friend bool operator==(const Functional& a, const Functional& b) {
        return a.dim == b.dim && a.coeffs == b.coeffs;
    }
};

/// Two Chern vectors of equal dimension carried by diffeomorphic manifolds.
struct ExamplePair {
    std::string label;
    ChernVector left;
    ChernVector right;
    std::string provenance;

    ExamplePair() = default;
    ExamplePair(std::string lbl, ChernVector l, ChernVector r,
                std::string prov = {})
        : label(std::move(lbl)), left(std::move(l)), right(std::move(r)),
          provenance(std::move(prov)) {
        if (left.dim != right.dim)
            throw std::domain_error("ExamplePair: dimensions differ");
    }
};

/// right - left, entrywise, in canonical partition order.
inline RationalVector difference(const ExamplePair& p) {
    RationalVector d(p.left.values.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = p.right.values[i] - p.left.values[i];
    return d;
}

/// Canonical (RREF) basis of the functionals vanishing on every given vector.
inline std::vector<Functional> annihilator(const std::vector<RationalVector>& vs,
                                           int n) {
    std::size_t cols = partition_count(n);
    for (const auto& v : vs)
        if (v.size() != cols)
            throw std::domain_error("annihilator: vector length != p(n)");
    auto basis = linalg::nullspace(RationalMatrix(vs.begin(), vs.end()), cols);
    std::vector<Functional> out;
    for (auto& b : basis) out.emplace_back(n, std::move(b));
    return out;
}

inline bool span_contains(const std::vector<Functional>& basis,
                          const Functional& f) {
    RationalMatrix m;
    for (const auto& b : basis) {
        if (b.dim != f.dim)
            throw std::domain_error("span_contains: dimension mismatch");
        m.push_back(b.coeffs);
    }
    return linalg::in_span(m, f.coeffs);
}

inline bool spans_equal(const std::vector<Functional>& a,
                        const std::vector<Functional>& b) {
    RationalMatrix ma, mb;
    for (const auto& x : a) ma.push_back(x.coeffs);
    for (const auto& x : b) mb.push_back(x.coeffs);
    return linalg::spans_equal(ma, mb);
}

struct TheoremReport {
    std::string theorem;
    std::string inputs;
    std::vector<RationalVector> difference_vectors;
    std::vector<Functional> annihilator_basis;
    std::vector<Functional> expected_basis;
    std::vector<std::pair<std::string, bool>> checks;
    bool pass = false;

    void add(std::string name, bool ok) {
        checks.emplace_back(std::move(name), ok);
    }
    void finish() {
        pass = true;
        for (const auto& [_, ok] : checks) pass = pass && ok;
    }
};

/// The two 3-fold example pairs attached to a surface seed: products with CP^1
/// and the ruled pair P(O(K)+O) / P(T fake_partner).
inline std::vector<ExamplePair> threefold_pairs(const SurfaceData& x) {
    SurfaceData y = fake_partner(x);
    return {
        ExamplePair("Z/T", times_cp1(x.chern_vector()),
                    times_cp1(y.chern_vector()),
                    "products with CP^1 of an orientation-reversing homeomorphic surface pair"),
        ExamplePair("N/M", ruled_canonical(x), ruled_tangent(y),
                    "ruled 3-folds over the same surface pair"),
    };
}

/// In dimension 3 the invariant combinations cut out by the example pairs are
/// exactly the multiples of c3.
inline TheoremReport verify_3fold_theorem(const SurfaceData& x) {
    if (signature(x) == 0)
        throw std::domain_error("verify_3fold_theorem: seed must have nonzero signature");
    TheoremReport r;
    r.theorem = "threefolds";
    r.inputs = "surface seed (" + std::to_string(x.c1_sq) + "," +
               std::to_string(x.c2) + ")";
    auto pairs = threefold_pairs(x);
    for (const auto& p : pairs) r.difference_vectors.push_back(difference(p));

    r.annihilator_basis = annihilator(r.difference_vectors, 3);
    r.expected_basis = {Functional::coordinate({3}, 3)};
    r.add("annihilator equals span{c3}",
          spans_equal(r.annihilator_basis, r.expected_basis));

    // The product pair alone leaves the plane span{c3, 3c1c2 - c1^3}.
    auto partial = annihilator({r.difference_vectors[0]}, 3);
    std::vector<Functional> plane = {
        Functional::coordinate({3}, 3),
        Functional(3, {Rational(0), Rational(3), Rational(-1)})};
    r.add("product pair leaves span{c3, 3c1c2 - c1^3}",
          spans_equal(partial, plane));
    r.finish();
    return r;
}

/// In dimension 4 the lifted differences follow the pattern (0,2a,4a,4a+2b,8b)
/// and the annihilator is span{c4, p1^2, p2}.
inline TheoremReport verify_4fold_theorem(const SurfaceData& x) {
    if (signature(x) == 0)
        throw std::domain_error("verify_4fold_theorem: seed must have nonzero signature");
    TheoremReport r;
    r.theorem = "fourfolds";
    r.inputs = "surface seed (" + std::to_string(x.c1_sq) + "," +
               std::to_string(x.c2) + ")";
    auto pairs3 = threefold_pairs(x);
    for (const auto& p : pairs3) {
        ExamplePair lifted(p.label + " x CP^1", times_cp1(p.left),
                           times_cp1(p.right), p.provenance);
        auto d4 = difference(lifted);
        auto d3 = difference(p);
        // (c4,c1c3,c2^2,c1^2c2,c1^4) difference from a 3-fold difference (0,a,b)
        Rational a = d3[1], b = d3[2];
        bool pattern = d3[0] == 0 && d4[0] == 0 && d4[1] == 2 * a &&
                       d4[2] == 4 * a && d4[3] == 4 * a + 2 * b && d4[4] == 8 * b;
        r.add("pattern (0,2a,4a,4a+2b,8b) for " + lifted.label, pattern);
        r.difference_vectors.push_back(std::move(d4));
    }

    r.annihilator_basis = annihilator(r.difference_vectors, 4);
    r.expected_basis = {
        Functional::coordinate({4}, 4),
        Functional::from_polynomial(pontryagin_number_functional({1, 1}, 4), 4),
        Functional::from_polynomial(pontryagin_number_functional({2}, 4), 4)};
    r.add("annihilator dimension 3", r.annihilator_basis.size() == 3);
    r.add("annihilator equals span{c4, p1^2, p2}",
          spans_equal(r.annihilator_basis, r.expected_basis));
    r.finish();
    return r;
}

struct UniversalCoefficients {
    Partition I;
    Rational alpha;  // coefficient of c1^2 of the seed surface
    Rational beta;   // coefficient of c2 of the seed surface
};

/// For each partition I of n, the universal coefficients (alpha_I, beta_I)
/// with c_I(X x (CP^1)^{n-2}) = alpha_I c1^2(X) + beta_I c2(X), extracted by
/// stabilizing the two formal basis surfaces.
inline std::vector<UniversalCoefficients> universal_coefficients(int n) {
    if (n < 3) throw std::domain_error("universal_coefficients: need n >= 3");
    ChernVector e_c1sq(2, {Rational(0), Rational(1)});  // (c2, c1^2) = (0, 1)
    ChernVector e_c2(2, {Rational(1), Rational(0)});
    auto sa = stabilize(e_c1sq, n - 2);
    auto sb = stabilize(e_c2, n - 2);
    std::vector<UniversalCoefficients> out;
    auto parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        out.push_back({parts[i], sa.values[i], sb.values[i]});
    return out;
}

/// Every Chern number except the Euler number separates the stabilized pair:
/// c_n sees only c2 (with coefficient 2^{n-2}), c1^n sees only c1^2, and every
/// other c_I has strictly positive coefficients on both.
inline TheoremReport verify_higher(int n) {
    TheoremReport r;
    r.theorem = "higher";
    r.inputs = "n = " + std::to_string(n);
    Partition top{n};
    Partition ones(static_cast<std::size_t>(n), 1);
    Rational two_pow(1);
    for (int i = 0; i < n - 2; ++i) two_pow *= 2;
    for (const auto& uc : universal_coefficients(n)) {
        bool ok;
        if (uc.I == top)
            ok = uc.alpha == 0 && uc.beta == two_pow;
        else if (uc.I == ones)
            ok = uc.alpha > 0 && uc.beta == 0;
        else
            ok = uc.alpha > 0 && uc.beta > 0;
        r.add(monomial_name(uc.I) + " -> (" + to_string(uc.alpha) + ")*c1^2 + (" +
                  to_string(uc.beta) + ")*c2",
              ok);
    }
    r.finish();
    return r;
}

}  // namespace chern
