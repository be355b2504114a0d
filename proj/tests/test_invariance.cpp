#include "chern/invariance.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace chern;

namespace {

// Independent kernel oracle: plain rational Gauss-Jordan with a different
// pivoting rule (largest absolute value in the column) and no fraction-free
// step. Returns an arbitrary (non-canonical) spanning set of the nullspace.
RationalMatrix naive_kernel(RationalMatrix m, std::size_t cols) {
    std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t i = row; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            if (best == rows || abs(m[i][col]) > abs(m[best][col])) best = i;
        }
        if (best == rows) continue;
        std::swap(m[best], m[row]);
        Rational p = m[row][col];
        for (std::size_t j = 0; j < cols; ++j) m[row][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    RationalMatrix basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        RationalVector v(cols, Rational(0));
        v[j] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -m[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

TEST_CASE("difference vectors") {
    ChernVector z(3, {Rational(6), Rational(24), Rational(54)});
    ChernVector t(3, {Rational(6), Rational(12), Rational(18)});
    CHECK(difference({"Z/T", z, t}) ==
          RationalVector{Rational(0), Rational(-12), Rational(-36)});
    ChernVector n(3, {Rational(6), Rational(24), Rational(72)});
    ChernVector m(3, {Rational(6), Rational(12), Rational(0)});
    CHECK(difference({"N/M", n, m}) ==
          RationalVector{Rational(0), Rational(-12), Rational(-72)});
    CHECK(difference({"same", z, z}) ==
          RationalVector(3, Rational(0)));
    CHECK_THROWS_AS(ExamplePair("bad", z, cp(2)), std::domain_error);
}

TEST_CASE("annihilator of the desk 3-fold differences is span{c3}") {
    std::vector<RationalVector> vs = {
        {Rational(0), Rational(-12), Rational(-36)},
        {Rational(0), Rational(-12), Rational(-72)}};
    auto basis = annihilator(vs, 3);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Functional::coordinate({3}, 3));
}

TEST_CASE("annihilator of the empty list is the full space") {
    auto basis = annihilator({}, 3);
    CHECK(basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        RationalVector e(3, Rational(0));
        e[i] = 1;
        CHECK(basis[i].coeffs == e);
    }
}

TEST_CASE("annihilator of the lifted 4-fold differences is 3-dimensional") {
    std::vector<RationalVector> vs = {
        {Rational(0), Rational(24), Rational(48), Rational(120), Rational(288)},
        {Rational(0), Rational(-24), Rational(-48), Rational(-192),
         Rational(-576)}};
    auto basis = annihilator(vs, 4);
    CHECK(basis.size() == 3);
}

TEST_CASE("span membership") {
    std::vector<RationalVector> vs = {
        {Rational(0), Rational(-12), Rational(-36)},
        {Rational(0), Rational(-12), Rational(-72)}};
    auto basis = annihilator(vs, 3);
    CHECK(span_contains(basis, Functional::coordinate({3}, 3)));
    CHECK_FALSE(span_contains(basis, Functional::coordinate({1, 1, 1}, 3)));
    CHECK(span_contains(basis, Functional(3, RationalVector(3, Rational(0)))));
}

TEST_CASE("annihilator is a subspace invariant") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> entry(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<RationalVector> vs;
        for (int i = 0; i < 3; ++i) {
            RationalVector v;
            for (int j = 0; j < 5; ++j) v.emplace_back(entry(rng));
            vs.push_back(v);
        }
        auto base = annihilator(vs, 4);

        // rescaling an input changes nothing
        auto scaled = vs;
        for (auto& x : scaled[trial % 3]) x *= Rational(7, 3);
        CHECK(annihilator(scaled, 4) == base);

        // permuting inputs changes nothing (RREF canonicality)
        auto perm = vs;
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        CHECK(annihilator(perm, 4) == base);

        // independent-oracle agreement as subspaces
        RationalMatrix ours;
        for (const auto& b : base) ours.push_back(b.coeffs);
        CHECK(linalg::spans_equal(ours, naive_kernel({vs.begin(), vs.end()}, 5)));
    }
}

TEST_CASE("verify_3fold_theorem") {
    auto r = verify_3fold_theorem(SurfaceData(9, 3));
    CHECK(r.pass);
    REQUIRE(r.annihilator_basis.size() == 1);
    CHECK(r.annihilator_basis[0] == Functional::coordinate({3}, 3));
    CHECK(r.difference_vectors[0] ==
          RationalVector{Rational(0), Rational(-12), Rational(-36)});
    CHECK(r.difference_vectors[1] ==
          RationalVector{Rational(0), Rational(-12), Rational(-72)});
    CHECK(verify_3fold_theorem(SurfaceData(21, 6)).pass);
    CHECK(verify_3fold_theorem(SurfaceData(1, 2)).pass);
    CHECK_THROWS_AS(verify_3fold_theorem(SurfaceData(8, 4)), std::domain_error);
}

TEST_CASE("verify_4fold_theorem") {
    auto r = verify_4fold_theorem(SurfaceData(9, 3));
    CHECK(r.pass);
    CHECK(r.annihilator_basis.size() == 3);
    CHECK(r.difference_vectors[0] ==
          RationalVector{Rational(0), Rational(-24), Rational(-48),
                         Rational(-120), Rational(-288)});
    CHECK(r.difference_vectors[1] ==
          RationalVector{Rational(0), Rational(-24), Rational(-48),
                         Rational(-192), Rational(-576)});
    // p1^2, p2 and c4 annihilate both difference vectors
    for (const auto& f :
         {Functional::from_polynomial(pontryagin_number_functional({1, 1}, 4), 4),
          Functional::from_polynomial(pontryagin_number_functional({2}, 4), 4),
          Functional::coordinate({4}, 4)}) {
        for (const auto& d : r.difference_vectors) {
            Rational acc(0);
            for (std::size_t i = 0; i < d.size(); ++i) acc += f.coeffs[i] * d[i];
            CHECK(acc == 0);
        }
    }
    CHECK(verify_4fold_theorem(SurfaceData(21, 6)).pass);
    CHECK_THROWS_AS(verify_4fold_theorem(SurfaceData(8, 4)), std::domain_error);
}

TEST_CASE("verify_higher coefficients") {
    auto r3 = verify_higher(3);
    CHECK(r3.pass);
    auto uc3 = universal_coefficients(3);
    // canonical order for 3: (3), (2,1), (1,1,1)
    CHECK(uc3[0].alpha == 0);
    CHECK(uc3[0].beta == 2);
    CHECK(uc3[1].alpha == 2);
    CHECK(uc3[2].alpha == 6);
    auto uc4 = universal_coefficients(4);
    CHECK(uc4[0].alpha == 0);   // c4
    CHECK(uc4[0].beta == 4);    // Euler multiplicativity: 2^{n-2} c2
    CHECK(uc4[4].alpha == 48);  // c1^4 = 8 * 6 * c1^2
    CHECK(uc4[4].beta == 0);
    for (int n = 3; n <= 6; ++n) CHECK(verify_higher(n).pass);
    CHECK_THROWS_AS(verify_higher(2), std::domain_error);
}
