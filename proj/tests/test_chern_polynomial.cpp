#include "chern/chern_polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace chern;

namespace {

ChernPolynomial c(int i, int trunc) {
    return ChernPolynomial::monomial({i}, Rational(1), trunc);
}

ChernPolynomial random_poly(std::mt19937_64& rng, int trunc) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    ChernPolynomial p(trunc);
    auto npart = [&](int w) { return partitions_of(w); };
    std::uniform_int_distribution<int> wdist(0, trunc);
    for (int t = 0; t < 4; ++t) {
        int w = wdist(rng);
        auto parts = npart(w);
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        p.add_term(parts[pick(rng)], Rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("addition cancels and merges") {
    int N = 3;
    auto c1 = c(1, N);
    CHECK((c1 + (Rational(-1) * c1)).is_zero());
    auto lhs = (c1 * c1 - Rational(2) * c(2, N)) + Rational(2) * c(2, N);
    CHECK(lhs == c1 * c1);
    auto half = Rational(1, 2) * c(2, N);
    CHECK(half + half == c(2, N));
}

TEST_CASE("addition rejects truncation mismatch") {
    CHECK_THROWS_AS(c(1, 3) + c(1, 4), std::domain_error);
}

TEST_CASE("(c1^2 - 2c2)^2 expands to c1^4 - 4c1^2c2 + 4c2^2") {
    int N = 4;
    auto p1 = c(1, N) * c(1, N) - Rational(2) * c(2, N);
    auto sq = p1 * p1;
    ChernPolynomial want(N);
    want.set({1, 1, 1, 1}, 1);
    want.set({2, 1, 1}, -4);
    want.set({2, 2}, 4);
    CHECK(sq == want);
}

TEST_CASE("multiplicative unit and truncation") {
    int N = 3;
    auto one = ChernPolynomial::constant(Rational(1), N);
    auto q = c(1, N) * c(2, N) + Rational(5) * c(3, N);
    CHECK(one * q == q);
    CHECK((c(1, 3) * c(3, 3)).is_zero());  // weight 4 > 3 truncated
}

TEST_CASE("ring laws on random small polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int N = 4;
        auto a = random_poly(rng, N), b = random_poly(rng, N),
             d = random_poly(rng, N);
        CHECK(a * b == b * a);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
    }
}

TEST_CASE("power sums via Newton identities") {
    int N = 4;
    CHECK(power_sum(1, N) == c(1, N));
    CHECK(power_sum(2, N) == c(1, N) * c(1, N) - Rational(2) * c(2, N));
    auto p3 = c(1, N) * c(1, N) * c(1, N) - Rational(3) * c(1, N) * c(2, N) +
              Rational(3) * c(3, N);
    CHECK(power_sum(3, N) == p3);
    CHECK_THROWS_AS(power_sum(5, 4), std::domain_error);
}

TEST_CASE("inverse Newton recurrence recovers the generators") {
    // c_m = (1/m) sum_{i=1}^{m} (-1)^{i-1} c_{m-i} p_i, independent route.
    int N = 8;
    std::vector<ChernPolynomial> cs{ChernPolynomial::constant(Rational(1), N)};
    for (int m = 1; m <= N; ++m) {
        ChernPolynomial acc(N);
        for (int i = 1; i <= m; ++i) {
            Rational sign(i % 2 == 1 ? 1 : -1);
            acc += sign * (cs[static_cast<std::size_t>(m - i)] * power_sum(i, N));
        }
        cs.push_back(Rational(1, m) * acc);
        CHECK(cs.back() == c(m, N));
    }
}

TEST_CASE("Pontryagin classes match the printed identities") {
    CHECK(pontryagin_class(1, 2) == c(1, 2) * c(1, 2) - Rational(2) * c(2, 2));
    ChernPolynomial p2(4);
    p2.set({2, 2}, 1);
    p2.set({3, 1}, -2);
    p2.set({4}, 2);
    CHECK(pontryagin_class(2, 4) == p2);
}

TEST_CASE("p1 on a surface is three times the signature") {
    // surface (c1^2, c2) = (9, 3): p1 = 9 - 6 = 3 = 3 * signature(1)
    ChernVector surf(2, {Rational(3), Rational(9)});
    CHECK(pontryagin_class(1, 2).evaluate(surf) == 3);
}

TEST_CASE("Pontryagin number functionals") {
    ChernPolynomial p1sq(4);
    p1sq.set({1, 1, 1, 1}, 1);
    p1sq.set({2, 1, 1}, -4);
    p1sq.set({2, 2}, 4);
    CHECK(pontryagin_number_functional({1, 1}, 4) == p1sq);
    CHECK(pontryagin_number_functional({2}, 4) == pontryagin_class(2, 4));
    CHECK(pontryagin_number_functional({1}, 2) == pontryagin_class(1, 2));
    CHECK_THROWS_AS(pontryagin_number_functional({1}, 3), std::domain_error);
    CHECK_THROWS_AS(pontryagin_number_functional({2}, 2), std::domain_error);
}

TEST_CASE("pontryagin functional coefficients are integers up to weight 4") {
    for (int n : {2, 4}) {
        for (const auto& J : partitions_of(n / 2)) {
            auto f = pontryagin_number_functional(J, n);
            for (const auto& [k, v] : f.terms()) CHECK(is_integer(v));
        }
    }
}

TEST_CASE("evaluate pairs weight-n terms only") {
    ChernVector surf(2, {Rational(3), Rational(9)});
    int N = 2;
    auto f = c(1, N) * c(1, N) - Rational(2) * c(2, N) +
             ChernPolynomial::constant(Rational(77), N) + c(1, N);
    CHECK(f.evaluate(surf) == 3);  // 9 - 6; weight 0 and 1 terms ignored
    CHECK(ChernPolynomial(2).evaluate(surf) == 0);
}

TEST_CASE("Wu identity as polynomials in dimension 2") {
    auto lhs = c(1, 2) * c(1, 2);
    auto rhs = Rational(2) * c(2, 2) + pontryagin_class(1, 2);
    CHECK(lhs == rhs);
}
