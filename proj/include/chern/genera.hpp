#pragma once

#include "chern/chern_polynomial.hpp"
#include "chern/manifolds.hpp"
#include "chern/rational.hpp"
#include "chern/series.hpp"
#include "chern/ypoly.hpp"

#include <stdexcept>
#include <vector>

namespace chern {

template <typename C>
GradedPolynomial<C> with_coefficients(const ChernPolynomial& p) {
    GradedPolynomial<C> r(p.truncation());
    for (const auto& [k, v] : p.terms()) r.set(k, C(v));
    return r;
}

/// The weight-n polynomial K_n of the multiplicative sequence attached to a
/// characteristic series Q with Q(0) = 1: form log Q = sum b_m x^m, substitute
/// power sums of Chern roots, exponentiate, and take the weight-n part.
template <typename C>
GradedPolynomial<C> multiplicative_sequence(const TruncatedSeries<C>& Q,
                                            int n) {
    if (n < 1) throw std::domain_error("multiplicative_sequence: n must be >= 1");
    if (Q.order() < n)
        throw std::domain_error("multiplicative_sequence: series order < n");
    if (!(Q.coeff(0) == C(1)))
        throw std::domain_error(
            "multiplicative_sequence: constant term of Q must be 1");

    auto logQ = Q.log();
    GradedPolynomial<C> L(n);
    for (int m = 1; m <= n; ++m) {
        if (coeff_is_zero(logQ.coeff(m))) continue;
        L += logQ.coeff(m) * with_coefficients<C>(power_sum(m, n));
    }

    // exp(L), truncated at weight n; L has no constant term.
    GradedPolynomial<C> K = GradedPolynomial<C>::constant(C(1), n);
    GradedPolynomial<C> pow = GradedPolynomial<C>::constant(C(1), n);
    Rational fact(1);
    for (int k = 1; k <= n; ++k) {
        pow *= L;
        fact *= k;
        K += C(Rational(1) / fact) * pow;
    }
    return K.homogeneous_part(n);
}

/// Todd polynomial of weight n.
inline ChernPolynomial todd(int n) {
    if (n < 1) throw std::domain_error("todd: n must be >= 1");
    return multiplicative_sequence<Rational>(todd_series(n), n);
}

/// chi_y genus in dimension n, with exact y-polynomial coefficients. The
/// coefficient of y^p is the chi_p functional.
inline YChernPolynomial chi_y(int n) {
    if (n < 1) throw std::domain_error("chi_y: n must be >= 1");
    return multiplicative_sequence<YPoly>(chi_y_series(n), n);
}

/// Substitute a rational value for y.
inline ChernPolynomial specialize_y(const YChernPolynomial& p,
                                    const Rational& yval) {
    ChernPolynomial r(p.truncation());
    for (const auto& [k, v] : p.terms()) r.add_term(k, v.at(yval));
    return r;
}

/// Extract the coefficient of y^p.
inline ChernPolynomial y_coefficient(const YChernPolynomial& p, int deg) {
    ChernPolynomial r(p.truncation());
    for (const auto& [k, v] : p.terms()) r.add_term(k, v.coeff(deg));
    return r;
}

/// The chi_p genus as a combination of Chern numbers: coefficient of y^p in
/// chi_y(n).
inline ChernPolynomial chi_p_functional(int n, int p) {
    if (p < 0 || p > n)
        throw std::domain_error("chi_p_functional: p out of range");
    return y_coefficient(chi_y(n), p);
}

inline Rational binomial(int a, int b) {
    if (b < 0 || b > a) return Rational(0);
    Integer r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return Rational(r);
}

/// sum_{p=k}^{n} (-1)^p binom(p,k) chi_p.
inline ChernPolynomial salamon_combination(int n, int k) {
    if (k < 2 || k > n)
        throw std::domain_error("salamon_combination: need 2 <= k <= n");
    auto cy = chi_y(n);
    ChernPolynomial acc(n);
    for (int p = k; p <= n; ++p) {
        Rational sign(p % 2 == 0 ? 1 : -1);
        acc += (sign * binomial(p, k)) * y_coefficient(cy, p);
    }
    return acc;
}

/// True iff every monomial with nonzero coefficient contains a part > threshold.
inline bool support_check(const ChernPolynomial& f, int threshold) {
    for (const auto& [k, v] : f.terms()) {
        bool ok = false;
        for (int part : k)
            if (part > threshold) ok = true;
        if (!ok) return false;
    }
    return true;
}

/// For odd n, every chi_p avoids the monomial c_1^n.
inline bool verify_prop_tS(int n) {
    Partition ones(static_cast<std::size_t>(n), 1);
    auto cy = chi_y(n);
    for (int p = 0; p <= n; ++p)
        if (!(y_coefficient(cy, p).coeff(ones) == 0)) return false;
    return true;
}

struct ToddRemarkReport {
    bool cn_matches_c1n = false;   // coeff(c_n) == coeff(c1^n)
    bool divisible_by_c1 = true;   // odd n only; true when skipped
    bool n_odd = false;
    bool all() const { return cn_matches_c1n && divisible_by_c1; }
};

/// coeff(c_n) == coeff(c1^n) in every dimension; for odd n the Todd polynomial
/// is divisible by c_1 (every monomial contains a part equal to 1).
inline ToddRemarkReport todd_remark_check(int n) {
    if (n < 2) throw std::domain_error("todd_remark_check: n must be >= 2");
    auto t = todd(n);
    ToddRemarkReport r;
    r.n_odd = (n % 2 == 1);
    Partition ones(static_cast<std::size_t>(n), 1);
    r.cn_matches_c1n = (t.coeff({n}) == t.coeff(ones));
    if (r.n_odd) {
        for (const auto& [k, v] : t.terms()) {
            bool has_one = false;
            for (int part : k)
                if (part == 1) has_one = true;
            if (!has_one) r.divisible_by_c1 = false;
        }
    }
    return r;
}

/// sum_p (-1)^p p chi_p; its support in {c_n, c1 c_{n-1}} is the computational
/// content behind c1 c_{n-1} being a combination of Hodge numbers.
inline ChernPolynomial lw_functional(int n) {
    if (n < 2) throw std::domain_error("lw_functional: n must be >= 2");
    auto cy = chi_y(n);
    ChernPolynomial acc(n);
    for (int p = 1; p <= n; ++p) {
        Rational sign(p % 2 == 0 ? 1 : -1);
        acc += (sign * Rational(p)) * y_coefficient(cy, p);
    }
    return acc;
}

/// Reports any monomial of lw_functional(n) outside {c_n, c1 c_{n-1}}.
inline std::vector<Partition> lw_support_violations(int n) {
    Partition cn{n};
    Partition c1cn1 = n == 2 ? Partition{1, 1} : Partition{n - 1, 1};
    std::vector<Partition> bad;
    auto f = lw_functional(n);
    for (const auto& [k, v] : f.terms())
        if (k != cn && k != c1cn1) bad.push_back(k);
    return bad;
}

/// Riemann-Roch in dimension 3: Todd genus of the Chern data equals chi_0 of
/// the Hodge diamond.
inline bool rr_3fold_check(const ChernVector& v, const HodgeDiamond& d) {
    if (v.dim != 3 || d.n != 3)
        throw std::domain_error("rr_3fold_check: dimension must be 3");
    return todd(3).evaluate(v) == Rational(chi_p_from_hodge(d, 0));
}

}  // namespace chern
