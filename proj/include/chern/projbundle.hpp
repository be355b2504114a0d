#pragma once

#include "chern/chern_polynomial.hpp"
#include "chern/manifolds.hpp"
#include "chern/rational.hpp"

#include <stdexcept>

namespace chern {

/// The five intersection numbers determining a CP^1-bundle P(E) -> B over a
/// surface: b_sq = c1(B)^2, b_f = c1(B).c1(E), f_sq = c1(E)^2, plus c2(B) and
/// c2(E).
struct ProjBundleData {
    long long b_sq = 0;
    long long b_f = 0;
    long long f_sq = 0;
    long long c2B = 0;
    long long c2E = 0;

    friend bool operator==(const ProjBundleData&,
                           const ProjBundleData&) = default;
};

namespace detail {

/// Minimal model of H^*(B) for a surface B: degree 2 is spanned by the symbols
/// b = c1(B) and f = c1(E), degree 4 by the point class, with the pairing
/// given by the three intersection numbers. Degree > 4 vanishes.
struct BaseClass {
    Rational s0{0};  // H^0
    Rational cb{0};  // coefficient of b in H^2
    Rational cf{0};  // coefficient of f in H^2
    Rational s4{0};  // multiple of the point class in H^4

    static BaseClass scalar(Rational v) { return {v, 0, 0, 0}; }
    static BaseClass b() { return {0, 1, 0, 0}; }
    static BaseClass f() { return {0, 0, 1, 0}; }
    static BaseClass point(Rational v) { return {0, 0, 0, v}; }

    BaseClass mul(const BaseClass& o, const ProjBundleData& d) const {
        BaseClass r;
        r.s0 = s0 * o.s0;
        r.cb = s0 * o.cb + cb * o.s0;
        r.cf = s0 * o.cf + cf * o.s0;
        // H^2 x H^2 pairs into H^4 via the intersection form.
        Rational pair = cb * o.cb * d.b_sq + (cb * o.cf + cf * o.cb) * d.b_f +
                        cf * o.cf * d.f_sq;
        r.s4 = s0 * o.s4 + s4 * o.s0 + pair;
        return r;
    }

    BaseClass add(const BaseClass& o) const {
        return {s0 + o.s0, cb + o.cb, cf + o.cf, s4 + o.s4};
    }

    BaseClass neg() const { return {-s0, -cb, -cf, -s4}; }
};

/// Element of H^*(P(E)) in the Leray-Hirsch basis {1, y} over the base ring,
/// with y^2 reduced via y^2 + c1(E) y + c2(E) = 0.
struct TotalClass {
    BaseClass one;  // coefficient of 1
    BaseClass y;    // coefficient of y

    TotalClass mul(const TotalClass& o, const ProjBundleData& d) const {
        BaseClass u = one.mul(o.one, d);
        BaseClass v = one.mul(o.y, d).add(y.mul(o.one, d));
        BaseClass ysq = y.mul(o.y, d);
        // y^2 = -f*y - c2E*[pt]
        v = v.add(ysq.mul(BaseClass::f(), d).neg());
        u = u.add(ysq.mul(BaseClass::point(Rational(d.c2E)), d).neg());
        return {u, v};
    }

    /// Fiber integration for a top-degree class: extract the coefficient of y
    /// (y evaluates to 1 on the fiber), then evaluate the degree-4 base part.
    Rational integrate() const { return y.s4; }
};

}  // namespace detail

/// p_1 of the sphere bundle P(E) -> B: c1(E)^2 - 4 c2(E).
inline long long p1_sphere_bundle(const ProjBundleData& d) {
    return d.f_sq - 4 * d.c2E;
}

/// Chern numbers (c3, c1c2, c1^3) of X = P(E) by symbolic expansion in the
/// Leray-Hirsch presentation. c(X) = c(B)(1 + c1(E) + 2y), since the vertical
/// tangent bundle has first Chern class c1(E) + 2y.
inline ChernVector projectivize(const ProjBundleData& d) {
    using detail::BaseClass;
    using detail::TotalClass;

    TotalClass c1{BaseClass::b().add(BaseClass::f()), BaseClass::scalar(2)};
    TotalClass c2{BaseClass::point(Rational(d.c2B))
                      .add(BaseClass::b().mul(BaseClass::f(), d)),
                  BaseClass::b().mul(BaseClass::scalar(2), d)};
    TotalClass c3{BaseClass{}, BaseClass::point(Rational(2 * d.c2B))};

    Rational n_c3 = c3.integrate();
    Rational n_c1c2 = c1.mul(c2, d).integrate();
    Rational n_c13 = c1.mul(c1, d).mul(c1, d).integrate();

    // canonical order for dim 3: (3), (2,1), (1,1,1)
    return ChernVector(3, {n_c3, n_c1c2, n_c13});
}

/// M = P(TY), the projectivized holomorphic tangent bundle of a surface Y.
inline ChernVector ruled_tangent(const SurfaceData& y) {
    return projectivize(
        {y.c1_sq, y.c1_sq, y.c1_sq, y.c2, y.c2});
}

/// N = P(O(K) + O) over a surface X; c1(O(K)) = -c1(X).
inline ChernVector ruled_canonical(const SurfaceData& x) {
    return projectivize({x.c1_sq, -x.c1_sq, x.c1_sq, x.c2, 0});
}

}  // namespace chern
