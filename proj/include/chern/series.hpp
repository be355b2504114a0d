#pragma once

#include "chern/chern_polynomial.hpp"
#include "chern/rational.hpp"
#include "chern/ypoly.hpp"

#include <stdexcept>
#include <vector>

namespace chern {

/// Formal power series in one variable truncated at order N, with exact
/// coefficients (rationals, or rational polynomials in y).
template <typename C = Rational>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : coeffs_(order + 1, C(0)) {
        if (order < 0) throw std::domain_error("series order must be >= 0");
    }
    TruncatedSeries(int order, std::vector<C> coeffs)
        : TruncatedSeries(order) {
        for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i)
            coeffs_[i] = std::move(coeffs[i]);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, C v) { coeffs_[static_cast<std::size_t>(k)] = std::move(v); }

    friend TruncatedSeries operator+(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k)
            r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k)
            r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return r;
    }

    friend TruncatedSeries operator*(const C& s, const TruncatedSeries& a) {
        TruncatedSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = s * a.coeffs_[k];
        return r;
    }

    /// Multiplicative inverse; the constant term must be 1.
    TruncatedSeries inverse() const {
        if (!(coeffs_[0] == C(1)))
            throw std::domain_error("series inverse: constant term must be 1");
        TruncatedSeries r(order());
        r.coeffs_[0] = C(1);
        for (int k = 1; k <= order(); ++k) {
            C acc(0);
            for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
            r.coeffs_[k] = C(0) - acc;
        }
        return r;
    }

    /// log of a series with constant term 1: sum (-1)^{k+1} u^k / k, u = S - 1.
    TruncatedSeries log() const {
        if (!(coeffs_[0] == C(1)))
            throw std::domain_error("series log: constant term must be 1");
        TruncatedSeries u = *this;
        u.coeffs_[0] = C(0);
        TruncatedSeries acc(order());
        TruncatedSeries upow = u;
        for (int k = 1; k <= order(); ++k) {
            C scale = C(Rational(k % 2 == 1 ? 1 : -1, k));
            acc = acc + scale * upow;
            upow = upow * u;
        }
        return acc;
    }

  private:
    void check(const TruncatedSeries& o) const {
        if (order() != o.order())
            throw std::domain_error("series order mismatch");
    }
    std::vector<C> coeffs_;
};

/// The characteristic series x/(1 - e^{-x}) of the Todd genus, to order N, by
/// exact formal-series division: (1 - e^{-x})/x = sum (-1)^k x^k/(k+1)!.
inline TruncatedSeries<Rational> todd_series(int order) {
    TruncatedSeries<Rational> d(order);
    Rational fact(1);
    for (int k = 0; k <= order; ++k) {
        fact *= (k + 1);  // (k+1)!
        d.set_coeff(k, Rational(k % 2 == 0 ? 1 : -1) / fact);
    }
    return d.inverse();
}

/// The chi_y characteristic series Q_y(x) = x(1+y)/(1 - e^{-x(1+y)}) - xy:
/// substitute x(1+y) into the Todd series and subtract xy.
inline TruncatedSeries<YPoly> chi_y_series(int order) {
    auto r = todd_series(order);
    YPoly one_plus_y(std::vector<Rational>{Rational(1), Rational(1)});
    TruncatedSeries<YPoly> q(order);
    YPoly pow(1);
    for (int k = 0; k <= order; ++k) {
        q.set_coeff(k, YPoly(r.coeff(k)) * pow);
        pow *= one_plus_y;
    }
    if (order >= 1) q.set_coeff(1, q.coeff(1) - YPoly::y());
    return q;
}

}  // namespace chern
