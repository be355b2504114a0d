#pragma once

#include "chern/partitions.hpp"
#include "chern/rational.hpp"
#include "chern/ypoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chern {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const YPoly& c) { return c.is_zero(); }

/// The Chern numbers of an abstract n-fold: one exact rational per partition
/// of n, in canonical order. Entries are rationals, not integers, so formal
/// basis data is representable.
struct ChernVector {
    int dim = 0;
    std::vector<Rational> values;

    ChernVector() = default;
    ChernVector(int n, std::vector<Rational> v) : dim(n), values(std::move(v)) {
        if (values.size() != partition_count(dim))
            throw std::domain_error("ChernVector: expected one value per partition");
    }

    static ChernVector point() { return ChernVector(0, {Rational(1)}); }

    const Rational& operator[](std::size_t i) const { return values[i]; }
    Rational& operator[](std::size_t i) { return values[i]; }

    Rational at(const Partition& p) const {
        return values[index_of(p, dim)];
    }

    friend bool operator==(const ChernVector& a, const ChernVector& b) {
        return a.dim == b.dim && a.values == b.values;
    }
};

/// Graded polynomial in abstract Chern classes c_1..c_N, truncated at total
/// weight N. Monomial keys are partitions (multisets of indices). Coefficients
/// are exact rationals, or rational polynomials in y for the chi_y genus.
template <typename C = Rational>
class GradedPolynomial {
  public:
    using TermMap = std::map<Partition, C, PartitionOrder>;

    explicit GradedPolynomial(int truncation) : trunc_(truncation) {
        if (truncation < 1)
            throw std::domain_error("truncation weight must be positive");
    }

    static GradedPolynomial zero(int truncation) {
        return GradedPolynomial(truncation);
    }

    static GradedPolynomial constant(C value, int truncation) {
        GradedPolynomial p(truncation);
        p.set(Partition{}, std::move(value));
        return p;
    }

    static GradedPolynomial monomial(Partition key, C value, int truncation) {
        GradedPolynomial p(truncation);
        p.set(std::move(key), std::move(value));
        return p;
    }

    int truncation() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? C(0) : it->second;
    }

    void set(Partition key, C value) {
        if (!is_valid_partition(key))
            throw std::domain_error("not a valid partition key");
        if (weight(key) > trunc_) return;
        if (coeff_is_zero(value))
            terms_.erase(key);
        else
            terms_[std::move(key)] = std::move(value);
    }

    void add_term(const Partition& key, const C& value) {
        if (weight(key) > trunc_) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!coeff_is_zero(value)) terms_[key] = value;
        } else {
            it->second += value;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend GradedPolynomial operator+(const GradedPolynomial& a,
                                      const GradedPolynomial& b) {
        a.check_same_truncation(b);
        GradedPolynomial r = a;
        for (const auto& [k, v] : b.terms_) r.add_term(k, v);
        return r;
    }

    friend GradedPolynomial operator-(const GradedPolynomial& a,
                                      const GradedPolynomial& b) {
        a.check_same_truncation(b);
        GradedPolynomial r = a;
        for (const auto& [k, v] : b.terms_) r.add_term(k, C(0) - v);
        return r;
    }

    /// Monomial-by-monomial product; the product key is the multiset union of
    /// the parts, and anything of weight > N is truncated away.
    friend GradedPolynomial operator*(const GradedPolynomial& a,
                                      const GradedPolynomial& b) {
        a.check_same_truncation(b);
        GradedPolynomial r(a.trunc_);
        for (const auto& [ka, va] : a.terms_) {
            int wa = weight(ka);
            for (const auto& [kb, vb] : b.terms_) {
                if (wa + weight(kb) > a.trunc_) continue;
                Partition k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                std::sort(k.begin(), k.end(), std::greater<int>());
                r.add_term(k, va * vb);
            }
        }
        return r;
    }

    friend GradedPolynomial operator*(const C& s, const GradedPolynomial& p) {
        GradedPolynomial r(p.trunc_);
        for (const auto& [k, v] : p.terms_) r.add_term(k, s * v);
        return r;
    }

    GradedPolynomial& operator+=(const GradedPolynomial& o) {
        return *this = *this + o;
    }
    GradedPolynomial& operator*=(const GradedPolynomial& o) {
        return *this = *this * o;
    }

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

    GradedPolynomial homogeneous_part(int w) const {
        GradedPolynomial r(trunc_);
        for (const auto& [k, v] : terms_)
            if (weight(k) == w) r.add_term(k, v);
        return r;
    }

    /// Pairs the weight-n part with a dimension-n Chern vector; monomials of
    /// other weights contribute nothing.
    C evaluate(const ChernVector& v) const {
        if (trunc_ < v.dim)
            throw std::domain_error("evaluate: truncation below vector dimension");
        C acc(0);
        for (const auto& [k, c] : terms_)
            if (weight(k) == v.dim) acc += c * C(v.at(k));
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, v] : terms_) {
            if (!s.empty()) s += " + ";
            if constexpr (std::is_same_v<C, Rational>) {
                s += to_string(v);
            } else {
                s += "(" + v.str() + ")";
            }
            if (!k.empty()) s += "*" + monomial_name(k);
        }
        return s;
    }

  private:
    void check_same_truncation(const GradedPolynomial& o) const {
        if (trunc_ != o.trunc_)
            throw std::domain_error("truncation weight mismatch");
    }

    int trunc_;
    TermMap terms_;
};

using ChernPolynomial = GradedPolynomial<Rational>;
using YChernPolynomial = GradedPolynomial<YPoly>;

/// m-th power sum of Chern roots in terms of c_i, via Newton's identities:
/// p_1 = c_1;  p_m = sum_{i=1}^{m-1} (-1)^{i-1} c_i p_{m-i} + (-1)^{m-1} m c_m.
inline ChernPolynomial power_sum(int m, int truncation) {
    if (m < 1 || m > truncation)
        throw std::domain_error("power_sum: need 1 <= m <= truncation");
    std::vector<ChernPolynomial> p;
    p.push_back(ChernPolynomial::monomial({1}, Rational(1), truncation));
    for (int mm = 2; mm <= m; ++mm) {
        ChernPolynomial acc(truncation);
        for (int i = 1; i <= mm - 1; ++i) {
            Rational sign(i % 2 == 1 ? 1 : -1);
            acc += sign * (ChernPolynomial::monomial({i}, Rational(1), truncation) *
                           p[static_cast<std::size_t>(mm - i - 1)]);
        }
        Rational sign(mm % 2 == 1 ? 1 : -1);
        acc += ChernPolynomial::monomial({mm}, sign * mm, truncation);
        p.push_back(acc);
    }
    return p[static_cast<std::size_t>(m - 1)];
}

/// p_k = (-1)^k sum_{i+j=2k} (-1)^i c_i c_j with c_0 = 1: the weight-2k part
/// of the product of the total Chern class and its conjugate.
inline ChernPolynomial pontryagin_class(int k, int truncation) {
    if (k < 1 || 2 * k > truncation)
        throw std::domain_error("pontryagin_class: need 2k <= truncation");
    ChernPolynomial acc(truncation);
    auto c = [&](int i) {
        if (i == 0) return ChernPolynomial::constant(Rational(1), truncation);
        return ChernPolynomial::monomial({i}, Rational(1), truncation);
    };
    for (int i = 0; i <= 2 * k; ++i) {
        int j = 2 * k - i;
        Rational sign(i % 2 == 0 ? 1 : -1);
        acc += sign * (c(i) * c(j));
    }
    Rational outer(k % 2 == 0 ? 1 : -1);
    return outer * acc;
}

/// Pontryagin number functional p_J for a partition J of n/2, as a homogeneous
/// weight-n polynomial in Chern classes.
inline ChernPolynomial pontryagin_number_functional(const Partition& J, int n) {
    if (n % 2 != 0 || n < 2)
        throw std::domain_error("pontryagin_number_functional: n must be even");
    if (weight(J) != n / 2)
        throw std::domain_error("pontryagin_number_functional: weight(J) != n/2");
    ChernPolynomial acc = ChernPolynomial::constant(Rational(1), n);
    for (int j : J) acc *= pontryagin_class(j, n);
    return acc.homogeneous_part(n);
}

}  // namespace chern
