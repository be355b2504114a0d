#pragma once

#include "chern/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace chern {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

namespace linalg {

/// Reduced row-echelon form, computed by fraction-free (integer-preserving)
/// elimination on denominator-cleared rows, followed by pivot normalization
/// and back-substitution. Deterministic: pivot is the first nonzero entry in
/// column order. Returns the pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::domain_error("rref: ragged matrix");

    // Clear denominators row by row: integer arithmetic from here on keeps
    // intermediate entries integral under Bareiss-style updates.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (const auto& x : m[i]) l = lcm(l, denominator(x));
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = m[i][j] * l;
            a[i][j] = numerator(scaled);
        }
    }

    std::size_t row = 0;
    Integer prev_pivot = 1;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[row]);
        Integer p = a[row][col];
        for (std::size_t i = row + 1; i < rows; ++i) {
            Integer f = a[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = (a[i][j] * p - a[row][j] * f) / prev_pivot;
        }
        prev_pivot = p;
        pivots.push_back(col);
        ++row;
    }

    // Normalize pivots to 1 and eliminate above, now in exact rationals.
    RationalMatrix r(rows, RationalVector(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r[i][j] = Rational(a[i][j]);
    for (std::size_t i = pivots.size(); i-- > 0;) {
        std::size_t pc = pivots[i];
        Rational p = r[i][pc];
        for (std::size_t j = 0; j < cols; ++j) r[i][j] /= p;
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = r[k][pc];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) r[k][j] -= f * r[i][j];
        }
    }
    m = std::move(r);
    return pivots;
}

inline std::size_t rank(RationalMatrix m) { return rref(m).size(); }

/// Canonical basis of {x : M x = 0}: free-column vectors from the RREF,
/// re-reduced so the output is itself in RREF with pivots 1.
inline RationalMatrix nullspace(RationalMatrix m, std::size_t cols) {
    for (const auto& r : m)
        if (r.size() != cols) throw std::domain_error("nullspace: bad width");
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    RationalMatrix basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        RationalVector v(cols, Rational(0));
        v[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][j];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

/// Exact membership of v in the row span of basis.
inline bool in_span(const RationalMatrix& basis, const RationalVector& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    RationalMatrix with = basis;
    with.push_back(v);
    return rank(basis) == rank(with);
}

inline bool spans_equal(const RationalMatrix& a, const RationalMatrix& b) {
    for (const auto& v : b)
        if (!in_span(a, v)) return false;
    for (const auto& v : a)
        if (!in_span(b, v)) return false;
    return true;
}

}  // namespace linalg
}  // namespace chern
