#pragma once

#include "chern/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace chern {

/// Polynomial in the auxiliary variable y with exact rational coefficients.
/// Coefficient ring for the chi_y genus; never evaluated numerically.
class YPoly {
  public:
    YPoly() = default;
    YPoly(int v) : coeffs_{Rational(v)} { trim(); }
    YPoly(Rational v) : coeffs_{std::move(v)} { trim(); }
    explicit YPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static YPoly y() {
        return YPoly(std::vector<Rational>{Rational(0), Rational(1)});
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Rational at(const Rational& yval) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * yval + *it;
        return acc;
    }

    friend YPoly operator+(const YPoly& a, const YPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return YPoly(std::move(c));
    }

    friend YPoly operator-(const YPoly& a, const YPoly& b) {
        return a + (-b);
    }

    YPoly operator-() const {
        std::vector<Rational> c(coeffs_);
        for (auto& x : c) x = -x;
        return YPoly(std::move(c));
    }

    friend YPoly operator*(const YPoly& a, const YPoly& b) {
        if (a.is_zero() || b.is_zero()) return YPoly();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                                Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return YPoly(std::move(c));
    }

    YPoly& operator+=(const YPoly& o) { return *this = *this + o; }
    YPoly& operator-=(const YPoly& o) { return *this = *this - o; }
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

    friend bool operator==(const YPoly& a, const YPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += to_string(coeffs_[i]);
            if (i == 1) s += "*y";
            if (i > 1) s += "*y^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;  // coeffs_[k] is the y^k coefficient
};

}  // namespace chern
