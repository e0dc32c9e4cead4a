#pragma once

// Formal power series over exact rationals, truncated at a fixed order.

#include <apery/arith.hpp>

#include <cstddef>
#include <vector>

namespace apery {

class TruncatedSeries {
public:
    /// Zero series known through x^order.
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, Rational(0)) {}

    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        c_.resize(order + 1, Rational(0));
    }

    static TruncatedSeries constant(std::size_t order, const Rational& v) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coefficients() const { return c_; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < r.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) {
        for (auto& v : a.c_) v *= s;
        return a;
    }

    /// 1/a; the constant term must be nonzero.
    TruncatedSeries inverse() const {
        if (c_[0] == 0) throw invalid_argument("series inverse: zero constant term");
        TruncatedSeries r(order());
        r.c_[0] = 1 / c_[0];
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Rational acc = 0;
            for (std::size_t i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
            r.c_[n] = -acc / c_[0];
        }
        return r;
    }

    /// sum_k coeffs[k] * inner^k by Horner's rule; inner must have zero constant term.
    static TruncatedSeries compose(const std::vector<Rational>& coeffs, const TruncatedSeries& inner) {
        if (inner[0] != 0) throw invalid_argument("series compose: inner series has a constant term");
        TruncatedSeries acc(inner.order());
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            acc = acc * inner;
            acc.c_[0] += coeffs[k];
        }
        return acc;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

}  // namespace apery
