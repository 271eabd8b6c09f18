#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "blockcrit/error.hpp"

namespace blockcrit::exactalg {

/// Truncated Laurent series sum_{k = min_degree}^{order} a_k w^k.
///
/// `order` is the highest degree known exactly; everything above it is
/// unknown, not zero. `min_degree` is a declared lower bound for the support
/// and may be negative. Coefficients below `min_degree` are exactly zero.
template <class Coeff>
class LaurentSeries {
public:
    /// The zero series with the given support window.
    LaurentSeries(int min_degree, int order) : min_degree_(min_degree), order_(order) {
        if (order < min_degree - 1)
            throw ValidationError("LaurentSeries: order " + std::to_string(order) +
                                  " below min degree " + std::to_string(min_degree));
        coeffs_.assign(static_cast<std::size_t>(order - min_degree + 1), Coeff(0));
    }

    static LaurentSeries constant(const Coeff& c, int order) {
        return monomial(0, c, order);
    }

    /// c * w^degree, exact through `order`.
    static LaurentSeries monomial(int degree, const Coeff& c, int order) {
        LaurentSeries s(std::min(degree, order + 1), order);
        if (degree <= order) s.coeffs_[degree - s.min_degree_] = c;
        return s;
    }

    int min_degree() const noexcept { return min_degree_; }
    int order() const noexcept { return order_; }

    /// [w^degree]. Asking above the truncation order is an error.
    Coeff coefficient(int degree) const {
        if (degree > order_)
            throw ValidationError("coefficient of w^" + std::to_string(degree) +
                                  " requested but series is only exact through w^" +
                                  std::to_string(order_) + "; required order " +
                                  std::to_string(degree));
        if (degree < min_degree_) return Coeff(0);
        return coeffs_[degree - min_degree_];
    }

    void set_coefficient(int degree, const Coeff& c) {
        if (degree < min_degree_ || degree > order_)
            throw ValidationError("set_coefficient: degree " + std::to_string(degree) +
                                  " outside [" + std::to_string(min_degree_) + ", " +
                                  std::to_string(order_) + "]");
        coeffs_[degree - min_degree_] = c;
    }

    /// Drops every degree above `order` (no-op if already shorter).
    LaurentSeries truncated(int order) const {
        if (order >= order_) return *this;
        LaurentSeries out(std::min(min_degree_, order + 1), order);
        for (int k = min_degree_; k <= order; ++k) out.coeffs_[k - out.min_degree_] = coefficient(k);
        return out;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        int order = std::min(a.order_, b.order_);
        LaurentSeries out(std::min({a.min_degree_, b.min_degree_, order + 1}), order);
        for (int k = out.min_degree_; k <= order; ++k) {
            Coeff c(0);
            if (k >= a.min_degree_) c += a.coeffs_[k - a.min_degree_];
            if (k >= b.min_degree_) c += b.coeffs_[k - b.min_degree_];
            out.coeffs_[k - out.min_degree_] = c;
        }
        return out;
    }

    friend LaurentSeries operator-(const LaurentSeries& a) {
        LaurentSeries out(a);
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

    friend LaurentSeries operator*(const LaurentSeries& a, const Coeff& s) {
        LaurentSeries out(a);
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    /// Product order is min(Na, Nb, Na + mb, Nb + ma): with nonnegative min
    /// degrees that is min(Na, Nb); a negative min degree on one side
    /// lowers the exact order of the other.
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        return multiply(a, b, product_order(a, b));
    }

    /// Product truncated at min(`order`, exact product order).
    static LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b, int order) {
        order = std::min(order, product_order(a, b));
        int lo = a.min_degree_ + b.min_degree_;
        LaurentSeries out(std::min(lo, order + 1), order);
        for (int i = a.min_degree_; i <= a.order_; ++i) {
            const Coeff& ca = a.coeffs_[i - a.min_degree_];
            if (ca == 0) continue;
            int jmax = std::min(b.order_, order - i);
            for (int j = b.min_degree_; j <= jmax; ++j) {
                const Coeff& cb = b.coeffs_[j - b.min_degree_];
                if (cb == 0) continue;
                out.coeffs_[i + j - out.min_degree_] += ca * cb;
            }
        }
        return out;
    }

    static int product_order(const LaurentSeries& a, const LaurentSeries& b) {
        return std::min({a.order_, b.order_, a.order_ + b.min_degree_, b.order_ + a.min_degree_});
    }

    /// Equal on the common exact window and on declared support.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.order_ != b.order_) return false;
        int lo = std::min(a.min_degree_, b.min_degree_);
        for (int k = lo; k <= a.order_; ++k)
            if (a.coefficient(k) != b.coefficient(k)) return false;
        return true;
    }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) {
        bool any = false;
        for (int k = s.min_degree_; k <= s.order_; ++k) {
            const Coeff& c = s.coeffs_[k - s.min_degree_];
            if (c == 0) continue;
            if (any) os << " + ";
            any = true;
            os << "(" << c << ")w^" << k;
        }
        if (!any) os << "0";
        return os << " + O(w^" << (s.order_ + 1) << ")";
    }

private:
    int min_degree_;
    int order_;
    std::vector<Coeff> coeffs_;
};

} // namespace blockcrit::exactalg
