#pragma once

#include <algorithm>
#include <ostream>
#include <vector>

namespace blockcrit::exactalg {

/// Dense univariate polynomial; coeffs()[k] is the coefficient of x^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
template <class Coeff>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Coeff& c) { return UniPoly(std::vector<Coeff>{c}); }

    /// c * x^k
    static UniPoly monomial(unsigned k, const Coeff& c) {
        std::vector<Coeff> v(k + 1, Coeff(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    /// (1 - x)^k
    static UniPoly one_minus_x_pow(unsigned k) {
        UniPoly base(std::vector<Coeff>{Coeff(1), Coeff(-1)});
        UniPoly out = constant(Coeff(1));
        for (unsigned i = 0; i < k; ++i) out = out * base;
        return out;
    }

    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Coeff coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }

    template <class T>
    T evaluate(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    /// p(1 - x). Applying it twice gives p back.
    UniPoly reflected() const {
        UniPoly out;
        UniPoly power = constant(Coeff(1));
        UniPoly one_minus(std::vector<Coeff>{Coeff(1), Coeff(-1)});
        for (const auto& c : coeffs_) {
            out = out + power * c;
            power = power * one_minus;
        }
        return out;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& a, const Coeff& s) {
        std::vector<Coeff> v(a.coeffs_);
        for (auto& c : v) c *= s;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(v));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
            if (p.coeffs_[k] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << p.coeffs_[k] << ")";
            if (k > 0) os << "*z^" << k;
        }
        return os;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

} // namespace blockcrit::exactalg
