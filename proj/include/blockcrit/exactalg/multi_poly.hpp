#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "blockcrit/error.hpp"

namespace blockcrit::exactalg {

/// Sparse multivariate polynomial in variables x_1 ... x_m over a field `Coeff`.
///
/// Terms live in an ordered map keyed by exponent vector, so iteration order
/// (and anything serialized from it) is deterministic. Zero coefficients are
/// never stored. Every exponent vector has exactly `arity()` entries; binary
/// operations require equal arity and throw `ValidationError` otherwise.
/// Variable indices in the public interface are 1-based, matching the usual
/// mathematical notation x_1 ... x_m.
template <class Coeff>
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Coeff>;

    explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

    static MultiPoly constant(std::size_t arity, const Coeff& c) {
        MultiPoly p(arity);
        p.add_term(Exponents(arity, 0), c);
        return p;
    }

    /// The monomial x_index.
    static MultiPoly variable(std::size_t arity, std::size_t index) {
        MultiPoly p(arity);
        p.check_index(index);
        Exponents e(arity, 0);
        e[index - 1] = 1;
        p.add_term(std::move(e), Coeff(1));
        return p;
    }

    std::size_t arity() const noexcept { return arity_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coefficient(const Exponents& e) const {
        check_exponents(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /// Adds c * x^e, merging with an existing term and pruning zeros.
    void add_term(Exponents e, const Coeff& c) {
        check_exponents(e);
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Same polynomial viewed in more (or fewer) variables. Dropping a
    /// variable that actually occurs is an error.
    MultiPoly with_arity(std::size_t arity) const {
        MultiPoly out(arity);
        for (const auto& [e, c] : terms_) {
            Exponents f(arity, 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i < arity)
                    f[i] = e[i];
                else if (e[i] != 0)
                    throw ValidationError("with_arity: variable x_" + std::to_string(i + 1) + " occurs");
            }
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    MultiPoly& operator*=(const Coeff& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Coeff& s) { return a *= s; }
    friend MultiPoly operator*(const Coeff& s, MultiPoly a) { return a *= s; }

    friend MultiPoly operator-(MultiPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_arity(b);
        MultiPoly out(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Formal partial derivative with respect to x_index.
    friend MultiPoly partial(const MultiPoly& p, std::size_t index) {
        p.check_index(index);
        MultiPoly out(p.arity_);
        for (const auto& [e, c] : p.terms_) {
            unsigned k = e[index - 1];
            if (k == 0) continue;
            Exponents f(e);
            f[index - 1] = k - 1;
            out.add_term(std::move(f), c * Coeff(k));
        }
        return out;
    }

    /// Antiderivative in x_1 with lower limit 0.
    friend MultiPoly integrate_var1(const MultiPoly& p) {
        if (p.arity_ == 0) throw ValidationError("integrate_var1: polynomial has no variables");
        MultiPoly out(p.arity_);
        for (const auto& [e, c] : p.terms_) {
            Exponents f(e);
            f[0] += 1;
            Coeff denom(f[0]);
            out.add_term(std::move(f), c / denom);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
        if (p.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os;
    }

private:
    void check_same_arity(const MultiPoly& o) const {
        if (o.arity_ != arity_)
            throw ValidationError("arity mismatch: " + std::to_string(arity_) + " vs " +
                                  std::to_string(o.arity_));
    }

    void check_index(std::size_t index) const {
        if (index < 1 || index > arity_)
            throw ValidationError("variable index " + std::to_string(index) + " outside 1.." +
                                  std::to_string(arity_));
    }

    void check_exponents(const Exponents& e) const {
        if (e.size() != arity_)
            throw ValidationError("exponent vector of length " + std::to_string(e.size()) +
                                  " for arity " + std::to_string(arity_));
    }

    std::size_t arity_;
    TermMap terms_;
};

} // namespace blockcrit::exactalg
