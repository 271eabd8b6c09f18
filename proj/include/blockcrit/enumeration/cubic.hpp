#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blockcrit/error.hpp"
#include "blockcrit/exactalg/big_rational.hpp"

namespace blockcrit::enumeration {

using exactalg::BigInt;
using exactalg::BigRational;

/// t_0 .. t_nmax of the connected simple cubic recurrence
///   t_1 = 0, t_2 = 1, t_n = 3n t_{n-1} + 2 t_{n-2} + (3n-1) sum_{i=2}^{n-3} t_i t_{n-1-i}.
/// t_0 is a zero placeholder so that t[n] reads naturally.
inline std::vector<BigInt> cubic_t(unsigned nmax) {
    if (nmax < 2) throw ValidationError("cubic_t: need nmax >= 2, got " + std::to_string(nmax));
    std::vector<BigInt> t(nmax + 1, BigInt(0));
    t[2] = 1;
    for (unsigned n = 3; n <= nmax; ++n) {
        BigInt conv = 0;
        for (unsigned i = 2; i + 3 <= n; ++i) conv += t[i] * t[n - 1 - i];
        t[n] = BigInt(3 * n) * t[n - 1] + 2 * t[n - 2] + BigInt(3 * n - 1) * conv;
    }
    return t;
}

/// Counts of 2-connected labelled cubic multigraphs g(s, d) (s single edges,
/// d double edges, 2n vertices with 3n = s + 2d) and the block constants b_r.
/// Memoizes everything it computes; one instance is meant to be reused
/// across a whole table build.
class CubicBlockCounter {
public:
    BigInt g(int s, int d) {
        if (s < 0 || d < 0)
            throw ValidationError("cubic_g: negative argument (" + std::to_string(s) + ", " +
                                  std::to_string(d) + ")");
        // fewer than two single edges: no such graph, whatever d is
        if (s < 2) return 0;
        if ((s + 2 * d) % 3 != 0)
            throw ValidationError("cubic_g: s + 2d = " + std::to_string(s + 2 * d) +
                                  " is not a multiple of 3");
        return g_impl(s, d);
    }

    BigRational b(int r) {
        if (r < 1) throw ValidationError("block_b: need r >= 1, got " + std::to_string(r));
        // The excess-1 kernel is the theta graph (a triple edge), which g
        // does not count.
        if (r == 1) return BigRational(1, 12);
        BigRational sum = 0;
        BigInt fact = exactalg::factorial(static_cast<unsigned>(2 * r));
        for (int d = 0; 2 * d <= 3 * r; ++d) {
            BigInt gv = g_impl(3 * r - 2 * d, d);
            if (gv == 0) continue;
            sum += BigRational(gv, (BigInt(1) << d) * fact);
        }
        return sum;
    }

    const std::map<std::pair<int, int>, BigInt>& memo() const noexcept { return memo_; }

    /// t_0 .. t_n (grown on demand).
    const std::vector<BigInt>& t(unsigned n) {
        if (t_.size() <= n) t_ = cubic_t(std::max(2u, n));
        return t_;
    }

private:
    BigInt g_impl(int s, int d) {
        if (s < 2) return 0;
        auto key = std::make_pair(s, d);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        BigInt value;
        if (s == d) {
            value = exactalg::factorial(static_cast<unsigned>(2 * s - 1));
        } else if (d == 0) {
            const unsigned n = static_cast<unsigned>(s / 3);
            if (n < 2) {
                value = 0;
            } else {
                const auto& tv = t(n);
                BigRational v(exactalg::factorial(2 * n), BigInt(3 * n) * (BigInt(1) << n));
                v *= BigRational(tv[n] - 2 * tv[n - 1]);
                value = require_integer(v, s, d);
            }
        } else {
            const int n = (s + 2 * d) / 3;
            BigRational inner = BigRational(s - 1, d) * BigRational(g_impl(s - 1, d - 1));
            inner += BigRational(g_impl(s - 3, d));
            value = require_integer(BigRational(BigInt(2 * n) * BigInt(2 * n - 1)) * inner, s, d);
        }
        memo_.emplace(key, value);
        return value;
    }

    static BigInt require_integer(const BigRational& v, int s, int d) {
        if (exactalg::denominator_of(v) != 1)
            throw NumericalError("cubic_g(" + std::to_string(s) + ", " + std::to_string(d) +
                                     ") is not an integer: " + exactalg::to_string(v),
                                 exactalg::to_double(v));
        return exactalg::numerator_of(v);
    }

    std::map<std::pair<int, int>, BigInt> memo_;
    std::vector<BigInt> t_;
};

inline BigInt cubic_g(int s, int d) { return CubicBlockCounter{}.g(s, d); }

inline BigRational block_b(int r) { return CubicBlockCounter{}.b(r); }

} // namespace blockcrit::enumeration
