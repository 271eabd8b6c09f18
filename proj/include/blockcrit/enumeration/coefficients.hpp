#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blockcrit/enumeration/cubic.hpp"
#include "blockcrit/enumeration/trees.hpp"
#include "blockcrit/error.hpp"
#include "blockcrit/exactalg/compose.hpp"
#include "blockcrit/exactalg/laurent_series.hpp"
#include "blockcrit/exactalg/uni_poly.hpp"

namespace blockcrit::enumeration {

using Series = exactalg::LaurentSeries<BigRational>;
using RatPoly = exactalg::UniPoly<BigRational>;

/// beta_s(w) = (s-1)!/2 + sum_{l=1}^{rmax-1} b_l (3l)(3l+1)...(3l+s-1) w^l,
/// exact through w^{rmax-1}. `b[l-1]` holds b_l; at least rmax-1 entries.
inline Series beta_series(int s, int rmax, std::span<const BigRational> b) {
    if (s < 1) throw ValidationError("beta_series: need s >= 1, got " + std::to_string(s));
    if (rmax < 1) throw ValidationError("beta_series: need rmax >= 1, got " + std::to_string(rmax));
    if (b.size() + 1 < static_cast<std::size_t>(rmax))
        throw ValidationError("beta_series: need b_1 .. b_" + std::to_string(rmax - 1) + ", have " +
                              std::to_string(b.size()));
    Series out(0, rmax - 1);
    out.set_coefficient(0, BigRational(exactalg::factorial(static_cast<unsigned>(s - 1)), 2));
    for (int l = 1; l <= rmax - 1; ++l) {
        BigInt rising = 1;
        for (int i = 1; i <= s; ++i) rising *= 3 * l + (s - i);
        out.set_coefficient(l, b[l - 1] * BigRational(rising));
    }
    return out;
}

inline Series beta_series(int s, int rmax) {
    CubicBlockCounter counter;
    std::vector<BigRational> b;
    for (int l = 1; l <= rmax - 1; ++l) b.push_back(counter.b(l));
    return beta_series(s, rmax, b);
}

/// Arguments (beta_1, beta_2, beta_3 + w^-1, beta_4, ..., beta_d) for U_{d+1}.
inline std::vector<Series> bridge_tree_arguments(int d, int rmax, std::span<const BigRational> b) {
    std::vector<Series> args;
    args.reserve(d);
    for (int s = 1; s <= d; ++s) {
        Series beta = beta_series(s, rmax, b);
        if (s == 3) beta = beta + Series::monomial(-1, BigRational(1), beta.order());
        args.push_back(std::move(beta));
    }
    return args;
}

/// c_{r,d} for every r in [1, rmax] from one composition of U_{d+1}.
/// Entry r-1 of the result is c_{r,d} (zero when d > 2r-1).
inline std::vector<BigRational> coeff_c_column(int d, int rmax, std::span<const BigRational> b,
                                               const TreePoly& u_d_plus_1) {
    if (d < 1) throw ValidationError("coeff_c_column: need d >= 1, got " + std::to_string(d));
    if (u_d_plus_1.arity() != static_cast<std::size_t>(d))
        throw ValidationError("coeff_c_column: U_{d+1} must have arity d");
    std::vector<BigRational> out(rmax, BigRational(0));
    // [w^r] U(...) w^d = [w^{r-d}] U(...)
    Series composed = exactalg::laurent_compose_poly(u_d_plus_1, bridge_tree_arguments(d, rmax, b), rmax - d);
    for (int r = 1; r <= rmax; ++r)
        if (d <= 2 * r - 1) out[r - 1] = composed.coefficient(r - d);
    return out;
}

/// c_{r,d} computed from scratch, with the beta series truncated at r-1.
/// `b[l-1]` = b_l for l = 1 .. r (b_r is returned directly for d = 0).
inline BigRational coeff_c(int r, int d, std::span<const BigRational> b) {
    if (r < 1) throw ValidationError("coeff_c: need r >= 1, got " + std::to_string(r));
    if (d < 0) throw ValidationError("coeff_c: need d >= 0, got " + std::to_string(d));
    if (d > 2 * r - 1) return BigRational(0);
    if (b.size() < static_cast<std::size_t>(r))
        throw ValidationError("coeff_c: c_{" + std::to_string(r) + "," + std::to_string(d) +
                              "} needs b_1 .. b_" + std::to_string(r) + " but only " +
                              std::to_string(b.size()) + " are available");
    if (d == 0) return b[r - 1];
    Series composed =
        exactalg::laurent_compose_poly(tree_gf(static_cast<unsigned>(d + 1)), bridge_tree_arguments(d, r, b), r - d);
    return composed.coefficient(r - d);
}

using CoeffGrid = std::map<std::pair<int, int>, BigRational>;
using PolyGrid = std::map<std::pair<int, int>, RatPoly>;

inline BigRational grid_at(const CoeffGrid& c, int r, int d) {
    auto it = c.find({r, d});
    return it == c.end() ? BigRational(0) : it->second;
}

/// e_{r,d} for 1 <= r <= rmax, 0 <= d <= 2r-1, following
///   e_{r,d} = (1-z)^{d+1} (c_{r,d} + (1/r) sum_{j=1}^{r-1} j c_{j,d} e_{r-j,d})
/// literally (same d on both sides), plus e_{0,0} = 1.
/// Polynomials are returned in z.
inline PolyGrid poly_e_table(const CoeffGrid& c, int rmax) {
    // Work in y = 1 - z, where (1 - z)^{d+1} is a monomial.
    PolyGrid in_y;
    for (int r = 1; r <= rmax; ++r) {
        for (int d = 0; d <= 2 * r - 1; ++d) {
            RatPoly acc = RatPoly::constant(grid_at(c, r, d));
            for (int j = 1; j <= r - 1; ++j) {
                auto prev = in_y.find({r - j, d});
                if (prev == in_y.end()) continue;
                acc = acc + prev->second * (BigRational(j, r) * grid_at(c, j, d));
            }
            in_y[{r, d}] = acc * RatPoly::monomial(static_cast<unsigned>(d + 1), BigRational(1));
        }
    }
    PolyGrid out;
    out[{0, 0}] = RatPoly::constant(BigRational(1));
    for (const auto& [key, p] : in_y) out[key] = p.reflected();
    return out;
}

/// Same index range, but from the full exponential composition
///   sum_r w^r E_r(y) = exp(sum_{j,d} c_{j,d} w^j y^{d+1}),   y = 1 - z,
/// so that complex parts mixing components with different bridge counts are
/// kept. e_{r,d} is the y^{d+1} part of E_r. Summed over d at z = 0 this
/// reproduces the complex-graph constants e_r exactly.
inline PolyGrid poly_e_mixed_table(const CoeffGrid& c, int rmax) {
    std::vector<RatPoly> connected(rmax + 1), complex(rmax + 1);
    complex[0] = RatPoly::constant(BigRational(1));
    for (int j = 1; j <= rmax; ++j)
        for (int d = 0; d <= 2 * j - 1; ++d)
            connected[j] = connected[j] + RatPoly::monomial(static_cast<unsigned>(d + 1), grid_at(c, j, d));
    for (int r = 1; r <= rmax; ++r) {
        RatPoly acc;
        for (int j = 1; j <= r; ++j) acc = acc + connected[j] * complex[r - j] * BigRational(j, r);
        complex[r] = acc;
    }
    PolyGrid out;
    out[{0, 0}] = RatPoly::constant(BigRational(1));
    for (int r = 1; r <= rmax; ++r)
        for (int d = 0; d <= 2 * r - 1; ++d)
            out[{r, d}] =
                RatPoly::monomial(static_cast<unsigned>(d + 1), complex[r].coefficient(static_cast<unsigned>(d + 1)))
                    .reflected();
    return out;
}

/// Complex-graph constant e_r = (6r)! / (2^{5r} 3^{2r} (3r)! (2r)!).
inline BigRational complex_constant(int r) {
    if (r < 0) throw ValidationError("complex_constant: need r >= 0");
    using exactalg::factorial;
    BigInt den = (BigInt(1) << (5 * r)) * boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(2 * r)) *
                 factorial(static_cast<unsigned>(3 * r)) * factorial(static_cast<unsigned>(2 * r));
    return BigRational(factorial(static_cast<unsigned>(6 * r)), den);
}

} // namespace blockcrit::enumeration
