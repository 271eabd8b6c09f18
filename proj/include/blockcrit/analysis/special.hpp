#pragma once

#include <cmath>
#include <string>

#include <mpfr.h>

#include <boost/math/special_functions/expint.hpp>

#include "blockcrit/error.hpp"

namespace blockcrit::analysis {

/// Half the standard exponential integral: (1/2) int_x^inf e^{-t} dt / t.
inline double exp_integral_E1(double x) {
    if (!(x > 0.0))
        throw ValidationError("exp_integral_E1: need x > 0, got " + std::to_string(x));
    if (std::isinf(x)) return 0.0;
    return 0.5 * boost::math::expint(1, x);
}

namespace detail {

/// Owning mpfr_t with a fixed precision.
class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    ~MpfrValue() { mpfr_clear(v_); }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

private:
    mpfr_t v_;
};

/// 1/Gamma(a); exactly zero at the poles a = 0, -1, -2, ...
inline void reciprocal_gamma(mpfr_ptr out, mpfr_srcptr a) {
    if (mpfr_integer_p(a) && mpfr_sgn(a) <= 0) {
        mpfr_set_zero(out, 1);
        return;
    }
    mpfr_gamma(out, a, MPFR_RNDN);
    mpfr_ui_div(out, 1, out, MPFR_RNDN);
}

/// Working precision for the A(y, lambda) series. The partial sums peak
/// around exp(3|x|^3 / 8 ...) before cancelling, and the prefactor is
/// exp(-lambda^3 / 6), so the digit budget grows like |lambda|^3.
inline mpfr_prec_t airy_series_precision(double lambda) {
    double digits = 40.0 + 0.25 * std::abs(lambda * lambda * lambda);
    return static_cast<mpfr_prec_t>(digits * 3.33) + 64;
}

} // namespace detail

struct AirySeriesOptions {
    /// Stop once this many consecutive terms are below tol * |partial sum|.
    int quiet_terms = 5;
    long max_terms = 2'000'000;
};

/// A(y, lambda) = e^{-lambda^3/6} / 3^{(y+1)/3}
///                * sum_k (3^{2/3} lambda / 2)^k / (k! Gamma((y+1-2k)/3)).
///
/// Summed in multiple precision: for |lambda| beyond ~2 the terms grow far
/// past the result before cancelling. Terms of residue class k mod 3 share a
/// Gamma argument shifted by -2 per step, so only three Gamma evaluations are
/// needed; the rest are rational recurrences.
inline double airy_A(double y, double lambda, double series_tol, const AirySeriesOptions& opt = {}) {
    if (!std::isfinite(y) || !std::isfinite(lambda))
        throw ValidationError("airy_A: non-finite input");
    if (!(series_tol > 0.0 && series_tol < 1.0))
        throw ValidationError("airy_A: series tolerance must lie in (0, 1)");

    using detail::MpfrValue;
    const mpfr_prec_t prec = detail::airy_series_precision(lambda);

    MpfrValue x(prec), power(prec), sum(prec), term(prec), tmp(prec), tol(prec);
    // x = 3^{2/3} lambda / 2
    mpfr_set_ui(x.get(), 3, MPFR_RNDN);
    mpfr_set_d(tmp.get(), 2.0, MPFR_RNDN);
    mpfr_div_ui(tmp.get(), tmp.get(), 3, MPFR_RNDN);
    mpfr_pow(x.get(), x.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul_d(x.get(), x.get(), lambda, MPFR_RNDN);
    mpfr_div_ui(x.get(), x.get(), 2, MPFR_RNDN);

    // base[j] = (y + 1 - 2j)/3, rgamma[j] = 1/Gamma(base[j] - 2m), advanced as m grows
    MpfrValue base0(prec), base1(prec), base2(prec), rg0(prec), rg1(prec), rg2(prec);
    mpfr_ptr base[3] = {base0.get(), base1.get(), base2.get()};
    mpfr_ptr rgamma[3] = {rg0.get(), rg1.get(), rg2.get()};
    for (int j = 0; j < 3; ++j) {
        mpfr_set_d(base[j], y, MPFR_RNDN);
        mpfr_add_si(base[j], base[j], 1 - 2 * j, MPFR_RNDN);
        mpfr_div_ui(base[j], base[j], 3, MPFR_RNDN);
        detail::reciprocal_gamma(rgamma[j], base[j]);
    }

    mpfr_set_ui(power.get(), 1, MPFR_RNDN);
    mpfr_set_zero(sum.get(), 1);
    int quiet = 0;
    long k = 0;
    for (;; ++k) {
        if (k >= opt.max_terms)
            throw NumericalError("airy_A: series did not settle within " + std::to_string(opt.max_terms) +
                                     " terms",
                                 mpfr_get_d(sum.get(), MPFR_RNDN));
        const int j = static_cast<int>(k % 3);
        const long m = k / 3;
        mpfr_mul(term.get(), power.get(), rgamma[j], MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);

        // 1/Gamma(a - 2m - 2) = (a - 2m - 1)(a - 2m - 2) / Gamma(a - 2m)
        mpfr_sub_si(tmp.get(), base[j], 2 * m + 1, MPFR_RNDN);
        mpfr_mul(rgamma[j], rgamma[j], tmp.get(), MPFR_RNDN);
        mpfr_sub_si(tmp.get(), base[j], 2 * m + 2, MPFR_RNDN);
        mpfr_mul(rgamma[j], rgamma[j], tmp.get(), MPFR_RNDN);

        mpfr_mul_d(tol.get(), sum.get(), series_tol, MPFR_RNDN);
        if (mpfr_cmpabs(term.get(), tol.get()) < 0 || mpfr_zero_p(term.get()))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= opt.quiet_terms) break;

        mpfr_mul(power.get(), power.get(), x.get(), MPFR_RNDN);
        mpfr_div_ui(power.get(), power.get(), static_cast<unsigned long>(k + 1), MPFR_RNDN);
    }

    // e^{-lambda^3/6} 3^{-(y+1)/3}
    MpfrValue scale(prec);
    mpfr_set_d(tmp.get(), lambda, MPFR_RNDN);
    mpfr_pow_ui(tmp.get(), tmp.get(), 3, MPFR_RNDN);
    mpfr_div_si(tmp.get(), tmp.get(), -6, MPFR_RNDN);
    mpfr_exp(scale.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(sum.get(), sum.get(), scale.get(), MPFR_RNDN);
    mpfr_set_d(tmp.get(), -(y + 1.0), MPFR_RNDN);
    mpfr_div_ui(tmp.get(), tmp.get(), 3, MPFR_RNDN);
    mpfr_set_ui(scale.get(), 3, MPFR_RNDN);
    mpfr_pow(scale.get(), scale.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(sum.get(), sum.get(), scale.get(), MPFR_RNDN);
    return mpfr_get_d(sum.get(), MPFR_RNDN);
}

} // namespace blockcrit::analysis
