#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "blockcrit/error.hpp"

namespace blockcrit::analysis {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

template <class F>
struct SimpsonState {
    F& f;
    std::size_t evaluations = 0;
    int max_depth;
    bool exhausted = false;

    double eval(double x) {
        ++evaluations;
        double v = f(x);
        if (!std::isfinite(v))
            throw NumericalError("quadrature: integrand is not finite at x = " + std::to_string(x), v);
        return v;
    }

    // Simpson on [a, b] with known fa, fm, fb and whole-panel estimate s.
    double refine(double a, double b, double fa, double fm, double fb, double s, double eps, int depth,
                  double& err) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = eval(lm), frm = eval(rm);
        const double h = (b - a) / 12.0;
        const double left = h * (fa + 4.0 * flm + fm);
        const double right = h * (fm + 4.0 * frm + fb);
        const double s2 = left + right;
        const double delta = s2 - s;
        if (std::abs(delta) <= 15.0 * eps || depth >= max_depth || m <= a || b <= m) {
            if (depth >= max_depth && std::abs(delta) > 15.0 * eps) exhausted = true;
            err += std::abs(delta) / 15.0;
            return s2 + delta / 15.0;
        }
        return refine(a, m, fa, flm, fm, left, 0.5 * eps, depth + 1, err) +
               refine(m, b, fm, frm, fb, right, 0.5 * eps, depth + 1, err);
    }
};

} // namespace detail

/// Adaptive Simpson with Richardson extrapolation on [a, b].
///
/// The interval is first cut into `panels` pieces so that the tolerance
/// scale comes from a reasonable estimate of the integral. `rel_tol` is
/// relative to that estimate, with `abs_floor` as an absolute minimum.
/// When the depth limit is hit without meeting the tolerance, throws
/// NumericalError carrying the best estimate.
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol, double abs_floor = 1e-300, int max_depth = 50,
                     int panels = 16) {
    if (!(rel_tol > 0.0)) throw ValidationError("integrate: tolerance must be positive");
    if (!std::isfinite(a) || !std::isfinite(b)) throw ValidationError("integrate: bounds must be finite");
    if (a == b) return {};
    if (b < a) {
        auto r = integrate(f, b, a, rel_tol, abs_floor, max_depth, panels);
        r.value = -r.value;
        return r;
    }

    detail::SimpsonState<std::remove_reference_t<F>> st{f, 0, max_depth};
    const double width = (b - a) / panels;
    std::vector<double> xs(2 * panels + 1), fs(2 * panels + 1);
    for (int i = 0; i <= 2 * panels; ++i) {
        xs[i] = (i == 2 * panels) ? b : a + 0.5 * width * i;
        fs[i] = st.eval(xs[i]);
    }
    std::vector<double> coarse(panels);
    double scale = 0.0;
    for (int p = 0; p < panels; ++p) {
        coarse[p] = (xs[2 * p + 2] - xs[2 * p]) / 6.0 * (fs[2 * p] + 4.0 * fs[2 * p + 1] + fs[2 * p + 2]);
        scale += std::abs(coarse[p]);
    }
    const double eps = std::max(rel_tol * scale, abs_floor) / panels;

    QuadResult out;
    for (int p = 0; p < panels; ++p)
        out.value += st.refine(xs[2 * p], xs[2 * p + 2], fs[2 * p], fs[2 * p + 1], fs[2 * p + 2], coarse[p], eps, 0,
                               out.error);
    out.evaluations = st.evaluations;
    if (st.exhausted)
        throw NumericalError("integrate: tolerance " + std::to_string(rel_tol) + " not reached (error estimate " +
                                 std::to_string(out.error) + ")",
                             out.value);
    return out;
}

} // namespace blockcrit::analysis
