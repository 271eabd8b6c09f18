#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "blockcrit/analysis/quadrature.hpp"
#include "blockcrit/analysis/special.hpp"
#include "blockcrit/enumeration/tables.hpp"
#include "blockcrit/error.hpp"

namespace blockcrit::analysis {

/// Which e_{r,d} family feeds the c2 integrand.
enum class Composition {
    /// exp-consistent composition; sums over d to the complex constants e_r.
    mixed,
    /// same-d recurrence, taken literally.
    verbatim,
};

inline std::string to_string(Composition c) { return c == Composition::mixed ? "mixed" : "verbatim"; }

inline Composition parse_composition(const std::string& s) {
    if (s == "mixed") return Composition::mixed;
    if (s == "verbatim") return Composition::verbatim;
    throw ValidationError("unknown composition '" + s + "' (expected mixed or verbatim)");
}

struct AnalysisConfig {
    double quadTol = 1e-8;
    double seriesTol = 1e-14;
    int rmax = 6;
    double uMax = 50.0;
    Composition composition = Composition::mixed;
    /// |integrand - tailMass| below this marks the start of the flat tail.
    double flatTol = 1e-9;
    /// Largest tolerated truncation defect for c2.
    double maxTailMass = 0.05;

    void validate() const {
        if (!(quadTol > 0.0 && quadTol < 1.0)) throw ValidationError("quadTol must lie in (0, 1)");
        if (!(seriesTol > 0.0 && seriesTol < 1.0)) throw ValidationError("seriesTol must lie in (0, 1)");
        if (rmax < 1) throw ValidationError("rmax must be >= 1");
        if (!(uMax > 0.0) || !std::isfinite(uMax)) throw ValidationError("uMax must be positive and finite");
        if (!(flatTol > 0.0)) throw ValidationError("flatTol must be positive");
    }
};

/// Positive root of lambda = 1/alpha - alpha.
inline double alpha_of_lambda(double lambda) {
    if (!std::isfinite(lambda)) throw ValidationError("alpha_of_lambda: non-finite lambda");
    // (sqrt(l^2+4) - l)/2, written to avoid cancellation for large positive l
    const double root = std::hypot(lambda, 2.0);
    return lambda <= 0.0 ? 0.5 * (root - lambda) : 2.0 / (root + lambda);
}

inline double airy_A(double y, double lambda, const AnalysisConfig& cfg) {
    return airy_A(y, lambda, cfg.seriesTol);
}

struct C1Result {
    double value = 0.0;
    /// Quadrature error estimate plus the bound on the part beyond uMax.
    double error = 0.0;
    double tailBound = 0.0;
};

/// c1 = int_0^inf (1 - exp(-E1(v))) dv, integrated in t = sqrt(v) so the
/// sqrt-like behaviour at v = 0 becomes smooth.
inline C1Result compute_c1_detailed(const AnalysisConfig& cfg = {}) {
    cfg.validate();
    auto f = [](double t) {
        if (t <= 0.0) return 0.0;
        const double v = t * t;
        return 2.0 * t * -std::expm1(-exp_integral_E1(v));
    };
    C1Result out;
    QuadResult q = integrate(f, 0.0, std::sqrt(cfg.uMax), cfg.quadTol);
    out.value = q.value;
    out.tailBound = 0.5 * std::exp(-cfg.uMax);
    out.error = q.error + out.tailBound;
    return out;
}

inline double compute_c1(const AnalysisConfig& cfg = {}) { return compute_c1_detailed(cfg).value; }

/// The c2 integrand with everything that does not depend on u precomputed:
///   1 - sqrt(2 pi) e^{-E1(u)} sum_{r<=rmax} A(3r+1/2, lambda) sum_d e_{r,d}(e^{-u}).
/// The e_{r,d} are summed over d and held in y = 1 - z, where all
/// coefficients are nonnegative.
class C2Integrand {
public:
    C2Integrand(double lambda, const enumeration::CoeffTables& tables, const AnalysisConfig& cfg)
        : lambda_(lambda) {
        cfg.validate();
        if (tables.rmax < cfg.rmax)
            throw ValidationError("compute_c2: tables cover rmax = " + std::to_string(tables.rmax) +
                                  " but cfg.rmax = " + std::to_string(cfg.rmax));
        const auto& grid = cfg.composition == Composition::mixed ? tables.e_mixed : tables.e;
        const double root2pi = std::sqrt(2.0 * std::numbers::pi);
        for (int r = 0; r <= cfg.rmax; ++r) {
            enumeration::RatPoly in_z;
            for (int d = 0; d <= std::max(0, 2 * r - 1); ++d) {
                auto it = grid.find({r, d});
                if (it != grid.end()) in_z = in_z + it->second;
            }
            const auto in_y = in_z.reflected();
            std::vector<double> coeffs;
            for (const auto& q : in_y.coeffs()) coeffs.push_back(exactalg::to_double(q));
            weights_.push_back(root2pi * airy_A(3.0 * r + 0.5, lambda, cfg.seriesTol));
            polys_.push_back(std::move(coeffs));
            mass_.push_back(weights_.back() * exactalg::to_double(in_z.evaluate<BigRational>(BigRational(0))));
        }
    }

    double lambda() const noexcept { return lambda_; }

    double operator()(double u) const {
        if (!(u > 0.0)) throw ValidationError("c2_integrand: need u > 0, got " + std::to_string(u));
        const double y = -std::expm1(-u);
        double s = 0.0;
        for (std::size_t r = 0; r < polys_.size(); ++r) s += weights_[r] * horner(polys_[r], y);
        return 1.0 - std::exp(-exp_integral_E1(u)) * s;
    }

    /// sqrt(2 pi) A(3r+1/2, lambda) sum_d e_{r,d}(0): the limiting probability
    /// carried by excess r.
    const std::vector<double>& per_r_contribution() const noexcept { return mass_; }

    /// 1 - sum of per_r_contribution(); the u -> inf limit of the integrand.
    double tail_mass() const {
        double s = 0.0;
        for (double m : mass_) s += m;
        return 1.0 - s;
    }

private:
    using BigRational = exactalg::BigRational;

    static double horner(const std::vector<double>& c, double y) {
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + c[i];
        return acc;
    }

    double lambda_;
    std::vector<double> weights_;
    std::vector<std::vector<double>> polys_;
    std::vector<double> mass_;
};

/// One evaluation of the c2 integrand. Recomputes the A(3r+1/2, lambda)
/// weights on every call; build a C2Integrand to evaluate many points.
inline double c2_integrand(double u, double lambda, const enumeration::CoeffTables& tables,
                           const AnalysisConfig& cfg = {}) {
    if (!(u > 0.0)) throw ValidationError("c2_integrand: need u > 0, got " + std::to_string(u));
    return C2Integrand(lambda, tables, cfg)(u);
}

struct C2Breakdown {
    double lambda = 0.0;
    double alpha = 0.0;
    double value = 0.0;
    double tailMass = 0.0;
    std::vector<double> perRContribution;
    /// Start of the flat tail where tailMass is subtracted.
    double uStar = 0.0;
    /// tailMass * uStar / alpha: how much the value would move if the
    /// truncation defect were counted over [0, uStar] too.
    double tailSensitivity = 0.0;
    double quadError = 0.0;
    int rmax = 0;
    Composition composition = Composition::mixed;
};

/// c2(lambda) = (1/alpha) int_0^inf (integrand(u)) du with the truncation
/// defect removed: the constant tailMass is subtracted from the point uStar
/// on where the integrand has settled onto it.
inline C2Breakdown compute_c2(double lambda, const enumeration::CoeffTables& tables, const AnalysisConfig& cfg = {}) {
    C2Integrand f(lambda, tables, cfg);
    C2Breakdown out;
    out.lambda = lambda;
    out.alpha = alpha_of_lambda(lambda);
    out.rmax = cfg.rmax;
    out.composition = cfg.composition;
    out.perRContribution = f.per_r_contribution();
    out.tailMass = f.tail_mass();

    const double tail = out.tailMass;
    out.uStar = cfg.uMax;
    for (double u = 0.5; u < cfg.uMax; u += 0.5) {
        if (std::abs(f(u) - tail) < cfg.flatTol) {
            out.uStar = u;
            break;
        }
    }

    auto head = [&](double t) {
        if (t <= 0.0) return 0.0;
        return 2.0 * t * f(t * t);
    };
    auto rest = [&](double u) { return f(u) - tail; };

    double value = 0.0, err = 0.0;
    try {
        QuadResult q1 = integrate(head, 0.0, std::sqrt(out.uStar), cfg.quadTol);
        value += q1.value;
        err += q1.error;
        if (out.uStar < cfg.uMax) {
            QuadResult q2 = integrate(rest, out.uStar, cfg.uMax, cfg.quadTol, cfg.quadTol * std::abs(q1.value));
            value += q2.value;
            err += q2.error;
        }
    } catch (const NumericalError& ex) {
        throw NumericalError(std::string("compute_c2: ") + ex.what(), (value + ex.best_estimate()) / out.alpha);
    }
    out.value = value / out.alpha;
    out.quadError = err / out.alpha;
    out.tailSensitivity = tail * out.uStar / out.alpha;

    if (out.tailMass > cfg.maxTailMass)
        throw NumericalError("compute_c2: truncation defect tailMass = " + std::to_string(out.tailMass) +
                                 " at lambda = " + std::to_string(lambda) + " exceeds " +
                                 std::to_string(cfg.maxTailMass) + " with rmax = " + std::to_string(cfg.rmax) +
                                 "; increase rmax",
                             out.value);
    return out;
}

} // namespace blockcrit::analysis
