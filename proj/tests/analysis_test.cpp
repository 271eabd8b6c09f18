#include <cmath>
#include <map>
#include <numbers>

#include <gtest/gtest.h>

#include "blockcrit/analysis/constants.hpp"

using namespace blockcrit;
using namespace blockcrit::analysis;

namespace {

const double kRoot2Pi = std::sqrt(2.0 * std::numbers::pi);

const enumeration::CoeffTables& tables(int rmax) {
    static std::map<int, enumeration::CoeffTables> cache;
    auto it = cache.find(rmax);
    if (it == cache.end()) it = cache.emplace(rmax, enumeration::tables_build(rmax)).first;
    return it->second;
}

// Half the standard E1 from its convergent series.
double half_e1_series(double x) {
    double sum = 0.0, term = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -x / k;
        sum += term / k;
    }
    return 0.5 * (-std::numbers::egamma - std::log(x) - sum);
}

// A(y, lambda) in plain double precision, straight from the series; only
// trustworthy for small |lambda|.
double airy_double(double y, double lambda) {
    const double x = 0.5 * std::cbrt(9.0) * lambda;
    double sum = 0.0, power = 1.0;
    for (int k = 0; k < 120; ++k) {
        const double a = (y + 1.0 - 2.0 * k) / 3.0;
        const double rg = (a <= 0.0 && a == std::floor(a)) ? 0.0 : 1.0 / std::tgamma(a);
        sum += power * rg;
        power *= x / (k + 1);
    }
    return std::exp(-lambda * lambda * lambda / 6.0) * std::pow(3.0, -(y + 1.0) / 3.0) * sum;
}

double complex_e(int r) {
    return exactalg::to_double(enumeration::complex_constant(r));
}

double normalization(double lambda, int R) {
    double s = 0.0;
    for (int r = 0; r <= R; ++r) s += kRoot2Pi * airy_A(3.0 * r + 0.5, lambda, 1e-14) * complex_e(r);
    return s;
}

AnalysisConfig with_rmax(int rmax) {
    AnalysisConfig cfg;
    cfg.rmax = rmax;
    return cfg;
}

} // namespace

TEST(ExpIntegral, MatchesSeriesAndQuadrature) {
    EXPECT_NEAR(exp_integral_E1(1.0), 0.1096920, 5e-8);
    for (double x : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0})
        EXPECT_NEAR(exp_integral_E1(x), half_e1_series(x), 1e-12 * std::max(1.0, exp_integral_E1(x))) << x;
    // (1/2) int_1^inf e^-t/t dt with t = 1/s on (0, 1]
    auto f = [](double s) { return s <= 0.0 ? 0.0 : 0.5 * std::exp(-1.0 / s) / s; };
    EXPECT_NEAR(integrate(f, 0.0, 1.0, 1e-12).value, exp_integral_E1(1.0), 1e-11);
}

TEST(ExpIntegral, BoundsAndErrors) {
    EXPECT_GT(exp_integral_E1(1.0), exp_integral_E1(2.0));
    EXPECT_LT(exp_integral_E1(50.0), 1e-22);
    EXPECT_LE(exp_integral_E1(50.0), 0.5 * std::exp(-50.0) / 50.0);
    EXPECT_THROW(exp_integral_E1(0.0), ValidationError);
    EXPECT_THROW(exp_integral_E1(-1.0), ValidationError);
}

TEST(Alpha, ExamplesAndDefiningRelation) {
    EXPECT_DOUBLE_EQ(alpha_of_lambda(0.0), 1.0);
    EXPECT_NEAR(alpha_of_lambda(1.5), 0.5, 1e-15);
    EXPECT_NEAR(alpha_of_lambda(-1.5), 2.0, 1e-15);
    for (double l = -20.0; l <= 20.0; l += 0.37) {
        const double a = alpha_of_lambda(l);
        EXPECT_GT(a, 0.0);
        EXPECT_NEAR(1.0 / a - a, l, 1e-12 * std::max(1.0, std::abs(l)));
    }
}

TEST(Quadrature, KnownIntegrals) {
    EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-10).value, 2.0, 1e-10);
    EXPECT_NEAR(integrate([](double x) { return std::exp(-x); }, 0.0, 30.0, 1e-12).value, 1.0 - std::exp(-30.0),
                1e-11);
    EXPECT_NEAR(integrate([](double x) { return x * x; }, 1.0, 0.0, 1e-12).value, -1.0 / 3.0, 1e-13);
}

TEST(Quadrature, UnmetToleranceCarriesEstimate) {
    auto f = [](double x) { return x <= 0.0 ? 0.0 : 1.0 / std::sqrt(x); };
    try {
        integrate(f, 0.0, 1.0, 1e-14, 1e-300, 8);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError& ex) {
        EXPECT_NEAR(ex.best_estimate(), 2.0, 0.2);
    }
}

TEST(AiryA, ClosedFormAtZero) {
    EXPECT_NEAR(airy_A(0.5, 0.0, 1e-14), 1.0 / std::sqrt(3.0 * std::numbers::pi), 1e-14);
    EXPECT_NEAR(kRoot2Pi * airy_A(0.5, 0.0, 1e-14), std::sqrt(2.0 / 3.0), 1e-12);
    // first Gamma argument at a pole, k = 0 term vanishes
    EXPECT_NEAR(airy_A(-1.0, 0.0, 1e-14), 0.0, 1e-300);
}

TEST(AiryA, MatchesDoubleSeriesForSmallLambda) {
    for (double y : {0.5, 3.5, 6.5, 2.0})
        for (double l : {-1.0, -0.3, 0.4, 1.0})
            EXPECT_NEAR(airy_A(y, l, 1e-14), airy_double(y, l), 1e-11 * std::abs(airy_double(y, l)) + 1e-14)
                << y << " " << l;
}

TEST(AiryA, FarSubcriticalAsymptotics) {
    for (int r : {0, 1}) {
        const double v = kRoot2Pi * airy_A(3.0 * r + 0.5, -10.0, 1e-14) * std::pow(10.0, 3 * r);
        EXPECT_GE(v, 0.9) << r;
        EXPECT_LE(v, 1.1) << r;
    }
}

TEST(AiryA, RejectsNonFinite) {
    EXPECT_THROW(airy_A(NAN, 0.0, 1e-14), ValidationError);
    EXPECT_THROW(airy_A(0.5, INFINITY, 1e-14), ValidationError);
    EXPECT_THROW(airy_A(0.5, 0.0, 0.0), ValidationError);
}

TEST(Normalization, ConvergesToOne) {
    EXPECT_NEAR(normalization(0.0, 0), std::sqrt(2.0 / 3.0), 1e-12);
    EXPECT_NEAR(normalization(-2.0, 8), 1.0, 1e-6);
    EXPECT_NEAR(normalization(0.0, 8), 1.0, 1e-3);
    // lambda = 2 converges slowly but monotonically
    const double r8 = normalization(2.0, 8), r20 = normalization(2.0, 20), r40 = normalization(2.0, 40);
    EXPECT_LT(r8, r20);
    EXPECT_LT(r20, r40);
    EXPECT_NEAR(r40, 1.0, 1e-3);
}

TEST(C1, MatchesKnownValue) {
    EXPECT_NEAR(compute_c1(), 0.378911, 5e-6);
    const auto d = compute_c1_detailed();
    EXPECT_LT(d.error, 1e-8);
    EXPECT_NEAR(d.tailBound, 0.5 * std::exp(-50.0), 1e-30);
}

TEST(C1, StableUnderTighterSettings) {
    AnalysisConfig base, wider;
    wider.uMax = 100.0;
    wider.quadTol = base.quadTol / 2.0;
    EXPECT_NEAR(compute_c1(base), compute_c1(wider), base.quadTol);
}

TEST(C1, IntegrandLimits) {
    EXPECT_LT(-std::expm1(-exp_integral_E1(50.0)), 1e-22);
    EXPECT_GT(-std::expm1(-exp_integral_E1(1e-300)), 0.999);
}

TEST(C1, ConfigValidation) {
    AnalysisConfig bad;
    bad.quadTol = 0.0;
    EXPECT_THROW(compute_c1(bad), ValidationError);
    bad = {};
    bad.uMax = -1.0;
    EXPECT_THROW(compute_c1(bad), ValidationError);
    bad = {};
    bad.rmax = 0;
    EXPECT_THROW(bad.validate(), ValidationError);
}

TEST(C2Integrand, Limits) {
    const auto& t = tables(6);
    EXPECT_THROW(c2_integrand(0.0, 0.0, t), ValidationError);
    // approaches 1 like sqrt(u)
    EXPECT_NEAR(c2_integrand(1e-16, 0.0, t), 1.0, 1e-6);
    EXPECT_LT(c2_integrand(1e-16, 0.0, t), 1.0);
    C2Integrand f(0.0, t, AnalysisConfig{});
    EXPECT_NEAR(f(45.0), f.tail_mass(), 1e-12);
    EXPECT_DOUBLE_EQ(c2_integrand(2.0, -1.0, t), C2Integrand(-1.0, t, AnalysisConfig{})(2.0));
}

TEST(C2Integrand, StaysInUnitInterval) {
    const auto cfg = with_rmax(12);
    for (double l : {-2.0, 0.0, 1.0}) {
        C2Integrand f(l, tables(12), cfg);
        for (double u = 0.01; u < 50.0; u *= 1.3) {
            EXPECT_GE(f(u), -1e-6) << l << " " << u;
            EXPECT_LE(f(u), 1.0 + 1e-6) << l << " " << u;
        }
    }
}

TEST(C2, Breakdown) {
    const auto b = compute_c2(0.0, tables(6));
    EXPECT_DOUBLE_EQ(b.alpha, 1.0);
    EXPECT_EQ(b.rmax, 6);
    ASSERT_EQ(b.perRContribution.size(), 7u);
    double s = b.tailMass;
    for (double v : b.perRContribution) s += v;
    EXPECT_NEAR(s, 1.0, 1e-14);
    EXPECT_NEAR(b.perRContribution[0], std::sqrt(2.0 / 3.0), 1e-12);
    EXPECT_GT(b.uStar, 0.0);
    EXPECT_NEAR(b.tailSensitivity, b.tailMass * b.uStar / b.alpha, 1e-15);
}

TEST(C2, GoldenValueAtDefaults) {
    // recorded from this implementation (rmax 6, mixed, quadTol 1e-8,
    // seriesTol 1e-14, uMax 50); an independent mpmath prototype agrees
    EXPECT_NEAR(compute_c2(0.0, tables(6)).value, 0.602242, 2e-6);
    // converged in rmax
    EXPECT_NEAR(compute_c2(0.0, tables(16), with_rmax(16)).value, 0.578624, 5e-5);
}

TEST(C2, ReproducibleAcrossTolerances) {
    AnalysisConfig loose;
    loose.quadTol = 1e-7;
    const double a = compute_c2(0.0, tables(6), loose).value;
    const double b = compute_c2(0.0, tables(6)).value;
    EXPECT_LT(std::abs(a - b) / b, 5e-5);
}

TEST(C2, TailMassShrinksWithRmax) {
    for (double l : {-2.0, 0.0, 1.0}) {
        double previous = 1.0;
        for (int r = 4; r <= 12; r += 2) {
            const double tail = C2Integrand(l, tables(12), with_rmax(r)).tail_mass();
            EXPECT_GE(tail, -1e-12);
            EXPECT_LT(tail, previous) << l << " " << r;
            previous = tail;
        }
    }
}

TEST(C2, ContinuityBridge) {
    const double c1 = compute_c1();
    double previous = INFINITY;
    for (double l : {-2.0, -4.0, -8.0}) {
        const double gap = std::abs(compute_c2(l, tables(6)).value * std::abs(l) - c1);
        EXPECT_LT(gap, previous) << l;
        previous = gap;
    }
    EXPECT_LT(std::abs(compute_c2(-8.0, tables(6)).value * 8.0 - c1) / c1, 0.15);
}

TEST(C2, IncreasingInLambda) {
    // lambda = 2 only clears the tail guard from rmax ~ 18 on
    const auto cfg = with_rmax(20);
    double previous = 0.0;
    for (double l : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const double v = compute_c2(l, tables(20), cfg).value;
        EXPECT_GT(v, previous) << l;
        previous = v;
    }
}

TEST(C2, TailGuardAndPreconditions) {
    try {
        compute_c2(2.0, tables(6));
        FAIL() << "expected NumericalError";
    } catch (const NumericalError& ex) {
        EXPECT_NE(std::string(ex.what()).find("increase rmax"), std::string::npos);
        EXPECT_TRUE(std::isfinite(ex.best_estimate()));
    }
    EXPECT_THROW(compute_c2(0.0, tables(4)), ValidationError);
}

TEST(C2, VerbatimCompositionIsSelectable) {
    AnalysisConfig cfg;
    cfg.composition = Composition::verbatim;
    const auto v = compute_c2(0.0, tables(6), cfg);
    EXPECT_EQ(v.composition, Composition::verbatim);
    EXPECT_GT(v.tailMass, compute_c2(0.0, tables(6)).tailMass);
    EXPECT_EQ(parse_composition("mixed"), Composition::mixed);
    EXPECT_THROW(parse_composition("other"), ValidationError);
}
