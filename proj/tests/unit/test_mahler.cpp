#include "oracles.hpp"

#include "trino/error.hpp"
#include "trino/mahler.hpp"
#include "trino/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace trino;

namespace {

constexpr double kTheta0 = 1.324717957244746;
constexpr double kPi = std::numbers::pi;

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no trino::Error thrown";
    return ErrorCode::InvalidArgument;
}

IntPolynomial random_monic(oracle::Gen& g, int deg, int span) {
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (int j = 0; j < deg; ++j) c[static_cast<std::size_t>(j)] = g.uniform(-span, span);
    if (c[0] == 0) c[0] = 1;
    c[static_cast<std::size_t>(deg)] = 1;
    return IntPolynomial(std::move(c));
}

std::vector<oracle::cplx> as_complex(const IntPolynomial& p) {
    std::vector<oracle::cplx> out;
    for (double v : p.to_doubles()) out.emplace_back(v, 0.0);
    return out;
}

} // namespace

// --- Quadrature ---------------------------------------------------------------

TEST(Quadrature, Polynomial) {
    const QuadResult r = integrate([](double x) { return x * x; }, 0.0, 3.0);
    EXPECT_NEAR(r.value, 9.0, 1e-12);
}

TEST(Quadrature, LogSingularityAtBreakpoint) {
    const double bp[] = {1.0};
    const QuadResult r = integrate([](double x) { return std::log(std::fabs(x - 1.0)); }, 0.0, 2.0, {}, bp);
    EXPECT_NEAR(r.value, -2.0, 1e-9);
}

TEST(Quadrature, BudgetExceeded) {
    QuadConfig cfg;
    cfg.max_evaluations = 100;
    cfg.abs_tolerance = 1e-14;
    EXPECT_EQ(code_of([&] { integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, cfg); }),
              ErrorCode::QuadratureBudgetExceeded);
}

// --- Measure by roots and by Jensen ----------------------------------------------

TEST(Measure, PlasticNumber) {
    const TrinomialSpec s(3, 1, -1.0, -1.0);
    EXPECT_NEAR(measure_from_roots(s).value, kTheta0, 1e-12);
    EXPECT_NEAR(measure_jensen(s).value, kTheta0, 1e-8);
    EXPECT_NEAR(house(s), kTheta0, 1e-12);
}

TEST(Measure, DominantConstantIsExact) {
    EXPECT_NEAR(measure_from_roots(TrinomialSpec(4, 1, 1.0, -3.0)).value, 3.0, 1e-12);
}

TEST(Measure, Cyclotomic) {
    EXPECT_NEAR(measure_from_roots(TrinomialSpec(2, 1, 1.0, 1.0)).value, 1.0, 1e-12);
    EXPECT_NEAR(measure_jensen(TrinomialSpec(2, 1, 1.0, 1.0)).value, 1.0, 1e-8);
}

TEST(Measure, JensenMatchesOracle) {
    const TrinomialSpec s(5, 2, 3.0, 1.0);
    const double ref = oracle::mahler(oracle::trinomial(5, 2, 3.0, 1.0));
    EXPECT_NEAR(measure_jensen(s).value, ref, 1e-8);
    EXPECT_NEAR(measure_from_roots(s).value, ref, 1e-9);
}

TEST(Measure, IntPolynomialIncludesLeadingCoefficient) {
    const IntPolynomial p{1, 0, 3}; // 3z^2 + 1: roots inside the circle
    EXPECT_NEAR(measure_from_roots(p).value, 3.0, 1e-12);
    EXPECT_NEAR(measure_from_roots(p).value, oracle::mahler(as_complex(p)), 1e-9);
}

TEST(House, Examples) {
    for (int n : {2, 5, 11}) {
        EXPECT_NEAR(house(IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial::constant(2)),
                    std::pow(2.0, 1.0 / n), 1e-12);
    }
    EXPECT_NEAR(house(TrinomialSpec(3, 1, -2.0, -1.0)), (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
}

// Property: roots, Jensen and (when it applies) the series agree.
TEST(Measure, CrossMethodAgreement) {
    oracle::Gen g(21);
    for (int i = 0; i < 200; ++i) {
        const int n = g.uniform(2, 20);
        const int m = g.coprime_m(n);
        int a = g.uniform(-8, 8);
        if (a == 0) a = 1;
        const int b = g.sign();
        const TrinomialSpec s(n, m, static_cast<double>(a), static_cast<double>(b));
        const double r = measure_from_roots(s).value;
        EXPECT_NEAR(r, measure_jensen(s).value, 1e-6) << s.to_string();
        if (std::abs(a) - 1 > 1) {
            EXPECT_NEAR(r, series_measure(n, m, s.a(), s.b()).measure.value, 1e-6) << s.to_string();
        } else if (std::abs(a) - 1 == 1) {
            // On the boundary the terms decay only polynomially.
            try {
                EXPECT_NEAR(r, series_measure(n, m, s.a(), s.b()).measure.value, 1e-6) << s.to_string();
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), ErrorCode::DivergenceDetected);
            }
        }
    }
}

TEST(Measure, Multiplicativity) {
    oracle::Gen g(22);
    for (int i = 0; i < 100; ++i) {
        const IntPolynomial p = random_monic(g, g.uniform(1, 7), 6);
        const IntPolynomial q = random_monic(g, g.uniform(1, 7), 6);
        EXPECT_NEAR(measure_from_roots(p * q).value, measure_from_roots(p).value * measure_from_roots(q).value,
                    1e-8 * std::max(1.0, measure_from_roots(p * q).value))
            << p.to_string() << " * " << q.to_string();
    }
}

TEST(Measure, SmythBoundForNonReciprocalTrinomials) {
    oracle::Gen g(23);
    int tested = 0;
    while (tested < 100) {
        const int n = g.uniform(2, 24);
        const int m = g.uniform(1, n - 1);
        int a = g.uniform(-6, 6);
        if (a == 0) continue;
        const int b = g.sign();
        const IntPolynomial p = to_dense(TrinomialSpec(n, m, a, b));
        if (is_reciprocal(p) || is_reciprocal(-p)) continue;
        EXPECT_GE(measure_from_roots(p).value, kTheta0 - 1e-9) << p.to_string();
        ++tested;
    }
}

TEST(Measure, ScalingInvariance) {
    oracle::Gen g(24);
    for (int i = 0; i < 100; ++i) {
        const int n = g.uniform(2, 12);
        const int m = g.uniform(1, n - 1);
        const Complex a(g.real(-5, 5), g.coin() ? 0.0 : g.real(-2, 2));
        const Complex b(g.real(-3, 3), 0.0);
        if (std::abs(a) < 0.2 || std::abs(b) < 0.2) continue;
        const double base = measure_from_roots(TrinomialSpec(n, m, a, b)).value;
        for (int k : {2, 3}) {
            EXPECT_NEAR(measure_from_roots(TrinomialSpec(k * n, k * m, a, b)).value, base, 1e-8 * base);
        }
    }
}

TEST(Measure, DominantConstantExactForEveryN) {
    oracle::Gen g(25);
    for (int i = 0; i < 100; ++i) {
        const int n = g.uniform(2, 60);
        const int m = g.uniform(1, n - 1);
        const Complex a = std::polar(g.real(0.1, 3.0), g.real(-kPi, kPi));
        const Complex b = std::polar(std::abs(a) + g.real(1.0, 4.0), g.real(-kPi, kPi));
        EXPECT_NEAR(measure_from_roots(TrinomialSpec(n, m, a, b)).value, std::abs(b), 1e-9);
    }
}

// --- Limits -------------------------------------------------------------------------

TEST(Limit, Cases) {
    EXPECT_EQ(limit_case(3.0, 1.0).regime, LimitRegime::DominantA);
    EXPECT_EQ(limit_case(1.0, 3.0).regime, LimitRegime::DominantB);
    EXPECT_EQ(limit_case(0.4, 0.5).regime, LimitRegime::SubUnit);
    const LimitCase c = limit_case(1.0, 1.0);
    EXPECT_EQ(c.regime, LimitRegime::Oscillatory);
    ASSERT_TRUE(c.gamma);
    EXPECT_NEAR(*c.gamma, 2.0 * kPi / 3.0, 1e-12);
}

TEST(Limit, Values) {
    EXPECT_EQ(limit_measure(3.0, 1.0).measure.value, 3.0);
    EXPECT_EQ(limit_measure(1.0, 3.0).measure.value, 3.0);
    EXPECT_EQ(limit_measure(0.4, 0.5).measure.value, 1.0);
    EXPECT_NEAR(limit_measure(1.0, 1.0).measure.value, 1.381356, 1e-5);
}

TEST(Limit, OscillatoryIntegralMatchesTrapezoidOracle) {
    // (1/2pi) int_0^2pi log max(1, |a e^{it} + b|) dt, a smooth-enough periodic integrand.
    const double a = 1.3, b = 0.8;
    const double ref = oracle::periodic_trapezoid(
                           [&](double t) { return std::log(std::max(1.0, std::abs(a * std::polar(1.0, t) + b))); },
                           1 << 20) /
                       (2.0 * kPi);
    EXPECT_NEAR(limit_measure(a, b).measure.log_value, ref, 1e-8);
}

TEST(Limit, LargeNApproachesLimit) {
    const double lim = limit_measure(1.0, 1.0).measure.value;
    EXPECT_NEAR(measure_from_roots(TrinomialSpec(401, 200, 1.0, 1.0)).value, lim, 2e-3);
}

// --- Series ---------------------------------------------------------------------------

TEST(Series, AgreesWithRoots) {
    EXPECT_NEAR(series_measure(5, 2, 3.0, 1.0).measure.value, measure_from_roots(TrinomialSpec(5, 2, 3.0, 1.0)).value,
                1e-8);
    EXPECT_NEAR(series_measure(4, 1, -3.0, -1.0).measure.value,
                measure_from_roots(TrinomialSpec(4, 1, -3.0, -1.0)).value, 1e-8);
}

TEST(Series, FirstTermByHand) {
    const SeriesResult r = series_measure(3, 1, 100.0, 1.0, {}, true);
    ASSERT_FALSE(r.trace.empty());
    EXPECT_NEAR(r.trace.front().term, 1e-6, 1e-18);
}

TEST(Series, Refusals) {
    EXPECT_EQ(code_of([] { series_measure(3, 1, -1.0, -1.0); }), ErrorCode::DominanceViolated);
    EXPECT_EQ(code_of([] { series_measure(6, 2, 5.0, 1.0); }), ErrorCode::CoprimalityViolated);
}

TEST(Series, BoundaryEitherConvergesOrReportsDivergence) {
    for (int n : {5, 9, 15, 21}) {
        const int m = n / 2;
        try {
            const SeriesResult r = series_measure(n, m, 2.0, 1.0);
            EXPECT_NEAR(r.measure.value, measure_from_roots(TrinomialSpec(n, m, 2.0, 1.0)).value,
                        std::max(1e-6, r.measure.error_bound));
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::DivergenceDetected);
        }
    }
}

TEST(Series, ConvergenceGapDecreases) {
    double prev = 1e300;
    for (int n : {10, 20, 40, 80}) {
        const SeriesResult r = series_measure(n, 1, 3.0, 1.0);
        const double gap = 3.0 * std::fabs(std::expm1(r.correction));
        EXPECT_GT(gap, 0.0);
        EXPECT_LT(gap, prev);
        prev = gap;
    }
}

// --- Residues -------------------------------------------------------------------------

TEST(Residue, ZeroWhenMDoesNotDivideK) {
    const SeriesTerm t = residue_term(3, 5, 2, 3.0, 1.0, true);
    EXPECT_EQ(t.i_k, Complex(0.0, 0.0));
    EXPECT_EQ(t.closed_form, 0.0);
    EXPECT_LT(std::abs(*t.i_k_quadrature), 1e-9);
}

TEST(Residue, FirstIndexByHand) {
    const SeriesTerm t = residue_term(1, 3, 1, 2.0, 1.0, true);
    EXPECT_NEAR(t.i_k.real(), -kPi / 4.0, 1e-15);
    EXPECT_NEAR(t.i_k_quadrature->real(), -kPi / 4.0, 1e-9);
}

TEST(Residue, ClosedFormMatchesQuadrature) {
    const SeriesTerm t = residue_term(2, 5, 2, 3.0, 1.0, true);
    EXPECT_LT(std::abs(t.i_k - *t.i_k_quadrature), 1e-9);
}

// Property: residue closed form against an independent periodic trapezoid rule.
TEST(Residue, TrapezoidOracle) {
    oracle::Gen g(26);
    for (int c = 0; c < 50; ++c) {
        const int n = g.uniform(2, 9);
        const int m = g.coprime_m(n);
        const Complex b = std::polar(g.real(0.2, 2.0), g.real(-kPi, kPi));
        const Complex a = std::polar(std::abs(b) + g.real(1.0, 3.0), g.real(-kPi, kPi));
        for (int k = 1; k <= 8; ++k) {
            const SeriesTerm t = residue_term(k, n, m, a, b);
            const Complex ref = oracle::periodic_trapezoid(
                [&](double x) { return std::polar(1.0, static_cast<double>(n) * k * x) / std::pow(-a * std::polar(1.0, m * x) - b, k); },
                4096);
            EXPECT_LT(std::abs(t.i_k - ref), 1e-8) << "k=" << k << " n=" << n << " m=" << m;
            EXPECT_NEAR(t.closed_form, -ref.real() / (2.0 * kPi * k), 1e-8);
        }
    }
}

// Series index k contributes exactly the residue term at index k m.
TEST(Residue, SumsToSeries) {
    const int n = 7, m = 3;
    const Complex a(3.5, 0.5), b(0.7, -0.2);
    SeriesResult sr = series_measure(n, m, a, b, {}, true);
    for (std::size_t i = 0; i < 5 && i < sr.trace.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        EXPECT_NEAR(sr.trace[i].term, residue_term(k * m, n, m, a, b).closed_form, 1e-14);
    }
}
