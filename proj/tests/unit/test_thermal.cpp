#include "cylwigner/thermal.hpp"

#include "../support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace cylwigner;

TEST(ThermalParams, DefaultWindowAndValidation)
{
    const ThermalParams tp(1.0);
    EXPECT_EQ(tp.window_half_width(), static_cast<long>(std::ceil(std::sqrt(33.0))) + 5);
    EXPECT_THROW(ThermalParams(0.0), std::domain_error);
    EXPECT_THROW(ThermalParams(-1.0), std::domain_error);
    EXPECT_THROW(ThermalParams(0.01, 10), std::domain_error);
}

TEST(PartitionFunction, LargeEpsBeta)
{
    EXPECT_NEAR(partition_function(ThermalParams(40.0)), 1.0 + 2.0 * std::exp(-40.0), 1e-16);
    EXPECT_DOUBLE_EQ(partition_function(ThermalParams(800.0)), 1.0);
    const double eb = 6.0;
    EXPECT_NEAR(partition_function(ThermalParams(eb)) - (1.0 + 2.0 * std::exp(-eb)), 2.0 * std::exp(-4.0 * eb), 1e-15);
}

TEST(PartitionFunction, SmallEpsBeta)
{
    EXPECT_NEAR(partition_function(ThermalParams(0.01)) / std::sqrt(100.0 * pi), 1.0, 1e-10);
}

TEST(PartitionFunction, RoutesAgree)
{
    for (double eb : {0.01, 0.03, 0.1, 0.5, 1.0, 3.0, 10.0, 40.0}) {
        const ThermalParams tp(eb);
        const double direct = partition_function_direct(tp);
        EXPECT_NEAR(partition_function(tp) / direct, 1.0, 1e-11) << "eb=" << eb;
        EXPECT_NEAR(partition_function_jacobi(tp) / direct, 1.0, 1e-11) << "eb=" << eb;
        EXPECT_NEAR(oracle::theta3_sum(0.0, tp.nome(), 2000) / direct, 1.0, 1e-11) << "eb=" << eb;
    }
}

TEST(ThermalDensity, TraceAndRatios)
{
    for (double eb : {0.05, 1.0, 10.0}) {
        const auto rho = thermal_density(ThermalParams(eb));
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
        for (long n = 1; n <= 3; ++n)
            EXPECT_DOUBLE_EQ(rho(n, n).real(), rho(-n, -n).real());
    }
    const auto rho = thermal_density(ThermalParams(1.0));
    EXPECT_NEAR(rho(1, 1).real() / rho(0, 0).real(), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(thermal_density(ThermalParams(60.0))(0, 0).real(), 1.0, 1e-15);
}

TEST(ThermalWigner, MatchesDensityRoute)
{
    const ThermalParams tp(0.7);
    const auto rho = thermal_density(tp);
    for (double theta : {-1.0, 0.0, 2.0})
        for (double p = -4.0; p <= 4.0; p += 0.4)
            EXPECT_NEAR(thermal_wigner(tp, PhasePoint(theta, p)), wigner_density(rho, PhasePoint(theta, p)), 1e-12);
}

TEST(ThermalWigner, EvenAndThetaIndependent)
{
    const ThermalParams tp(0.3);
    for (double p : {0.2, 1.0, 3.7}) {
        EXPECT_DOUBLE_EQ(thermal_wigner(tp, PhasePoint(0.0, p)), thermal_wigner(tp, PhasePoint(0.0, -p)));
        EXPECT_EQ(thermal_wigner(tp, PhasePoint(0.0, p)), thermal_wigner(tp, PhasePoint(1.4, p)));
    }
}

TEST(ThermalWigner, ThetaFunctionIntegralForm)
{
    for (double eb : {0.1, 1.0, 4.0}) {
        const ThermalParams tp(eb);
        for (double p = -3.0; p <= 3.0; p += 0.25)
            EXPECT_NEAR(thermal_wigner(tp, PhasePoint(0.0, p)), thermal_wigner_integral(tp, p), 1e-9) << "eb=" << eb << " p=" << p;
    }
}

TEST(ThermalWigner, SincProjectionRecoversWeights)
{
    const ThermalParams tp(0.4);
    const auto rho = thermal_density(tp);
    const auto omega = marginal_momentum(rho);
    for (long m = -3; m <= 3; ++m)
        EXPECT_NEAR(project_onto_sinc(omega, m), rho(m, m).real(), 1e-14);
}

TEST(ThermalWigner, RoundTripThroughReconstruction)
{
    const ThermalParams tp(1.5);
    const long w = tp.window_half_width();
    const auto rec = reconstruct_density([&](const PhasePoint& at) { return thermal_wigner(tp, at); }, -w, w, 0.0);
    const auto rho = thermal_density(tp);
    for (long m = -w; m <= w; ++m)
        for (long n = -w; n <= w; ++n)
            EXPECT_NEAR(std::abs(rec.matrix(m, n) - rho(m, n)), 0.0, 1e-8);
}

TEST(ImaginaryRoute, AgreesWhereRepresentable)
{
    const double eb = 0.5;
    for (double alpha : {0.0, 0.4, 1.5, 3.0})
        EXPECT_NEAR(theta3_half_angle_imaginary(alpha, eb) / theta3(0.5 * alpha, std::exp(-eb)), 1.0, 1e-12);
}

TEST(ImaginaryRoute, OverflowsAtLowEpsBeta)
{
    EXPECT_THROW(theta3_half_angle_imaginary(0.99 * pi, 0.005), std::range_error);
    EXPECT_THROW(theta3_half_angle_imaginary(pi, 0.01), std::range_error);
    EXPECT_NO_THROW(theta3_half_angle_imaginary(pi, 0.05));
    EXPECT_NO_THROW(theta3_half_angle_imaginary(0.5, 0.005));
    // the direct evaluation stays finite in that regime
    EXPECT_TRUE(std::isfinite(theta3(0.5 * 0.99 * pi, std::exp(-0.005))));
}

TEST(CosineIntegral, IdentityAgainstQuadrature)
{
    // int_0^pi cos a cos(p a) da = -(pi/2) sinc(pi p) (p/(p+1) + p/(p-1))
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 50; ++i) {
        double p = u(rng);
        if (std::abs(p - std::round(p)) < 1e-3)
            p += 0.01;
        const double quad = oracle::simpson([&](double a) { return std::cos(a) * std::cos(p * a); }, 0.0, pi, 4000);
        const double closed = -0.5 * pi * sinc_pi(p) * (p / (p + 1.0) + p / (p - 1.0));
        EXPECT_NEAR(quad, closed, 1e-10) << "p=" << p;
    }
}

TEST(LowTemperature, FormulaAtZero)
{
    const ThermalParams tp(4.0);
    EXPECT_NEAR(low_temp_wigner(tp, 0.0), (1.0 - 2.0 * std::exp(-4.0)) / two_pi, 1e-16);
}

TEST(LowTemperature, FiniteAtPoles)
{
    // Series oracle near p = 1: sinc(pi p) p/(p - 1) -> -1, sinc(pi p) p/(p + 1) -> 0
    const ThermalParams tp(5.0);
    const double q = std::exp(-5.0);
    EXPECT_NEAR(low_temp_wigner(tp, 1.0), q / two_pi, 1e-16);
    EXPECT_NEAR(low_temp_wigner(tp, -1.0), q / two_pi, 1e-16);
    for (double eps : {1e-3, 1e-6, 1e-9}) {
        const double p = 1.0 + eps;
        const double direct = sinc_pi(p) * (1.0 - q * (2.0 + p / (p + 1.0) + p / (p - 1.0))) / two_pi;
        EXPECT_NEAR(low_temp_wigner(tp, p), direct, 1e-9);
    }
}

TEST(LowTemperature, ErrorIsSecondOrderInNome)
{
    // The first-order expansion of 1/Z leaves an e^{-2 eps_beta} remainder.
    for (double eb : {3.0, 5.0, 8.0}) {
        const ThermalParams tp(eb);
        double worst = 0.0;
        for (double p = -2.5; p <= 2.5; p += 0.01)
            worst = std::max(worst, std::abs(low_temp_wigner(tp, p) - thermal_wigner(tp, PhasePoint(0.0, p))));
        EXPECT_LE(worst, std::exp(-2.0 * eb)) << "eb=" << eb;
        EXPECT_GE(worst, 0.1 * std::exp(-2.0 * eb)) << "eb=" << eb;
    }
}

TEST(LowTemperature, RegimeGuard)
{
    EXPECT_THROW(low_temp_wigner(ThermalParams(2.0), 0.0), std::domain_error);
}

TEST(HighTemperature, AgreesWithExact)
{
    const ThermalParams tp(0.01);
    const ThermalParams wide(0.01, 400);
    for (double p = -20.0; p <= 20.0; p += 0.5) {
        const double exact = thermal_wigner(wide, PhasePoint(0.0, p));
        EXPECT_NEAR(high_temp_wigner(tp, p) / exact, 1.0, 1e-3) << "p=" << p;
        EXPECT_NEAR(thermal_wigner(tp, PhasePoint(0.0, p)), exact, 1e-14);
    }
}

TEST(HighTemperature, GaussianIntegral)
{
    const ThermalParams tp(0.01);
    EXPECT_NEAR(high_temp_momentum_integral(tp), 1.0 / two_pi, 1e-16);
    EXPECT_NEAR(high_temp_wigner(tp, 0.0), std::sqrt(0.01 * pi) / (2.0 * pi * pi), 1e-17);
    const double quad = oracle::simpson([&](double p) { return high_temp_wigner(tp, p); }, -100.0, 100.0, 20000);
    EXPECT_NEAR(quad, 1.0 / two_pi, 1e-12);
}

TEST(HighTemperature, RegimeGuard)
{
    EXPECT_THROW(high_temp_wigner(ThermalParams(0.1), 0.0), std::domain_error);
    EXPECT_THROW(high_temp_momentum_integral(ThermalParams(0.1)), std::domain_error);
}
