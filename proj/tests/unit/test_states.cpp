#include "cylwigner/io.hpp"
#include "cylwigner/states.hpp"

#include "../support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace cylwigner;

TEST(FourierState, RejectsBadInput)
{
    EXPECT_THROW(FourierState(1.0, 0, {1.0}), std::domain_error);
    EXPECT_THROW(FourierState(-0.1, 0, {1.0}), std::domain_error);
    EXPECT_THROW(FourierState(0.0, 0, {}), std::domain_error);
    EXPECT_THROW(FourierState(0.0, 0, {complex(std::nan(""), 0.0)}), std::domain_error);
}

TEST(FourierState, CoefficientOutsideWindowIsZero)
{
    const FourierState s(0.2, 3, {0.6, complex(0.0, 0.8)});
    EXPECT_EQ(s.coeff(2), complex{});
    EXPECT_EQ(s.coeff(4), complex(0.0, 0.8));
    EXPECT_EQ(s.n_max(), 4);
    EXPECT_TRUE(s.is_normalized());
}

TEST(BasisState, WavefunctionIsPlaneWave)
{
    const auto e = basis_state(3, 0.25);
    for (double phi : {-2.0, 0.0, 0.4, 3.0}) {
        const complex v = evaluate_wavefunction(e, phi);
        EXPECT_NEAR(v.real(), std::cos(3.25 * phi), 1e-15);
        EXPECT_NEAR(v.imag(), std::sin(3.25 * phi), 1e-15);
    }
}

TEST(CatState, CoefficientsForAlphaZeroAndPi)
{
    const auto plus = cat_state(0.0);
    EXPECT_NEAR(plus.coeff(-1).real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(plus.coeff(1).real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(plus.coeff(0), complex{});

    const auto minus = cat_state(pi);
    EXPECT_NEAR(minus.coeff(-1).real(), -1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(minus.coeff(-1).imag(), 0.0, 1e-15);
    EXPECT_NEAR(minus.coeff(1).real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(CatState, WavefunctionIsSqrtTwoCos)
{
    const auto f = cat_state(0.0);
    for (double phi = -3.0; phi <= 3.0; phi += 0.37)
        EXPECT_NEAR(evaluate_wavefunction(f, phi).real(), std::sqrt(2.0) * std::cos(phi), 1e-15);
}

TEST(CatState, OrthogonalPairAndNormalized)
{
    EXPECT_NEAR(std::abs(inner_product(cat_state(0.0), cat_state(pi))), 0.0, 1e-15);
    EXPECT_TRUE(cat_state(0.9).is_normalized(1e-15));
    EXPECT_THROW(cat_state(std::nan("")), std::domain_error);
}

TEST(VonMises, NormalizedWithNegligibleTail)
{
    for (double s : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const auto psi = von_mises_state(s, 0.4);
        EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-14);
        EXPECT_LE(psi.discarded_mass(), 1e-12);
    }
}

TEST(VonMises, CoefficientsAreBesselRatios)
{
    const double s = 0.5;
    const auto psi = von_mises_state(s, 2.3);
    EXPECT_EQ(psi.n_min() + von_mises_half_width(s), 2);
    EXPECT_NEAR(psi.delta(), 0.3, 1e-15);
    for (long m = -3; m <= 7; ++m) {
        const double expected = oracle::bessel_i_series(m - 2, s) / std::sqrt(oracle::bessel_i_series(0, 2.0 * s));
        EXPECT_NEAR(psi.coeff(m).real(), expected, 1e-14) << "m=" << m;
    }
}

TEST(VonMises, AngleDensityIsVonMises)
{
    for (double s : {0.25, 1.0, 3.0}) {
        const auto psi = von_mises_state(s, -1.7);
        for (double phi = -pi; phi < pi; phi += 0.3) {
            const double expected = std::exp(2.0 * s * std::cos(phi)) / bessel_i(0, 2.0 * s);
            EXPECT_NEAR(std::norm(evaluate_wavefunction(psi, phi)), expected, 1e-8 * std::max(1.0, expected));
        }
    }
}

TEST(VonMises, MeanAngularMomentumIsPe)
{
    EXPECT_NEAR(state_expectation_L(von_mises_state(1.0, 2.3)), 2.3, 1e-8);
    for (double pe : {-4.75, 0.0, 0.999, 11.5})
        EXPECT_NEAR(state_expectation_L(von_mises_state(0.7, pe)), pe, 1e-8) << "pe=" << pe;
}

TEST(VonMises, ProbabilitiesIndependentOfDelta)
{
    const auto a = von_mises_state(1.2, 3.0);
    const auto b = von_mises_state(1.2, 3.6);
    for (long k = -5; k <= 5; ++k)
        EXPECT_NEAR(std::norm(a.coeff(3 + k)), std::norm(b.coeff(3 + k)), 1e-15);
}

TEST(VonMises, QuasiPeriodicContinuation)
{
    const auto psi = von_mises_state(0.8, 1.3);
    for (double phi : {-1.0, 0.2, 2.5}) {
        const complex shifted = evaluate_wavefunction(psi, phi + 2.0 * pi);
        const complex expected = std::polar(1.0, 2.0 * pi * psi.delta()) * evaluate_wavefunction(psi, phi);
        EXPECT_NEAR(std::abs(shifted - expected), 0.0, 1e-12);
    }
}

TEST(VonMises, Errors)
{
    EXPECT_THROW(von_mises_state(0.0, 1.0), std::domain_error);
    EXPECT_THROW(von_mises_state(-1.0, 1.0), std::domain_error);
    EXPECT_THROW(von_mises_state(1.0, std::nan("")), std::domain_error);
    EXPECT_THROW(von_mises_state(5.0, 0.0, 3), std::domain_error);
}

TEST(SplitMomentum, FloorAndFraction)
{
    EXPECT_EQ(split_momentum(2.3).first, 2);
    EXPECT_NEAR(split_momentum(2.3).second, 0.3, 1e-15);
    EXPECT_EQ(split_momentum(-0.25).first, -1);
    EXPECT_NEAR(split_momentum(-0.25).second, 0.75, 1e-15);
    EXPECT_EQ(split_momentum(-1e-17).second, 0.0);
}

TEST(DensityMatrix, PureIsIdempotent)
{
    const auto rho = pure_density(von_mises_state(0.6, 0.0));
    EXPECT_NEAR(rho.purity(), 1.0, 1e-14);
    // (rho^2)_mn = rho_mn
    double r = 0.0;
    for (long m = rho.n_min(); m <= rho.n_max(); ++m)
        for (long n = rho.n_min(); n <= rho.n_max(); ++n) {
            complex sq{};
            for (long k = rho.n_min(); k <= rho.n_max(); ++k)
                sq += rho(m, k) * rho(k, n);
            r = std::max(r, std::abs(sq - rho(m, n)));
        }
    EXPECT_LT(r, 1e-14);
}

TEST(DensityMatrix, Validation)
{
    OperatorMatrix bad(0.0, 0, 2);
    bad.at(0, 0) = 0.5;
    bad.at(1, 1) = 0.5;
    bad.at(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix{bad}, std::domain_error);

    OperatorMatrix trace2(0.0, 0, 2);
    trace2.at(0, 0) = 1.0;
    trace2.at(1, 1) = 1.0;
    EXPECT_THROW(DensityMatrix{trace2}, std::domain_error);

    OperatorMatrix negative(0.0, 0, 2);
    negative.at(0, 0) = 1.5;
    negative.at(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{negative}, std::domain_error);
}

TEST(DensityMatrix, MixedPurityBelowOne)
{
    const std::vector<double> lambdas{0.25, 0.5, 0.25};
    const auto rho = diagonal_density(0.0, -1, lambdas);
    EXPECT_NEAR(rho.purity(), 0.375, 1e-15);
}

TEST(Operators, CosAndSinMatrixElements)
{
    const auto c = cos_operator(0.0, -2, 2);
    const auto s = sin_operator(0.0, -2, 2);
    EXPECT_EQ(c(1, 0), complex(0.5, 0.0));
    EXPECT_EQ(c(0, 1), complex(0.5, 0.0));
    EXPECT_EQ(c(0, 0), complex{});
    EXPECT_EQ(s(1, 0), complex(0.0, -0.5));
    EXPECT_EQ(s(0, 1), complex(0.0, 0.5));
    EXPECT_EQ(c.hermiticity_residual(), 0.0);
    EXPECT_EQ(s.hermiticity_residual(), 0.0);
}

TEST(Serialization, FourierStateRoundTrip)
{
    const auto psi = von_mises_state(0.9, -2.4);
    const auto back = fourier_state_from_json(json::parse(to_json(psi).dump()));
    EXPECT_EQ(back.n_min(), psi.n_min());
    EXPECT_EQ(back.delta(), psi.delta());
    ASSERT_EQ(back.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        EXPECT_EQ(back.coeffs()[i], psi.coeffs()[i]);
}

TEST(Serialization, DensityMatrixRoundTrip)
{
    const auto rho = pure_density(cat_state(0.4));
    const auto back = density_matrix_from_json(json::parse(to_json(rho).dump()));
    for (long m = -1; m <= 1; ++m)
        for (long n = -1; n <= 1; ++n)
            EXPECT_EQ(back(m, n), rho(m, n));
}

TEST(Serialization, MalformedInputRejected)
{
    EXPECT_THROW(fourier_state_from_json(json::parse(R"({"delta":0,"n_min":0,"coeffs":[[1]]})")), std::invalid_argument);
    EXPECT_THROW(density_matrix_from_json(json::parse(R"({"delta":0,"n_min":0,"entries":[[[1,0],[0,0]],[[0,0]]]})")), std::invalid_argument);
    EXPECT_THROW(fourier_state_from_json(json::parse(R"({"delta":0,"coeffs":[[1,0]]})")), json::exception);
}
