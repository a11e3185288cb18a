#pragma once

// Self-check suite behind the `verify` command: each invariant is measured
// as a residual and compared with its tolerance.

#include "cylwigner/dynamics.hpp"
#include "cylwigner/quadrature.hpp"
#include "cylwigner/specfun.hpp"
#include "cylwigner/states.hpp"
#include "cylwigner/thermal.hpp"
#include "cylwigner/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace cylwigner {

struct InvariantResult {
    std::string invariant_id;
    double residual;
    double tolerance;
    bool pass;
};

struct VerifyOptions {
    double tolerance_scale = 1.0;
    // Replace sinc in the analytic integrals by a slightly dilated kernel;
    // the orthonormality checks must then fail.
    bool perturb_sinc = false;
};

/// sinc pi(x (1 + eps)): wrong zeros, used as a negative control.
struct PerturbedSinc {
    double eps = 1e-6;
    double operator()(double x) const { return sinc_pi(x * (1.0 + eps)); }
};

/// Tolerance multiplier for a named profile: "default", "strict" or "loose".
inline double tolerance_profile_scale(const std::string& profile)
{
    if (profile == "default")
        return 1.0;
    if (profile == "strict")
        return 0.1;
    if (profile == "loose")
        return 10.0;
    throw std::invalid_argument("unknown tolerance profile '" + profile + "'");
}

namespace detail {

template <class Sinc>
double sinc_orthonormality_residual(Sinc sinc)
{
    double r = 0.0;
    for (long m = -10; m <= 10; ++m)
        for (long n = -10; n <= 10; ++n)
            for (double delta : {0.0, 0.37})
                r = std::max(r, std::abs(sinc_overlap(m + delta, n + delta, sinc) - (m == n ? 1.0 : 0.0)));
    return r;
}

template <class Sinc>
double wigner_orthogonality_residual(Sinc sinc)
{
    double r = 0.0;
    for (double delta : {0.0, 0.25})
        for (long k = -2; k <= 2; ++k)
            for (long l = -2; l <= 2; ++l)
                for (long m = -2; m <= 2; ++m)
                    for (long n = -2; n <= 2; ++n) {
                        const double expected = (k == n && l == m) ? 1.0 : 0.0;
                        r = std::max(r, std::abs(two_pi * wigner_product_integral(k, l, m, n, delta, sinc) - expected));
                    }
    return r;
}

inline std::vector<FourierState> example_states()
{
    return {basis_state(0), basis_state(3, 0.4), cat_state(0.0), cat_state(1.1), von_mises_state(0.5, 0.0), von_mises_state(1.0, 2.3)};
}

} // namespace detail

inline std::vector<InvariantResult> run_verification(const VerifyOptions& opts = {})
{
    std::vector<InvariantResult> out;
    const auto record = [&](std::string id, double residual, double tol) {
        tol *= opts.tolerance_scale;
        out.push_back({std::move(id), residual, tol, std::isfinite(residual) && residual <= tol});
    };
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> angle(-pi, pi);
    std::uniform_real_distribution<double> momentum(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    if (opts.perturb_sinc) {
        record("sinc_orthonormality", detail::sinc_orthonormality_residual(PerturbedSinc{}), 1e-12);
        record("wigner_matrix_orthogonality", detail::wigner_orthogonality_residual(PerturbedSinc{}), 1e-10);
    } else {
        record("sinc_orthonormality", detail::sinc_orthonormality_residual(SincPi{}), 1e-12);
        record("wigner_matrix_orthogonality", detail::wigner_orthogonality_residual(SincPi{}), 1e-10);
    }

    {
        double r = 0.0;
        for (long m = -50; m <= 50; ++m)
            r = std::max(r, std::abs(sinc_pi(static_cast<double>(m)) - (m == 0 ? 1.0 : 0.0)));
        record("sinc_integer_zeros", r, 1e-15);
    }

    {
        double herm = 0.0;
        double bound = 0.0;
        std::uniform_int_distribution<long> index(-8, 8);
        for (int i = 0; i < 200; ++i) {
            const long m = index(rng);
            const long n = index(rng);
            const double delta = unit(rng) * 0.999;
            const PhasePoint at(angle(rng), momentum(rng));
            const complex vmn = wigner_matrix_element(m, n, delta, at);
            herm = std::max(herm, std::abs(vmn - std::conj(wigner_matrix_element(n, m, delta, at))));
            bound = std::max(bound, std::abs(vmn) - 1.0 / two_pi);
        }
        record("wigner_matrix_hermiticity", herm, 1e-15);
        record("wigner_matrix_bound", std::max(0.0, bound), 1e-15);
    }

    const auto states = detail::example_states();
    {
        double excess = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const auto& s = states[static_cast<std::size_t>(i) % states.size()];
            const PhasePoint at(angle(rng), momentum(rng));
            excess = std::max(excess, std::abs(wigner_function(s, at)) - 1.0 / pi);
        }
        record("wigner_function_bound", std::max(0.0, excess), 1e-12);
    }

    {
        const QuadratureRule rule = gauss_legendre(default_theta_order);
        double norm_r = 0.0;
        double mom_r = 0.0;
        double ang_r = 0.0;
        for (const auto& s : states) {
            const double total = integrate_theta([&](double t) { return momentum_integral(s, t); }, rule);
            norm_r = std::max(norm_r, std::abs(total - 1.0));
            const CardinalSeries omega = marginal_momentum(s);
            for (int i = 0; i < 5; ++i) {
                const double p = momentum(rng);
                const double quad = integrate_theta([&](double t) { return wigner_function(s, PhasePoint(t, p)); }, rule);
                mom_r = std::max(mom_r, std::abs(quad - omega(p)));
                const double t = angle(rng);
                ang_r = std::max(ang_r, std::abs(marginal_angle(s, t) - momentum_integral(s, t)));
            }
        }
        record("wigner_normalization", norm_r, 1e-10);
        record("marginal_momentum_consistency", mom_r, 1e-9);
        record("marginal_angle_consistency", ang_r, 1e-9);
    }

    {
        // |sum_{|n|<=N} sinc pi(p - n - delta) - 1| relative to the 2/(pi N) tail bound
        double worst = 0.0;
        for (long big_n : {50L, 200L, 800L}) {
            for (int i = 0; i < 21; ++i) {
                const double p = -0.5 + 0.05 * i;
                double sum = 0.0;
                for (long n = -big_n; n <= big_n; ++n)
                    sum += sinc_pi(p - static_cast<double>(n));
                worst = std::max(worst, std::abs(sum - 1.0) * pi * static_cast<double>(big_n) / 2.0);
            }
        }
        record("sinc_trace_identity_tail_ratio", worst, 1.0);
    }

    {
        double r = 0.0;
        for (double s : {0.25, 0.5, 1.0, 2.0}) {
            double sum = 0.0;
            for (long k = -40; k <= 40; ++k)
                sum += bessel_i(k, s) * bessel_i(k, s);
            r = std::max(r, std::abs(sum / bessel_i(0, 2.0 * s) - 1.0));
        }
        record("von_mises_normalization", r, 1e-10);
    }

    {
        double r = 0.0;
        for (double eb = 0.5; eb <= 5.0; eb += 0.25)
            for (double z : {0.0, 0.3, 1.0, 2.2})
                r = std::max(r, std::abs(theta3_series(z, std::exp(-eb)) / theta3_jacobi(z, eb) - 1.0));
        record("theta3_jacobi_agreement", r, 1e-12);
    }

    {
        double r = 0.0;
        for (double eb : {0.01, 0.1, 1.0, 10.0, 40.0}) {
            const ThermalParams tp(eb);
            const double direct = partition_function_direct(tp);
            r = std::max({r, std::abs(partition_function(tp) / direct - 1.0), std::abs(partition_function_jacobi(tp) / direct - 1.0)});
        }
        record("partition_function_routes", r, 1e-11);
    }

    {
        double r = 0.0;
        for (double s : {0.25, 0.5, 1.0, 2.0}) {
            const auto u = uncertainty_product(von_mises_state(s, 2.3));
            r = std::max(r, std::abs(u.lhs - u.rhs));
        }
        record("von_mises_uncertainty_saturation", r, 1e-8);
    }

    {
        const FourierState psi = von_mises_state(1.0, 0.6);
        const auto h = DiagonalHamiltonian::rotor(1.0, psi.n_min(), psi.n_max(), psi.delta());
        const FourierState a = evolve_state(evolve_state(psi, h, 0.7), h, 1.9);
        const FourierState b = evolve_state(psi, h, 2.6);
        double r = std::abs(a.norm_squared() - 1.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            r = std::max(r, std::abs(a.coeffs()[i] - b.coeffs()[i]));
        record("evolution_group_law", r, 1e-12);
    }

    {
        const DensityMatrix source = pure_density(cat_state(0.0));
        const auto rec = reconstruct_density([&](const PhasePoint& at) { return wigner_density(source, at); }, -1, 1, 0.0);
        double r = 0.0;
        for (long m = -1; m <= 1; ++m)
            for (long n = -1; n <= 1; ++n)
                r = std::max(r, std::abs(rec.matrix(m, n) - source(m, n)));
        record("density_reconstruction", r, 1e-8);
    }

    {
        // mass of (1/hbar) sinc[pi (p - hbar m)/hbar] within |p - hbar m| < 0.05
        const QuadratureRule rule = gauss_legendre(64);
        double previous = 0.0;
        double violation = 0.0;
        for (double hbar : {1.0, 0.3, 0.1, 0.03, 0.01}) {
            const long m = 3;
            const double centre = hbar * static_cast<double>(m);
            const double mass = integrate_interval([&](double p) { return rescale_hbar(p, hbar, m) / hbar; }, centre - 0.05, centre + 0.05, rule, 8);
            violation += std::max(0.0, previous - mass);
            previous = mass;
        }
        violation += std::max(0.0, 0.95 - previous);
        record("classical_limit_concentration", violation, 1e-15);
    }
    return out;
}

} // namespace cylwigner
