#pragma once

// Thermal states of the free rotor H = epsilon L^2 (delta = 0):
// lambda_n = e^{-n^2 eps_beta} / Z with Z = theta_3(0, e^{-eps_beta}).

#include "cylwigner/quadrature.hpp"
#include "cylwigner/specfun.hpp"
#include "cylwigner/states.hpp"
#include "cylwigner/wigner.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cylwigner {

class ThermalParams {
public:
    /// window_half_width = 0 picks ceil(sqrt(33 / eps_beta)) + 5.
    explicit ThermalParams(double eps_beta, long window_half_width = 0) : eps_beta_(eps_beta)
    {
        if (!(eps_beta > 0.0) || !std::isfinite(eps_beta))
            throw std::domain_error("ThermalParams: eps_beta must be positive");
        if (window_half_width < 0)
            throw std::domain_error("ThermalParams: negative window half-width");
        half_width_ = window_half_width > 0 ? window_half_width : default_half_width(eps_beta);
        const double edge = static_cast<double>(half_width_);
        if (std::exp(-edge * edge * eps_beta) >= 1e-14)
            throw std::domain_error("ThermalParams: window half-width " + std::to_string(half_width_) + " leaves Boltzmann weight above 1e-14");
    }

    static long default_half_width(double eps_beta)
    {
        return static_cast<long>(std::ceil(std::sqrt(33.0 / eps_beta))) + 5;
    }

    double eps_beta() const noexcept { return eps_beta_; }
    long window_half_width() const noexcept { return half_width_; }
    double nome() const noexcept { return std::exp(-eps_beta_); }

private:
    double eps_beta_;
    long half_width_ = 0;
};

/// Z = theta_3(0, e^{-eps_beta}).
inline double partition_function(const ThermalParams& tp)
{
    return theta3(0.0, tp.nome());
}

/// Z as the plain Boltzmann sum over the window, smallest terms first.
inline double partition_function_direct(const ThermalParams& tp)
{
    double sum = 0.0;
    for (long n = tp.window_half_width(); n >= 1; --n) {
        const double dn = static_cast<double>(n);
        sum += 2.0 * std::exp(-dn * dn * tp.eps_beta());
    }
    return sum + 1.0;
}

/// Z = sqrt(pi / eps_beta) theta_3(0, e^{-pi^2 / eps_beta}).
inline double partition_function_jacobi(const ThermalParams& tp)
{
    return theta3_jacobi(0.0, tp.eps_beta());
}

inline DensityMatrix thermal_density(const ThermalParams& tp)
{
    const long w = tp.window_half_width();
    const double z = partition_function(tp);
    std::vector<double> lambdas(2 * static_cast<std::size_t>(w) + 1);
    for (long n = -w; n <= w; ++n) {
        const double dn = static_cast<double>(n);
        lambdas[static_cast<std::size_t>(n + w)] = std::exp(-dn * dn * tp.eps_beta()) / z;
    }
    return diagonal_density(0.0, -w, lambdas);
}

/// V_rho(theta, p) = (1 / 2pi Z) sum_n e^{-n^2 eps_beta} sinc pi(p - n);
/// independent of theta.
inline double thermal_wigner(const ThermalParams& tp, const PhasePoint& at)
{
    const long w = tp.window_half_width();
    double sum = 0.0;
    for (long n = w; n >= 1; --n) {
        const double dn = static_cast<double>(n);
        const double weight = std::exp(-dn * dn * tp.eps_beta());
        sum += weight * (sinc_pi(at.p() - dn) + sinc_pi(at.p() + dn));
    }
    sum += sinc_pi(at.p());
    return sum / (two_pi * partition_function(tp));
}

/// Same Wigner function from the theta_3 integral
/// (1 / 2pi^2 Z) int_0^pi cos(p alpha) theta_3(alpha/2, e^{-eps_beta}) d alpha.
inline double thermal_wigner_integral(const ThermalParams& tp, double p, int order = default_theta_order)
{
    const double q = tp.nome();
    const auto integrand = [&](double alpha) { return std::cos(p * alpha) * theta3(0.5 * alpha, q); };
    const double integral = integrate_interval(integrand, 0.0, pi, gauss_legendre(order), theta_panels);
    return integral / (2.0 * pi * pi * partition_function(tp));
}

/// theta_3(alpha/2, e^{-eps_beta}) through the imaginary-argument form
/// sqrt(pi/eps_beta) e^{-alpha^2 / 4 eps_beta} theta_3(i pi alpha / 2 eps_beta, e^{-pi^2/eps_beta}).
/// Throws std::range_error once the cosh series leaves the double range,
/// which happens for eps_beta below about pi alpha / 709 when alpha is
/// close to pi.
inline double theta3_half_angle_imaginary(double alpha, double eps_beta)
{
    if (!(eps_beta > 0.0) || !std::isfinite(eps_beta) || !std::isfinite(alpha))
        throw std::domain_error("theta3_half_angle_imaginary: eps_beta must be positive");
    const double y = pi * alpha / (2.0 * eps_beta);
    const double log_q = -pi * pi / eps_beta; // q itself may underflow
    return std::sqrt(pi / eps_beta) * std::exp(-alpha * alpha / (4.0 * eps_beta)) * detail::theta3_imaginary_log_nome(y, log_q);
}

inline constexpr double low_temperature_min_eps_beta = 3.0;
inline constexpr double high_temperature_max_eps_beta = 0.05;

/// First-order low-temperature approximation
/// (1/2pi) sinc pi p [1 - e^{-eps_beta}(2 + p/(p+1) + p/(p-1))].
/// Uses sinc pi p * p/(p +- 1) = -sinc pi(p +- 1), which removes the
/// apparent poles at p = +-1 exactly.
inline double low_temp_wigner(const ThermalParams& tp, double p)
{
    if (tp.eps_beta() < low_temperature_min_eps_beta)
        throw std::domain_error("low_temp_wigner: requires eps_beta >= 3");
    const double q = tp.nome();
    return (sinc_pi(p) * (1.0 - 2.0 * q) + q * (sinc_pi(p + 1.0) + sinc_pi(p - 1.0))) / two_pi;
}

/// Boltzmann limit sqrt(pi eps_beta) / (2 pi^2) e^{-eps_beta p^2}.
inline double high_temp_wigner(const ThermalParams& tp, double p)
{
    if (tp.eps_beta() > high_temperature_max_eps_beta)
        throw std::domain_error("high_temp_wigner: requires eps_beta <= 0.05");
    return std::sqrt(pi * tp.eps_beta()) / (2.0 * pi * pi) * std::exp(-tp.eps_beta() * p * p);
}

/// Closed-form Gaussian integral of high_temp_wigner over p.
inline double high_temp_momentum_integral(const ThermalParams& tp)
{
    if (tp.eps_beta() > high_temperature_max_eps_beta)
        throw std::domain_error("high_temp_momentum_integral: requires eps_beta <= 0.05");
    return std::sqrt(pi * tp.eps_beta()) / (2.0 * pi * pi) * std::sqrt(pi / tp.eps_beta());
}

} // namespace cylwigner
