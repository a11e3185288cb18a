#pragma once

// Reference computations used only by the tests. They are written from the
// defining formulas and share no code paths with the library beyond
// evaluate_wavefunction.

#include "cylwigner/states.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

constexpr double pi = std::numbers::pi;

// Composite Simpson on [a, b] with n (even) subintervals.
template <class Fn>
double simpson(Fn&& f, double a, double b, int n = 20000)
{
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

// Trapezoid over one period [-pi, pi); spectrally accurate for smooth
// periodic integrands.
template <class Fn>
double periodic_trapezoid(Fn&& f, int n = 512)
{
    const double h = 2.0 * pi / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += f(-pi + i * h);
    return sum * h;
}

// I_n(z) = (1/2pi) int_{-pi}^{pi} e^{z cos t} cos(n t) dt
inline double bessel_i_quadrature(long n, double z)
{
    return periodic_trapezoid([&](double t) { return std::exp(z * std::cos(t)) * std::cos(static_cast<double>(n) * t); }) / (2.0 * pi);
}

// Ascending series in long double; every term is positive for z >= 0.
inline double bessel_i_series(long n, double z)
{
    n = std::labs(n);
    const long double h = 0.5L * std::fabs(z);
    long double term = 1.0L;
    for (long k = 1; k <= n; ++k)
        term *= h / k;
    long double sum = term;
    for (long k = 1; k < 500; ++k) {
        term *= h * h / (static_cast<long double>(k) * static_cast<long double>(k + n));
        sum += term;
        if (term < sum * 1e-21L)
            break;
    }
    const double v = static_cast<double>(sum);
    return (z < 0.0 && (n % 2)) ? -v : v;
}

// theta_3(z, q) = 1 + 2 sum q^{n^2} cos 2nz, summed far past convergence.
inline double theta3_sum(double z, double q, long terms = 400)
{
    long double sum = 0.0L;
    for (long n = terms; n >= 1; --n)
        sum += 2.0L * std::pow(static_cast<long double>(q), static_cast<long double>(n) * n) * std::cos(2.0L * n * z);
    return static_cast<double>(sum + 1.0L);
}

// Wigner function from its integral definition
//   V(theta, p) = (1/4pi^2) int_{-pi}^{pi} du e^{i p u} conj psi2(theta + u/2) psi1(theta - u/2).
inline std::complex<double> moyal_integral(const cylwigner::FourierState& bra, const cylwigner::FourierState& ket, double theta, double p)
{
    const auto part = [&](bool imag) {
        return simpson(
            [&](double u) {
                const auto v = std::polar(1.0, p * u) * std::conj(cylwigner::evaluate_wavefunction(bra, theta + 0.5 * u)) *
                               cylwigner::evaluate_wavefunction(ket, theta - 0.5 * u);
                return imag ? v.imag() : v.real();
            },
            -pi, pi, 4000);
    };
    return std::complex<double>(part(false), part(true)) / (4.0 * pi * pi);
}

inline double sinc(double x)
{
    return x == 0.0 ? 1.0 : std::sin(pi * x) / (pi * x);
}

} // namespace oracle
