#pragma once

// Special functions used throughout the library: the normalized sinc,
// modified Bessel functions of integer order, and the Jacobi theta function
// theta_3 in its direct, Jacobi-transformed and imaginary-argument forms.

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cylwigner {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// sin(pi x) with exact zeros at the integers.
inline double sin_pi(double x)
{
    double r = std::remainder(x, 2.0); // r in [-1, 1]
    if (r > 0.5)
        r = 1.0 - r;
    else if (r < -0.5)
        r = -1.0 - r;
    return std::sin(pi * r);
}

/// Normalized sinc, sin(pi x)/(pi x), with the removable singularity filled
/// by its Taylor polynomial for |x| < 1e-6.
inline double sinc_pi(double x)
{
    if (!std::isfinite(x))
        throw std::domain_error("sinc_pi: non-finite argument");
    if (std::abs(x) < 1e-6) {
        const double t2 = (pi * x) * (pi * x);
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return sin_pi(x) / (pi * x);
}

/// Callable wrapper around sinc_pi. Analytic phase-space integrals are
/// templated on the kernel so the verification suite can substitute a
/// perturbed one.
struct SincPi {
    double operator()(double x) const { return sinc_pi(x); }
};

namespace detail {

inline double bessel_i_series(long n, double x)
{
    // (x/2)^n / n!
    const double half = 0.5 * x;
    double term;
    if (n <= 1000) {
        term = 1.0;
        for (long j = 1; j <= n; ++j)
            term *= half / static_cast<double>(j);
    } else {
        term = std::exp(static_cast<double>(n) * std::log(half) - std::lgamma(static_cast<double>(n) + 1.0));
    }
    if (term == 0.0)
        return 0.0;

    const double q = half * half;
    double sum = term;
    for (long k = 1; k < 100000; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + n));
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum;
}

// Miller backward recurrence I_{k-1} = I_{k+1} + (2k/x) I_k, normalized with
// e^x = I_0 + 2 sum_{k>=1} I_k.
inline double bessel_i_miller(long n, double x)
{
    const double tail = std::sqrt(80.0 * x);
    const double top = std::max(static_cast<double>(n), tail);
    const long start = static_cast<long>(top + std::sqrt(40.0 * top)) + 20;

    double next = 0.0; // I_{k+1}
    double cur = 1e-280; // I_k
    double sum = 0.0;
    double result = (start == n) ? cur : 0.0;
    for (long k = start; k >= 1; --k) {
        const double prev = next + (2.0 * static_cast<double>(k) / x) * cur;
        sum += 2.0 * cur;
        next = cur;
        cur = prev;
        if (k - 1 == n)
            result = cur;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            next *= 1e-250;
            sum *= 1e-250;
            result *= 1e-250;
        }
    }
    sum += cur; // I_0
    return (result / sum) * std::exp(x);
}

} // namespace detail

/// Modified Bessel function I_n(z) of integer order n and real argument z.
///
/// Uses the ascending power series for |z| <= 15 and Miller's backward
/// recurrence otherwise. Throws std::domain_error for |n| > 1e6 or
/// non-finite z and std::range_error for |z| > 700, where e^|z| approaches
/// the double overflow threshold.
inline double bessel_i(long n, double z)
{
    if (!std::isfinite(z))
        throw std::domain_error("bessel_i: non-finite argument");
    if (std::labs(n) > 1000000)
        throw std::domain_error("bessel_i: |n| > 1e6");
    if (std::abs(z) > 700.0)
        throw std::range_error("bessel_i: |z| > 700 overflows");

    const long order = std::labs(n);
    const double x = std::abs(z);
    if (x == 0.0)
        return order == 0 ? 1.0 : 0.0;

    const double value = (x <= 15.0) ? detail::bessel_i_series(order, x) : detail::bessel_i_miller(order, x);
    return (z < 0.0 && (order % 2 == 1)) ? -value : value;
}

/// Direct series theta_3(z, q) = 1 + 2 sum_{n>=1} q^{n^2} cos 2nz, truncated
/// once q^{n^2} < 1e-16.
inline double theta3_series(double z, double q)
{
    if (!(q >= 0.0 && q < 1.0))
        throw std::domain_error("theta3: nome q must lie in [0, 1)");
    if (!std::isfinite(z))
        throw std::domain_error("theta3: non-finite argument");
    if (q == 0.0)
        return 1.0;

    const double log_q = std::log(q);
    double sum = 0.0;
    for (long n = 1;; ++n) {
        const double weight = std::exp(log_q * static_cast<double>(n) * static_cast<double>(n));
        if (weight < 1e-16)
            break;
        sum += weight * std::cos(2.0 * static_cast<double>(n) * z);
    }
    return 1.0 + 2.0 * sum;
}

/// theta_3(z | tau = i eps_beta / pi), i.e. nome q = exp(-eps_beta), evaluated
/// through Jacobi's imaginary transformation. The transformed series has nome
/// exp(-pi^2/eps_beta); each of its terms is merged with the Gaussian
/// prefactor exp(-z^2/eps_beta), giving
///     sqrt(pi/eps_beta) * sum_n exp(-(z + n pi)^2 / eps_beta),
/// which is free of intermediate overflow.
inline double theta3_jacobi(double z, double eps_beta)
{
    if (!(eps_beta > 0.0) || !std::isfinite(eps_beta))
        throw std::domain_error("theta3_jacobi: eps_beta must be positive");
    if (!std::isfinite(z))
        throw std::domain_error("theta3_jacobi: non-finite argument");

    // theta_3 has period pi in z.
    const double zr = z - pi * std::nearbyint(z / pi);
    double sum = std::exp(-zr * zr / eps_beta);
    for (long n = 1;; ++n) {
        const double a = zr + pi * static_cast<double>(n);
        const double b = zr - pi * static_cast<double>(n);
        const double term = std::exp(-a * a / eps_beta) + std::exp(-b * b / eps_beta);
        sum += term;
        if (term <= 1e-17 * sum)
            break;
    }
    return std::sqrt(pi / eps_beta) * sum;
}

/// theta_3(z, q) choosing the faster-converging representation: the direct
/// series for q <= 1/e and the Jacobi-transformed series above.
inline double theta3(double z, double q)
{
    if (!(q >= 0.0 && q < 1.0))
        throw std::domain_error("theta3: nome q must lie in [0, 1)");
    if (q > std::exp(-1.0))
        return theta3_jacobi(z, -std::log(q));
    return theta3_series(z, q);
}

namespace detail {

// 1 + 2 sum_{n>=1} e^{n^2 log_q} cosh 2ny, each factor evaluated literally.
// A term that still contributes but needs cosh beyond the double range, or a
// power of q below it, is a std::range_error.
inline double theta3_imaginary_log_nome(double y, double log_q)
{
    constexpr double cosh_limit = 709.78;
    constexpr double exp_floor = -708.39; // log of the smallest normal double
    const double ay = std::abs(y);
    const double peak = ay / -log_q; // terms grow up to n ~ peak
    double sum = 1.0;
    for (long n = 1;; ++n) {
        const double dn = static_cast<double>(n);
        const double arg = 2.0 * dn * ay;
        const double log_power = log_q * dn * dn;
        // log of 2 q^{n^2} cosh(2ny), up to a term below log 2
        const double log_term = log_power + arg;
        if (dn > peak && log_term < std::log(1e-17 * sum))
            break;
        if (log_term >= std::log(1e-17 * sum)) {
            if (arg > cosh_limit)
                throw std::range_error("theta3_imaginary: cosh(" + std::to_string(arg) + ") overflows");
            if (log_power < exp_floor)
                throw std::range_error("theta3_imaginary: q^" + std::to_string(n * n) + " underflows");
        }
        const double term = 2.0 * std::exp(log_power) * std::cosh(std::min(arg, cosh_limit));
        sum += term;
        if (dn > peak && term <= 1e-17 * sum)
            break;
    }
    return sum;
}

} // namespace detail

/// theta_3 at purely imaginary argument z = i y:
/// 1 + 2 sum_{n>=1} q^{n^2} cosh 2ny. Throws std::range_error when a term
/// that still contributes would need cosh beyond the double range.
inline double theta3_imaginary(double y, double q)
{
    if (!(q >= 0.0 && q < 1.0))
        throw std::domain_error("theta3_imaginary: nome q must lie in [0, 1)");
    if (!std::isfinite(y))
        throw std::domain_error("theta3_imaginary: non-finite argument");
    if (q == 0.0)
        return 1.0;
    return detail::theta3_imaginary_log_nome(y, std::log(q));
}

} // namespace cylwigner
