#pragma once

// Rotator states on the circle. A state is stored by its Fourier
// coefficients c_n over a finite index window [n_min, n_max] together with
// the covering parameter delta in [0, 1): psi(phi) = sum_n c_n e^{i(n+delta)phi}.

#include "cylwigner/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cylwigner {

using complex = std::complex<double>;

namespace detail {

inline void check_delta(double delta, const char* who)
{
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::domain_error(std::string(who) + ": delta must lie in [0, 1)");
}

inline void check_same_delta(double a, double b, const char* who)
{
    if (std::abs(a - b) > 1e-15)
        throw std::domain_error(std::string(who) + ": covering parameters delta differ");
}

} // namespace detail

class FourierState {
public:
    FourierState(double delta, long n_min, std::vector<complex> coeffs, double discarded_mass = 0.0)
        : delta_(delta), n_min_(n_min), coeffs_(std::move(coeffs)), discarded_mass_(discarded_mass)
    {
        detail::check_delta(delta_, "FourierState");
        if (coeffs_.empty())
            throw std::domain_error("FourierState: empty coefficient window");
        for (const auto& c : coeffs_)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::domain_error("FourierState: non-finite coefficient");
    }

    double delta() const noexcept { return delta_; }
    long n_min() const noexcept { return n_min_; }
    long n_max() const noexcept { return n_min_ + static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const complex> coeffs() const noexcept { return coeffs_; }

    /// c_n, zero outside the window.
    complex coeff(long n) const noexcept
    {
        if (n < n_min_ || n > n_max())
            return {};
        return coeffs_[static_cast<std::size_t>(n - n_min_)];
    }

    double norm_squared() const noexcept
    {
        double sum = 0.0;
        for (const auto& c : coeffs_)
            sum += std::norm(c);
        return sum;
    }

    bool is_normalized(double tol = 1e-10) const noexcept { return std::abs(norm_squared() - 1.0) <= tol; }

    /// Probability mass dropped when the window was truncated (before
    /// renormalization).
    double discarded_mass() const noexcept { return discarded_mass_; }

private:
    double delta_;
    long n_min_;
    std::vector<complex> coeffs_;
    double discarded_mass_;
};

/// Square complex matrix A_mn over the index window [n_min, n_min + dim).
/// Used for operators and, after validation, density matrices.
class OperatorMatrix {
public:
    OperatorMatrix(double delta, long n_min, std::size_t dim)
        : delta_(delta), n_min_(n_min), dim_(dim), entries_(dim * dim)
    {
        detail::check_delta(delta_, "OperatorMatrix");
        if (dim_ == 0)
            throw std::domain_error("OperatorMatrix: empty window");
    }

    OperatorMatrix(double delta, long n_min, std::size_t dim, std::vector<complex> entries)
        : delta_(delta), n_min_(n_min), dim_(dim), entries_(std::move(entries))
    {
        detail::check_delta(delta_, "OperatorMatrix");
        if (dim_ == 0)
            throw std::domain_error("OperatorMatrix: empty window");
        if (entries_.size() != dim_ * dim_)
            throw std::domain_error("OperatorMatrix: entry count does not match window");
        for (const auto& a : entries_)
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw std::domain_error("OperatorMatrix: non-finite entry");
    }

    double delta() const noexcept { return delta_; }
    long n_min() const noexcept { return n_min_; }
    long n_max() const noexcept { return n_min_ + static_cast<long>(dim_) - 1; }
    std::size_t dim() const noexcept { return dim_; }
    bool contains(long n) const noexcept { return n >= n_min_ && n <= n_max(); }

    /// A_mn, zero outside the window.
    complex operator()(long m, long n) const noexcept
    {
        if (!contains(m) || !contains(n))
            return {};
        return entries_[index(m, n)];
    }

    complex& at(long m, long n)
    {
        if (!contains(m) || !contains(n))
            throw std::out_of_range("OperatorMatrix::at: index outside window");
        return entries_[index(m, n)];
    }

    complex trace() const noexcept
    {
        complex t{};
        for (std::size_t i = 0; i < dim_; ++i)
            t += entries_[i * dim_ + i];
        return t;
    }

    /// max |A_mn - conj(A_nm)|
    double hermiticity_residual() const noexcept
    {
        double r = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                r = std::max(r, std::abs(entries_[i * dim_ + j] - std::conj(entries_[j * dim_ + i])));
        return r;
    }

    std::span<const complex> entries() const noexcept { return entries_; }

private:
    std::size_t index(long m, long n) const noexcept
    {
        return static_cast<std::size_t>(m - n_min_) * dim_ + static_cast<std::size_t>(n - n_min_);
    }

    double delta_;
    long n_min_;
    std::size_t dim_;
    std::vector<complex> entries_;
};

/// Hermitian, unit-trace, non-negative-diagonal matrix rho_mn.
class DensityMatrix {
public:
    static constexpr double hermiticity_tol = 1e-12;
    static constexpr double trace_tol = 1e-10;
    static constexpr double diagonal_tol = 1e-12;

    explicit DensityMatrix(OperatorMatrix rho) : rho_(std::move(rho))
    {
        if (rho_.hermiticity_residual() > hermiticity_tol)
            throw std::domain_error("DensityMatrix: matrix is not Hermitian");
        const complex tr = rho_.trace();
        if (std::abs(tr.real() - 1.0) > trace_tol || std::abs(tr.imag()) > trace_tol)
            throw std::domain_error("DensityMatrix: trace differs from 1 by " + std::to_string(std::abs(tr - 1.0)));
        for (long n = rho_.n_min(); n <= rho_.n_max(); ++n)
            if (rho_(n, n).real() < -diagonal_tol)
                throw std::domain_error("DensityMatrix: negative diagonal entry");
    }

    const OperatorMatrix& matrix() const noexcept { return rho_; }
    double delta() const noexcept { return rho_.delta(); }
    long n_min() const noexcept { return rho_.n_min(); }
    long n_max() const noexcept { return rho_.n_max(); }
    std::size_t dim() const noexcept { return rho_.dim(); }
    complex operator()(long m, long n) const noexcept { return rho_(m, n); }

    /// tr(rho^2); 1 for pure states.
    double purity() const noexcept
    {
        double sum = 0.0;
        for (const auto& a : rho_.entries())
            sum += std::norm(a);
        return sum;
    }

private:
    OperatorMatrix rho_;
};

// ---------------------------------------------------------------------------
// Constructors for the example families.

/// e_{m,delta}: c_m = 1 on the window [m, m].
inline FourierState basis_state(long m, double delta = 0.0)
{
    return FourierState(delta, m, {complex(1.0, 0.0)});
}

/// f_alpha = (e^{i phi} + e^{-i alpha} e^{-i phi}) / sqrt 2, delta = 0.
inline FourierState cat_state(double alpha)
{
    if (!std::isfinite(alpha))
        throw std::domain_error("cat_state: non-finite alpha");
    const double r = 1.0 / std::sqrt(2.0);
    return FourierState(0.0, -1, {std::polar(r, -alpha), complex(0.0, 0.0), complex(r, 0.0)});
}

/// Default half-width of the von Mises coefficient window.
inline long von_mises_half_width(double s)
{
    return std::max(20L, static_cast<long>(std::ceil(4.0 * s + 15.0)));
}

/// Splits p_e into n_e + delta with delta in [0, 1).
inline std::pair<long, double> split_momentum(double p_e)
{
    const double fl = std::floor(p_e);
    double delta = p_e - fl;
    long n_e = static_cast<long>(fl);
    if (delta >= 1.0) {
        delta = 0.0;
        ++n_e;
    }
    return {n_e, delta};
}

/// Minimal-uncertainty state psi_e(phi) = e^{i p_e phi + s cos phi} / sqrt(I_0(2s)),
/// with coefficients c_m = I_{m - n_e}(s) / sqrt(I_0(2s)) on
/// [n_e - W, n_e + W]. W = 0 selects von_mises_half_width(s). The truncated
/// coefficients are renormalized; the dropped mass must stay below 1e-12.
inline FourierState von_mises_state(double s, double p_e, long window_half_width = 0)
{
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::domain_error("von_mises_state: s must be positive");
    if (!std::isfinite(p_e))
        throw std::domain_error("von_mises_state: non-finite p_e");
    if (window_half_width < 0)
        throw std::domain_error("von_mises_state: negative window half-width");

    const auto [n_e, delta] = split_momentum(p_e);
    const long w = window_half_width > 0 ? window_half_width : von_mises_half_width(s);
    const double i0 = bessel_i(0, 2.0 * s);

    std::vector<double> profile(static_cast<std::size_t>(w) + 1);
    for (long k = 0; k <= w; ++k)
        profile[static_cast<std::size_t>(k)] = bessel_i(k, s);

    double dropped = 0.0;
    for (long k = w + 1;; ++k) {
        const double ik = bessel_i(k, s);
        const double term = 2.0 * ik * ik / i0;
        dropped += term;
        if (term < 1e-30 || ik == 0.0)
            break;
    }
    if (dropped > 1e-12)
        throw std::domain_error("von_mises_state: window half-width too small, dropped mass " + std::to_string(dropped));

    std::vector<complex> coeffs(2 * static_cast<std::size_t>(w) + 1);
    double norm = 0.0;
    for (long k = -w; k <= w; ++k) {
        const double c = profile[static_cast<std::size_t>(std::labs(k))] / std::sqrt(i0);
        coeffs[static_cast<std::size_t>(k + w)] = c;
        norm += c * c;
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& c : coeffs)
        c *= scale;
    return FourierState(delta, n_e - w, std::move(coeffs), dropped);
}

// ---------------------------------------------------------------------------
// Evaluation and Hilbert-space quantities.

/// psi(phi) = sum_n c_n e^{i(n+delta)phi}. Defined for every real phi as the
/// quasi-periodic continuation psi(phi + 2 pi) = e^{2 pi i delta} psi(phi).
inline complex evaluate_wavefunction(const FourierState& state, double phi)
{
    complex sum{};
    long n = state.n_min();
    for (const auto& c : state.coeffs()) {
        sum += c * std::polar(1.0, (static_cast<double>(n) + state.delta()) * phi);
        ++n;
    }
    return sum;
}

/// (a, b) = sum_n conj(a_n) b_n
inline complex inner_product(const FourierState& a, const FourierState& b)
{
    detail::check_same_delta(a.delta(), b.delta(), "inner_product");
    complex sum{};
    const long lo = std::max(a.n_min(), b.n_min());
    const long hi = std::min(a.n_max(), b.n_max());
    for (long n = lo; n <= hi; ++n)
        sum += std::conj(a.coeff(n)) * b.coeff(n);
    return sum;
}

/// <L> = sum_n (n + delta) |c_n|^2
inline double state_expectation_L(const FourierState& state)
{
    double sum = 0.0;
    long n = state.n_min();
    for (const auto& c : state.coeffs()) {
        sum += (static_cast<double>(n) + state.delta()) * std::norm(c);
        ++n;
    }
    return sum;
}

/// rho_mn = c_m conj(c_n)
inline DensityMatrix pure_density(const FourierState& state)
{
    const std::size_t dim = state.size();
    std::vector<complex> entries(dim * dim);
    const auto c = state.coeffs();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            entries[i * dim + j] = c[i] * std::conj(c[j]);
    return DensityMatrix(OperatorMatrix(state.delta(), state.n_min(), dim, std::move(entries)));
}

/// Diagonal density matrix diag(lambda_n) on [n_min, n_min + lambdas.size()).
inline DensityMatrix diagonal_density(double delta, long n_min, std::span<const double> lambdas)
{
    OperatorMatrix rho(delta, n_min, lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const long n = n_min + static_cast<long>(i);
        rho.at(n, n) = lambdas[i];
    }
    return DensityMatrix(std::move(rho));
}

// ---------------------------------------------------------------------------
// Operator matrices on a window.

inline OperatorMatrix identity_operator(double delta, long n_min, long n_max)
{
    OperatorMatrix a(delta, n_min, static_cast<std::size_t>(n_max - n_min + 1));
    for (long n = n_min; n <= n_max; ++n)
        a.at(n, n) = 1.0;
    return a;
}

/// L e_n = hbar (n + delta) e_n
inline OperatorMatrix angular_momentum_operator(double delta, long n_min, long n_max, double hbar = 1.0)
{
    OperatorMatrix a(delta, n_min, static_cast<std::size_t>(n_max - n_min + 1));
    for (long n = n_min; n <= n_max; ++n)
        a.at(n, n) = hbar * (static_cast<double>(n) + delta);
    return a;
}

/// C = cos phi: (e_m, C e_n) = (delta_{m,n+1} + delta_{m,n-1}) / 2
inline OperatorMatrix cos_operator(double delta, long n_min, long n_max)
{
    OperatorMatrix a(delta, n_min, static_cast<std::size_t>(n_max - n_min + 1));
    for (long n = n_min; n < n_max; ++n) {
        a.at(n + 1, n) = 0.5;
        a.at(n, n + 1) = 0.5;
    }
    return a;
}

/// S = sin phi: (e_m, S e_n) = (delta_{m,n+1} - delta_{m,n-1}) / 2i
inline OperatorMatrix sin_operator(double delta, long n_min, long n_max)
{
    OperatorMatrix a(delta, n_min, static_cast<std::size_t>(n_max - n_min + 1));
    const complex half_over_i(0.0, -0.5);
    for (long n = n_min; n < n_max; ++n) {
        a.at(n + 1, n) = half_over_i;
        a.at(n, n + 1) = -half_over_i;
    }
    return a;
}

} // namespace cylwigner
