#pragma once

// Time evolution under Hamiltonians diagonal in the angular-momentum basis.
// Evolution is exact phase multiplication; hbar enters as e^{-i E_n t / hbar}.

#include "cylwigner/states.hpp"
#include "cylwigner/wigner.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cylwigner {

class DiagonalHamiltonian {
public:
    DiagonalHamiltonian(double delta, long n_min, std::vector<double> eigenvalues, double epsilon = 0.0)
        : delta_(delta), n_min_(n_min), energies_(std::move(eigenvalues)), epsilon_(epsilon)
    {
        detail::check_delta(delta_, "DiagonalHamiltonian");
        if (energies_.empty())
            throw std::domain_error("DiagonalHamiltonian: empty window");
        for (double e : energies_)
            if (!std::isfinite(e))
                throw std::domain_error("DiagonalHamiltonian: non-finite eigenvalue");
    }

    /// Free rotor H = epsilon L^2 with E_n = epsilon (n + delta)^2.
    static DiagonalHamiltonian rotor(double epsilon, long n_min, long n_max, double delta = 0.0)
    {
        if (n_max < n_min)
            throw std::domain_error("DiagonalHamiltonian::rotor: empty window");
        std::vector<double> e(static_cast<std::size_t>(n_max - n_min + 1));
        for (long n = n_min; n <= n_max; ++n) {
            const double j = static_cast<double>(n) + delta;
            e[static_cast<std::size_t>(n - n_min)] = epsilon * j * j;
        }
        return DiagonalHamiltonian(delta, n_min, std::move(e), epsilon);
    }

    double delta() const noexcept { return delta_; }
    long n_min() const noexcept { return n_min_; }
    long n_max() const noexcept { return n_min_ + static_cast<long>(energies_.size()) - 1; }
    double epsilon() const noexcept { return epsilon_; }
    bool covers(long lo, long hi) const noexcept { return lo >= n_min_ && hi <= n_max(); }

    double energy(long n) const
    {
        if (n < n_min_ || n > n_max())
            throw std::domain_error("DiagonalHamiltonian: index " + std::to_string(n) + " outside window");
        return energies_[static_cast<std::size_t>(n - n_min_)];
    }

private:
    double delta_;
    long n_min_;
    std::vector<double> energies_;
    double epsilon_;
};

namespace detail {

inline void check_covers(const DiagonalHamiltonian& h, double delta, long lo, long hi, const char* who)
{
    check_same_delta(h.delta(), delta, who);
    if (!h.covers(lo, hi))
        throw std::domain_error(std::string(who) + ": Hamiltonian window does not cover the state window");
}

} // namespace detail

/// c_n(t) = e^{-i E_n t / hbar} c_n(0)
inline FourierState evolve_state(const FourierState& state, const DiagonalHamiltonian& h, double t, double hbar = 1.0)
{
    detail::check_covers(h, state.delta(), state.n_min(), state.n_max(), "evolve_state");
    if (!(hbar > 0.0))
        throw std::domain_error("evolve_state: hbar must be positive");
    std::vector<complex> c(state.coeffs().begin(), state.coeffs().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const long n = state.n_min() + static_cast<long>(i);
        c[i] *= std::polar(1.0, -h.energy(n) * t / hbar);
    }
    return FourierState(state.delta(), state.n_min(), std::move(c), state.discarded_mass());
}

/// rho_mn(t) = e^{-i (E_m - E_n) t / hbar} rho_mn(0)
inline DensityMatrix evolve_density(const DensityMatrix& rho, const DiagonalHamiltonian& h, double t, double hbar = 1.0)
{
    detail::check_covers(h, rho.delta(), rho.n_min(), rho.n_max(), "evolve_density");
    if (!(hbar > 0.0))
        throw std::domain_error("evolve_density: hbar must be positive");
    OperatorMatrix out(rho.delta(), rho.n_min(), rho.dim());
    for (long m = rho.n_min(); m <= rho.n_max(); ++m)
        for (long n = rho.n_min(); n <= rho.n_max(); ++n)
            out.at(m, n) = (m == n) ? rho(m, n) : rho(m, n) * std::polar(1.0, -(h.energy(m) - h.energy(n)) * t / hbar);
    return DensityMatrix(std::move(out));
}

/// K_mn(theta, p) = i (E_m - E_n) V_mn(theta, p), the generator of
/// d/dt V_{psi2 psi1} = (psi2, K psi1).
inline complex k_matrix_element(long m, long n, const DiagonalHamiltonian& h, const PhasePoint& at)
{
    if (m == n)
        return {};
    return complex(0.0, h.energy(m) - h.energy(n)) * wigner_matrix_element(m, n, h.delta(), at);
}

/// tr K over [n_min, n_max]; identically zero since K has a vanishing diagonal.
inline complex k_matrix_trace(long n_min, long n_max, const DiagonalHamiltonian& h, const PhasePoint& at)
{
    complex t{};
    for (long n = n_min; n <= n_max; ++n)
        t += k_matrix_element(n, n, h, at);
    return t;
}

/// d/dt V_psi(theta, p; t) at t = 0, i.e. (psi, K(theta, p) psi).
inline double wigner_time_derivative(const FourierState& state, const DiagonalHamiltonian& h, const PhasePoint& at)
{
    detail::check_covers(h, state.delta(), state.n_min(), state.n_max(), "wigner_time_derivative");
    complex total{};
    for (long m = state.n_min(); m <= state.n_max(); ++m)
        for (long n = state.n_min(); n <= state.n_max(); ++n)
            total += std::conj(state.coeff(m)) * k_matrix_element(m, n, h, at) * state.coeff(n);
    return detail::require_real(total, state.norm_squared(), "wigner_time_derivative");
}

/// d/dt V_rho = tr[rho K] = sum_mn rho_mn K_nm.
inline double density_time_derivative(const DensityMatrix& rho, const DiagonalHamiltonian& h, const PhasePoint& at)
{
    detail::check_covers(h, rho.delta(), rho.n_min(), rho.n_max(), "density_time_derivative");
    complex total{};
    for (long m = rho.n_min(); m <= rho.n_max(); ++m)
        for (long n = rho.n_min(); n <= rho.n_max(); ++n)
            total += rho(m, n) * k_matrix_element(n, m, h, at);
    return detail::require_real(total, 1.0, "density_time_derivative");
}

/// <H> = sum_n E_n |c_n|^2
inline double energy_expectation(const FourierState& state, const DiagonalHamiltonian& h)
{
    detail::check_covers(h, state.delta(), state.n_min(), state.n_max(), "energy_expectation");
    double e = 0.0;
    for (long n = state.n_min(); n <= state.n_max(); ++n)
        e += h.energy(n) * std::norm(state.coeff(n));
    return e;
}

} // namespace cylwigner
