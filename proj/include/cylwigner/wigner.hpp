#pragma once

// Wigner-Moyal functions on the cylindrical phase space S^1 x R with the
// canonical pair (theta, p).
//
// Central object is the matrix
//     V_mn(theta, p) = (1/2pi) e^{i(n-m)theta} sinc pi[p - (m+n+2 delta)/2],
// from which Moyal and Wigner functions follow as quadratic forms in the
// Fourier coefficients. All p-integrals below are evaluated exactly by moving
// to the Fourier side: every p-dependence is a finite combination of
// sinc pi(p - c), and
//     int dp sinc pi(p - a) sinc pi(p - b) = sinc pi(a - b),
//     int dp sinc pi(p - c) g(p)          = g(c)   for g band-limited to [-pi, pi].
// Only theta-integrals are done by quadrature.

#include "cylwigner/errors.hpp"
#include "cylwigner/quadrature.hpp"
#include "cylwigner/specfun.hpp"
#include "cylwigner/states.hpp"

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

/// Point of the cylinder; theta is reduced into [-pi, pi) on construction.
class PhasePoint {
public:
    PhasePoint(double theta, double p) : theta_(reduce_angle(theta)), p_(p)
    {
        if (!std::isfinite(theta) || !std::isfinite(p))
            throw std::domain_error("PhasePoint: non-finite coordinate");
    }

    double theta() const noexcept { return theta_; }
    double p() const noexcept { return p_; }

    static double reduce_angle(double theta) noexcept
    {
        double t = theta - two_pi * std::floor((theta + pi) / two_pi);
        if (t >= pi)
            t -= two_pi;
        if (t < -pi)
            t = -pi;
        return t;
    }

private:
    double theta_;
    double p_;
};

namespace detail {

// Imaginary parts below this are roundoff for unit-norm inputs.
inline constexpr double imaginary_residue_tol = 1e-12;

inline double require_real(complex z, double scale, const char* who)
{
    if (std::abs(z.imag()) > imaginary_residue_tol * std::max(1.0, scale))
        throw numeric_error(std::string(who) + ": imaginary residue " + std::to_string(z.imag()));
    return z.real();
}

} // namespace detail

/// V_mn(theta, p) for covering parameter delta.
template <class Sinc = SincPi>
complex wigner_matrix_element(long m, long n, double delta, const PhasePoint& at, Sinc sinc = {})
{
    detail::check_delta(delta, "wigner_matrix_element");
    const double centre = 0.5 * static_cast<double>(m + n) + delta;
    return std::polar(sinc(at.p() - centre) / two_pi, static_cast<double>(n - m) * at.theta());
}

/// Moyal function (bra, V(theta, p) ket) = sum_mn conj(bra_m) V_mn ket_n.
inline complex moyal_function(const FourierState& bra, const FourierState& ket, const PhasePoint& at)
{
    detail::check_same_delta(bra.delta(), ket.delta(), "moyal_function");
    const double delta = ket.delta();

    // Rotate coefficients by e^{in theta} so the double sum only needs the
    // sinc factor, which depends on m + n alone.
    std::vector<complex> a(bra.size());
    std::vector<complex> b(ket.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = bra.coeffs()[i] * std::polar(1.0, static_cast<double>(bra.n_min() + static_cast<long>(i)) * at.theta());
    for (std::size_t j = 0; j < b.size(); ++j)
        b[j] = ket.coeffs()[j] * std::polar(1.0, static_cast<double>(ket.n_min() + static_cast<long>(j)) * at.theta());

    const long sum_min = bra.n_min() + ket.n_min();
    std::vector<double> sinc_by_sum(a.size() + b.size() - 1);
    for (std::size_t k = 0; k < sinc_by_sum.size(); ++k) {
        const double centre = 0.5 * static_cast<double>(sum_min + static_cast<long>(k)) + delta;
        sinc_by_sum[k] = sinc_pi(at.p() - centre);
    }

    complex total{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const complex ai = std::conj(a[i]);
        complex row{};
        for (std::size_t j = 0; j < b.size(); ++j)
            row += b[j] * sinc_by_sum[i + j];
        total += ai * row;
    }
    return total / two_pi;
}

/// Wigner function V_psi(theta, p) = (psi, V psi); real, |V_psi| <= 1/pi for
/// unit-norm psi.
inline double wigner_function(const FourierState& state, const PhasePoint& at)
{
    return detail::require_real(moyal_function(state, state, at), state.norm_squared(), "wigner_function");
}

/// V_rho(theta, p) = tr[rho V(theta, p)] = sum_mn rho_mn V_nm.
inline double wigner_density(const DensityMatrix& rho, const PhasePoint& at)
{
    const long lo = rho.n_min();
    const std::size_t dim = rho.dim();
    std::vector<complex> phase(dim);
    for (std::size_t i = 0; i < dim; ++i)
        phase[i] = std::polar(1.0, static_cast<double>(lo + static_cast<long>(i)) * at.theta());

    std::vector<double> sinc_by_sum(2 * dim - 1);
    for (std::size_t k = 0; k < sinc_by_sum.size(); ++k) {
        const double centre = 0.5 * static_cast<double>(2 * lo + static_cast<long>(k)) + rho.delta();
        sinc_by_sum[k] = sinc_pi(at.p() - centre);
    }

    const auto entries = rho.matrix().entries();
    complex total{};
    for (std::size_t i = 0; i < dim; ++i) {
        complex row{};
        for (std::size_t j = 0; j < dim; ++j)
            row += entries[i * dim + j] * std::conj(phase[j]) * sinc_by_sum[i + j];
        total += phase[i] * row;
    }
    return detail::require_real(total / two_pi, 1.0, "wigner_density");
}

// ---------------------------------------------------------------------------
// Marginals

/// Angle marginal int dp V_psi(theta, p) = |psi(theta)|^2 / 2pi.
inline double marginal_angle(const FourierState& state, double theta)
{
    return std::norm(evaluate_wavefunction(state, theta)) / two_pi;
}

/// Angle marginal (1/2pi) sum_mn rho_mn e^{i(m-n)theta}.
inline double marginal_angle(const DensityMatrix& rho, double theta)
{
    complex total{};
    for (long m = rho.n_min(); m <= rho.n_max(); ++m)
        for (long n = rho.n_min(); n <= rho.n_max(); ++n)
            total += rho(m, n) * std::polar(1.0, static_cast<double>(m - n) * theta);
    return detail::require_real(total, 1.0, "marginal_angle") / two_pi;
}

/// Same marginal obtained the other way round: integrate every V_mn over p
/// on the Fourier side (each sinc integrates to 1), then sum the double
/// series. Independent of the wavefunction evaluation path.
inline double momentum_integral(const FourierState& state, double theta)
{
    complex total{};
    for (long m = state.n_min(); m <= state.n_max(); ++m)
        for (long n = state.n_min(); n <= state.n_max(); ++n)
            total += std::conj(state.coeff(m)) * state.coeff(n) * std::polar(1.0 / two_pi, static_cast<double>(n - m) * theta);
    return detail::require_real(total, state.norm_squared(), "momentum_integral");
}

/// Whittaker cardinal series omega(p) = sum_m b_m sinc pi(p - m - delta).
class CardinalSeries {
public:
    CardinalSeries(double delta, long m_min, std::vector<double> b) : delta_(delta), m_min_(m_min), b_(std::move(b))
    {
        detail::check_delta(delta_, "CardinalSeries");
        if (b_.empty())
            throw std::domain_error("CardinalSeries: empty sample window");
        double sum = 0.0;
        for (double v : b_) {
            if (!(v >= -1e-12))
                throw std::domain_error("CardinalSeries: negative or non-finite sample");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-10)
            throw std::domain_error("CardinalSeries: samples do not sum to 1");
    }

    double delta() const noexcept { return delta_; }
    long m_min() const noexcept { return m_min_; }
    long m_max() const noexcept { return m_min_ + static_cast<long>(b_.size()) - 1; }
    std::span<const double> samples() const noexcept { return b_; }

    /// b_m, zero outside the window.
    double sample(long m) const noexcept
    {
        if (m < m_min_ || m > m_max())
            return 0.0;
        return b_[static_cast<std::size_t>(m - m_min_)];
    }

    double operator()(double p) const
    {
        double sum = 0.0;
        const double shifted = p - delta_;
        for (std::size_t i = 0; i < b_.size(); ++i)
            sum += b_[i] * sinc_pi(shifted - static_cast<double>(m_min_ + static_cast<long>(i)));
        return sum;
    }

private:
    double delta_;
    long m_min_;
    std::vector<double> b_;
};

/// Momentum marginal omega(p) = int dtheta V_psi(theta, p), b_m = |c_m|^2.
inline CardinalSeries marginal_momentum(const FourierState& state)
{
    std::vector<double> b(state.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        b[i] = std::norm(state.coeffs()[i]);
    return CardinalSeries(state.delta(), state.n_min(), std::move(b));
}

inline CardinalSeries marginal_momentum(const DensityMatrix& rho)
{
    std::vector<double> b(rho.dim());
    for (std::size_t i = 0; i < b.size(); ++i) {
        const long n = rho.n_min() + static_cast<long>(i);
        b[i] = rho(n, n).real();
    }
    return CardinalSeries(rho.delta(), rho.n_min(), std::move(b));
}

/// int dp sinc pi(p - a) sinc pi(p - b) = sinc pi(a - b).
template <class Sinc = SincPi>
double sinc_overlap(double a, double b, Sinc sinc = {})
{
    return sinc(a - b);
}

/// int dp omega(p) sinc pi(p - m - delta), evaluated term by term with
/// sinc_overlap. Equals b_m by sinc orthonormality.
template <class Sinc = SincPi>
double project_onto_sinc(const CardinalSeries& omega, long m, Sinc sinc = {})
{
    double sum = 0.0;
    for (long k = omega.m_min(); k <= omega.m_max(); ++k)
        sum += omega.sample(k) * sinc_overlap(static_cast<double>(k) + omega.delta(), static_cast<double>(m) + omega.delta(), sinc);
    return sum;
}

/// Probability b_m carried by the cardinal series; 0 outside its window.
inline double extract_probability(const CardinalSeries& omega, long m)
{
    return omega.sample(m);
}

// ---------------------------------------------------------------------------
// Analytic phase-space integrals

/// int dtheta int dp V_kl V_mn. The theta-integral is 2pi times a Kronecker
/// delta on the total frequency, the p-integral a sinc overlap. For the true
/// sinc this reduces to delta_kn delta_lm / 2pi.
template <class Sinc = SincPi>
double wigner_product_integral(long k, long l, long m, long n, double delta, Sinc sinc = {})
{
    detail::check_delta(delta, "wigner_product_integral");
    if ((l - k) + (n - m) != 0)
        return 0.0;
    const double a = 0.5 * static_cast<double>(k + l) + delta;
    const double b = 0.5 * static_cast<double>(m + n) + delta;
    return two_pi * sinc_overlap(a, b, sinc) / (two_pi * two_pi);
}

/// int dtheta int dp tr[A V] tr[B V] for window matrices A and B. Writing
/// tr[A V] = sum_mn A_mn V_nm, only terms with matching theta-frequency
/// survive, and the p-integral pairs two sinc functions.
template <class Sinc = SincPi>
complex phase_space_product(const OperatorMatrix& a, const OperatorMatrix& b, Sinc sinc = {})
{
    detail::check_same_delta(a.delta(), b.delta(), "phase_space_product");
    const double delta = a.delta();
    complex total{};
    for (long m = a.n_min(); m <= a.n_max(); ++m) {
        for (long n = a.n_min(); n <= a.n_max(); ++n) {
            const complex amn = a(m, n);
            if (amn == complex{})
                continue;
            // A_mn V_nm pairs with B_kl V_lk when (m - n) + (k - l) = 0.
            for (long k = b.n_min(); k <= b.n_max(); ++k) {
                const long l = k + (m - n);
                if (!b.contains(l))
                    continue;
                const complex bkl = b(k, l);
                if (bkl == complex{})
                    continue;
                const double ca = 0.5 * static_cast<double>(m + n) + delta;
                const double cb = 0.5 * static_cast<double>(k + l) + delta;
                total += amn * bkl * sinc_overlap(ca, cb, sinc);
            }
        }
    }
    return total / two_pi;
}

/// tr(rho O) = 2pi int int tr[rho V] tr[O V]. O must be Hermitian.
template <class Sinc = SincPi>
double expectation_via_phase_space(const DensityMatrix& rho, const OperatorMatrix& observable, Sinc sinc = {})
{
    if (observable.hermiticity_residual() > 1e-12)
        throw std::domain_error("expectation_via_phase_space: observable is not Hermitian");
    const complex value = two_pi * phase_space_product(rho.matrix(), observable, sinc);
    double scale = 1.0;
    for (const auto& o : observable.entries())
        scale = std::max(scale, std::abs(o));
    return detail::require_real(value, scale, "expectation_via_phase_space");
}

/// |(a, b)|^2 = 2pi int int V_a V_b, through the projectors of a and b.
inline double overlap_from_wigner(const FourierState& a, const FourierState& b)
{
    detail::check_same_delta(a.delta(), b.delta(), "overlap_from_wigner");
    const auto projector = [](const FourierState& s) {
        const std::size_t dim = s.size();
        std::vector<complex> e(dim * dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                e[i * dim + j] = s.coeffs()[i] * std::conj(s.coeffs()[j]);
        return OperatorMatrix(s.delta(), s.n_min(), dim, std::move(e));
    };
    const complex value = two_pi * phase_space_product(projector(a), projector(b));
    return detail::require_real(value, a.norm_squared() * b.norm_squared(), "overlap_from_wigner");
}

/// Weyl-symmetrized phase-space density of a Hermitian operator A:
/// a(theta, p) = (1/2) (psi, [V A + A V] psi). Real for Hermitian A.
inline double symmetrized_operator_density(const FourierState& state, const OperatorMatrix& op, const PhasePoint& at)
{
    detail::check_same_delta(state.delta(), op.delta(), "symmetrized_operator_density");
    // A psi as a state on the operator window
    std::vector<complex> applied(op.dim());
    for (long m = op.n_min(); m <= op.n_max(); ++m) {
        complex sum{};
        for (long n = op.n_min(); n <= op.n_max(); ++n)
            sum += op(m, n) * state.coeff(n);
        applied[static_cast<std::size_t>(m - op.n_min())] = sum;
    }
    const FourierState a_psi(state.delta(), op.n_min(), std::move(applied));
    // (psi, A V psi) = conj((psi, V A psi)) for Hermitian A and V
    return moyal_function(state, a_psi, at).real();
}

// ---------------------------------------------------------------------------
// Uncertainty relation for A = sin phi, B = L

struct UncertaintyProduct {
    double lhs; // (Delta S)^2 (Delta L)^2
    double rhs; // |<S_psi(S, L)>|^2 + |<[S, L]>|^2 / 4
};

inline UncertaintyProduct uncertainty_product(const FourierState& state)
{
    // Work on the window widened by one index on each side, the support of S psi.
    const long lo = state.n_min() - 1;
    const long hi = state.n_max() + 1;
    const std::size_t dim = static_cast<std::size_t>(hi - lo + 1);
    std::vector<complex> psi(dim), s_psi(dim), l_psi(dim);
    const complex inv_2i(0.0, -0.5);
    for (long m = lo; m <= hi; ++m) {
        const std::size_t i = static_cast<std::size_t>(m - lo);
        psi[i] = state.coeff(m);
        s_psi[i] = (state.coeff(m - 1) - state.coeff(m + 1)) * inv_2i;
        l_psi[i] = (static_cast<double>(m) + state.delta()) * state.coeff(m);
    }
    const auto dot = [&](const std::vector<complex>& x, const std::vector<complex>& y) {
        complex sum{};
        for (std::size_t i = 0; i < dim; ++i)
            sum += std::conj(x[i]) * y[i];
        return sum;
    };

    const double mean_s = dot(psi, s_psi).real();
    const double mean_l = dot(psi, l_psi).real();
    double var_s = 0.0;
    double var_l = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        var_s += std::norm(s_psi[i] - mean_s * psi[i]);
        var_l += std::norm(l_psi[i] - mean_l * psi[i]);
    }
    // <SL + LS>/2 = Re (S psi, L psi), <[S, L]> = 2i Im (S psi, L psi)
    const complex sl = dot(s_psi, l_psi);
    const double symmetric = sl.real() - mean_s * mean_l;
    const double commutator = 2.0 * sl.imag();
    return {var_s * var_l, symmetric * symmetric + 0.25 * commutator * commutator};
}

// ---------------------------------------------------------------------------
// hbar rescaling

/// sinc[pi (p - hbar m) / hbar] for p carrying the dimension of action.
inline double rescale_hbar(double p_physical, double hbar, long m)
{
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw std::domain_error("rescale_hbar: hbar must be positive");
    return sinc_pi((p_physical - hbar * static_cast<double>(m)) / hbar);
}

// ---------------------------------------------------------------------------
// Closed forms for the example families

/// 2pi V(theta, p) of the cat state f_alpha:
/// cos(2 theta + alpha) sinc pi p + [sinc pi(p + 1) + sinc pi(p - 1)] / 2.
inline double cat_wigner_closed_form(double alpha, const PhasePoint& at)
{
    return std::cos(2.0 * at.theta() + alpha) * sinc_pi(at.p()) + 0.5 * (sinc_pi(at.p() + 1.0) + sinc_pi(at.p() - 1.0));
}

/// Wigner function of the minimal-uncertainty state as a single integral,
/// (1 / 2pi^2 I_0(2s)) int_0^pi cos[(p - p_e) v] e^{2s cos(theta) cos(v/2)} dv.
inline double von_mises_wigner_integral(double s, double p_e, const PhasePoint& at, int order = default_theta_order)
{
    const double k = 2.0 * s * std::cos(at.theta());
    const double offset = at.p() - p_e;
    const auto integrand = [&](double v) { return std::cos(offset * v) * std::exp(k * std::cos(0.5 * v)); };
    const double integral = integrate_interval(integrand, 0.0, pi, gauss_legendre(order), theta_panels);
    return integral / (2.0 * pi * pi * bessel_i(0, 2.0 * s));
}

// ---------------------------------------------------------------------------
// Grids

struct WignerGrid {
    std::vector<double> theta_axis;
    std::vector<double> p_axis;
    std::vector<double> values; // row-major: theta outer, p inner

    double at(std::size_t i_theta, std::size_t i_p) const { return values[i_theta * p_axis.size() + i_p]; }

    double max_abs() const noexcept
    {
        double r = 0.0;
        for (double v : values)
            r = std::max(r, std::abs(v));
        return r;
    }
};

/// n equally spaced points from lo to hi inclusive.
inline std::vector<double> uniform_axis(double lo, double hi, std::size_t n)
{
    if (n < 2)
        throw std::domain_error("uniform_axis: need at least 2 points");
    std::vector<double> axis(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        axis[i] = lo + step * static_cast<double>(i);
    axis.back() = hi;
    return axis;
}

/// Samples f(PhasePoint) on theta_axis x p_axis. f must be free of shared
/// mutable state; every grid point is independent.
template <class Fn>
WignerGrid sample_grid(Fn&& f, std::vector<double> theta_axis, std::vector<double> p_axis)
{
    WignerGrid grid{std::move(theta_axis), std::move(p_axis), {}};
    grid.values.resize(grid.theta_axis.size() * grid.p_axis.size());
    for (std::size_t i = 0; i < grid.theta_axis.size(); ++i)
        for (std::size_t j = 0; j < grid.p_axis.size(); ++j)
            grid.values[i * grid.p_axis.size() + j] = f(PhasePoint(grid.theta_axis[i], grid.p_axis[j]));
    return grid;
}

inline WignerGrid wigner_grid(const FourierState& state, std::vector<double> theta_axis, std::vector<double> p_axis)
{
    return sample_grid([&](const PhasePoint& at) { return wigner_function(state, at); }, std::move(theta_axis), std::move(p_axis));
}

inline WignerGrid wigner_grid(const DensityMatrix& rho, std::vector<double> theta_axis, std::vector<double> p_axis)
{
    return sample_grid([&](const PhasePoint& at) { return wigner_density(rho, at); }, std::move(theta_axis), std::move(p_axis));
}

// ---------------------------------------------------------------------------
// Density-matrix reconstruction

struct Reconstruction {
    OperatorMatrix matrix;
    double trace_deficit; // 1 - Re tr(rho) over the window

    /// Validated density matrix; throws std::domain_error when the window
    /// missed part of the state.
    DensityMatrix density() const
    {
        if (std::abs(trace_deficit) > DensityMatrix::trace_tol)
            throw std::domain_error("reconstruct_density: trace deficit " + std::to_string(trace_deficit) + ", window too small");
        return DensityMatrix(matrix);
    }
};

/// rho_kl = 2pi int dtheta int dp V_kl(theta, p) V(theta, p) for a Wigner
/// function V given as a callable PhasePoint -> double.
///
/// V must be band-limited in p, which holds for any state in the delta
/// sector. The p-integral then collapses to a sample:
///     rho_kl = int dtheta e^{i(l-k)theta} V(theta, (k+l)/2 + delta),
/// and the theta-integral uses composite Gauss-Legendre.
/// order = 0 picks an order that resolves every frequency in the window.
template <class Fn>
Reconstruction reconstruct_density(Fn&& wigner, long n_min, long n_max, double delta, int order = 0)
{
    detail::check_delta(delta, "reconstruct_density");
    if (n_max < n_min)
        throw std::domain_error("reconstruct_density: empty window");
    const std::size_t dim = static_cast<std::size_t>(n_max - n_min + 1);
    if (order == 0)
        order = std::max(default_theta_order, static_cast<int>(2 * dim) + 8);
    const QuadratureRule rule = gauss_legendre(order);

    // Composite nodes and weights on [-pi, pi].
    std::vector<double> thetas;
    std::vector<double> weights;
    const double h = two_pi / theta_panels;
    for (int j = 0; j < theta_panels; ++j) {
        const double mid = -pi + (j + 0.5) * h;
        for (int i = 0; i < rule.order; ++i) {
            thetas.push_back(mid + 0.5 * h * rule.nodes[i]);
            weights.push_back(0.5 * h * rule.weights[i]);
        }
    }

    // One theta-profile of V per distinct sample momentum (k + l)/2 + delta.
    std::vector<std::vector<double>> profiles(2 * dim - 1);
    for (std::size_t s = 0; s < profiles.size(); ++s) {
        const double p = 0.5 * static_cast<double>(2 * n_min + static_cast<long>(s)) + delta;
        auto& prof = profiles[s];
        prof.resize(thetas.size());
        for (std::size_t q = 0; q < thetas.size(); ++q) {
            prof[q] = wigner(PhasePoint(thetas[q], p));
            if (!std::isfinite(prof[q]))
                throw numeric_error("reconstruct_density: non-finite Wigner sample");
        }
    }

    OperatorMatrix rho(delta, n_min, dim);
    for (long k = n_min; k <= n_max; ++k) {
        for (long l = n_min; l <= n_max; ++l) {
            const auto& prof = profiles[static_cast<std::size_t>(k + l - 2 * n_min)];
            complex sum{};
            for (std::size_t q = 0; q < thetas.size(); ++q)
                sum += weights[q] * prof[q] * std::polar(1.0, static_cast<double>(l - k) * thetas[q]);
            rho.at(k, l) = sum;
        }
    }
    const double deficit = 1.0 - rho.trace().real();
    return {std::move(rho), deficit};
}

} // namespace cylwigner
