#pragma once

#include "cylwigner/errors.hpp"
#include "cylwigner/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cylwigner {

/// Gauss-Legendre rule on [-1, 1]. Nodes are strictly increasing and the
/// rule is exact for polynomials of degree up to 2*order - 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
};

inline QuadratureRule gauss_legendre(int order)
{
    if (order < 1)
        throw std::domain_error("gauss_legendre: order must be positive");

    QuadratureRule rule;
    rule.order = order;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // i-th largest root, refined by Newton iteration on P_order
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[order - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[order - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (order % 2 == 1)
        rule.nodes[order / 2] = 0.0;
    return rule;
}

/// Number of equal panels the theta interval is split into. A single
/// Gauss-Legendre rule cannot resolve trigonometric polynomials of degree
/// close to its order on an interval of length 2*pi; eight panels can.
inline constexpr int theta_panels = 8;

inline constexpr int default_theta_order = 64;

/// Composite Gauss-Legendre approximation of the integral of f over [a, b]
/// with `panels` equal sub-intervals.
template <class Fn>
double integrate_interval(Fn&& f, double a, double b, const QuadratureRule& rule, int panels = 1)
{
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int j = 0; j < panels; ++j) {
        const double lo = a + j * h;
        const double mid = lo + 0.5 * h;
        double acc = 0.0;
        for (int i = 0; i < rule.order; ++i) {
            const double v = f(mid + 0.5 * h * rule.nodes[i]);
            if (!std::isfinite(v))
                throw numeric_error("integrate: non-finite integrand value");
            acc += rule.weights[i] * v;
        }
        total += 0.5 * h * acc;
    }
    return total;
}

/// Integral of f over [-pi, pi]. Exact to ~1e-12 for trigonometric
/// polynomials of degree <= order - 2.
template <class Fn>
double integrate_theta(Fn&& f, const QuadratureRule& rule)
{
    return integrate_interval(f, -pi, pi, rule, theta_panels);
}

template <class Fn>
double integrate_theta(Fn&& f, int order = default_theta_order)
{
    if (order < 8)
        throw std::domain_error("integrate_theta: order must be at least 8");
    return integrate_theta(f, gauss_legendre(order));
}

} // namespace cylwigner
