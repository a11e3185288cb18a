#pragma once

// Serialization: JSON for states, density matrices and cardinal series,
// CSV for sampled grids.
//
//   FourierState   {"delta": d, "n_min": n, "coeffs": [[re, im], ...]}
//   DensityMatrix  {"delta": d, "n_min": n, "entries": [[[re, im], ...], ...]}  (rows)
//   CardinalSeries {"delta": d, "m_min": m, "b": [...]}
//   grid CSV       header "theta,p,value", theta outer, p inner, %.17g

#include "cylwigner/states.hpp"
#include "cylwigner/wigner.hpp"

#include "json.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cylwigner {

using json = nlohmann::json;

namespace detail {

inline json complex_to_json(complex z)
{
    return json::array({z.real(), z.imag()});
}

inline complex complex_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [re, im] pair");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

} // namespace detail

inline json to_json(const FourierState& state)
{
    json coeffs = json::array();
    for (const auto& c : state.coeffs())
        coeffs.push_back(detail::complex_to_json(c));
    return json{{"delta", state.delta()}, {"n_min", state.n_min()}, {"coeffs", coeffs}};
}

inline FourierState fourier_state_from_json(const json& j)
{
    std::vector<complex> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(detail::complex_from_json(c));
    return FourierState(j.at("delta").get<double>(), j.at("n_min").get<long>(), std::move(coeffs));
}

inline json to_json(const DensityMatrix& rho)
{
    json rows = json::array();
    for (long m = rho.n_min(); m <= rho.n_max(); ++m) {
        json row = json::array();
        for (long n = rho.n_min(); n <= rho.n_max(); ++n)
            row.push_back(detail::complex_to_json(rho(m, n)));
        rows.push_back(std::move(row));
    }
    return json{{"delta", rho.delta()}, {"n_min", rho.n_min()}, {"entries", rows}};
}

inline DensityMatrix density_matrix_from_json(const json& j)
{
    const auto& rows = j.at("entries");
    const std::size_t dim = rows.size();
    std::vector<complex> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
        if (row.size() != dim)
            throw std::invalid_argument("density matrix JSON: rows must form a square matrix");
        for (const auto& e : row)
            entries.push_back(detail::complex_from_json(e));
    }
    return DensityMatrix(OperatorMatrix(j.at("delta").get<double>(), j.at("n_min").get<long>(), dim, std::move(entries)));
}

inline json to_json(const CardinalSeries& omega)
{
    const auto b = omega.samples();
    return json{{"delta", omega.delta()}, {"m_min", omega.m_min()}, {"b", std::vector<double>(b.begin(), b.end())}};
}

inline CardinalSeries cardinal_series_from_json(const json& j)
{
    return CardinalSeries(j.at("delta").get<double>(), j.at("m_min").get<long>(), j.at("b").get<std::vector<double>>());
}

inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_grid_csv(std::ostream& out, const WignerGrid& grid)
{
    out << "theta,p,value\n";
    for (std::size_t i = 0; i < grid.theta_axis.size(); ++i)
        for (std::size_t j = 0; j < grid.p_axis.size(); ++j)
            out << format_double(grid.theta_axis[i]) << ',' << format_double(grid.p_axis[j]) << ','
                << format_double(grid.at(i, j)) << '\n';
}

} // namespace cylwigner
