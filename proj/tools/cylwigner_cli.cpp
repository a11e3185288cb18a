// Command-line front end: figure data as CSV, marginals and reconstruction
// as JSON, and the self-verification report.
//
// Exit codes: 0 success, 1 verification failure, 2 I/O or usage error.

#include "cylwigner/cylwigner.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace {

using namespace cylwigner;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

struct RunConfig {
    std::string command;
    double s = 0.5;
    double pe = 0.0;
    double alpha = 0.0;
    double eps_beta = 1.0;
    double delta = 0.0;
    double hbar = 1.0;
    long m = 0;
    std::string theta_list;
    std::size_t theta_steps = 181;
    double p_min = -5.0;
    double p_max = 5.0;
    std::size_t p_steps = 401;
    std::string out = "-";
    std::string tol_profile = "default";
    std::string state_file;
    std::string family;
    std::string approx = "exact";
    bool fault_inject = false;
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts plain numbers and multiples of pi: "0.3", "pi", "-pi/2", "3pi/4", "0.5*pi".
double parse_angle(std::string token)
{
    std::erase(token, ' ');
    const auto pos = token.find("pi");
    if (pos == std::string::npos)
        return std::stod(token);
    std::string head = token.substr(0, pos);
    std::string tail = token.substr(pos + 2);
    if (!head.empty() && head.back() == '*')
        head.pop_back();
    double factor = 1.0;
    if (head == "-")
        factor = -1.0;
    else if (!head.empty() && head != "+")
        factor = std::stod(head);
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/')
            throw usage_error("cannot parse angle '" + token + "'");
        divisor = std::stod(tail.substr(1));
    }
    return factor * pi / divisor;
}

std::vector<double> parse_theta_list(const std::string& list, std::vector<double> fallback)
{
    if (list.empty())
        return fallback;
    std::vector<double> thetas;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty())
            thetas.push_back(parse_angle(token));
    if (thetas.empty())
        throw usage_error("--theta-list is empty");
    return thetas;
}

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw std::ios_base::failure("write to stdout failed");
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file)
        throw std::ios_base::failure("cannot open output file '" + cfg.out + "'");
    file << text;
    if (!file)
        throw std::ios_base::failure("write to '" + cfg.out + "' failed");
}

std::vector<double> p_axis(const RunConfig& cfg)
{
    if (cfg.p_steps < 2)
        throw usage_error("--p-steps must be at least 2");
    if (!(cfg.p_max > cfg.p_min))
        throw usage_error("--p-max must exceed --p-min");
    return uniform_axis(cfg.p_min, cfg.p_max, cfg.p_steps);
}

std::string grid_csv(const WignerGrid& grid)
{
    std::ostringstream out;
    write_grid_csv(out, grid);
    return out.str();
}

// With hbar != 1 the p column carries the dimension of action and the
// value is sinc[pi (p - hbar (m + delta)) / hbar].
int cmd_fig1(const RunConfig& cfg)
{
    const FourierState state = basis_state(cfg.m, cfg.delta);
    const auto grid = sample_grid(
        [&](const PhasePoint& at) { return two_pi * wigner_function(state, PhasePoint(at.theta(), at.p() / cfg.hbar)); },
                                  parse_theta_list(cfg.theta_list, {0.0}), p_axis(cfg));
    emit(cfg, grid_csv(grid));
    return exit_ok;
}

int cmd_fig2(const RunConfig& cfg)
{
    const FourierState state = cat_state(cfg.alpha);
    const auto grid = sample_grid([&](const PhasePoint& at) { return two_pi * wigner_function(state, at); },
                                  parse_theta_list(cfg.theta_list, {0.0, pi / 4.0, pi / 2.0}), p_axis(cfg));
    emit(cfg, grid_csv(grid));
    return exit_ok;
}

// p column holds p - p_e; value is 2pi I_0(2s) V(theta, p).
int cmd_fig3(const RunConfig& cfg, double tol_scale)
{
    const FourierState state = von_mises_state(cfg.s, cfg.pe);
    const double norm = two_pi * bessel_i(0, 2.0 * cfg.s);
    double worst = 0.0;
    const auto grid = sample_grid(
        [&](const PhasePoint& offset_point) {
            const PhasePoint at(offset_point.theta(), offset_point.p() + cfg.pe);
            const double v = wigner_function(state, at);
            worst = std::max(worst, std::abs(v - von_mises_wigner_integral(cfg.s, cfg.pe, at)));
            return norm * v;
        },
        parse_theta_list(cfg.theta_list, {0.0, pi / 2.0, -pi / 2.0, pi, -pi}), p_axis(cfg));
    emit(cfg, grid_csv(grid));
    if (worst > 1e-9 * tol_scale) {
        std::cerr << "fig3: coefficient sum and integral form differ by " << worst << "\n";
        return exit_verify_failed;
    }
    return exit_ok;
}

int cmd_thermal(const RunConfig& cfg)
{
    const ThermalParams tp(cfg.eps_beta);
    std::function<double(const PhasePoint&)> f;
    if (cfg.approx == "exact")
        f = [&](const PhasePoint& at) { return thermal_wigner(tp, at); };
    else if (cfg.approx == "low")
        f = [&](const PhasePoint& at) { return low_temp_wigner(tp, at.p()); };
    else if (cfg.approx == "high")
        f = [&](const PhasePoint& at) { return high_temp_wigner(tp, at.p()); };
    else
        throw usage_error("--approx must be exact, low or high");
    const auto grid = sample_grid(f, parse_theta_list(cfg.theta_list, {0.0}), p_axis(cfg));
    std::cerr << "Z = " << format_double(partition_function(tp)) << "\n";
    emit(cfg, grid_csv(grid));
    return exit_ok;
}

using AnyState = std::variant<FourierState, DensityMatrix>;

AnyState load_state(const RunConfig& cfg)
{
    if (!cfg.state_file.empty()) {
        std::ifstream in(cfg.state_file);
        if (!in)
            throw std::ios_base::failure("cannot open state file '" + cfg.state_file + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw usage_error(std::string("state file is not valid JSON: ") + e.what());
        }
        if (j.contains("coeffs"))
            return fourier_state_from_json(j);
        if (j.contains("entries"))
            return density_matrix_from_json(j);
        throw usage_error("state file needs either \"coeffs\" or \"entries\"");
    }
    if (cfg.family == "basis")
        return basis_state(cfg.m, cfg.delta);
    if (cfg.family == "cat")
        return cat_state(cfg.alpha);
    if (cfg.family == "vonmises")
        return von_mises_state(cfg.s, cfg.pe);
    if (cfg.family == "thermal")
        return thermal_density(ThermalParams(cfg.eps_beta));
    throw usage_error("give --state FILE or --family basis|cat|vonmises|thermal");
}

int cmd_marginals(const RunConfig& cfg)
{
    const AnyState state = load_state(cfg);
    const auto thetas = cfg.theta_list.empty() ? uniform_axis(-pi, pi, cfg.theta_steps) : parse_theta_list(cfg.theta_list, {});
    json angle_values = json::array();
    for (double t : thetas)
        angle_values.push_back(std::visit([&](const auto& s) { return marginal_angle(s, t); }, state));
    const CardinalSeries omega = std::visit([](const auto& s) { return marginal_momentum(s); }, state);
    json report{{"cardinal_series", to_json(omega)}, {"angle_marginal", {{"theta", thetas}, {"value", angle_values}}}};
    emit(cfg, report.dump(2) + "\n");
    return exit_ok;
}

int cmd_reconstruct(const RunConfig& cfg, double tol_scale)
{
    const AnyState state = load_state(cfg);
    const DensityMatrix source = std::visit(
        [](const auto& s) -> DensityMatrix {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, FourierState>)
                return pure_density(s);
            else
                return s;
        },
        state);
    const auto rec = reconstruct_density([&](const PhasePoint& at) { return wigner_density(source, at); }, source.n_min(),
                                         source.n_max(), source.delta());
    double max_error = 0.0;
    for (long m = source.n_min(); m <= source.n_max(); ++m)
        for (long n = source.n_min(); n <= source.n_max(); ++n)
            max_error = std::max(max_error, std::abs(rec.matrix(m, n) - source(m, n)));

    json report{{"trace_deficit", rec.trace_deficit}, {"max_abs_error", max_error}};
    try {
        report["density_matrix"] = to_json(rec.density());
    } catch (const std::domain_error& e) {
        report["error"] = e.what();
    }
    emit(cfg, report.dump(2) + "\n");
    return (max_error <= 1e-8 * tol_scale && report.contains("density_matrix")) ? exit_ok : exit_verify_failed;
}

int cmd_verify(const RunConfig& cfg, double tol_scale)
{
    VerifyOptions opts;
    opts.tolerance_scale = tol_scale;
    opts.perturb_sinc = cfg.fault_inject;
    const auto results = run_verification(opts);
    json report = json::array();
    bool all = true;
    for (const auto& r : results) {
        report.push_back({{"invariant_id", r.invariant_id}, {"residual", r.residual}, {"tolerance", r.tolerance}, {"pass", r.pass}});
        all = all && r.pass;
    }
    emit(cfg, report.dump(2) + "\n");
    return all ? exit_ok : exit_verify_failed;
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Wigner-Moyal phase-space functions on the cylinder S^1 x R"};
    app.add_option("--command", cfg.command, "fig1 | fig2 | fig3 | thermal | marginals | reconstruct | verify")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "thermal", "marginals", "reconstruct", "verify"}));
    app.add_option("--s", cfg.s, "von Mises concentration s > 0");
    app.add_option("--pe", cfg.pe, "von Mises mean angular momentum p_e");
    app.add_option("--alpha", cfg.alpha, "cat-state relative phase");
    app.add_option("--eps-beta", cfg.eps_beta, "thermal parameter eps*beta > 0");
    app.add_option("--delta", cfg.delta, "covering parameter in [0, 1)");
    app.add_option("--hbar", cfg.hbar, "Planck constant in units of the angular momentum scale")->check(CLI::PositiveNumber);
    app.add_option("--m", cfg.m, "basis index for fig1 / --family basis");
    app.add_option("--theta-list", cfg.theta_list, "comma-separated angles, e.g. 0,pi/2,-pi/2");
    app.add_option("--theta-steps", cfg.theta_steps, "angle samples for marginals")->check(CLI::Range(2, 1000000));
    app.add_option("--p-min", cfg.p_min);
    app.add_option("--p-max", cfg.p_max);
    app.add_option("--p-steps", cfg.p_steps)->check(CLI::Range(2, 10000000));
    app.add_option("--out", cfg.out, "output path, '-' for stdout");
    app.add_option("--tol-profile", cfg.tol_profile, "default | strict | loose");
    app.add_option("--state", cfg.state_file, "FourierState or DensityMatrix JSON");
    app.add_option("--family", cfg.family, "basis | cat | vonmises | thermal");
    app.add_option("--approx", cfg.approx, "thermal: exact | low | high");
    app.add_flag("--fault-inject", cfg.fault_inject, "verify with a perturbed sinc kernel (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const double tol_scale = tolerance_profile_scale(cfg.tol_profile);
        if (cfg.command == "fig1")
            return cmd_fig1(cfg);
        if (cfg.command == "fig2")
            return cmd_fig2(cfg);
        if (cfg.command == "fig3")
            return cmd_fig3(cfg, tol_scale);
        if (cfg.command == "thermal")
            return cmd_thermal(cfg);
        if (cfg.command == "marginals")
            return cmd_marginals(cfg);
        if (cfg.command == "reconstruct")
            return cmd_reconstruct(cfg, tol_scale);
        return cmd_verify(cfg, tol_scale);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return exit_usage;
}
