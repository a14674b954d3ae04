#include "netdicke/boundaries.hpp"

#include <cmath>
#include <stdexcept>

namespace netdicke {

namespace {

bool equilibrium_flag(const ModelParams& params, const DegreeDistribution& dist,
                      OrderParamKind kind, const SolveOptions& opt) {
    const SolveResult res = solve_self_consistent(params, dist, opt);
    const Phase phase = res.equilibrium().phase;
    if (kind == OrderParamKind::lambda)
        return phase == Phase::PmSr || phase == Phase::FmSr;
    return phase == Phase::FmNormal || phase == Phase::FmSr;
}

constexpr double kGammaBranchTol = 1e-9;

}  // namespace

const char* boundary_method_name(BoundaryMethod method) {
    return method == BoundaryMethod::closed_form ? "closed_form"
                                                 : "bisection_on_solver";
}

bool sr_existence_criterion(const ModelParams& params, double k0,
                            double lambda) {
    const double eps = params.theta * k0 * params.omega_a;
    const double a = eps + params.omega_a * params.h_field;
    const double b = 2.0 * params.omega_a * lambda;
    return a * a + b * b <= 1.0;
}

double critical_max_degree(const ModelParams& params) {
    if (!(params.theta > 0.0))
        throw std::domain_error("critical max degree requires theta > 0");
    return (1.0 / params.omega_a - params.h_field) / params.theta;
}

double critical_coupling(double omega_a_dim, double h_dim, double j,
                         double k0) {
    if (!(omega_a_dim > 0.0))
        throw std::domain_error("omega_a must be > 0");
    const double arg = h_dim + 4.0 * j * k0;
    if (arg < 0.0)
        throw std::domain_error("h + 4 J k0 must be >= 0");
    return std::sqrt(omega_a_dim * arg);
}

double tc_low_temperature_regular(const ModelParams& params, double k0) {
    const double eps = params.theta * k0 * params.omega_a;
    if (eps >= 1.0)
        throw std::domain_error("low-T critical temperature requires eps < 1");
    const double denom = 1.0 - eps - params.omega_a * params.h_field;
    if (denom <= 0.0)
        throw std::domain_error(
            "low-T critical temperature requires 1 - eps - Omega_a H > 0");
    const double log_arg = 2.0 * (1.0 - eps) / denom;
    return params.h_field / ((1.0 - eps) * std::log(log_arg));
}

AsymptoticValue lambda_asymptotics(const ModelParams& params, double gamma0c,
                                   LambdaRegime regime) {
    const double bg = params.beta * gamma0c;
    const bool valid = bg > 5.0;
    if (regime == LambdaRegime::deep)
        return {gamma0c * std::exp(-0.5 * bg), valid};
    const double arg = 1.0 - 2.0 * bg * std::exp(-bg);
    return {gamma0c * std::sqrt(std::max(arg, 0.0)), valid};
}

double beta_c_high_temperature(double omega_a) { return 2.0 * omega_a; }

double tc_high_temperature(double omega_a) { return 0.5 / omega_a; }

double tc_high_temperature_dimensional(double chi, double omega_a_dim) {
    return chi * chi / (2.0 * omega_a_dim);
}

double tc_ferromagnetic_sr(double theta, double zeta_or_k0) {
    return 0.5 * theta * zeta_or_k0;
}

double sr_consistency_omega_ac(double theta, double zeta) {
    return 1.0 / (theta * zeta);
}

double critical_degree_regular(double theta, double omega_a) {
    return 1.0 / (omega_a * theta);
}

std::optional<double> pm_fm_boundary_tc(double lambda_c, double theta,
                                        double zeta) {
    const double x = 2.0 * lambda_c / (theta * zeta);
    if (x >= 1.0) return std::nullopt;
    if (lambda_c == 0.0) return 0.5 * theta * zeta;
    return lambda_c / std::atanh(x);
}

double pm_fm_boundary_tc_quadratic(double lambda_c, double theta,
                                   double zeta) {
    return 0.5 * theta * zeta -
           2.0 * lambda_c * lambda_c / (3.0 * theta * zeta);
}

double critical_photon_number(double j, double chi, long n_nodes) {
    const double n = static_cast<double>(n_nodes);
    const double ratio = j / chi;
    return 4.0 * ratio * ratio * n * (n - 1.0) * (n - 1.0);
}

double critical_nodes(double gamma, double theta, double k_min, double t_c,
                      double mean_k) {
    if (!(gamma > 1.0) || gamma > 4.0)
        throw std::domain_error("critical node count covers gamma in (1, 4]");
    if (std::abs(gamma - 2.0) < kGammaBranchTol)
        return 2.0 * mean_k * t_c / (theta * k_min * k_min);
    if (std::abs(gamma - 3.0) < kGammaBranchTol)
        return std::exp(8.0 * t_c / (theta * mean_k));
    const double base = 1.0 + (2.0 * t_c / theta) * (3.0 - gamma) /
                                  (gamma - 1.0) * mean_k / (k_min * k_min);
    if (!(base > 0.0))
        throw std::domain_error(
            "no finite critical node count at these parameters");
    return std::pow(base, (gamma - 1.0) / (3.0 - gamma));
}

double clustering_estimate(double n_c) {
    if (!(n_c > 1.0))
        throw std::domain_error("clustering estimate requires N_c > 1");
    const double l = std::log(n_c);
    return l * l / n_c;
}

double high_t_magnetization(const ModelParams& params, double zeta) {
    const double denom = 2.0 - params.beta * params.theta * zeta;
    if (denom <= 0.0)
        throw std::domain_error(
            "high-T magnetization requires beta*theta*zeta < 2");
    return params.beta * params.h_field / denom;
}

QuantumCritical quantum_critical_frequency(double theta, double h_field,
                                           const DegreeDistribution& dist) {
    if (theta == 0.0 && h_field == 0.0)
        throw DivergenceError(
            "critical frequency diverges at theta = 0, h = 0");
    auto inv_gap = [&](double k) { return 1.0 / (theta * k + h_field); };
    auto inv_gap3 = [&](double k) {
        const double g = theta * k + h_field;
        return 1.0 / (g * g * g);
    };
    QuantumCritical qc;
    qc.omega_ac = expect(dist, inv_gap, Tail::bounded);
    qc.i_integral = expect(dist, inv_gap3, Tail::bounded);
    qc.lambda0 = std::sqrt(qc.omega_ac / (2.0 * qc.i_integral));
    return qc;
}

double quantum_order_parameter(double omega_a, const QuantumCritical& qc) {
    if (omega_a > qc.omega_ac) return 0.0;
    return qc.lambda0 * std::sqrt(1.0 - omega_a / qc.omega_ac);
}

std::optional<PhaseBoundaryPoint> locate_tc_by_bisection(
    const ModelParams& params_template, const DegreeDistribution& dist,
    OrderParamKind kind, double t_lo, double t_hi,
    const std::string& control_name, double control_value,
    const SolveOptions& opt) {
    if (!(t_lo > 0.0) || !(t_lo < t_hi))
        throw std::domain_error("bisection requires 0 < t_lo < t_hi");
    ModelParams params = params_template;
    params.beta = 1.0 / t_lo;
    const bool flag_lo = equilibrium_flag(params, dist, kind, opt);
    params.beta = 1.0 / t_hi;
    if (equilibrium_flag(params, dist, kind, opt) == flag_lo)
        return std::nullopt;
    double lo = t_lo;
    double hi = t_hi;
    for (int i = 0; i < 60 && hi - lo > 1e-4; ++i) {
        const double mid = 0.5 * (lo + hi);
        params.beta = 1.0 / mid;
        if (equilibrium_flag(params, dist, kind, opt) == flag_lo)
            lo = mid;
        else
            hi = mid;
    }
    return PhaseBoundaryPoint{control_name, control_value, 0.5 * (lo + hi),
                              BoundaryMethod::bisection_on_solver};
}

}  // namespace netdicke
