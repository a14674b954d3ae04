#pragma once

#include <optional>
#include <string>

#include "netdicke/meanfield.hpp"

namespace netdicke {

enum class BoundaryMethod { closed_form, bisection_on_solver };

const char* boundary_method_name(BoundaryMethod method);

struct PhaseBoundaryPoint {
    std::string control_name;
    double control_value;
    double t_c;
    BoundaryMethod method;
};

// Necessary condition for an SR solution on a regular network:
// (eps + Omega_a H)^2 + 4 Omega_a^2 lambda^2 <= 1 with eps = Theta k0 Omega_a.
bool sr_existence_criterion(const ModelParams& params, double k0,
                            double lambda);

// Largest degree compatible with SR at lambda = 0: (1/Omega_a - H)/Theta.
double critical_max_degree(const ModelParams& params);

// Dimensional critical coupling chi_c = sqrt(omega_a (h + 4 J k0)). The
// matching dimensionless surface is Omega_a (Theta k0 + H) = 1; which side
// of it is superradiant is established against the solver in tests rather
// than encoded here.
double critical_coupling(double omega_a_dim, double h_dim, double j,
                         double k0);

// Low-temperature SR critical temperature of a regular network,
// T_c = H / ((1-eps) ln(2(1-eps)/(1-eps-Omega_a H))).
double tc_low_temperature_regular(const ModelParams& params, double k0);

enum class LambdaRegime { deep, near };

struct AsymptoticValue {
    double value;
    bool valid;  // low-temperature applicability, beta*gamma0c > 5
};

// Low-temperature order-parameter asymptotics around gamma0c = |H_c/(1-eps_c)|:
// deep: lambda ~ gamma0c exp(-beta gamma0c/2);
// near: lambda ~ gamma0c sqrt(1 - 2 beta gamma0c exp(-beta gamma0c)).
AsymptoticValue lambda_asymptotics(const ModelParams& params, double gamma0c,
                                   LambdaRegime regime);

// High-temperature criticality beta_c = 2 Omega_a, i.e. T_c = 1/(2 Omega_a);
// dimensional T_c = chi^2/(2 omega_a).
double beta_c_high_temperature(double omega_a);
double tc_high_temperature(double omega_a);
double tc_high_temperature_dimensional(double chi, double omega_a_dim);

// FM-SR critical temperature Theta*zeta/2 (zeta = k0 on regular networks),
// the lambda -> 0 limit of the PM-FM boundary.
double tc_ferromagnetic_sr(double theta, double zeta_or_k0);

// Companion conditions of the same boundary: the SR-consistent frequency
// Omega_ac = 1/(Theta zeta) and the critical regular degree 1/(Omega_a Theta).
double sr_consistency_omega_ac(double theta, double zeta);
double critical_degree_regular(double theta, double omega_a);

// PM-FM boundary at fixed lambda_c: T_c = lambda_c / artanh(2 lambda_c /
// (Theta zeta)); empty when 2 lambda_c >= Theta zeta (no transition at any
// temperature). The quadratic variant is the small-lambda expansion
// Theta zeta/2 - 2 lambda_c^2/(3 Theta zeta).
std::optional<double> pm_fm_boundary_tc(double lambda_c, double theta,
                                        double zeta);
double pm_fm_boundary_tc_quadratic(double lambda_c, double theta, double zeta);

// Critical photon number of the complete graph, 4 J^2 N (N-1)^2 / chi^2.
double critical_photon_number(double j, double chi, long n_nodes);

// Critical node count from the closed-form degree table (generic, gamma=2,
// gamma=3 rows).
double critical_nodes(double gamma, double theta, double k_min, double t_c,
                      double mean_k);

// Clustering estimate (ln N)^2 / N at the critical size.
double clustering_estimate(double n_c);

// High-temperature magnetization beta H/(2 - beta Theta zeta); domain error
// once the denominator closes (beta Theta zeta >= 2).
double high_t_magnetization(const ModelParams& params, double zeta);

struct QuantumCritical {
    double omega_ac;    // E[1/(Theta k + H)] at full polarization
    double lambda0;     // sqrt(omega_ac / (2 I))
    double i_integral;  // E[1/(Theta k + H)^3]
};

QuantumCritical quantum_critical_frequency(double theta, double h_field,
                                           const DegreeDistribution& dist);

// lambda(omega_a) = lambda0 sqrt(1 - omega_a/omega_ac); zero in the normal
// region omega_a > omega_ac.
double quantum_order_parameter(double omega_a, const QuantumCritical& qc);

enum class OrderParamKind { lambda, s_z };

// Bisects T between t_lo and t_hi for a change of the equilibrium branch's
// phase label (SR flag for lambda, FM flag for s_z). Empty when the two
// endpoints share a label. Tolerance 1e-4 in T, 60 iteration cap.
std::optional<PhaseBoundaryPoint> locate_tc_by_bisection(
    const ModelParams& params_template, const DegreeDistribution& dist,
    OrderParamKind kind, double t_lo, double t_hi,
    const std::string& control_name = "", double control_value = 0.0,
    const SolveOptions& opt = {});

}  // namespace netdicke
