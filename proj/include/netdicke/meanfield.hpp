#pragma once

#include <string>
#include <vector>

#include "netdicke/degree_dist.hpp"

namespace netdicke {

// Dimensionless parameters: theta = 4J/chi, h_field = h/chi, omega_a =
// omega_a/chi, beta = beta*chi. Temperatures reported elsewhere are T =
// 1/beta.
struct ModelParams {
    double theta;
    double h_field;
    double omega_a;
    double beta;
    long n_nodes = 2;
};

void validate(const ModelParams& params);

struct OrderParameters {
    double s_z;     // degree-weighted z magnetization, in [-1, 1]
    double lambda;  // photon amplitude |alpha|/sqrt(N), >= 0
};

enum class Phase { PmNormal, FmNormal, PmSr, FmSr };

const char* phase_name(Phase phase);

// SR iff lambda > 1e-6, FM iff |s_z| > 1e-6.
Phase classify(const OrderParameters& order);

struct SolutionBranch {
    OrderParameters order;
    double residual_sz;
    double residual_lambda;
    double free_energy;
    Phase phase;
};

struct SolveOptions {
    double damping = 0.5;
    int max_iter = 10000;
    double step_tol = 1e-12;
    double residual_tol = 1e-10;
    double dedup_tol = 1e-6;
    bool parallel_seeds = true;
};

struct SolveDiagnostics {
    int seeds_total = 0;
    int seeds_converged = 0;
    int dropped_no_converge = 0;
    int dropped_residual = 0;
};

struct SolveResult {
    std::vector<SolutionBranch> branches;  // ascending free energy
    SolveDiagnostics diagnostics;
    const SolutionBranch& equilibrium() const { return branches.front(); }
};

// Gap Gamma(k) = sqrt((theta*s_z*k + h_field)^2 + 4 lambda^2).
double effective_gap(double k, const OrderParameters& order,
                     const ModelParams& params);

// Right-hand side of the s_z self-consistency equation:
// E[(k/<k>) * (theta*s_z*k + h) / Gamma * tanh(beta*Gamma/2)].
double magnetization_rhs(const OrderParameters& order,
                         const ModelParams& params,
                         const DegreeDistribution& dist);

// F(s_z, lambda) = E[tanh(beta*Gamma/2)/Gamma]; the photon equation reads
// lambda * omega_a = lambda * F, so nontrivial roots satisfy F = omega_a.
// Strictly decreasing in lambda, which is what the nested bisection relies on.
double transverse_response(const OrderParameters& order,
                           const ModelParams& params,
                           const DegreeDistribution& dist);

// Per-node free energy
// f = omega_a*lambda^2 + (theta*<k>/4)*s_z^2 - (1/beta)*E[ln 2cosh(beta*Gamma/2)].
double free_energy(const OrderParameters& order, const ModelParams& params,
                   const DegreeDistribution& dist);

// f(a) - f(b) with the difference taken inside the degree integral and the
// quadratic terms factored, so branch ordering survives huge <k> (anomalous
// power laws) where subtracting two separately computed values loses the
// entire signal. Mirror pairs (s, lambda), (-s, lambda) are compared at the
// shared |s|, making their quadratic terms cancel identically.
double free_energy_difference(const OrderParameters& a,
                              const OrderParameters& b,
                              const ModelParams& params,
                              const DegreeDistribution& dist);

// Enumerates fixed points of the coupled equations from a fixed seed grid:
// damped iteration on s_z with a nested bisection solving F = omega_a for
// lambda at each step. Branches failing the residual contract are dropped
// and counted in diagnostics. Result sorted ascending by free energy; the
// head is the equilibrium branch.
SolveResult solve_self_consistent(const ModelParams& params,
                                  const DegreeDistribution& dist,
                                  const SolveOptions& opt = {});

// Closed-form magnetization h*omega_a/(1 - eps) on the SR branch of a
// regular network, eps = theta*k0*omega_a. Diagnostic only; valid when
// eps < 1 and the value lies in [-1, 1].
struct RegularSzClosedForm {
    double s_z;
    bool valid;
};
RegularSzClosedForm sz_closed_form_regular(const ModelParams& params,
                                           double k0);

}  // namespace netdicke
