#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "netdicke/config.hpp"
#include "netdicke/dataset.hpp"
#include "netdicke/degree_dist.hpp"
#include "netdicke/meanfield.hpp"
#include "netdicke/netgen.hpp"

namespace netdicke {

struct SweepSpec {
    std::string var;  // dotted config key, e.g. model.t or dist.gamma
    double min = 0.0;
    double max = 0.0;
    long steps = 1;
    bool log_scale = false;
};

// Reads sweep.var / sweep.min / sweep.max / sweep.steps / sweep.scale.
SweepSpec sweep_from_config(const Config& cfg);

// steps == 1 degenerates to {min}; otherwise endpoints inclusive.
std::vector<double> sweep_values(const SweepSpec& spec);

// model.theta, model.h, model.omega_a, model.n plus exactly one of model.t
// and model.beta. Subcommands that scan temperature themselves (boundary,
// oracle) pass require_temperature = false and get beta = 1 as placeholder.
ModelParams params_from_config(const Config& cfg,
                               bool require_temperature = true);

// dist.kind = delta | poisson | powerlaw with dist.k0 / dist.mean_k /
// dist.gamma, dist.k_min, and either dist.n_nodes (natural cutoff) or
// dist.k_max ("inf" allowed; absent means infinite).
DegreeDistribution dist_from_config(const Config& cfg);

// One row per swept value; the row function sees a config copy with the
// swept key overridden and returns the payload cells (everything between
// the swept-value column and the error column). Exceptions inside a row
// become NaN payload cells with error code 1; the sweep never aborts.
using RowFn = std::function<std::vector<Dataset::Cell>(const Config&)>;

Dataset run_keyed_sweep(const Config& cfg, const std::string& subcommand,
                        const std::vector<std::string>& payload_columns,
                        const RowFn& row, int workers);

// Subcommand drivers. Each accepts an optional sweep.var; without one the
// dataset has a single row and no swept-value column. workers <= 0 means
// use all available threads; rows are computed independently and emitted
// in sweep order.
Dataset run_solve(const Config& cfg, int workers);
Dataset run_boundary(const Config& cfg, int workers);
Dataset run_quantum(const Config& cfg, int workers);
Dataset run_stats(const Config& cfg, int workers);

// Exact-diagonalization scan over an inverse-temperature grid
// (oracle.beta_min / beta_max / steps / scale); the model is built and
// diagonalized once, so rows share the spectral decomposition.
Dataset run_oracle(const Config& cfg, int workers);

// net.kind = regular | er | ba with net.n and net.k0 / net.mean_k /
// net.m_links; seed comes from the top-level "seed" key.
NetworkSample run_netgen(const Config& cfg);

// Edge-list format plus empirical-statistics header comments.
void write_netgen_output(std::ostream& out, const NetworkSample& sample);

Config load_figure_preset(const std::string& figure_id,
                          const std::string& presets_path);

// Applies the named preset, overlays user overrides (overrides win), and
// dispatches to the matching driver or dedicated builder.
Dataset run_figure(const std::string& figure_id, const Config& overrides,
                   const std::string& presets_path, int workers);

}  // namespace netdicke
