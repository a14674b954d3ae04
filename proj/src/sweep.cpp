#include "netdicke/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "netdicke/boundaries.hpp"
#include "netdicke/oracle.hpp"
#include "netdicke/version.hpp"

namespace netdicke {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string short_name(const std::string& key) {
    const auto pos = key.rfind('.');
    return pos == std::string::npos ? key : key.substr(pos + 1);
}

std::string full_precision(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::pair<std::string, std::string>> base_metadata(
    const Config& cfg, const std::string& subcommand) {
    std::vector<std::pair<std::string, std::string>> md;
    md.emplace_back("version", kVersion);
    md.emplace_back("subcommand", subcommand);
    for (const auto& [k, v] : cfg.values()) md.emplace_back(k, v);
    return md;
}

int resolved_workers(int workers) {
    if (workers > 0) return workers;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Single-row dataset for subcommands invoked without sweep.var.
Dataset run_single(const Config& cfg, const std::string& subcommand,
                   const std::vector<std::string>& payload_columns,
                   const RowFn& row) {
    Dataset ds;
    ds.metadata = base_metadata(cfg, subcommand);
    ds.columns = payload_columns;
    ds.columns.push_back("error");
    std::vector<Dataset::Cell> cells;
    double err = 0.0;
    try {
        cells = row(cfg);
    } catch (const std::exception&) {
        cells.assign(payload_columns.size(), kNan);
        err = 1.0;
    }
    cells.emplace_back(err);
    ds.rows.push_back(std::move(cells));
    return ds;
}

OrderParamKind order_param_from(const Config& cfg) {
    const std::string name = cfg.get_string("boundary.order_param", "lambda");
    if (name == "lambda") return OrderParamKind::lambda;
    if (name == "s_z") return OrderParamKind::s_z;
    throw ConfigError("boundary.order_param must be lambda or s_z, got '" +
                      name + "'");
}

}  // namespace

SweepSpec sweep_from_config(const Config& cfg) {
    SweepSpec spec;
    spec.var = cfg.get_string("sweep.var");
    spec.min = cfg.get_double("sweep.min");
    spec.max = cfg.get_double("sweep.max");
    spec.steps = cfg.get_long("sweep.steps", 1);
    const std::string scale = cfg.get_string("sweep.scale", "linear");
    if (scale == "log")
        spec.log_scale = true;
    else if (scale != "linear")
        throw ConfigError("sweep.scale must be linear or log, got '" + scale +
                          "'");
    if (spec.steps < 1) throw ConfigError("sweep.steps must be >= 1");
    if (spec.steps > 1 && !(spec.min < spec.max))
        throw ConfigError("sweep.min must be < sweep.max");
    if (spec.log_scale && !(spec.min > 0.0))
        throw ConfigError("log-scale sweeps need sweep.min > 0");
    return spec;
}

std::vector<double> sweep_values(const SweepSpec& spec) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(spec.steps));
    if (spec.steps == 1) {
        values.push_back(spec.min);
        return values;
    }
    for (long i = 0; i < spec.steps; ++i) {
        const double t =
            static_cast<double>(i) / static_cast<double>(spec.steps - 1);
        if (spec.log_scale)
            values.push_back(spec.min *
                             std::pow(spec.max / spec.min, t));
        else
            values.push_back(spec.min + (spec.max - spec.min) * t);
    }
    values.back() = spec.max;
    return values;
}

ModelParams params_from_config(const Config& cfg, bool require_temperature) {
    ModelParams p;
    p.theta = cfg.get_double("model.theta");
    p.h_field = cfg.get_double("model.h");
    p.omega_a = cfg.get_double("model.omega_a");
    p.n_nodes = cfg.get_long("model.n", 200);
    const bool has_t = cfg.has("model.t");
    const bool has_beta = cfg.has("model.beta");
    if (has_t && has_beta)
        throw ConfigError("set model.t or model.beta, not both");
    if (has_t) {
        const double t = cfg.get_double("model.t");
        if (!(t > 0.0)) throw ConfigError("model.t must be > 0");
        p.beta = 1.0 / t;
    } else if (has_beta) {
        p.beta = cfg.get_double("model.beta");
    } else if (require_temperature) {
        throw ConfigError("missing temperature: set model.t or model.beta");
    } else {
        p.beta = 1.0;
    }
    validate(p);
    return p;
}

DegreeDistribution dist_from_config(const Config& cfg) {
    const std::string kind = cfg.get_string("dist.kind");
    DegreeDistribution dist;
    if (kind == "delta") {
        dist = DeltaDist{cfg.get_double("dist.k0")};
    } else if (kind == "poisson") {
        dist = PoissonDist{cfg.get_double("dist.mean_k")};
    } else if (kind == "powerlaw") {
        const double gamma = cfg.get_double("dist.gamma");
        const double k_min = cfg.get_double("dist.k_min", 1.0);
        if (cfg.has("dist.n_nodes")) {
            dist = powerlaw_with_cutoff(gamma, k_min,
                                        cfg.get_double("dist.n_nodes"));
        } else {
            PowerLawDist d{gamma, k_min,
                           std::numeric_limits<double>::infinity()};
            if (cfg.has("dist.k_max")) d.k_max = cfg.get_double("dist.k_max");
            dist = d;
        }
    } else {
        throw ConfigError("dist.kind must be delta, poisson, or powerlaw, "
                          "got '" +
                          kind + "'");
    }
    validate(dist);
    return dist;
}

Dataset run_keyed_sweep(const Config& cfg, const std::string& subcommand,
                        const std::vector<std::string>& payload_columns,
                        const RowFn& row, int workers) {
    const SweepSpec spec = sweep_from_config(cfg);
    const std::vector<double> values = sweep_values(spec);

    Dataset ds;
    ds.metadata = base_metadata(cfg, subcommand);
    ds.columns.push_back(short_name(spec.var));
    ds.columns.insert(ds.columns.end(), payload_columns.begin(),
                      payload_columns.end());
    ds.columns.push_back("error");
    ds.rows.resize(values.size());

    const auto n_rows = static_cast<std::ptrdiff_t>(values.size());
    const bool parallel_rows = n_rows > 1 && workers != 1;
    const int n_threads = resolved_workers(workers);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(n_threads) \
    if (parallel_rows)
#else
    (void)parallel_rows;
    (void)n_threads;
#endif
    for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
        Config local = cfg;
        local.set(spec.var, full_precision(values[i]));
        std::vector<Dataset::Cell> payload;
        double err = 0.0;
        try {
            payload = row(local);
        } catch (const std::exception&) {
            payload.assign(payload_columns.size(), kNan);
            err = 1.0;
        } catch (...) {
            payload.assign(payload_columns.size(), kNan);
            err = 1.0;
        }
        std::vector<Dataset::Cell> cells;
        cells.reserve(payload.size() + 2);
        cells.emplace_back(values[i]);
        for (auto& c : payload) cells.push_back(std::move(c));
        cells.emplace_back(err);
        ds.rows[i] = std::move(cells);
    }
    return ds;
}

namespace {

std::vector<Dataset::Cell> solve_row(const Config& cfg) {
    const ModelParams p = params_from_config(cfg);
    const DegreeDistribution dist = dist_from_config(cfg);
    const SolveResult res = solve_self_consistent(p, dist);
    const SolutionBranch& eq = res.equilibrium();
    return {eq.order.s_z, eq.order.lambda, eq.free_energy,
            std::string(phase_name(eq.phase)),
            static_cast<double>(res.branches.size())};
}

std::vector<Dataset::Cell> boundary_row(const Config& cfg) {
    const ModelParams p = params_from_config(cfg, false);
    const DegreeDistribution dist = dist_from_config(cfg);
    const double t_lo = cfg.get_double("boundary.t_lo");
    const double t_hi = cfg.get_double("boundary.t_hi");
    const auto point = locate_tc_by_bisection(p, dist, order_param_from(cfg),
                                              t_lo, t_hi);
    if (!point) return {kNan, std::string("none")};
    return {point->t_c, std::string(boundary_method_name(point->method))};
}

std::vector<Dataset::Cell> quantum_row(const Config& cfg) {
    const ModelParams p = params_from_config(cfg);
    const DegreeDistribution dist = dist_from_config(cfg);
    const QuantumCritical qc =
        quantum_critical_frequency(p.theta, p.h_field, dist);
    const double closed = quantum_order_parameter(p.omega_a, qc);
    const SolveResult res = solve_self_consistent(p, dist);
    return {closed, res.equilibrium().order.lambda, qc.omega_ac, qc.lambda0};
}

std::vector<Dataset::Cell> stats_row(const Config& cfg) {
    const DegreeStats st = degree_stats(dist_from_config(cfg));
    return {st.mean_k, st.mean_k2, st.zeta};
}

// Runs the parse-only part of a row against the first swept value so
// structural configuration problems surface as ConfigError before any row
// executes; domain failures (divergent moments, bad swept values) are left
// for the rows, which report them per value.
void preflight(const Config& cfg,
               const std::function<void(const Config&)>& parse) {
    Config probe = cfg;
    if (probe.has("sweep.var")) {
        const SweepSpec spec = sweep_from_config(probe);
        probe.set(spec.var, full_precision(sweep_values(spec).front()));
    }
    try {
        parse(probe);
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
    }
}

Dataset run_driver(const Config& cfg, const std::string& subcommand,
                   const std::vector<std::string>& payload_columns,
                   const RowFn& row,
                   const std::function<void(const Config&)>& parse,
                   int workers) {
    preflight(cfg, parse);
    if (cfg.has("sweep.var"))
        return run_keyed_sweep(cfg, subcommand, payload_columns, row, workers);
    return run_single(cfg, subcommand, payload_columns, row);
}

void parse_model_and_dist(const Config& cfg) {
    params_from_config(cfg);
    dist_from_config(cfg);
}

}  // namespace

Dataset run_solve(const Config& cfg, int workers) {
    return run_driver(cfg, "solve",
                      {"s_z", "lambda", "free_energy", "phase", "n_branches"},
                      solve_row, parse_model_and_dist, workers);
}

Dataset run_boundary(const Config& cfg, int workers) {
    return run_driver(cfg, "boundary", {"t_c", "method"}, boundary_row,
                      [](const Config& c) {
                          params_from_config(c, false);
                          dist_from_config(c);
                          c.get_double("boundary.t_lo");
                          c.get_double("boundary.t_hi");
                          order_param_from(c);
                      },
                      workers);
}

Dataset run_quantum(const Config& cfg, int workers) {
    return run_driver(cfg, "quantum",
                      {"lambda_closed", "lambda_solver", "omega_ac", "lambda0"},
                      quantum_row, parse_model_and_dist, workers);
}

Dataset run_stats(const Config& cfg, int workers) {
    return run_driver(cfg, "stats", {"mean_k", "mean_k2", "zeta"}, stats_row,
                      [](const Config& c) { dist_from_config(c); }, workers);
}

Dataset run_oracle(const Config& cfg, int workers) {
    (void)workers;  // diagonalization dominates; rows are cheap
    const ModelParams p = params_from_config(cfg, false);
    const int cutoff = static_cast<int>(cfg.get_long("oracle.photon_cutoff"));

    MicroscopicModel model;
    if (cfg.has("oracle.edge_list")) {
        const std::string path = cfg.get_string("oracle.edge_list");
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open edge list: " + path);
        const NetworkSample sample = read_edge_list(in);
        model = model_from_sample(sample, p.theta / 4.0, p.h_field, p.omega_a,
                                  1.0, cutoff);
    } else {
        const int n_spins = static_cast<int>(cfg.get_long("oracle.n_spins"));
        model = model_from_dimensionless(p, n_spins, cutoff);
    }

    SweepSpec grid;
    grid.var = "oracle.beta";
    grid.min = cfg.get_double("oracle.beta_min");
    grid.max = cfg.get_double("oracle.beta_max", grid.min);
    grid.steps = cfg.get_long("oracle.steps", 1);
    const std::string scale = cfg.get_string("oracle.scale", "linear");
    if (scale == "log")
        grid.log_scale = true;
    else if (scale != "linear")
        throw ConfigError("oracle.scale must be linear or log");
    if (grid.steps > 1 && !(grid.min < grid.max))
        throw ConfigError("oracle.beta_min must be < oracle.beta_max");

    const SpectralDecomposition spectral =
        decompose(build_hamiltonian(model));
    const StateObservables states = per_state_observables(model, spectral);

    Dataset ds;
    ds.metadata = base_metadata(cfg, "oracle");
    ds.columns = {"beta",       "t",           "mean_photons",
                  "sz_weighted", "sx_mean",    "lambda_est",
                  "mean_energy", "top_fock_occupancy", "trace_check",
                  "error"};
    for (const double beta : sweep_values(grid)) {
        const ThermalObservables obs =
            thermal_observables(model, states, beta);
        ds.rows.push_back({beta, 1.0 / beta, obs.mean_photons,
                           obs.sz_weighted, obs.sx_mean, obs.lambda_est,
                           obs.mean_energy, obs.top_fock_occupancy,
                           obs.trace_check, 0.0});
    }
    return ds;
}

NetworkSample run_netgen(const Config& cfg) {
    const std::string kind = cfg.get_string("net.kind");
    const long n = cfg.get_long("net.n");
    const auto seed = static_cast<std::uint64_t>(cfg.get_long("seed", 0));
    if (kind == "regular")
        return generate_regular(n, static_cast<int>(cfg.get_long("net.k0")),
                                seed);
    if (kind == "er") return generate_er(n, cfg.get_double("net.mean_k"), seed);
    if (kind == "ba")
        return generate_ba(n, static_cast<int>(cfg.get_long("net.m_links")),
                           seed);
    throw ConfigError("net.kind must be regular, er, or ba, got '" + kind +
                      "'");
}

void write_netgen_output(std::ostream& out, const NetworkSample& sample) {
    const EmpiricalStats stats = empirical_stats(sample);
    out << "# generator " << sample.generator << "\n";
    out << "# n " << sample.n_nodes << "\n";
    out << "# seed " << sample.seed << "\n";
    out << "# mean_k " << format_double(stats.degree.mean_k) << "\n";
    out << "# mean_k2 " << format_double(stats.degree.mean_k2) << "\n";
    out << "# zeta " << format_double(stats.degree.zeta) << "\n";
    out << "# clustering " << format_double(stats.clustering) << "\n";
    for (auto [u, v] : sample.edges) out << u << " " << v << "\n";
}

namespace {

// T_c(N) for regular networks at fixed photon number: lambda_c =
// sqrt(N_ph/N) shrinks with N, so the boundary rises toward theta*k0/2.
Dataset build_fig3(const Config& cfg) {
    const double theta = cfg.get_double("model.theta");
    const double n_ph = cfg.get_double("figure.n_ph");
    SweepSpec grid;
    grid.var = "n";
    grid.min = cfg.get_double("figure.n_min", 20.0);
    grid.max = cfg.get_double("figure.n_max", 2000.0);
    grid.steps = cfg.get_long("figure.steps", 25);
    grid.log_scale = true;

    Dataset ds;
    ds.metadata = base_metadata(cfg, "figure");
    ds.columns = {"n", "tc_k4", "tc_k8", "tc_k16", "tc_complete", "error"};
    long prev_n = -1;
    for (const double v : sweep_values(grid)) {
        const long n = std::lround(v);
        if (n == prev_n) continue;
        prev_n = n;
        std::vector<Dataset::Cell> row{static_cast<double>(n)};
        double err = 0.0;
        try {
            const double lambda_c = std::sqrt(n_ph / static_cast<double>(n));
            for (const double k0 : {4.0, 8.0, 16.0,
                                    static_cast<double>(n - 1)}) {
                const auto tc = pm_fm_boundary_tc(lambda_c, theta, k0);
                row.emplace_back(tc ? *tc : kNan);
            }
        } catch (const std::exception&) {
            row.resize(1);
            for (int j = 0; j < 4; ++j) row.emplace_back(kNan);
            err = 1.0;
        }
        row.emplace_back(err);
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

std::vector<Dataset::Cell> fig4a_row(const Config& cfg) {
    const ModelParams p = params_from_config(cfg, false);
    const DegreeDistribution dist = dist_from_config(cfg);
    const double t_lo = cfg.get_double("figure.t_lo", 0.05);
    const double t_hi = cfg.get_double("figure.t_hi", 20.0);
    const auto sr = locate_tc_by_bisection(p, dist, OrderParamKind::lambda,
                                           t_lo, t_hi);
    const double tc_fm = tc_ferromagnetic_sr(p.theta, zeta(dist));
    return {sr ? sr->t_c : kNan, tc_fm};
}

Dataset build_fig4a(const Config& cfg, int workers) {
    return run_keyed_sweep(cfg, "figure", {"tc_sr", "tc_fm"}, fig4a_row,
                           workers);
}

// T_c versus the PM-FM boundary's order parameter for the three network
// families of equal mean degree; each terminates where 2 lambda = theta*zeta.
Dataset build_fig5(const Config& cfg) {
    const double theta = cfg.get_double("model.theta");
    const double n_nodes = cfg.get_double("figure.n", 200.0);
    const double mean_k = cfg.get_double("figure.mean_k", 4.0);
    SweepSpec grid;
    grid.var = "lambda_c";
    grid.min = cfg.get_double("figure.lambda_min", 0.004);
    grid.max = cfg.get_double("figure.lambda_max", 0.46);
    grid.steps = cfg.get_long("figure.steps", 120);

    const double k_min_sf = powerlaw_k_min_for_mean(3.0, mean_k, n_nodes);
    const double zeta_sf =
        zeta(DegreeDistribution{powerlaw_with_cutoff(3.0, k_min_sf, n_nodes)});
    const double zeta_rand = zeta(DegreeDistribution{PoissonDist{mean_k}});
    const double zeta_reg = mean_k;

    Dataset ds;
    ds.metadata = base_metadata(cfg, "figure");
    ds.columns = {"lambda_c", "tc_scalefree", "tc_random", "tc_regular",
                  "error"};
    for (const double lambda_c : sweep_values(grid)) {
        std::vector<Dataset::Cell> row{lambda_c};
        for (const double z : {zeta_sf, zeta_rand, zeta_reg}) {
            const auto tc = pm_fm_boundary_tc(lambda_c, theta, z);
            row.emplace_back(tc ? *tc : kNan);
        }
        row.emplace_back(0.0);
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

}  // namespace

Config load_figure_preset(const std::string& figure_id,
                          const std::string& presets_path) {
    const Config all = Config::from_file(presets_path);
    Config preset = all.stripped_prefix(figure_id);
    if (preset.values().empty())
        throw ConfigError("no preset named '" + figure_id + "' in " +
                          presets_path);
    return preset;
}

Dataset run_figure(const std::string& figure_id, const Config& overrides,
                   const std::string& presets_path, int workers) {
    Config cfg = load_figure_preset(figure_id, presets_path);
    cfg.merge_overlay(overrides);
    Dataset ds;
    if (figure_id == "fig2")
        ds = run_stats(cfg, workers);
    else if (figure_id == "fig3")
        ds = build_fig3(cfg);
    else if (figure_id == "fig4a")
        ds = build_fig4a(cfg, workers);
    else if (figure_id == "fig4b" || figure_id == "fig6")
        ds = run_solve(cfg, workers);
    else if (figure_id == "fig5")
        ds = build_fig5(cfg);
    else
        throw ConfigError("unknown figure id: " + figure_id);
    ds.metadata.insert(ds.metadata.begin() + 2, {"figure", figure_id});
    return ds;
}

}  // namespace netdicke
