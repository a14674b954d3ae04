#include "netdicke/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace netdicke {

namespace {

constexpr long kMaxDim = 200000;

// Diagonal spin energy -sum_{i<j} 2 J_ij s_i s_j - (h/2) sum_i s_i for every
// spin configuration.
std::vector<double> spin_energies(const MicroscopicModel& m) {
    const int n = m.n_spins;
    const long n_spin = 1L << n;
    std::vector<double> e(n_spin, 0.0);
    for (long s = 0; s < n_spin; ++s) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double si = (s >> i) & 1 ? 1.0 : -1.0;
            acc -= 0.5 * m.h_dim * si;
            for (int j = i + 1; j < n; ++j) {
                const double sj = (s >> j) & 1 ? 1.0 : -1.0;
                acc -= 2.0 * m.j_matrix(i, j) * si * sj;
            }
        }
        e[s] = acc;
    }
    return e;
}

template <bool Parallel>
Eigen::MatrixXd build_impl(const MicroscopicModel& m) {
    validate(m);
    const int n = m.n_spins;
    const int levels = m.photon_cutoff + 1;
    const long n_spin = 1L << n;
    const long dim = hilbert_dim(m);
    const std::vector<double> e_spin = spin_energies(m);
    const double g = -0.5 * m.chi_dim / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
#pragma omp parallel for schedule(static) if (Parallel)
    for (int nf = 0; nf < levels; ++nf) {
        for (long s = 0; s < n_spin; ++s) {
            const long row = nf * n_spin + s;
            h(row, row) = e_spin[s] + m.omega_dim * nf;
            if (nf + 1 < levels) {
                const double amp = g * std::sqrt(nf + 1.0);
                for (int i = 0; i < n; ++i) {
                    const long col = (nf + 1) * n_spin + (s ^ (1L << i));
                    h(row, col) = amp;
                    h(col, row) = amp;
                }
            }
        }
    }
    return h;
}

template <bool Parallel>
StateObservables observables_impl(const MicroscopicModel& m,
                                  const SpectralDecomposition& spectral) {
    const int n = m.n_spins;
    const int levels = m.photon_cutoff + 1;
    const long n_spin = 1L << n;
    const long dim = spectral.energies.size();
    if (dim != hilbert_dim(m))
        throw std::invalid_argument("decomposition does not match model");

    double mean_k = 0.0;
    for (double k : m.degrees) mean_k += k;
    mean_k /= n;
    std::vector<double> sz_diag(n_spin, 0.0);
    for (long s = 0; s < n_spin; ++s) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += m.degrees[i] * ((s >> i) & 1 ? 1.0 : -1.0);
        sz_diag[s] = acc / (n * mean_k);
    }

    StateObservables out;
    out.energies = spectral.energies;
    out.occupancy.resize(dim);
    out.sz_weighted.resize(dim);
    out.sx_sum.resize(dim);
    out.top_fock.resize(dim);
    out.norm2.resize(dim);
#pragma omp parallel for schedule(static) if (Parallel)
    for (long col = 0; col < dim; ++col) {
        const double* v = spectral.vectors.col(col).data();
        double occ = 0.0;
        double sz = 0.0;
        double sx = 0.0;
        double top = 0.0;
        double nrm = 0.0;
        for (long b = 0; b < dim; ++b) {
            const double w = v[b] * v[b];
            const long nf = b / n_spin;
            const long s = b % n_spin;
            nrm += w;
            occ += w * static_cast<double>(nf);
            sz += w * sz_diag[s];
            if (nf == levels - 1) top += w;
            const long base = b - s;
            double flip = 0.0;
            for (int i = 0; i < n; ++i) flip += v[base + (s ^ (1L << i))];
            sx += v[b] * flip;
        }
        out.occupancy[col] = occ;
        out.sz_weighted[col] = sz;
        out.sx_sum[col] = sx;
        out.top_fock[col] = top;
        out.norm2[col] = nrm;
    }
    return out;
}

}  // namespace

long hilbert_dim(const MicroscopicModel& model) {
    return (1L << model.n_spins) *
           static_cast<long>(model.photon_cutoff + 1);
}

void validate(const MicroscopicModel& model) {
    if (model.n_spins < 1 || model.n_spins > 10)
        throw std::domain_error("n_spins must be in [1, 10]");
    if (model.photon_cutoff < 1)
        throw std::domain_error("photon_cutoff must be >= 1");
    if (hilbert_dim(model) > kMaxDim)
        throw std::domain_error("hilbert dimension exceeds dense limit");
    if (model.j_matrix.rows() != model.n_spins ||
        model.j_matrix.cols() != model.n_spins)
        throw std::invalid_argument("j_matrix shape mismatch");
    if (static_cast<int>(model.degrees.size()) != model.n_spins)
        throw std::invalid_argument("degree list shape mismatch");
    if (!model.j_matrix.isApprox(model.j_matrix.transpose(), 0.0))
        throw std::invalid_argument("j_matrix must be symmetric");
    if (model.j_matrix.diagonal().cwiseAbs().maxCoeff() != 0.0)
        throw std::invalid_argument("j_matrix must have zero diagonal");
    if (!(model.omega_dim > 0.0))
        throw std::domain_error("omega must be > 0");
}

MicroscopicModel annealed_model(const std::vector<double>& degrees, double j,
                                double h, double omega, double chi,
                                int photon_cutoff) {
    const int n = static_cast<int>(degrees.size());
    MicroscopicModel m;
    m.n_spins = n;
    m.photon_cutoff = photon_cutoff;
    m.h_dim = h;
    m.omega_dim = omega;
    m.chi_dim = chi;
    m.degrees = degrees;
    double mean_k = 0.0;
    for (double k : degrees) mean_k += k;
    mean_k /= n;
    m.j_matrix = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b)
                m.j_matrix(a, b) =
                    j * degrees[a] * degrees[b] / (n * mean_k);
    return m;
}

MicroscopicModel model_from_sample(const NetworkSample& sample, double j,
                                   double h, double omega, double chi,
                                   int photon_cutoff) {
    const int n = static_cast<int>(sample.n_nodes);
    MicroscopicModel m;
    m.n_spins = n;
    m.photon_cutoff = photon_cutoff;
    m.h_dim = h;
    m.omega_dim = omega;
    m.chi_dim = chi;
    m.degrees.assign(sample.degree_seq.begin(), sample.degree_seq.end());
    m.j_matrix = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : sample.edges) {
        m.j_matrix(u, v) = j;
        m.j_matrix(v, u) = j;
    }
    return m;
}

MicroscopicModel model_from_dimensionless(const ModelParams& params,
                                          int n_spins, int photon_cutoff) {
    const std::vector<double> degrees(n_spins,
                                      static_cast<double>(n_spins - 1));
    return annealed_model(degrees, 0.25 * params.theta, params.h_field,
                          params.omega_a, 1.0, photon_cutoff);
}

Eigen::MatrixXd build_hamiltonian(const MicroscopicModel& model) {
    return build_impl<true>(model);
}

Eigen::MatrixXd build_hamiltonian_serial(const MicroscopicModel& model) {
    return build_impl<false>(model);
}

SpectralDecomposition decompose(const Eigen::MatrixXd& hamiltonian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

StateObservables per_state_observables(const MicroscopicModel& model,
                                       const SpectralDecomposition& spectral) {
    return observables_impl<true>(model, spectral);
}

StateObservables per_state_observables_serial(
    const MicroscopicModel& model, const SpectralDecomposition& spectral) {
    return observables_impl<false>(model, spectral);
}

ThermalObservables thermal_observables(const MicroscopicModel& model,
                                       const StateObservables& states,
                                       double beta_dim) {
    if (!(beta_dim > 0.0)) throw std::domain_error("beta must be > 0");
    const long dim = states.energies.size();
    const double e0 = states.energies[0];
    double z = 0.0;
    double occ = 0.0;
    double sz = 0.0;
    double sx = 0.0;
    double energy = 0.0;
    double top = 0.0;
    double tr = 0.0;
    for (long i = 0; i < dim; ++i) {
        const double w = std::exp(-beta_dim * (states.energies[i] - e0));
        z += w;
        occ += w * states.occupancy[i];
        sz += w * states.sz_weighted[i];
        sx += w * states.sx_sum[i];
        energy += w * states.energies[i];
        top += w * states.top_fock[i];
        tr += w * states.norm2[i];
    }
    ThermalObservables out;
    out.mean_photons = occ / z;
    out.sz_weighted = sz / z;
    out.sx_mean = sx / z / model.n_spins;
    out.lambda_est = std::sqrt(std::max(out.mean_photons, 0.0) /
                               model.n_spins);
    out.trace_check = tr / z;
    out.mean_energy = energy / z;
    out.top_fock_occupancy = top / z;
    out.cutoff_ok = out.top_fock_occupancy < 1e-8;
    return out;
}

ThermalObservables thermal_observables(const MicroscopicModel& model,
                                       double beta_dim) {
    const SpectralDecomposition spectral =
        decompose(build_hamiltonian(model));
    const StateObservables states = per_state_observables(model, spectral);
    return thermal_observables(model, states, beta_dim);
}

double symmetry_breaking_probe(const MicroscopicModel& model, double beta_dim,
                               double bias) {
    MicroscopicModel biased = model;
    biased.h_dim += bias;
    return thermal_observables(biased, beta_dim).sz_weighted;
}

}  // namespace netdicke
