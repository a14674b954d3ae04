// Timing comparison of the OpenMP kernels against their serial reference
// implementations: Hamiltonian assembly, per-state observables, and the
// solver's seed grid. Not a correctness test (tests assert equality); run
// manually, e.g. `OMP_NUM_THREADS=8 ./bench_kernels`.

#include <chrono>
#include <cstdio>

#include "netdicke/meanfield.hpp"
#include "netdicke/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <class F>
double timed(F&& f) {
    const double t0 = now();
    f();
    return now() - t0;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n",
                name, serial, parallel,
                parallel > 0.0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    using namespace netdicke;

    // Exact-diagonalization kernels at the largest size the tests touch.
    const ModelParams params{0.15, 0.1, 0.5, 10.0, 6};
    const MicroscopicModel model = model_from_dimensionless(params, 6, 40);

    Eigen::MatrixXd h_par;
    Eigen::MatrixXd h_ser;
    report("hamiltonian assembly",
           timed([&] { h_ser = build_hamiltonian_serial(model); }),
           timed([&] { h_par = build_hamiltonian(model); }));
    std::printf("  max |difference| %.3g\n",
                (h_par - h_ser).cwiseAbs().maxCoeff());

    const SpectralDecomposition spectral = decompose(h_par);
    StateObservables obs_par;
    StateObservables obs_ser;
    report("per-state observables",
           timed([&] { obs_ser = per_state_observables_serial(model, spectral); }),
           timed([&] { obs_par = per_state_observables(model, spectral); }));
    std::printf("  max |occupancy difference| %.3g\n",
                (obs_par.occupancy - obs_ser.occupancy).cwiseAbs().maxCoeff());

    // Solver seed grid on a heavy-tailed distribution (quadrature-bound).
    const ModelParams mf{0.15, 0.1, 0.5, 10.0, 200};
    const DegreeDistribution dist = powerlaw_with_cutoff(2.5, 1.0, 200.0);
    SolveOptions serial_opt;
    serial_opt.parallel_seeds = false;
    SolveResult r_par;
    SolveResult r_ser;
    report("solver seed grid",
           timed([&] { r_ser = solve_self_consistent(mf, dist, serial_opt); }),
           timed([&] { r_par = solve_self_consistent(mf, dist); }));
    std::printf("  branches %zu vs %zu, equilibrium s_z %.12g vs %.12g\n",
                r_par.branches.size(), r_ser.branches.size(),
                r_par.equilibrium().order.s_z, r_ser.equilibrium().order.s_z);
    return 0;
}
