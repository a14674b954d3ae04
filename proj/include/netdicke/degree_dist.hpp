#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

#include "netdicke/quadrature.hpp"

namespace netdicke {

class DivergenceError : public std::domain_error {
    using std::domain_error::domain_error;
};

struct DeltaDist {
    double k0;
};

struct PoissonDist {
    double mean_degree;
};

// Density (gamma-1) k_min^{gamma-1} k^{-gamma}, normalized on [k_min, inf).
// A finite k_max truncates expectation and moment integrals but does not
// renormalize the density, so mass([k_min, k_max]) = 1 - (k_max/k_min)^{1-gamma}
// (equal to 1 - 1/N for the natural cutoff). This is the convention under
// which the closed-form degree table is exact for generic gamma.
struct PowerLawDist {
    double gamma;
    double k_min;
    double k_max = std::numeric_limits<double>::infinity();
};

using DegreeDistribution = std::variant<DeltaDist, PoissonDist, PowerLawDist>;

struct DegreeStats {
    double mean_k;
    double mean_k2;
    double zeta;
};

void validate(const DegreeDistribution& dist);

double pdf(const DegreeDistribution& dist, double k);
double moment(const DegreeDistribution& dist, int m);
double zeta(const DegreeDistribution& dist);
DegreeStats degree_stats(const DegreeDistribution& dist);

double natural_cutoff(double gamma, double k_min, double n_nodes);
PowerLawDist powerlaw_with_cutoff(double gamma, double k_min, double n_nodes);

// k_min that makes the truncated mean degree of a natural-cutoff power law
// equal mean_k. Closed form: the mean is proportional to k_min at fixed
// (gamma, N) because the cutoff ratio k_max/k_min = N^{1/(gamma-1)} does not
// depend on k_min.
double powerlaw_k_min_for_mean(double gamma, double mean_k, double n_nodes);

// Closed-form degree table rows (generic gamma, gamma=2, gamma=3). The
// gamma=2 and gamma=3 rows are asymptotic in N; the generic row coincides
// with the truncated moments identically.
DegreeStats table1_closed_forms(double gamma, double k_min, double n_nodes);

// How an integrand scales with k at large degree; selects the tail cutoff
// used when k_max is infinite. linear covers anything growing at most like k.
enum class Tail { bounded, linear };

namespace detail {

// Term range covering all but < 1e-12 of the Poisson mass.
inline void poisson_range(double mu, long& lo, long& hi) {
    const double s = std::sqrt(mu);
    lo = std::max(0L, static_cast<long>(std::floor(mu - 12.0 * s - 30.0)));
    hi = static_cast<long>(std::ceil(mu + 12.0 * s + 30.0));
}

inline double poisson_pmf(double mu, long k) {
    return std::exp(static_cast<double>(k) * std::log(mu) - mu -
                    std::lgamma(static_cast<double>(k) + 1.0));
}

double powerlaw_tail_cutoff(const PowerLawDist& d, Tail tail);

}  // namespace detail

template <class F>
double expect(const DeltaDist& d, F&& f, Tail = Tail::linear) {
    return f(d.k0);
}

template <class F>
double expect(const PoissonDist& d, F&& f, Tail = Tail::linear) {
    long lo = 0;
    long hi = 0;
    detail::poisson_range(d.mean_degree, lo, hi);
    double acc = 0.0;
    for (long k = lo; k <= hi; ++k)
        acc += detail::poisson_pmf(d.mean_degree, k) * f(static_cast<double>(k));
    return acc;
}

template <class F>
double expect(const PowerLawDist& d, F&& f, Tail tail = Tail::linear) {
    const double hi = std::isfinite(d.k_max)
                          ? d.k_max
                          : detail::powerlaw_tail_cutoff(d, tail);
    const double norm = (d.gamma - 1.0) * std::pow(d.k_min, d.gamma - 1.0);
    QuadratureResult res;
    if (hi / d.k_min > 50.0) {
        // Fold the Jacobian k into the weight analytically so the combined
        // exponent never underflows on wide cutoff ranges.
        auto g = [&](double u) {
            return norm * std::exp((1.0 - d.gamma) * u) * f(std::exp(u));
        };
        res = integrate(g, std::log(d.k_min), std::log(hi));
    } else {
        auto g = [&](double k) { return norm * std::pow(k, -d.gamma) * f(k); };
        res = integrate(g, d.k_min, hi);
    }
    if (!res.converged)
        throw QuadratureError("degree expectation did not converge", res.error);
    return res.value;
}

template <class F>
double expect(const DegreeDistribution& dist, F&& f, Tail tail = Tail::linear) {
    return std::visit(
        [&](const auto& d) { return expect(d, std::forward<F>(f), tail); },
        dist);
}

}  // namespace netdicke
