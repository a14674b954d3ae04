#include "netdicke/degree_dist.hpp"

#include <algorithm>
#include <cmath>

namespace netdicke {

namespace {

constexpr double kGammaBranchTol = 1e-9;

// (r^x - 1)/x, continuous through x = 0 where it tends to ln r.
double powm1_over(double r, double x) {
    const double lr = std::log(r);
    if (std::abs(x * lr) < 1e-8) return lr * (1.0 + 0.5 * x * lr);
    return std::expm1(x * lr) / x;
}

// Truncated moment of the power law: int_{k_min}^{k_max} k^m p(k) dk.
double powerlaw_moment(const PowerLawDist& d, int m) {
    const double x = static_cast<double>(m) + 1.0 - d.gamma;
    if (!std::isfinite(d.k_max)) {
        if (x >= -kGammaBranchTol)
            throw DivergenceError(
                "power-law moment diverges without a finite cutoff");
        return std::pow(d.k_min, m) * (d.gamma - 1.0) / (-x);
    }
    const double r = d.k_max / d.k_min;
    return std::pow(d.k_min, m) * (d.gamma - 1.0) * powm1_over(r, x);
}

}  // namespace

void validate(const DegreeDistribution& dist) {
    std::visit(
        [](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, DeltaDist>) {
                if (!(d.k0 > 0.0))
                    throw std::domain_error("delta distribution requires k0 > 0");
            } else if constexpr (std::is_same_v<T, PoissonDist>) {
                if (!(d.mean_degree > 0.0))
                    throw std::domain_error(
                        "poisson distribution requires mean_degree > 0");
            } else {
                if (!(d.gamma > 1.0))
                    throw std::domain_error("power law requires gamma > 1");
                if (!(d.k_min > 0.0))
                    throw std::domain_error("power law requires k_min > 0");
                if (!(d.k_min < d.k_max))
                    throw std::domain_error("power law requires k_min < k_max");
            }
        },
        dist);
}

double pdf(const DegreeDistribution& dist, double k) {
    return std::visit(
        [k](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, DeltaDist>) {
                if (k < 0.0) throw std::domain_error("degree must be >= 0");
                return k == d.k0
                           ? std::numeric_limits<double>::infinity()
                           : 0.0;
            } else if constexpr (std::is_same_v<T, PoissonDist>) {
                if (k < 0.0) throw std::domain_error("degree must be >= 0");
                const double n = std::round(k);
                if (std::abs(k - n) > 1e-9)
                    throw std::domain_error("poisson mass requires integer k");
                return detail::poisson_pmf(d.mean_degree,
                                           static_cast<long>(n));
            } else {
                if (k < d.k_min || k > d.k_max)
                    throw std::domain_error("k outside [k_min, k_max]");
                return (d.gamma - 1.0) * std::pow(d.k_min, d.gamma - 1.0) *
                       std::pow(k, -d.gamma);
            }
        },
        dist);
}

double moment(const DegreeDistribution& dist, int m) {
    if (m < 1 || m > 2) throw std::domain_error("moment order must be 1 or 2");
    return std::visit(
        [m](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, DeltaDist>) {
                return m == 1 ? d.k0 : d.k0 * d.k0;
            } else if constexpr (std::is_same_v<T, PoissonDist>) {
                const double mu = d.mean_degree;
                return m == 1 ? mu : mu + mu * mu;
            } else {
                return powerlaw_moment(d, m);
            }
        },
        dist);
}

double zeta(const DegreeDistribution& dist) {
    return std::visit(
        [&dist](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, DeltaDist>) {
                return d.k0;
            } else if constexpr (std::is_same_v<T, PoissonDist>) {
                return 1.0 + d.mean_degree;
            } else {
                return moment(dist, 2) / moment(dist, 1);
            }
        },
        dist);
}

DegreeStats degree_stats(const DegreeDistribution& dist) {
    const double m1 = moment(dist, 1);
    const double m2 = moment(dist, 2);
    return {m1, m2, m2 / m1};
}

double natural_cutoff(double gamma, double k_min, double n_nodes) {
    if (!(gamma > 1.0))
        throw std::domain_error("natural cutoff requires gamma > 1");
    return k_min * std::pow(n_nodes, 1.0 / (gamma - 1.0));
}

PowerLawDist powerlaw_with_cutoff(double gamma, double k_min, double n_nodes) {
    return {gamma, k_min, natural_cutoff(gamma, k_min, n_nodes)};
}

double powerlaw_k_min_for_mean(double gamma, double mean_k, double n_nodes) {
    const double r = std::pow(n_nodes, 1.0 / (gamma - 1.0));
    const double per_kmin = (gamma - 1.0) * powm1_over(r, 2.0 - gamma);
    return mean_k / per_kmin;
}

DegreeStats table1_closed_forms(double gamma, double k_min, double n_nodes) {
    if (!(gamma > 1.0) || gamma > 4.0)
        throw std::domain_error("closed forms cover gamma in (1, 4]");
    const double ln_n = std::log(n_nodes);
    if (std::abs(gamma - 2.0) < kGammaBranchTol) {
        const double mean_k = k_min * ln_n;
        const double z = k_min * n_nodes / ln_n;
        return {mean_k, z * mean_k, z};
    }
    if (std::abs(gamma - 3.0) < kGammaBranchTol) {
        const double mean_k = 2.0 * k_min;
        const double z = 0.5 * k_min * ln_n;
        return {mean_k, z * mean_k, z};
    }
    const double a = std::pow(n_nodes, (2.0 - gamma) / (gamma - 1.0)) - 1.0;
    const double b = std::pow(n_nodes, (3.0 - gamma) / (gamma - 1.0)) - 1.0;
    const double mean_k = k_min * (gamma - 1.0) / (2.0 - gamma) * a;
    const double z = k_min * (2.0 - gamma) / (3.0 - gamma) * b / a;
    return {mean_k, z * mean_k, z};
}

namespace detail {

double powerlaw_tail_cutoff(const PowerLawDist& d, Tail tail) {
    double decades = 0.0;
    if (tail == Tail::linear) {
        // Need the first-moment tail, ~ (K/k_min)^{2-gamma}, below 1e-12.
        if (d.gamma <= 2.0 + 1e-12)
            throw DivergenceError(
                "degree-weighted expectation diverges for gamma <= 2 "
                "without a finite cutoff");
        decades = 12.0 / (d.gamma - 2.0);
    } else {
        decades = 14.0 / (d.gamma - 1.0);
    }
    const double cap = 290.0 - std::log10(d.k_min);
    return d.k_min * std::pow(10.0, std::min(decades, cap));
}

}  // namespace detail

}  // namespace netdicke
