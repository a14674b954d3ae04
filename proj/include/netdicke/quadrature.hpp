#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

// Adaptive Gauss-Kronrod 7/15 integration on a finite interval, plus a
// log-substitution wrapper for integrands supported on wide positive ranges
// (degree cutoffs reach k_min * N^{1/(gamma-1)}, which can exceed 1e40).

namespace netdicke {

struct QuadratureOptions {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_depth = 48;
    int max_intervals = 4096;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    std::int64_t evaluations = 0;
};

class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error_(achieved) {}
    double achieved_error() const { return achieved_error_; }

  private:
    double achieved_error_;
};

namespace detail {

// QUADPACK dqk15 nodes and weights, positive half of [-1, 1]; index 7 is the
// midpoint. Odd indices are the embedded 7-point Gauss nodes.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr double kGk15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
void gk15(F& f, double a, double b, double& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    const double fc = f(c);
    fv[7] = fc;
    double resk = kGk15Weights[7] * fc;
    double resg = kG7Weights[3] * fc;
    double resabs = kGk15Weights[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kGk15Nodes[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += kGk15Weights[j] * (f1 + f2);
        resabs += kGk15Weights[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kG7Weights[j / 2] * (f1 + f2);
    }
    const double reskh = 0.5 * resk;
    double resasc = kGk15Weights[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kGk15Weights[j] *
                  (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
    }
    value = resk * h;
    resabs *= std::abs(h);
    resasc *= std::abs(h);
    err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    if (resabs > tiny / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
}

struct Segment {
    double a;
    double b;
    double value;
    double error;
    int depth;
    bool operator<(const Segment& other) const { return error < other.error; }
};

}  // namespace detail

// Globally adaptive: always split the segment with the largest error
// estimate, stop once the summed error meets the tolerance. Work is bounded
// by max_intervals, so non-integrable inputs fail fast instead of exploring
// an exponential bisection tree.
template <class F>
QuadratureResult integrate(F&& f, double a, double b,
                           const QuadratureOptions& opt = {}) {
    QuadratureResult out;
    if (a == b) return out;

    detail::Segment whole{a, b, 0.0, 0.0, 0};
    detail::gk15(f, a, b, whole.value, whole.error);
    out.evaluations = 15;

    double total_v = whole.value;
    double total_e = whole.error;
    auto tol = [&] {
        return std::max(opt.abs_tol, opt.rel_tol * std::abs(total_v));
    };
    if (total_e <= tol()) {
        out.value = total_v;
        out.error = total_e;
        return out;
    }

    std::priority_queue<detail::Segment> queue;
    queue.push(whole);
    int n_intervals = 1;
    while (total_e > tol() && n_intervals < opt.max_intervals &&
           !queue.empty()) {
        const detail::Segment worst = queue.top();
        queue.pop();
        const double c = 0.5 * (worst.a + worst.b);
        if (worst.depth >= opt.max_depth || c <= worst.a || c >= worst.b)
            continue;  // unrefinable; keep its contribution, split the rest
        detail::Segment left{worst.a, c, 0.0, 0.0, worst.depth + 1};
        detail::Segment right{c, worst.b, 0.0, 0.0, worst.depth + 1};
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);
        out.evaluations += 30;
        total_v += left.value + right.value - worst.value;
        total_e += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++n_intervals;
    }
    out.value = total_v;
    out.error = total_e;
    out.converged = total_e <= tol();
    return out;
}

// Integral of f over [a, b] with 0 < a < b, computed in u = ln k. Used
// whenever b/a is large enough that uniform bisection in k would waste its
// depth budget on the tail decades.
template <class F>
QuadratureResult integrate_log(F&& f, double a, double b,
                               const QuadratureOptions& opt = {}) {
    auto g = [&f](double u) {
        const double k = std::exp(u);
        return f(k) * k;
    };
    return integrate(g, std::log(a), std::log(b), opt);
}

}  // namespace netdicke
