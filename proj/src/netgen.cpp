#include "netdicke/netgen.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netdicke {

namespace {

void finalize_degrees(NetworkSample& s) {
    s.degree_seq.assign(s.n_nodes, 0);
    for (auto [u, v] : s.edges) {
        ++s.degree_seq[u];
        ++s.degree_seq[v];
    }
}

std::pair<int, int> ordered(int u, int v) {
    return u < v ? std::pair{u, v} : std::pair{v, u};
}

}  // namespace

NetworkSample generate_regular(long n, int k0, std::uint64_t seed) {
    if (k0 < 0 || k0 >= n)
        throw std::domain_error("regular graph requires 0 <= k0 < n");
    if ((n * k0) % 2 != 0)
        throw std::domain_error("regular graph requires n*k0 even");
    NetworkSample s;
    s.n_nodes = n;
    s.seed = seed;
    s.generator = "regular";
    if (k0 == n - 1) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) s.edges.emplace_back(u, v);
        finalize_degrees(s);
        return s;
    }
    PhiloxRng rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * k0);
    for (long i = 0; i < n; ++i)
        for (int j = 0; j < k0; ++j) stubs[i * k0 + j] = static_cast<int>(i);
    const int max_attempts = 20000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            const std::size_t j = rng.uniform_below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        std::set<std::pair<int, int>> seen;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            const auto e = ordered(stubs[i], stubs[i + 1]);
            if (e.first == e.second || !seen.insert(e).second) simple = false;
        }
        if (!simple) continue;
        s.edges.assign(seen.begin(), seen.end());
        finalize_degrees(s);
        return s;
    }
    throw std::runtime_error(
        "regular graph generation failed: no simple matching found");
}

NetworkSample generate_er(long n, double mean_k, std::uint64_t seed) {
    const double w = mean_k / static_cast<double>(n);
    if (!(w >= 0.0) || !(w < 1.0))
        throw std::domain_error("er graph requires mean_k/n in [0, 1)");
    NetworkSample s;
    s.n_nodes = n;
    s.seed = seed;
    s.generator = "er";
    PhiloxRng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform_double() < w) s.edges.emplace_back(u, v);
    finalize_degrees(s);
    return s;
}

NetworkSample generate_ba(long n, int m_links, std::uint64_t seed) {
    if (m_links < 1 || n <= m_links)
        throw std::domain_error("ba graph requires 1 <= m_links < n");
    NetworkSample s;
    s.n_nodes = n;
    s.seed = seed;
    s.generator = "ba";
    PhiloxRng rng(seed);
    std::vector<int> repeated;
    const int m0 = m_links + 1;
    for (int u = 0; u < m0; ++u) {
        for (int v = u + 1; v < m0; ++v) {
            s.edges.emplace_back(u, v);
            repeated.push_back(u);
            repeated.push_back(v);
        }
    }
    std::vector<int> targets;
    for (int t = m0; t < n; ++t) {
        targets.clear();
        while (static_cast<int>(targets.size()) < m_links) {
            const int pick =
                repeated[rng.uniform_below(repeated.size())];
            if (std::find(targets.begin(), targets.end(), pick) ==
                targets.end())
                targets.push_back(pick);
        }
        for (int v : targets) {
            s.edges.push_back(ordered(t, v));
            repeated.push_back(v);
            repeated.push_back(t);
        }
    }
    std::sort(s.edges.begin(), s.edges.end());
    finalize_degrees(s);
    return s;
}

AnnealedCouplings annealed_couplings(const std::vector<int>& degree_seq,
                                     double j) {
    const long n = static_cast<long>(degree_seq.size());
    if (n == 0) throw std::domain_error("empty degree sequence");
    double mean_k = 0.0;
    for (int k : degree_seq) mean_k += k;
    mean_k /= static_cast<double>(n);
    if (!(mean_k > 0.0))
        throw std::domain_error("degree sequence must have positive mean");
    AnnealedCouplings out;
    out.j_matrix = Eigen::MatrixXd::Zero(n, n);
    for (long a = 0; a < n; ++a) {
        for (long b = a + 1; b < n; ++b) {
            double p = degree_seq[a] * static_cast<double>(degree_seq[b]) /
                       (static_cast<double>(n) * mean_k);
            if (p > 1.0) {
                p = 1.0;
                ++out.clamped_pairs;
            }
            out.j_matrix(a, b) = out.j_matrix(b, a) = j * p;
        }
    }
    return out;
}

EmpiricalStats empirical_stats(const NetworkSample& sample) {
    if (sample.n_nodes <= 0) throw std::domain_error("empty sample");
    const long n = sample.n_nodes;
    double m1 = 0.0;
    double m2 = 0.0;
    for (int k : sample.degree_seq) {
        m1 += k;
        m2 += static_cast<double>(k) * k;
    }
    m1 /= static_cast<double>(n);
    m2 /= static_cast<double>(n);

    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : sample.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    double clustering = 0.0;
    for (long u = 0; u < n; ++u) {
        const auto& nb = adj[u];
        const std::size_t k = nb.size();
        if (k < 2) continue;
        long links = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (std::binary_search(adj[nb[a]].begin(), adj[nb[a]].end(),
                                       nb[b]))
                    ++links;
        clustering += 2.0 * static_cast<double>(links) /
                      (static_cast<double>(k) * (k - 1));
    }
    clustering /= static_cast<double>(n);
    return {{m1, m2, m2 / m1}, clustering};
}

void write_edge_list(std::ostream& out, const NetworkSample& sample) {
    out << "# generator " << sample.generator << "\n";
    out << "# n " << sample.n_nodes << "\n";
    out << "# seed " << sample.seed << "\n";
    for (auto [u, v] : sample.edges) out << u << " " << v << "\n";
}

NetworkSample read_edge_list(std::istream& in) {
    NetworkSample s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string key;
            hs >> key;
            if (key == "generator")
                hs >> s.generator;
            else if (key == "n")
                hs >> s.n_nodes;
            else if (key == "seed")
                hs >> s.seed;
            continue;
        }
        std::istringstream es(line);
        int u = 0;
        int v = 0;
        if (!(es >> u >> v))
            throw std::runtime_error("malformed edge list line: " + line);
        s.edges.emplace_back(u, v);
    }
    long max_node = -1;
    for (auto [u, v] : s.edges) max_node = std::max<long>(max_node, std::max(u, v));
    if (s.n_nodes <= max_node) s.n_nodes = max_node + 1;
    finalize_degrees(s);
    return s;
}

}  // namespace netdicke
