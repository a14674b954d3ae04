#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "netdicke/degree_dist.hpp"
#include "netdicke/rng.hpp"

namespace netdicke {

struct NetworkSample {
    long n_nodes = 0;
    std::vector<std::pair<int, int>> edges;  // unordered pairs, u < v
    std::vector<int> degree_seq;
    std::uint64_t seed = 0;
    std::string generator;
};

// Configuration-model regular graph: pair k0 stubs per node uniformly and
// reject the whole matching on any loop or duplicate edge. k0 = n-1 is the
// complete graph, built directly (rejection would essentially never hit the
// unique simple matching).
NetworkSample generate_regular(long n, int k0, std::uint64_t seed);

// Erdos-Renyi: each pair linked independently with w = mean_k/n.
NetworkSample generate_er(long n, double mean_k, std::uint64_t seed);

// Barabasi-Albert preferential attachment via the repeated-node list;
// seed graph is complete on m_links+1 nodes, then each new node attaches
// to m_links distinct targets.
NetworkSample generate_ba(long n, int m_links, std::uint64_t seed);

struct AnnealedCouplings {
    Eigen::MatrixXd j_matrix;
    int clamped_pairs = 0;  // pairs where k_i k_j/(N<k>) exceeded 1
};

// J_ij = J * min(1, k_i k_j/(N<k>)) with the empirical mean degree; zero
// diagonal. Clamping only triggers in the anomalous hub regime and is
// reported rather than treated as an error.
AnnealedCouplings annealed_couplings(const std::vector<int>& degree_seq,
                                     double j);

struct EmpiricalStats {
    DegreeStats degree;
    double clustering;  // mean local clustering, degree < 2 counts as 0
};

EmpiricalStats empirical_stats(const NetworkSample& sample);

// Plain text edge list, one "u v" per line, 0-indexed, '#' header lines
// carrying generator, n, seed (and nothing volatile, so output is
// byte-stable for a given seed).
void write_edge_list(std::ostream& out, const NetworkSample& sample);
NetworkSample read_edge_list(std::istream& in);

}  // namespace netdicke
