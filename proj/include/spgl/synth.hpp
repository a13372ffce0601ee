// Ground-truth graph generators, improper-GMRF sampling, and sample
// covariance construction for the benchmark harness.
//
// All generators are deterministic in their seed: potential edges are
// visited in the canonical edge order (see operators.hpp) and consume one
// presence draw plus, when retained, one weight draw.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace spgl {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct GroundTruth {
  MatrixXd theta;                            // Laplacian of the generated graph
  std::vector<int> component_labels;         // intended component per node
  std::optional<std::vector<int>> bipartition;  // 0/1 coloring when bipartite
  std::string generator_spec;                // provenance string
};

/// side x side lattice, every node joined to its 4 nearest neighbors,
/// weights uniform in [wmin, wmax].
GroundTruth gen_grid(int side, double wmin, double wmax, std::uint64_t seed);

/// Stochastic block model with k contiguous equal-size modules; edge
/// probability p_in within a module and p_out across modules.
GroundTruth gen_modular(int p, int k, double p_in, double p_out, double wmin, double wmax,
                        std::uint64_t seed);

/// k disjoint components; inside a component any pair is joined with
/// probability prob, across components never.
GroundTruth gen_multicomponent(int p, int k, double prob, double wmin, double wmax,
                               std::uint64_t seed);

/// Bipartite graph with parts of size p1 and p2; cross edges with
/// probability prob, none inside a part.
GroundTruth gen_bipartite(int p1, int p2, double prob, double wmin, double wmax,
                          std::uint64_t seed);

/// Erdos-Renyi noise graph, weights uniform in [0, kappa].
GroundTruth gen_er_noise(int p, double prob, double kappa, std::uint64_t seed);

/// Laplacian sum theta_noisy = theta_true + theta_noise; labels and
/// bipartition are kept from `truth`.
GroundTruth compose_noisy(const GroundTruth& truth, const GroundTruth& noise);

/// Block-diagonal union of parts (used for multi-component bipartite
/// composites); component labels are re-numbered part by part.
GroundTruth disjoint_union(const std::vector<GroundTruth>& parts);

/// n samples of the improper GMRF x ~ N(0, theta^+), one row per sample:
/// x = U+ diag(lambda+^{-1/2}) z over the non-null eigenspace of theta.
MatrixXd sample_igmrf(const MatrixXd& theta, int n, std::uint64_t seed,
                      double rank_tol = 1e-9);

/// Mean-centered sample covariance (1/n) sum (x - xbar)(x - xbar)^T.
MatrixXd scm(const MatrixXd& X);

/// CSV edge list "i,j,weight" (1-based, header included) for all edges of a
/// Laplacian with weight -theta_ij >= min_weight.
void write_edge_list(std::ostream& os, const MatrixXd& theta, double min_weight = 0.0);

}  // namespace spgl
