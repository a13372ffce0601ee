#include "spgl/synth.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "spgl/operators.hpp"
#include "spgl/spectrum.hpp"

namespace spgl {

namespace {

// Contiguous near-equal partition: node i gets label floor(i*k/p).
int block_label(int i, int p, int k) {
  return static_cast<int>((static_cast<std::int64_t>(i) * k) / p);
}

// Visits every potential edge in canonical order; `keep` decides presence,
// retained edges draw one weight from [wmin, wmax].
template <typename KeepFn>
VectorXd draw_edges(int p, double wmin, double wmax, std::mt19937_64& rng, KeepFn keep) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(wmin, wmax);
  VectorXd w = VectorXd::Zero(edge_count(p));
  std::int64_t k = 0;
  for (int j = 0; j < p; ++j)
    for (int i = j + 1; i < p; ++i, ++k)
      if (keep(i, j, unit)) w(k) = weight(rng);
  return w;
}

}  // namespace

GroundTruth gen_grid(int side, double wmin, double wmax, std::uint64_t seed) {
  if (side < 2) throw std::invalid_argument("gen_grid: need side >= 2");
  const int p = side * side;
  std::mt19937_64 rng(seed);
  auto adjacent = [side](int a, int b) {
    const int ra = a / side, ca = a % side, rb = b / side, cb = b % side;
    return std::abs(ra - rb) + std::abs(ca - cb) == 1;
  };
  VectorXd w = draw_edges(p, wmin, wmax, rng, [&](int i, int j, auto&) { return adjacent(i, j); });
  std::ostringstream spec;
  spec << "grid(side=" << side << ",w=[" << wmin << "," << wmax << "],seed=" << seed << ")";
  return {lap_apply(p, w), std::vector<int>(p, 0), std::nullopt, spec.str()};
}

GroundTruth gen_modular(int p, int k, double p_in, double p_out, double wmin, double wmax,
                        std::uint64_t seed) {
  if (p < 2 || k < 1 || k > p) throw std::invalid_argument("gen_modular: bad p or k");
  std::mt19937_64 rng(seed);
  VectorXd w = draw_edges(p, wmin, wmax, rng, [&](int i, int j, auto& unit) {
    const double prob = block_label(i, p, k) == block_label(j, p, k) ? p_in : p_out;
    return unit(rng) < prob;
  });
  std::vector<int> labels(p);
  for (int i = 0; i < p; ++i) labels[i] = block_label(i, p, k);
  std::ostringstream spec;
  spec << "modular(p=" << p << ",k=" << k << ",p_in=" << p_in << ",p_out=" << p_out << ",w=["
       << wmin << "," << wmax << "],seed=" << seed << ")";
  return {lap_apply(p, w), labels, std::nullopt, spec.str()};
}

GroundTruth gen_multicomponent(int p, int k, double prob, double wmin, double wmax,
                               std::uint64_t seed) {
  if (p < 2 || k < 1 || k > p) throw std::invalid_argument("gen_multicomponent: bad p or k");
  std::mt19937_64 rng(seed);
  VectorXd w = draw_edges(p, wmin, wmax, rng, [&](int i, int j, auto& unit) {
    if (block_label(i, p, k) != block_label(j, p, k)) return false;
    return unit(rng) < prob;
  });
  std::vector<int> labels(p);
  for (int i = 0; i < p; ++i) labels[i] = block_label(i, p, k);
  std::ostringstream spec;
  spec << "multicomponent(p=" << p << ",k=" << k << ",prob=" << prob << ",w=[" << wmin << ","
       << wmax << "],seed=" << seed << ")";
  return {lap_apply(p, w), labels, std::nullopt, spec.str()};
}

GroundTruth gen_bipartite(int p1, int p2, double prob, double wmin, double wmax,
                          std::uint64_t seed) {
  if (p1 < 1 || p2 < 1) throw std::invalid_argument("gen_bipartite: need p1, p2 >= 1");
  const int p = p1 + p2;
  std::mt19937_64 rng(seed);
  VectorXd w = draw_edges(p, wmin, wmax, rng, [&](int i, int j, auto& unit) {
    const bool cross = (j < p1) != (i < p1);
    return cross && unit(rng) < prob;
  });
  std::vector<int> colors(p);
  for (int i = 0; i < p; ++i) colors[i] = i < p1 ? 0 : 1;
  std::ostringstream spec;
  spec << "bipartite(p1=" << p1 << ",p2=" << p2 << ",prob=" << prob << ",w=[" << wmin << ","
       << wmax << "],seed=" << seed << ")";
  return {lap_apply(p, w), std::vector<int>(p, 0), colors, spec.str()};
}

GroundTruth gen_er_noise(int p, double prob, double kappa, std::uint64_t seed) {
  if (p < 2) throw std::invalid_argument("gen_er_noise: need p >= 2");
  if (kappa < 0) throw std::invalid_argument("gen_er_noise: kappa must be >= 0");
  std::mt19937_64 rng(seed);
  VectorXd w =
      draw_edges(p, 0.0, kappa, rng, [&](int, int, auto& unit) { return unit(rng) < prob; });
  std::ostringstream spec;
  spec << "er(p=" << p << ",prob=" << prob << ",kappa=" << kappa << ",seed=" << seed << ")";
  return {lap_apply(p, w), std::vector<int>(p, 0), std::nullopt, spec.str()};
}

GroundTruth compose_noisy(const GroundTruth& truth, const GroundTruth& noise) {
  if (truth.theta.rows() != noise.theta.rows())
    throw std::invalid_argument("compose_noisy: size mismatch");
  GroundTruth out = truth;
  out.theta += noise.theta;
  out.generator_spec = truth.generator_spec + "+" + noise.generator_spec;
  return out;
}

GroundTruth disjoint_union(const std::vector<GroundTruth>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint_union: no parts");
  int p = 0;
  for (const auto& g : parts) p += static_cast<int>(g.theta.rows());
  GroundTruth out;
  out.theta = MatrixXd::Zero(p, p);
  out.component_labels.resize(p);
  bool all_bipartite = true;
  std::vector<int> colors(p, 0);
  int offset = 0, next_label = 0;
  std::ostringstream spec;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const auto& g = parts[t];
    const int q = static_cast<int>(g.theta.rows());
    out.theta.block(offset, offset, q, q) = g.theta;
    int max_label = 0;
    for (int i = 0; i < q; ++i) {
      out.component_labels[offset + i] = next_label + g.component_labels[i];
      max_label = std::max(max_label, g.component_labels[i]);
    }
    next_label += max_label + 1;
    if (g.bipartition)
      for (int i = 0; i < q; ++i) colors[offset + i] = (*g.bipartition)[i];
    else
      all_bipartite = false;
    spec << (t ? " u " : "") << g.generator_spec;
    offset += q;
  }
  if (all_bipartite) out.bipartition = colors;
  out.generator_spec = spec.str();
  return out;
}

MatrixXd sample_igmrf(const MatrixXd& theta, int n, std::uint64_t seed, double rank_tol) {
  if (n < 1) throw std::invalid_argument("sample_igmrf: need n >= 1");
  const int p = static_cast<int>(theta.rows());
  const SpectralPair ep = sym_eigen(theta);
  const double cut = rank_tol * ep.eigenvalues.cwiseAbs().maxCoeff();
  std::vector<int> keep;
  for (int i = 0; i < p; ++i)
    if (ep.eigenvalues(i) > cut) keep.push_back(i);
  const int r = static_cast<int>(keep.size());
  if (r == 0) throw std::invalid_argument("sample_igmrf: theta has no positive eigenvalues");
  // Factor B with B B^T = theta^+ restricted to the non-null eigenspace.
  MatrixXd B(p, r);
  for (int c = 0; c < r; ++c)
    B.col(c) = ep.eigenvectors.col(keep[c]) / std::sqrt(ep.eigenvalues(keep[c]));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixXd Z(n, r);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < r; ++c) Z(i, c) = gauss(rng);
  return Z * B.transpose();
}

MatrixXd scm(const MatrixXd& X) {
  const int n = static_cast<int>(X.rows());
  if (n < 1) throw std::invalid_argument("scm: need at least one sample");
  const Eigen::RowVectorXd mean = X.colwise().mean();
  const MatrixXd C = X.rowwise() - mean;
  return (C.transpose() * C) / n;
}

void write_edge_list(std::ostream& os, const MatrixXd& theta, double min_weight) {
  const int p = static_cast<int>(theta.rows());
  os << "i,j,weight\n";
  char buf[64];
  for (int j = 0; j < p; ++j)
    for (int i = j + 1; i < p; ++i) {
      const double w = -theta(i, j);
      if (w >= min_weight && w > 0.0) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.12g\n", j + 1, i + 1, w);
        os << buf;
      }
    }
}

}  // namespace spgl
