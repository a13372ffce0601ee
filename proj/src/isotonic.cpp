#include "spgl/isotonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace spgl {

namespace {

// Root of -1/x + beta (x - m) = 0, i.e. (m + sqrt(m^2 + 4/beta)) / 2,
// evaluated without cancellation for m < 0.
double log_block_value(double m, double beta) {
  const double c = 4.0 / beta;
  const double s = std::sqrt(m * m + c);
  return m >= 0.0 ? 0.5 * (m + s) : (0.5 * c) / (s - m);
}

struct Block {
  double sum;  // sum of targets pooled into this block
  int n;       // pooled element count
  double val;  // current block value
};

VectorXd expand(const std::vector<Block>& blocks, Eigen::Index q) {
  VectorXd out(q);
  Eigen::Index at = 0;
  for (const Block& b : blocks)
    for (int r = 0; r < b.n; ++r) out(at++) = b.val;
  return out;
}

void check_box(const OrderedBox& box, const char* who) {
  if (!(box.c1 > 0.0) || !(box.c1 <= box.c2))
    throw std::invalid_argument(std::string(who) + ": box must satisfy 0 < c1 <= c2");
}

}  // namespace

IsotonicResult reg_isotonic_traced(const VectorXd& d, double beta, const OrderedBox& box) {
  if (!(beta > 0.0)) throw std::invalid_argument("reg_isotonic: beta must be > 0");
  check_box(box, "reg_isotonic");
  const Eigen::Index q = d.size();
  if (q < 1) throw std::invalid_argument("reg_isotonic: empty input");

  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(q));
  for (Eigen::Index i = 0; i < q; ++i) blocks.push_back({d(i), 1, log_block_value(d(i), beta)});

  // Pool adjacent violating runs until the block values are non-decreasing.
  // Every sweep that finds a violation removes at least one block, so the
  // loop ends after at most q+1 sweeps.
  int sweeps = 0;
  for (;;) {
    ++sweeps;
    bool merged = false;
    std::vector<Block> next;
    next.reserve(blocks.size());
    for (const Block& b : blocks) {
      Block cur = b;
      while (!next.empty() && next.back().val > cur.val) {
        cur.sum += next.back().sum;
        cur.n += next.back().n;
        cur.val = log_block_value(cur.sum / cur.n, beta);
        next.pop_back();
        merged = true;
      }
      next.push_back(cur);
    }
    blocks.swap(next);
    if (!merged) break;
  }

  // Bound clamping; clipping a non-decreasing sequence keeps it ordered.
  for (Block& b : blocks) b.val = std::clamp(b.val, box.c1, box.c2);

  return {expand(blocks, q), sweeps};
}

VectorXd reg_isotonic(const VectorXd& d, double beta, const OrderedBox& box) {
  return reg_isotonic_traced(d, beta, box).values;
}

VectorXd isotonic_ls(const VectorXd& targets, double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("isotonic_ls: need lo <= hi");
  const Eigen::Index q = targets.size();
  if (q == 0) return VectorXd();
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(q));
  for (Eigen::Index i = 0; i < q; ++i) {
    Block cur{targets(i), 1, targets(i)};
    while (!blocks.empty() && blocks.back().val > cur.val) {
      cur.sum += blocks.back().sum;
      cur.n += blocks.back().n;
      cur.val = cur.sum / cur.n;
      blocks.pop_back();
    }
    blocks.push_back(cur);
  }
  for (Block& b : blocks) b.val = std::clamp(b.val, lo, hi);
  return expand(blocks, q);
}

VectorXd sym_isotonic_psi(const VectorXd& e, const PsiBox& box) {
  const Eigen::Index b = e.size();
  if (b % 2 != 0)
    throw std::invalid_argument("sym_isotonic_psi: length must be even (strip zero eigenvalues first)");
  if (!(box.lower >= 0.0) || !(box.upper >= box.lower))
    throw std::invalid_argument("sym_isotonic_psi: box must satisfy upper >= lower >= 0");
  const Eigen::Index h = b / 2;
  // Anti-symmetrized half targets; the constraint x_{b+1-i} = -x_i turns the
  // full least squares into a fit of (e_i - e_{b+1-i})/2 on the first half.
  VectorXd t(h);
  for (Eigen::Index i = 0; i < h; ++i) t(i) = 0.5 * (e(i) - e(b - 1 - i));
  // The half chain is descending; solve the reversed ascending problem.
  VectorXd rev(h);
  for (Eigen::Index i = 0; i < h; ++i) rev(i) = t(h - 1 - i);
  const VectorXd fit = isotonic_ls(rev, box.lower, box.upper);
  VectorXd out(b);
  for (Eigen::Index i = 0; i < h; ++i) {
    out(i) = fit(h - 1 - i);
    out(b - 1 - i) = -out(i);
  }
  return out;
}

VectorXd oracle_solve(const VectorXd& d, double beta, const OrderedBox& box, bool with_log_term) {
  if (!(beta > 0.0)) throw std::invalid_argument("oracle_solve: beta must be > 0");
  check_box(box, "oracle_solve");
  const int q = static_cast<int>(d.size());
  if (q < 1) throw std::invalid_argument("oracle_solve: empty input");
  if (q > 16) throw std::invalid_argument("oracle_solve: enumeration limited to q <= 16");

  // Block value by bisection on the stationarity condition of the pooled
  // 1-D problem, then clipped to the box.
  auto block_value = [&](double mean) {
    if (!with_log_term) return std::clamp(mean, box.c1, box.c2);
    auto g = [&](double x) { return -1.0 / x + beta * (x - mean); };
    double lo = 1e-18;
    double hi = std::max({1.0, mean}) + 2.0 / std::sqrt(beta) + 1.0;
    while (g(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return std::clamp(0.5 * (lo + hi), box.c1, box.c2);
  };

  auto objective = [&](const VectorXd& x) {
    double f = 0.0;
    for (int i = 0; i < q; ++i) {
      if (with_log_term) f -= std::log(x(i));
      const double r = x(i) - d(i);
      f += 0.5 * beta * r * r;
    }
    return f;
  };

  double best_obj = std::numeric_limits<double>::infinity();
  VectorXd best = VectorXd::Constant(q, box.c1);
  const unsigned partitions = 1u << (q - 1);
  VectorXd cand(q);
  for (unsigned mask = 0; mask < partitions; ++mask) {
    // Bit i set means a block boundary between positions i and i+1.
    int start = 0;
    double prev = -std::numeric_limits<double>::infinity();
    bool feasible = true;
    for (int i = 0; i < q; ++i) {
      const bool boundary = (i == q - 1) || (mask & (1u << i));
      if (!boundary) continue;
      double mean = 0.0;
      for (int j = start; j <= i; ++j) mean += d(j);
      mean /= (i - start + 1);
      const double v = block_value(mean);
      if (v < prev - 1e-12) {
        feasible = false;
        break;
      }
      for (int j = start; j <= i; ++j) cand(j) = v;
      prev = v;
      start = i + 1;
    }
    if (!feasible) continue;
    const double obj = objective(cand);
    if (obj < best_obj) {
      best_obj = obj;
      best = cand;
    }
  }
  return best;
}

}  // namespace spgl
