#include "genmat/release.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>

#include "genmat/errors.hpp"
#include "genmat/propagate.hpp"
#include "genmat/rng.hpp"

namespace genmat {

ConstraintMatrix::ConstraintMatrix(TreePtr tree) : tree_(std::move(tree)) {}

std::vector<double> ConstraintMatrix::apply(std::span<const double> y) const {
  const int n = rows(), n1 = cols();
  if (static_cast<int>(y.size()) != n1)
    throw DimensionMismatch("expected one value per internal node");
  std::vector<double> out(n, 0.0);
  for (int j = 0; j < n1; ++j) out[j] = y[j];
  for (int i = 1; i < n; ++i) out[i] -= y[tree_->parent(i)];
  return out;
}

std::vector<double> ConstraintMatrix::apply_transpose(
    std::span<const double> v) const {
  const int n = rows(), n1 = cols();
  if (static_cast<int>(v.size()) != n)
    throw DimensionMismatch("expected one value per node");
  std::vector<double> out(v.begin(), v.begin() + n1);
  for (int i = 1; i < n; ++i) out[tree_->parent(i)] -= v[i];
  return out;
}

DenseRectMatrix ConstraintMatrix::dense() const {
  const int n = rows(), n1 = cols();
  DenseRectMatrix m = DenseRectMatrix::zero(n, n1);
  for (int j = 0; j < n1; ++j) m.at(j, j) = 1.0;
  for (int i = 1; i < n; ++i) m.at(i, tree_->parent(i)) = -1.0;
  return m;
}

EquivalentGm construct_equivalent_gm(TreePtr tree) {
  EquivalentGm eq;
  eq.full_tree = tree;
  const int n = tree->node_count();
  const int n1 = tree->internal_count();
  if (n1 == 0) return eq;  // single node: the release is the identity

  std::vector<double> theta(n1, 0.0);
  for (int i = 1; i < n; ++i) theta[tree->parent(i)] += 1.0;  // |C_i|
  for (int i = n1 - 1; i >= 1; --i)
    theta[tree->parent(i)] -= 1.0 / (1.0 + theta[i]);

  std::vector<double> node_w(n1), edge_w(n1 > 0 ? n1 - 1 : 0);
  for (int i = 0; i < n1; ++i) node_w[i] = std::sqrt(1.0 + theta[i]);
  for (int i = 1; i < n1; ++i) edge_w[i - 1] = 1.0 / node_w[i];

  TreePtr inner = k_order_subtree(*tree, 1);
  eq.gm = GenerationMatrix::build(inner, node_w, edge_w);

  std::vector<double> node_prime(n1);
  for (int i = 0; i < n1; ++i) node_prime[i] = theta[i] + 1.0;
  eq.gm_nosqrt = GenerationMatrix::build(
      std::move(inner), node_prime, std::vector<double>(n1 > 0 ? n1 - 1 : 0, 1.0));
  eq.theta = std::move(theta);
  return eq;
}

std::vector<double> build_tree_values(std::span<const double> x,
                                      const HierarchicalTree& tree) {
  const int n = tree.node_count();
  const int n1 = tree.internal_count();
  if (static_cast<int>(x.size()) != tree.leaf_count())
    throw DimensionMismatch("expected one count per leaf");
  // G^{-T} H^T x: scatter onto the contiguous leaf tail, aggregate upward.
  std::vector<double> v(n, 0.0);
  std::copy(x.begin(), x.end(), v.begin() + n1);
  for (int i = n - 1; i >= 1; --i) v[tree.parent(i)] += v[i];
  return v;
}

std::vector<double> inverse_build(std::span<const double> v,
                                  const HierarchicalTree& tree) {
  if (static_cast<int>(v.size()) != tree.node_count())
    throw DimensionMismatch("expected one value per node");
  return {v.begin() + tree.internal_count(), v.end()};
}

double noise_scale(const HierarchicalTree& tree, double epsilon) {
  if (!(epsilon > 0.0))
    throw NonPositiveEpsilon("privacy budget must be positive");
  return tree.height() / epsilon;
}

std::vector<double> add_laplace_noise(std::span<const double> v, double epsilon,
                                      const HierarchicalTree& tree,
                                      std::uint64_t seed) {
  if (static_cast<int>(v.size()) != tree.node_count())
    throw DimensionMismatch("expected one value per node");
  const double b = noise_scale(tree, epsilon);
  Rng rng(seed);
  std::vector<double> noisy(v.begin(), v.end());
  for (double& value : noisy) value += rng.laplace(b);
  return noisy;
}

namespace {

std::vector<double> projected_correction(const EquivalentGm& eq,
                                         std::span<const double> v_noisy,
                                         bool use_nosqrt) {
  const ConstraintMatrix constraint(eq.full_tree);
  std::vector<double> y = constraint.apply_transpose(v_noisy);
  if (use_nosqrt) {
    y = solve_upward(*eq.gm_nosqrt, y);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= eq.theta[i] + 1.0;
    y = solve_downward(*eq.gm_nosqrt, y);
  } else {
    y = solve_downward(*eq.gm, solve_upward(*eq.gm, y));
  }
  return constraint.apply(y);
}

std::vector<double> release_with(const EquivalentGm& eq,
                                 std::span<const double> v_noisy,
                                 bool use_nosqrt) {
  if (!eq.full_tree) throw InvalidParam("equivalent matrix has no tree");
  if (static_cast<int>(v_noisy.size()) != eq.full_tree->node_count())
    throw DimensionMismatch("expected one value per node");
  std::vector<double> out(v_noisy.begin(), v_noisy.end());
  if (!eq.gm) return out;  // n1 = 0
  const std::vector<double> corr = projected_correction(eq, v_noisy, use_nosqrt);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= corr[i];
  return out;
}

}  // namespace

std::vector<double> gmc_release(const EquivalentGm& eq,
                                std::span<const double> v_noisy) {
  return release_with(eq, v_noisy, false);
}

std::vector<double> gmc_release_nosqrt(const EquivalentGm& eq,
                                       std::span<const double> v_noisy) {
  return release_with(eq, v_noisy, true);
}

std::vector<double> dense_oracle_release(const HierarchicalTree& tree,
                                         std::span<const double> v_noisy,
                                         int cap) {
  const int n = tree.node_count();
  const int n1 = tree.internal_count();
  if (n > cap)
    throw SizeCapExceeded("dense oracle capped at " + std::to_string(cap) +
                          " nodes");
  if (static_cast<int>(v_noisy.size()) != n)
    throw DimensionMismatch("expected one value per node");
  std::vector<double> out(v_noisy.begin(), v_noisy.end());
  if (n1 == 0) return out;

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n1);
  for (int j = 0; j < n1; ++j) m(j, j) = 1.0;
  for (int i = 1; i < n; ++i) m(i, tree.parent(i)) = -1.0;
  Eigen::Map<const Eigen::VectorXd> v(v_noisy.data(), n);
  Eigen::VectorXd y = (m.transpose() * m).ldlt().solve(m.transpose() * v);
  Eigen::VectorXd result = v - m * y;
  std::copy(result.data(), result.data() + n, out.begin());
  return out;
}

double metric_rmse_nq(std::span<const double> v_out,
                      std::span<const double> v_true) {
  if (v_out.size() != v_true.size())
    throw DimensionMismatch("vectors differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < v_out.size(); ++i) {
    const double d = v_out[i] - v_true[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(v_out.size()));
}

double metric_rmse_rq(std::span<const double> x_out,
                      std::span<const double> x_true, std::int64_t q,
                      std::uint64_t range_seed) {
  const std::int64_t m = static_cast<std::int64_t>(x_out.size());
  if (x_out.size() != x_true.size())
    throw DimensionMismatch("vectors differ in length");
  if (m < 2) throw InvalidParam("range queries need at least two unit counts");
  const std::int64_t total = m * (m - 1) / 2;
  if (q < 1) throw InvalidParam("need at least one range query");
  if (q > total)
    throw QTooLarge("only " + std::to_string(total) + " distinct ranges exist");

  // Prefix sums of the error vector: a range-sum error is one difference.
  std::vector<double> err_prefix(m + 1, 0.0);
  for (std::int64_t i = 0; i < m; ++i)
    err_prefix[i + 1] = err_prefix[i] + (x_out[i] - x_true[i]);

  Rng rng(range_seed);
  double sum = 0.0;
  auto add_range = [&](std::int64_t a, std::int64_t b) {  // 0-based, inclusive
    const double d = err_prefix[b + 1] - err_prefix[a];
    sum += d * d;
  };
  if (q * 4 >= total) {
    // Dense sampling: enumerate all ranges, shuffle, take the first q.
    std::vector<std::pair<int, int>> ranges;
    ranges.reserve(static_cast<std::size_t>(total));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) ranges.emplace_back(a, b);
    for (std::size_t i = ranges.size(); i > 1; --i)
      std::swap(ranges[i - 1], ranges[rng.next_u64() % i]);
    for (std::int64_t i = 0; i < q; ++i) add_range(ranges[i].first, ranges[i].second);
  } else {
    std::unordered_set<std::int64_t> seen;
    seen.reserve(static_cast<std::size_t>(q) * 2);
    while (static_cast<std::int64_t>(seen.size()) < q) {
      const std::int64_t a = static_cast<std::int64_t>(rng.next_u64() % m);
      const std::int64_t b = static_cast<std::int64_t>(rng.next_u64() % m);
      if (a == b) continue;
      const std::int64_t lo = std::min(a, b), hi = std::max(a, b);
      if (seen.insert(lo * m + hi).second) add_range(lo, hi);
    }
  }
  return std::sqrt(sum / static_cast<double>(q));
}

double metric_bias(std::span<const double> v_out, const HierarchicalTree& tree) {
  const int n = tree.node_count();
  const int n1 = tree.internal_count();
  if (static_cast<int>(v_out.size()) != n)
    throw DimensionMismatch("expected one value per node");
  if (n1 == 0) return 0.0;
  std::vector<double> delta(v_out.begin(), v_out.begin() + n1);
  for (int i = 1; i < n; ++i) delta[tree.parent(i)] -= v_out[i];
  double sum = 0.0;
  for (double d : delta) sum += d * d;
  return std::sqrt(sum / static_cast<double>(n1));
}

TheoreticalMse theoretical_mse(const HierarchicalTree& tree, double epsilon) {
  if (!(epsilon > 0.0))
    throw NonPositiveEpsilon("privacy budget must be positive");
  const double h = tree.height();
  const double factor = 2.0 * h * h / (epsilon * epsilon);
  return TheoreticalMse{factor * tree.node_count(), factor * tree.leaf_count()};
}

ReleaseReport run_release(const EquivalentGm& eq, std::span<const double> counts,
                          double epsilon, std::uint64_t seed, bool use_nosqrt) {
  if (!eq.full_tree) throw InvalidParam("equivalent matrix has no tree");
  const HierarchicalTree& tree = *eq.full_tree;
  ReleaseReport report;
  report.epsilon = epsilon;
  report.sensitivity = tree.height();
  report.seed = seed;
  report.v_true = build_tree_values(counts, tree);
  report.v_noisy = add_laplace_noise(report.v_true, epsilon, tree, seed);
  report.v_consistent = use_nosqrt ? gmc_release_nosqrt(eq, report.v_noisy)
                                   : gmc_release(eq, report.v_noisy);
  report.rmse_nq = metric_rmse_nq(report.v_consistent, report.v_true);
  report.bias = metric_bias(report.v_consistent, tree);
  const TheoreticalMse mse = theoretical_mse(tree, epsilon);
  report.mse_theory_noisy = mse.noisy;
  report.mse_theory_consistent = mse.consistent;
  return report;
}

}  // namespace genmat
