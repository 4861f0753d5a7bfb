#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genmat/dense.hpp"
#include "genmat/generation_matrix.hpp"
#include "genmat/tree.hpp"

namespace genmat {

/// The n x n1 consistency constraint matrix M of a tree: column j has +1 at
/// row j and -1 at the rows of j's children, so M^T v = 0 exactly when every
/// internal node's value equals the sum of its children's. Held in implicit
/// form; products cost O(n) and O(n) memory. n1 = 0 (single node) gives the
/// empty matrix.
class ConstraintMatrix {
 public:
  explicit ConstraintMatrix(TreePtr tree);

  int rows() const { return tree_->node_count(); }
  int cols() const { return tree_->internal_count(); }
  const HierarchicalTree& tree() const { return *tree_; }

  std::vector<double> apply(std::span<const double> y) const;            // M y
  std::vector<double> apply_transpose(std::span<const double> v) const;  // M^T v

  DenseRectMatrix dense() const;

 private:
  TreePtr tree_;
};

/// The n1 x n1 generation matrix inner-product-equivalent to the constraint
/// matrix (G^T G = M^T M), with node weights sqrt(1 + theta_i) and edge
/// weights their reciprocals, plus the square-root-free companion carrying
/// node weights theta_i + 1 and unit edges. Construct once per tree
/// structure and reuse across releases. Empty (nullopt) when n1 = 0.
struct EquivalentGm {
  TreePtr full_tree;
  std::optional<GenerationMatrix> gm;         // weights sqrt(1 + theta)
  std::optional<GenerationMatrix> gm_nosqrt;  // weights theta + 1, unit edges
  std::vector<double> theta;                  // n1 entries
};

/// One descending sweep of the children-count recursion
/// theta_i = |C_i| - sum over internal children j of (1 + theta_j)^{-1}.
EquivalentGm construct_equivalent_gm(TreePtr tree);

/// v = G^{-T} H^T x: scatter the m unit counts onto the leaves and aggregate
/// upward, so every internal node carries its descendant-leaf sum.
std::vector<double> build_tree_values(std::span<const double> x,
                                      const HierarchicalTree& tree);

/// x = H v: gather the leaf values back out.
std::vector<double> inverse_build(std::span<const double> v,
                                  const HierarchicalTree& tree);

/// The per-node Laplace scale h / epsilon (sensitivity = tree height).
double noise_scale(const HierarchicalTree& tree, double epsilon);

/// v + xi with xi_i i.i.d. Laplace(h / epsilon), drawn by inverse CDF from
/// the seeded generator. Identical inputs and seed give identical output.
std::vector<double> add_laplace_noise(std::span<const double> v,
                                      double epsilon,
                                      const HierarchicalTree& tree,
                                      std::uint64_t seed);

/// Optimally consistent release: v_out = v - M (G^{-1} (G^{-T} (M^T v))),
/// evaluated right to left with sparse products and triangular solves; O(n).
std::vector<double> gmc_release(const EquivalentGm& eq,
                                std::span<const double> v_noisy);

/// Square-root-free variant: same projection through the companion matrix
/// and an elementwise scaling by theta + 1; agrees with gmc_release.
std::vector<double> gmc_release_nosqrt(const EquivalentGm& eq,
                                       std::span<const double> v_noisy);

inline constexpr int kDenseOracleCap = 2000;

/// Reference answer: v_out = v - M (M^T M)^{-1} M^T v solved densely via the
/// normal equations. Throws SizeCapExceeded above the cap.
std::vector<double> dense_oracle_release(const HierarchicalTree& tree,
                                         std::span<const double> v_noisy,
                                         int cap = kDenseOracleCap);

/// Root mean square error over all node values.
double metric_rmse_nq(std::span<const double> v_out,
                      std::span<const double> v_true);

/// RMSE of q random range sums over the unit counts. Ranges [a, b] with
/// a < b are sampled uniformly without repetition from the seeded generator;
/// q may not exceed the m-choose-2 total.
double metric_rmse_rq(std::span<const double> x_out,
                      std::span<const double> x_true, std::int64_t q,
                      std::uint64_t range_seed);

/// Root mean square of the constraint residual M^T v over internal nodes;
/// 0 for a single-node tree.
double metric_bias(std::span<const double> v_out,
                   const HierarchicalTree& tree);

struct TheoreticalMse {
  double noisy;       // 2 n h^2 / eps^2
  double consistent;  // 2 m h^2 / eps^2
};
TheoreticalMse theoretical_mse(const HierarchicalTree& tree, double epsilon);

/// Everything one release produces: inputs, the three value vectors, and the
/// error metrics.
struct ReleaseReport {
  double epsilon = 0.0;
  int sensitivity = 0;  // tree height
  std::uint64_t seed = 0;
  std::vector<double> v_true;
  std::vector<double> v_noisy;
  std::vector<double> v_consistent;
  double rmse_nq = 0.0;
  std::optional<double> rmse_rq;
  double bias = 0.0;
  double mse_theory_noisy = 0.0;
  double mse_theory_consistent = 0.0;
};

/// The full pipeline: build values from counts, add noise, post-process with
/// the equivalent matrix (square-root-free when requested), fill metrics.
ReleaseReport run_release(const EquivalentGm& eq, std::span<const double> counts,
                          double epsilon, std::uint64_t seed,
                          bool use_nosqrt = false);

}  // namespace genmat
