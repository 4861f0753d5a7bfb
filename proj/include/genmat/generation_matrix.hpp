#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "genmat/tree.hpp"

namespace genmat {

enum class EigenSide { left, right };

/// Sparse lower-triangular matrix representation of a weighted hierarchical
/// tree: node weight w_i on the diagonal, -w_{i->f_i} at (i, parent(i)), and
/// nothing else, for a total of 2n-1 nonzeros. Stored as the diagonal plus
/// one off-diagonal value per non-root row; the column pattern is the tree's
/// parent array. Immutable; all operations are pure.
class GenerationMatrix {
 public:
  /// All weights must be nonzero. node_w has n entries, edge_w has n-1
  /// (edge_w[i-1] belongs to node i's parent edge).
  static GenerationMatrix build(TreePtr tree, std::span<const double> node_w,
                                std::span<const double> edge_w);

  /// The structure matrix: all node and edge weights 1.
  static GenerationMatrix structure(TreePtr tree);

  int size() const { return static_cast<int>(diag_.size()); }
  const HierarchicalTree& tree() const { return *tree_; }
  const TreePtr& tree_ptr() const { return tree_; }

  double diag(int i) const { return diag_[i]; }
  /// The stored matrix entry (i, parent(i)) = -w_{i->f_i}, for i >= 1.
  double off(int i) const { return off_[i - 1]; }

  double node_weight(int i) const { return diag_[i]; }
  double edge_weight(int i) const { return -off_[i - 1]; }

  std::int64_t nonzero_count() const { return 2 * std::int64_t{size()} - 1; }

  /// Leading n_k-order principal minor; represents the k-order subtree.
  GenerationMatrix leading_submatrix(int k) const;

  struct DiagonalDecomposition {
    std::vector<double> alpha;
    std::vector<double> beta;
  };
  /// Vectors with diag(beta) * structure * diag(alpha) == this, computed in
  /// the log domain. Requires strictly positive weights.
  DiagonalDecomposition diagonal_decomposition() const;

  /// The eigenvalues are the diagonal (the node weights), in index order.
  std::vector<double> eigenvalues() const { return diag_; }

  /// Eigenvector for the i-th eigenvalue w_i, normalized to 1 at entry i.
  /// The left vector is supported on i and its ancestors and requires
  /// w_j != w_i for every ancestor j; the right vector is supported on i and
  /// its descendants and requires the same for every descendant. Violations
  /// throw EigenvectorNotGuaranteed.
  std::vector<double> eigenvector(int i, EigenSide side) const;

  /// Debug dump: one `row,col,value` line per nonzero, 1-based, sorted.
  void dump_triplets(std::ostream& out) const;

 private:
  GenerationMatrix(TreePtr tree, std::vector<double> diag,
                   std::vector<double> off);

  TreePtr tree_;
  std::vector<double> diag_;  // n entries
  std::vector<double> off_;   // n-1 entries, off_[i-1] = g(i, parent(i))
};

/// True iff the two matrices have equal dimension and identical nonzero
/// coordinate sets (same tree structure and arrangement).
bool is_similar(const GenerationMatrix& a, const GenerationMatrix& b);

}  // namespace genmat
