#include "genmat/generation_matrix.hpp"

#include <cmath>
#include <ostream>
#include <utility>

#include "genmat/errors.hpp"
#include "genmat/propagate.hpp"

namespace genmat {

GenerationMatrix::GenerationMatrix(TreePtr tree, std::vector<double> diag,
                                   std::vector<double> off)
    : tree_(std::move(tree)), diag_(std::move(diag)), off_(std::move(off)) {}

GenerationMatrix GenerationMatrix::build(TreePtr tree,
                                         std::span<const double> node_w,
                                         std::span<const double> edge_w) {
  const int n = tree->node_count();
  if (static_cast<int>(node_w.size()) != n ||
      static_cast<int>(edge_w.size()) != n - 1)
    throw DimensionMismatch("weight vectors must have n and n-1 entries");
  for (double w : node_w)
    if (w == 0.0) throw ZeroWeight("node weights must be nonzero");
  for (double w : edge_w)
    if (w == 0.0) throw ZeroWeight("edge weights must be nonzero");

  std::vector<double> diag(node_w.begin(), node_w.end());
  std::vector<double> off(edge_w.size());
  for (std::size_t i = 0; i < off.size(); ++i) off[i] = -edge_w[i];
  return GenerationMatrix(std::move(tree), std::move(diag), std::move(off));
}

GenerationMatrix GenerationMatrix::structure(TreePtr tree) {
  const int n = tree->node_count();
  return GenerationMatrix(std::move(tree), std::vector<double>(n, 1.0),
                          std::vector<double>(n - 1, -1.0));
}

GenerationMatrix GenerationMatrix::leading_submatrix(int k) const {
  if (k == 0) return *this;
  TreePtr sub = k_order_subtree(*tree_, k);  // throws KTooLarge
  const int nk = sub->node_count();
  return GenerationMatrix(
      std::move(sub), std::vector<double>(diag_.begin(), diag_.begin() + nk),
      std::vector<double>(off_.begin(), off_.begin() + (nk - 1)));
}

GenerationMatrix::DiagonalDecomposition
GenerationMatrix::diagonal_decomposition() const {
  const int n = size();
  std::vector<double> rhs(n);
  for (int i = 0; i < n; ++i) {
    const double wn = diag_[i];
    const double we = i == 0 ? 1.0 : -off_[i - 1];  // root edge sentinel = 1
    if (wn <= 0.0 || we <= 0.0)
      throw NonPositiveWeight("decomposition needs strictly positive weights");
    rhs[i] = std::log(wn) - std::log(we);
  }
  // alpha = exp(G^{-1} rhs) over the structure matrix; the downward solve
  // with unit weights is a plain prefix sum along parent chains.
  std::vector<double> alpha = solve_downward(structure(tree_), rhs);
  std::vector<double> beta(n);
  for (int i = 0; i < n; ++i) {
    alpha[i] = std::exp(alpha[i]);
    beta[i] = diag_[i] / alpha[i];
  }
  return DiagonalDecomposition{std::move(alpha), std::move(beta)};
}

std::vector<double> GenerationMatrix::eigenvector(int i, EigenSide side) const {
  const int n = size();
  if (i < 0 || i >= n) throw InvalidParam("eigenvalue index out of range");
  const auto& tree = *tree_;
  std::vector<double> vec(n, 0.0);
  vec[i] = 1.0;
  const double wi = diag_[i];

  if (side == EigenSide::left) {
    // Supported on i and its ancestors; walk the parent chain upward.
    int child = i;
    while (tree.parent(child) >= 0) {
      const int j = tree.parent(child);
      if (diag_[j] == wi)
        throw EigenvectorNotGuaranteed("ancestor shares the node weight");
      vec[j] = -off_[child - 1] * vec[child] / (diag_[j] - wi);
      child = j;
    }
    return vec;
  }

  // Right side: supported on descendants; an ascending sweep sees every
  // parent first, and a nonzero parent entry marks membership.
  for (int j = i + 1; j < n; ++j) {
    const int fj = tree.parent(j);
    if (fj < i || vec[fj] == 0.0) continue;
    if (diag_[j] == wi)
      throw EigenvectorNotGuaranteed("descendant shares the node weight");
    vec[j] = -off_[j - 1] * vec[fj] / (diag_[j] - wi);
  }
  return vec;
}

void GenerationMatrix::dump_triplets(std::ostream& out) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (i > 0)
      out << i + 1 << ',' << tree_->parent(i) + 1 << ',' << off_[i - 1] << '\n';
    out << i + 1 << ',' << i + 1 << ',' << diag_[i] << '\n';
  }
}

bool is_similar(const GenerationMatrix& a, const GenerationMatrix& b) {
  if (a.size() != b.size()) return false;
  return a.tree().parents() == b.tree().parents();
}

}  // namespace genmat
