#pragma once

#include <span>
#include <string>

#include "genmat/dense.hpp"
#include "genmat/tree.hpp"

namespace genmat {

/// Dense reference path only; decompositions are capped, never the scale path.
inline constexpr int kLqrRowCap = 2000;

/// One Householder reflection referenced to the rows `selected` (0-based,
/// distinct) and column j: the result Y = Q M has
/// Y(selected[0], j) = sqrt(sum of squares of the selected column entries)
/// and Y(selected[i], j) = 0 for i >= 1, with Q orthogonal. A column that is
/// already aligned with +e1 leaves M unchanged (the reflection degenerates);
/// an all-zero selected column throws ZeroPivotColumn.
DenseRectMatrix householder_step(const DenseRectMatrix& m,
                                 std::span<const int> selected, int column);

/// Reduction to [L; O] form with L lower triangular: the i-th reflection
/// (1-based) acts on column c-i with row set <c-i, 0..c-i-1, c..rows-1>,
/// 0-based, where c = cols. (The classic upper-triangular reduction would
/// instead use rows <i-1..rows-1> on column i-1.) Requires full column rank;
/// rows above kLqrRowCap throw SizeCapExceeded.
DenseRectMatrix lo_qr(const DenseRectMatrix& m, int cap = kLqrRowCap);

/// Result of replaying the decomposition of a consistency constraint matrix
/// step by step and checking, after each of the first n1-1 reflections, that
/// (a) the upper block keeps the generation-matrix pattern of the 1-order
/// subtree, (b) every lower row has exactly one nonzero, and (c) the last k
/// lower-block columns are zero.
struct InvariantReport {
  bool pass = true;
  int failed_step = -1;        // 1-based reflection index
  char failed_property = ' ';  // 'a', 'b' or 'c'
  std::string detail;
};

InvariantReport check_invariants_under_reduction(const HierarchicalTree& tree,
                                                 int cap = kLqrRowCap);

}  // namespace genmat
