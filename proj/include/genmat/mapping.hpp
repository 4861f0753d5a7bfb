#pragma once

#include <span>
#include <vector>

namespace genmat {

/// 0/1 injection matrix H given by an ordered index set S = <s_1..s_m> with
/// distinct entries s_i in [0, n). Row i has its single 1 at column s_i, so
/// H H^T = I. Used for permutations and for the leaf-to-node map.
class MappingMatrix {
 public:
  MappingMatrix(std::vector<int> map, int target_size);

  int source_size() const { return static_cast<int>(map_.size()); }
  int target_size() const { return target_size_; }
  const std::vector<int>& indices() const { return map_; }
  int map_at(int i) const { return map_[i]; }

  /// H v: gather, out[i] = v[s_i]. v has target_size entries.
  std::vector<double> forward(std::span<const double> v) const;

  /// H^T v: scatter, out[s_i] = v[i], zero elsewhere. v has source_size entries.
  std::vector<double> transpose(std::span<const double> v) const;

 private:
  std::vector<int> map_;
  int target_size_;
};

}  // namespace genmat
