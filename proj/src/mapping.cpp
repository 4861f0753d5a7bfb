#include "genmat/mapping.hpp"

#include <vector>

#include "genmat/errors.hpp"

namespace genmat {

MappingMatrix::MappingMatrix(std::vector<int> map, int target_size)
    : map_(std::move(map)), target_size_(target_size) {
  if (target_size_ < 0 || static_cast<int>(map_.size()) > target_size_)
    throw InvalidParam("mapping larger than its target");
  std::vector<char> seen(static_cast<std::size_t>(target_size_), 0);
  for (int s : map_) {
    if (s < 0 || s >= target_size_) throw InvalidParam("mapping index out of range");
    if (seen[s]) throw InvalidParam("mapping indices must be distinct");
    seen[s] = 1;
  }
}

std::vector<double> MappingMatrix::forward(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != target_size_)
    throw DimensionMismatch("forward mapping expects a target-sized vector");
  std::vector<double> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) out[i] = v[map_[i]];
  return out;
}

std::vector<double> MappingMatrix::transpose(std::span<const double> v) const {
  if (v.size() != map_.size())
    throw DimensionMismatch("transpose mapping expects a source-sized vector");
  std::vector<double> out(static_cast<std::size_t>(target_size_), 0.0);
  for (std::size_t i = 0; i < map_.size(); ++i) out[map_[i]] = v[i];
  return out;
}

}  // namespace genmat
