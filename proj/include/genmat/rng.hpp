#pragma once

#include <cstdint>
#include <random>

namespace genmat {

/// Deterministic 64-bit generator with the samplers the release pipeline and
/// data generators need. Distribution transforms are implemented here (not
/// via std:: distributions) so identical seeds give identical streams on any
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in the open interval (0, 1).
  double next_unit();

  /// Symmetric uniform in (-1/2, 1/2).
  double next_symmetric();

  /// Laplace with the given scale b (variance 2 b^2), by inverse CDF.
  double laplace(double scale);

  /// Poisson(lambda): sequential inversion for lambda <= 30, transformed
  /// rejection (PTRS) above.
  std::int64_t poisson(double lambda);

  /// Stateless seed derivation for independent streams (trial indices etc.).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 gen_;
};

}  // namespace genmat
