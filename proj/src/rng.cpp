#include "genmat/rng.hpp"

#include <cmath>

#include "genmat/errors.hpp"

namespace genmat {

double Rng::next_unit() {
  // 53 random bits, centered into (0,1) so the inverse CDFs never see 0 or 1.
  const std::uint64_t bits = gen_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Rng::next_symmetric() { return next_unit() - 0.5; }

double Rng::laplace(double scale) {
  if (!(scale > 0.0)) throw InvalidParam("laplace scale must be positive");
  const double u = next_symmetric();
  const double sign = u < 0.0 ? -1.0 : 1.0;
  return -scale * sign * std::log1p(-2.0 * std::abs(u));
}

std::int64_t Rng::poisson(double lambda) {
  if (!(lambda > 0.0)) throw InvalidParam("poisson mean must be positive");
  if (lambda <= 30.0) {
    // Sequential inversion of the CDF.
    const double l = std::exp(-lambda);
    std::int64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= next_unit();
    } while (p > l);
    return k - 1;
  }
  // Transformed rejection with squeeze (PTRS, Hormann 1993).
  const double b = 0.931 + 2.53 * std::sqrt(lambda);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_lambda = std::log(lambda);
  for (;;) {
    const double u = next_symmetric();
    const double v = next_unit();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * log_lambda - lambda - std::lgamma(k + 1.0))
      return static_cast<std::int64_t>(k);
  }
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined word.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace genmat
