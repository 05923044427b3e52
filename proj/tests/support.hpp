#pragma once

// Shared helpers for the unit tests: seeded random series and an
// independent product expansion.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "parity_forge/series.hpp"

namespace pf_test {

using namespace parity_forge;

inline series random_series(std::mt19937_64& rng, std::size_t order, long lo = -50, long hi = 50) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<integer> c(order + 1);
  for (auto& v : c) v = dist(rng);
  return series(integer_ring{}, std::move(c));
}

// Constant term forced to +-1 so the series is invertible over Z.
inline series random_unit_series(std::mt19937_64& rng, std::size_t order) {
  series s = random_series(rng, order);
  std::vector<integer> c(s.coeffs().begin(), s.coeffs().end());
  c[0] = (rng() & 1) ? 1 : -1;
  return series(integer_ring{}, std::move(c));
}

// prod_{j>=1} (1 - q^(k j)) by repeated multiplication by binomials.
inline series naive_pochhammer(std::size_t k, std::size_t order) {
  std::vector<integer> c(order + 1);
  c[0] = 1;
  for (std::size_t step = k; step <= order; step += k) {
    for (std::size_t i = order; i >= step; --i) c[i] -= c[i - step];
  }
  return series(integer_ring{}, std::move(c));
}

}  // namespace pf_test
