#pragma once

// Arithmetic-progression views of a series.
//
//   extract(S, m, r)    sum_n c(m n + r) q^n        (relabelled)
//   component(S, m, r)  sum_n c(m n + r) q^(m n + r) (original exponents)
//
// Summing component(S, m, r) over r = 0..m-1 gives S back.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity_forge/series.hpp"

namespace parity_forge {

namespace detail {

inline void check_progression(std::size_t m, std::size_t r) {
  if (m == 0) throw std::invalid_argument("dissection modulus must be positive");
  if (r >= m) {
    throw std::invalid_argument("residue " + std::to_string(r) + " is outside [0, " +
                                std::to_string(m) + ")");
  }
}

}  // namespace detail

// Order of the result is floor((order(S) - r) / m). A residue above the order
// leaves no known coefficient and is rejected.
template <class Ring>
basic_series<Ring> extract(const basic_series<Ring>& s, std::size_t m, std::size_t r) {
  detail::check_progression(m, r);
  if (r > s.order()) {
    throw std::out_of_range("progression offset " + std::to_string(r) +
                            " is beyond truncation order " + std::to_string(s.order()));
  }
  const std::size_t order = (s.order() - r) / m;
  std::vector<typename Ring::value_type> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = s.coeffs()[m * n + r];
  return basic_series<Ring>(s.ring(), std::move(c));
}

template <class Ring>
basic_series<Ring> component(const basic_series<Ring>& s, std::size_t m, std::size_t r) {
  detail::check_progression(m, r);
  const Ring& ring = s.ring();
  std::vector<typename Ring::value_type> c(s.order() + 1, ring.zero());
  for (std::size_t e = r; e <= s.order(); e += m) c[e] = s.coeffs()[e];
  return basic_series<Ring>(ring, std::move(c));
}

}  // namespace parity_forge
