#pragma once

// a_k(n): partitions of n whose odd parts each carry one of k colours while
// even parts are uncoloured. Generating function f_2^(k-1) / f_1^k.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity_forge/series.hpp"
#include "parity_forge/special_series.hpp"

namespace parity_forge {

namespace detail {

inline void check_colors(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("number of colours must be >= 1, got " + std::to_string(k));
}

}  // namespace detail

inline eta_quotient ak_quotient(std::int64_t k) {
  detail::check_colors(k);
  eta_quotient q;
  if (k > 1) q.append(2, k - 1);
  q.append(1, -k);
  return q;
}

inline series ak_series(std::int64_t k, std::int64_t order) {
  return eval_eta(ak_quotient(k), order);
}

// Counts coloured partitions directly: one geometric factor 1/(1 - q^s) per
// even part size, k of them per odd part size, each applied with the prefix
// recurrence c[n] += c[n - s]. Shares nothing with the Pochhammer code.
inline series ak_oracle(std::int64_t k, std::int64_t order) {
  detail::check_colors(k);
  const std::size_t n = detail::checked_order(order);
  std::vector<integer> c(n + 1);
  c[0] = 1;
  for (std::size_t s = 1; s <= n; ++s) {
    const std::int64_t copies = (s % 2 == 1) ? k : 1;
    for (std::int64_t rep = 0; rep < copies; ++rep) {
      for (std::size_t i = s; i <= n; ++i) c[i] += c[i - s];
    }
  }
  return series(integer_ring{}, std::move(c));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Rewrites f_a^(b p + r) as f_(a p)^b f_a^r, which holds modulo the prime p
// since f_a^p = f_(a p) (mod p). Applied until every |exponent| < p; signs
// are handled symmetrically so denominators stay denominators.
inline eta_quotient fold_prime_powers(const eta_quotient& q, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto prime = static_cast<std::int64_t>(p);
  std::map<std::int64_t, std::int64_t> exps;
  for (const auto& f : q.merged()) exps[f.dilation] = f.exponent;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [k, e] : exps) {
      const std::int64_t mag = e < 0 ? -e : e;
      if (mag < prime) continue;
      const std::int64_t sign = e < 0 ? -1 : 1;
      e = sign * (mag % prime);
      exps[k * prime] += sign * (mag / prime);
      changed = true;
      break;  // map was modified; restart iteration
    }
  }
  eta_quotient out;
  for (auto [k, e] : exps) {
    if (e != 0) out.append(k, e);
  }
  return out;
}

// Evaluates an eta-quotient directly in Z/m. For prime m the exponents are
// folded first, which changes the cost but never the residues.
inline mod_series eval_eta_mod(const eta_quotient& q, std::size_t order, std::uint64_t modulus) {
  const modular_ring ring(modulus);
  if (is_prime(modulus)) return eval_eta(fold_prime_powers(q, modulus), order, ring);
  return eval_eta(q, order, ring);
}

inline mod_series ak_series_mod(std::int64_t k, std::int64_t order, std::uint64_t modulus) {
  return eval_eta_mod(ak_quotient(k), detail::checked_order(order), modulus);
}

inline std::uint32_t ak_coeff_mod(std::int64_t k, std::int64_t n, std::uint64_t modulus) {
  return ak_series_mod(k, n, modulus).coeff(static_cast<std::size_t>(n));
}

}  // namespace parity_forge
