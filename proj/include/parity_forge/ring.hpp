#pragma once

/*
 * Coefficient rings for truncated series.
 *
 * A ring policy is a small value type that knows how to add, multiply and
 * invert its elements, and provides the convolution kernel used by series
 * multiplication. Two policies exist:
 *
 *   integer_ring   exact integers (GMP), signed values kept as-is
 *   modular_ring   Z/m for 2 <= m < 2^32, residues canonical in [0, m)
 *
 * Policies compare equal when they describe the same ring; binary series
 * operations require equal rings.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace parity_forge {

using integer = mpz_class;

struct integer_ring {
  using value_type = integer;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const integer& v) const { return v; }
  value_type from_int(long v) const { return v; }
  integer to_integer(const value_type& v) const { return v; }

  bool is_canonical(const value_type&) const { return true; }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  void add_to(value_type& acc, const value_type& v) const { acc += v; }
  void sub_from(value_type& acc, const value_type& v) const { acc -= v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type negate(const value_type& v) const { return -v; }
  value_type multiply(const value_type& a, const value_type& b) const { return a * b; }

  // Over Z only +1 and -1 are invertible; each is its own inverse.
  std::optional<value_type> unit_inverse(const value_type& v) const {
    if (v == 1 || v == -1) return v;
    return std::nullopt;
  }

  std::string to_string(const value_type& v) const { return v.get_str(); }

  // Schoolbook product truncated at `order`. Rows are taken from `a`, which
  // callers pass as the sparser operand; zero rows cost nothing.
  std::vector<value_type> convolve(std::span<const value_type> a, std::span<const value_type> b,
                                   std::size_t order) const {
    std::vector<value_type> out(order + 1);
    for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
      if (sgn(a[i]) == 0) continue;
      const std::size_t limit = std::min(order - i, b.size() - 1);
      for (std::size_t j = 0; j <= limit; ++j) {
        if (sgn(b[j]) != 0) out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  friend bool operator==(const integer_ring&, const integer_ring&) = default;
};

class modular_ring {
 public:
  using value_type = std::uint32_t;

  explicit modular_ring(std::uint64_t modulus) : modulus_(static_cast<std::uint32_t>(modulus)) {
    if (modulus < 2 || modulus > 0xFFFFFFFFull) {
      throw std::invalid_argument("modulus must satisfy 2 <= m < 2^32, got " +
                                  std::to_string(modulus));
    }
  }

  std::uint32_t modulus() const noexcept { return modulus_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const integer& v) const {
    return static_cast<value_type>(mpz_fdiv_ui(v.get_mpz_t(), modulus_));
  }
  value_type from_int(long v) const {
    const long m = static_cast<long>(modulus_);
    long r = v % m;
    return static_cast<value_type>(r < 0 ? r + m : r);
  }
  integer to_integer(const value_type& v) const { return static_cast<unsigned long>(v); }

  bool is_canonical(const value_type& v) const { return v < modulus_; }
  bool is_zero(const value_type& v) const { return v == 0; }
  void add_to(value_type& acc, const value_type& v) const { acc = add(acc, v); }
  void sub_from(value_type& acc, const value_type& v) const { acc = add(acc, negate(v)); }
  value_type add(const value_type& a, const value_type& b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= modulus_ ? s - modulus_ : s);
  }
  value_type negate(const value_type& v) const { return v == 0 ? 0 : modulus_ - v; }
  value_type multiply(const value_type& a, const value_type& b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % modulus_);
  }

  std::optional<value_type> unit_inverse(const value_type& v) const {
    // Extended Euclid on (v, m).
    std::int64_t r0 = modulus_, r1 = v, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (r0 != 1) return std::nullopt;
    if (t0 < 0) t0 += modulus_;
    return static_cast<value_type>(t0);
  }

  std::string to_string(const value_type& v) const { return std::to_string(v); }

  // Products are below 2^64, so 128-bit accumulators absorb any row count
  // without intermediate reduction.
  std::vector<value_type> convolve(std::span<const value_type> a, std::span<const value_type> b,
                                   std::size_t order) const {
    std::vector<unsigned __int128> acc(order + 1, 0);
    for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
      if (a[i] == 0) continue;
      const std::uint64_t ai = a[i];
      const std::size_t limit = std::min(order - i, b.size() - 1);
      unsigned __int128* row = acc.data() + i;
      for (std::size_t j = 0; j <= limit; ++j) row[j] += ai * b[j];
    }
    std::vector<value_type> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      out[n] = static_cast<value_type>(acc[n] % modulus_);
    }
    return out;
  }

  friend bool operator==(const modular_ring&, const modular_ring&) = default;

 private:
  std::uint32_t modulus_;
};

}  // namespace parity_forge
