#pragma once

/*
 * Truncated formal power series in one indeterminate q.
 *
 * A basic_series<Ring> stores the coefficients of q^0 .. q^N, where N is the
 * truncation order. Values are immutable once built. Every binary operation
 * truncates to the smaller operand order, and reading past the order is an
 * error rather than an implicit zero.
 *
 *   series       exact integer coefficients
 *   mod_series   coefficients in Z/m
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parity_forge/errors.hpp"
#include "parity_forge/ring.hpp"

namespace parity_forge {

template <class Ring>
class basic_series {
 public:
  using ring_type = Ring;
  using value_type = typename Ring::value_type;

  // Takes ownership of coefficients for q^0 .. q^(coeffs.size()-1).
  basic_series(Ring ring, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    for (const auto& v : coeffs_) {
      if (!ring_.is_canonical(v)) throw std::invalid_argument("coefficient outside residue range");
    }
  }

  static basic_series zero(Ring ring, std::size_t order) {
    std::vector<value_type> c(order + 1, ring.zero());
    return basic_series(std::move(ring), std::move(c));
  }

  static basic_series one(Ring ring, std::size_t order) {
    std::vector<value_type> c(order + 1, ring.zero());
    c[0] = ring.one();
    return basic_series(std::move(ring), std::move(c));
  }

  // q^power at the given order (zero when power > order).
  static basic_series monomial(Ring ring, std::size_t power, std::size_t order,
                               value_type coefficient) {
    std::vector<value_type> c(order + 1, ring.zero());
    if (power <= order) c[power] = std::move(coefficient);
    return basic_series(std::move(ring), std::move(c));
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const value_type> coeffs() const noexcept { return coeffs_; }

  const value_type& coeff(std::size_t n) const {
    if (n > order()) {
      throw std::out_of_range("coefficient q^" + std::to_string(n) +
                              " is beyond truncation order " + std::to_string(order()));
    }
    return coeffs_[n];
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [this](const value_type& v) { return ring_.is_zero(v); });
  }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(
        coeffs_.begin(), coeffs_.end(), [this](const value_type& v) { return !ring_.is_zero(v); }));
  }

  friend bool operator==(const basic_series& a, const basic_series& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Ring ring_;
  std::vector<value_type> coeffs_;
};

using series = basic_series<integer_ring>;
using mod_series = basic_series<modular_ring>;

namespace detail {

template <class Ring>
void require_same_ring(const basic_series<Ring>& a, const basic_series<Ring>& b) {
  if (!(a.ring() == b.ring())) {
    throw std::invalid_argument("series operands live in different coefficient rings");
  }
}

inline std::size_t checked_order(std::int64_t order) {
  if (order < 0) {
    throw std::invalid_argument("truncation order must be non-negative, got " +
                                std::to_string(order));
  }
  return static_cast<std::size_t>(order);
}

// Indices of nonzero coefficients in 1..order.
template <class Ring>
std::vector<std::size_t> tail_support(const basic_series<Ring>& s) {
  std::vector<std::size_t> idx;
  const auto c = s.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (!s.ring().is_zero(c[i])) idx.push_back(i);
  }
  return idx;
}

}  // namespace detail

// Exact series from a coefficient list; missing high coefficients are zero.
inline series make_series(std::vector<integer> coeffs, std::int64_t order) {
  const std::size_t n = detail::checked_order(order);
  if (coeffs.size() > n + 1) {
    throw std::invalid_argument("coefficient list of length " + std::to_string(coeffs.size()) +
                                " exceeds order " + std::to_string(n));
  }
  coeffs.resize(n + 1);
  return series(integer_ring{}, std::move(coeffs));
}

inline series make_series(std::initializer_list<long> coeffs, std::int64_t order) {
  std::vector<integer> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return make_series(std::move(c), order);
}

inline mod_series make_mod_series(std::initializer_list<long> coeffs, std::int64_t order,
                                  std::uint64_t modulus) {
  const modular_ring ring(modulus);
  const std::size_t n = detail::checked_order(order);
  if (coeffs.size() > n + 1) throw std::invalid_argument("coefficient list exceeds order");
  std::vector<std::uint32_t> c(n + 1, 0);
  std::size_t i = 0;
  for (long v : coeffs) c[i++] = ring.from_int(v);
  return mod_series(ring, std::move(c));
}

// Drops coefficients above `order`; the new order may not exceed the old one.
template <class Ring>
basic_series<Ring> truncate(const basic_series<Ring>& s, std::size_t order) {
  if (order > s.order()) {
    throw std::out_of_range("cannot raise truncation order from " + std::to_string(s.order()) +
                            " to " + std::to_string(order));
  }
  auto c = s.coeffs();
  return basic_series<Ring>(s.ring(), {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(order) + 1});
}

template <class Ring>
basic_series<Ring> add(const basic_series<Ring>& s, const basic_series<Ring>& t) {
  detail::require_same_ring(s, t);
  const std::size_t n = std::min(s.order(), t.order());
  const Ring& ring = s.ring();
  std::vector<typename Ring::value_type> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = ring.add(s.coeffs()[i], t.coeffs()[i]);
  return basic_series<Ring>(ring, std::move(c));
}

template <class Ring>
basic_series<Ring> negate(const basic_series<Ring>& s) {
  const Ring& ring = s.ring();
  std::vector<typename Ring::value_type> c(s.order() + 1);
  for (std::size_t i = 0; i <= s.order(); ++i) c[i] = ring.negate(s.coeffs()[i]);
  return basic_series<Ring>(ring, std::move(c));
}

template <class Ring>
basic_series<Ring> subtract(const basic_series<Ring>& s, const basic_series<Ring>& t) {
  return add(s, negate(t));
}

// Cauchy product truncated at the smaller order. The sparser operand drives
// the outer loop so products with theta series and Pochhammer factors stay
// cheap.
template <class Ring>
basic_series<Ring> mul(const basic_series<Ring>& s, const basic_series<Ring>& t) {
  detail::require_same_ring(s, t);
  const std::size_t n = std::min(s.order(), t.order());
  const bool s_sparser = s.nonzero_count() <= t.nonzero_count();
  const auto& rows = s_sparser ? s : t;
  const auto& cols = s_sparser ? t : s;
  return basic_series<Ring>(s.ring(), s.ring().convolve(rows.coeffs(), cols.coeffs(), n));
}

template <class Ring>
basic_series<Ring> scale_value(const basic_series<Ring>& s,
                               const typename Ring::value_type& factor) {
  const Ring& ring = s.ring();
  std::vector<typename Ring::value_type> c(s.order() + 1);
  for (std::size_t i = 0; i <= s.order(); ++i) c[i] = ring.multiply(s.coeffs()[i], factor);
  return basic_series<Ring>(ring, std::move(c));
}

template <class Ring>
basic_series<Ring> scale(const basic_series<Ring>& s, long factor) {
  return scale_value(s, s.ring().from_int(factor));
}

// q^power * s, same order; terms pushed past the order are dropped.
template <class Ring>
basic_series<Ring> shift(const basic_series<Ring>& s, std::size_t power) {
  const Ring& ring = s.ring();
  std::vector<typename Ring::value_type> c(s.order() + 1, ring.zero());
  for (std::size_t i = 0; i + power <= s.order(); ++i) c[i + power] = s.coeffs()[i];
  return basic_series<Ring>(ring, std::move(c));
}

// s / t by forward substitution; requires t's constant term to be a unit.
// Cost is O(order * nonzeros(t)).
template <class Ring>
basic_series<Ring> divide(const basic_series<Ring>& s, const basic_series<Ring>& t) {
  detail::require_same_ring(s, t);
  const Ring& ring = s.ring();
  const auto inv = ring.unit_inverse(t.coeffs()[0]);
  if (!inv) throw non_unit_error(ring.to_string(t.coeffs()[0]));
  const std::size_t n = std::min(s.order(), t.order());
  const auto support = detail::tail_support(t);
  const auto tc = t.coeffs();
  std::vector<typename Ring::value_type> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    auto acc = s.coeffs()[k];
    for (std::size_t i : support) {
      if (i > k) break;
      ring.sub_from(acc, ring.multiply(tc[i], q[k - i]));
    }
    q[k] = ring.multiply(acc, *inv);
  }
  return basic_series<Ring>(ring, std::move(q));
}

template <class Ring>
basic_series<Ring> invert(const basic_series<Ring>& s) {
  return divide(basic_series<Ring>::one(s.ring(), s.order()), s);
}

template <class Ring>
basic_series<Ring> pow(const basic_series<Ring>& s, std::int64_t exponent) {
  basic_series<Ring> base = exponent < 0 ? invert(s) : s;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  auto result = basic_series<Ring>::one(s.ring(), s.order());
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

// q -> q^k. Coefficient n of s lands at k*n; the order is unchanged, so
// coefficients of s above order/k are dropped.
template <class Ring>
basic_series<Ring> dilate(const basic_series<Ring>& s, std::size_t k) {
  if (k == 0) throw std::invalid_argument("dilation factor must be positive");
  const Ring& ring = s.ring();
  std::vector<typename Ring::value_type> c(s.order() + 1, ring.zero());
  for (std::size_t n = 0; n * k <= s.order(); ++n) c[n * k] = s.coeffs()[n];
  return basic_series<Ring>(ring, std::move(c));
}

inline mod_series reduce_mod(const series& s, std::uint64_t modulus) {
  const modular_ring ring(modulus);
  std::vector<std::uint32_t> c(s.order() + 1);
  for (std::size_t i = 0; i <= s.order(); ++i) c[i] = ring.from_integer(s.coeffs()[i]);
  return mod_series(ring, std::move(c));
}

// Reduces a residue series further to a modulus dividing the current one.
inline mod_series reduce_mod(const mod_series& s, std::uint64_t modulus) {
  if (s.ring().modulus() % modulus != 0) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " does not divide " +
                                std::to_string(s.ring().modulus()));
  }
  const modular_ring ring(modulus);
  std::vector<std::uint32_t> c(s.order() + 1);
  for (std::size_t i = 0; i <= s.order(); ++i) {
    c[i] = static_cast<std::uint32_t>(s.coeffs()[i] % modulus);
  }
  return mod_series(ring, std::move(c));
}

inline series lift(const mod_series& s) {
  std::vector<integer> c(s.order() + 1);
  for (std::size_t i = 0; i <= s.order(); ++i) c[i] = static_cast<unsigned long>(s.coeffs()[i]);
  return series(integer_ring{}, std::move(c));
}

template <class Ring>
const typename Ring::value_type& coeff(const basic_series<Ring>& s, std::size_t n) {
  return s.coeff(n);
}

// Exact comparison of coefficients 0..n; n must not exceed either order.
template <class Ring>
bool eq_upto(const basic_series<Ring>& s, const basic_series<Ring>& t, std::size_t n) {
  detail::require_same_ring(s, t);
  if (n > s.order() || n > t.order()) {
    throw std::out_of_range("comparison order " + std::to_string(n) +
                            " exceeds truncation order " +
                            std::to_string(std::min(s.order(), t.order())));
  }
  return std::equal(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(n) + 1,
                    t.coeffs().begin());
}

template <class Ring>
basic_series<Ring> operator+(const basic_series<Ring>& s, const basic_series<Ring>& t) {
  return add(s, t);
}
template <class Ring>
basic_series<Ring> operator-(const basic_series<Ring>& s, const basic_series<Ring>& t) {
  return subtract(s, t);
}
template <class Ring>
basic_series<Ring> operator-(const basic_series<Ring>& s) {
  return negate(s);
}
template <class Ring>
basic_series<Ring> operator*(const basic_series<Ring>& s, const basic_series<Ring>& t) {
  return mul(s, t);
}
template <class Ring>
basic_series<Ring> operator*(long c, const basic_series<Ring>& s) {
  return scale(s, c);
}
template <class Ring>
basic_series<Ring> operator/(const basic_series<Ring>& s, const basic_series<Ring>& t) {
  return divide(s, t);
}

}  // namespace parity_forge
