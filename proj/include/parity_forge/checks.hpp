#pragma once

/*
 * Congruence claims and the checkers that test them to a truncation order.
 *
 *   congruence_family    c(A n + B) == 0 (mod M) for all n
 *   internal_congruence  c(A1 n + B1) == c(A2 n + B2) (mod M) for all n
 *   series_identity      lhs == rhs, exactly or (mod M)
 *
 * A passing report is evidence up to order N, not a proof.
 */

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "parity_forge/colored_partitions.hpp"
#include "parity_forge/dissection.hpp"
#include "parity_forge/errors.hpp"
#include "parity_forge/report.hpp"
#include "parity_forge/series.hpp"
#include "parity_forge/special_series.hpp"

namespace parity_forge {

struct progression {
  std::int64_t stride = 1;  // A
  std::int64_t offset = 0;  // B

  std::string to_string() const {
    return std::to_string(stride) + "n+" + std::to_string(offset);
  }
  friend bool operator==(const progression&, const progression&) = default;
};

struct congruence_family {
  std::string id;
  eta_quotient source;
  progression terms;
  std::uint32_t modulus = 2;
};

struct internal_congruence {
  std::string id;
  eta_quotient source;
  std::uint32_t modulus = 2;
  progression lhs;
  progression rhs;
};

// Builds series in either coefficient ring from one generic recipe, so the
// same expression can be checked exactly or modulo M.
template <class Ring>
class recipe_context {
 public:
  using series_type = basic_series<Ring>;

  recipe_context(std::size_t order, Ring ring) : order_(order), ring_(std::move(ring)) {}

  std::size_t order() const { return order_; }
  const Ring& ring() const { return ring_; }

  series_type from(const series& exact) const {
    if constexpr (std::is_same_v<Ring, integer_ring>) {
      return exact;
    } else {
      return reduce_mod(exact, ring_.modulus());
    }
  }

  series_type eta(const eta_quotient& q) const {
    if constexpr (std::is_same_v<Ring, integer_ring>) {
      return eval_eta(q, order_, ring_);
    } else {
      return eval_eta_mod(q, order_, ring_.modulus());
    }
  }
  series_type eta(std::string_view text) const { return eta(parse_eta_quotient(text)); }
  series_type ak(std::int64_t k) const { return eta(ak_quotient(k)); }
  series_type f(std::int64_t k) const { return from(pochhammer(k, static_cast<std::int64_t>(order_))); }

  // D(q^d) and Y(q^d) from their defining sums.
  series_type D(std::size_t d = 1) const { return dilate(from(theta_D(signed_order())), d); }
  series_type Y(std::size_t d = 1) const { return dilate(from(theta_Y(signed_order())), d); }

  series_type q(std::size_t power = 1) const {
    return series_type::monomial(ring_, power, order_, ring_.one());
  }
  series_type constant(long c) const {
    return series_type::monomial(ring_, 0, order_, ring_.from_int(c));
  }
  series_type zero() const { return series_type::zero(ring_, order_); }

 private:
  std::int64_t signed_order() const { return static_cast<std::int64_t>(order_); }

  std::size_t order_;
  Ring ring_;
};

struct series_recipe {
  std::string text;
  std::function<series(std::size_t)> exact;
  std::function<mod_series(std::size_t, const modular_ring&)> modular;
};

// `build` is a generic callable taking a recipe_context of either ring.
template <class F>
series_recipe make_recipe(std::string text, F build) {
  return series_recipe{
      std::move(text),
      [build](std::size_t order) { return build(recipe_context<integer_ring>(order, integer_ring{})); },
      [build](std::size_t order, const modular_ring& ring) {
        return build(recipe_context<modular_ring>(order, ring));
      }};
}

struct series_identity {
  std::string id;
  series_recipe lhs;
  series_recipe rhs;
  std::optional<std::uint32_t> modulus;  // absent: exact equality
  std::string note;
};

// Several identities reported as one entry; fails at the first failing part.
struct identity_group {
  std::string id;
  std::vector<series_identity> parts;
  std::string note;
};

enum class coefficient_path { modular, exact };

namespace detail {

class stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void check_progression_shape(const progression& p) {
  if (p.stride < 1 || p.offset < 0) {
    throw config_error("progression " + p.to_string() + " needs A >= 1 and B >= 0");
  }
}

inline mod_series coefficient_source(const eta_quotient& q, std::size_t order, std::uint32_t modulus,
                                     coefficient_path path) {
  if (path == coefficient_path::exact) return reduce_mod(eval_eta(q, order, integer_ring{}), modulus);
  return eval_eta_mod(q, order, modulus);
}

}  // namespace detail

inline report check_vanishing(const congruence_family& family, std::size_t order,
                              coefficient_path path = coefficient_path::modular) {
  detail::check_progression_shape(family.terms);
  detail::stopwatch clock;
  report r;
  r.id = family.id;
  r.order = order;
  const auto a = static_cast<std::size_t>(family.terms.stride);
  const auto b = static_cast<std::size_t>(family.terms.offset);
  if (order < b) {
    r.status = check_status::skipped;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
  }
  const mod_series coeffs = detail::coefficient_source(family.source, order, family.modulus, path);
  r.status = check_status::pass;
  for (std::size_t n = 0; a * n + b <= order; ++n) {
    ++r.range_checked;
    const std::uint32_t v = coeffs.coeff(a * n + b);
    if (v != 0) {
      r.status = check_status::fail;
      r.failure = counterexample{static_cast<std::int64_t>(n), static_cast<std::int64_t>(a * n + b),
                                 std::to_string(v)};
      break;
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline report check_internal(const internal_congruence& claim, std::size_t order,
                             coefficient_path path = coefficient_path::modular) {
  detail::check_progression_shape(claim.lhs);
  detail::check_progression_shape(claim.rhs);
  detail::stopwatch clock;
  report r;
  r.id = claim.id;
  r.order = order;
  const auto a1 = static_cast<std::size_t>(claim.lhs.stride);
  const auto b1 = static_cast<std::size_t>(claim.lhs.offset);
  const auto a2 = static_cast<std::size_t>(claim.rhs.stride);
  const auto b2 = static_cast<std::size_t>(claim.rhs.offset);
  if (order < b1 || order < b2) {
    r.status = check_status::skipped;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
  }
  const mod_series coeffs = detail::coefficient_source(claim.source, order, claim.modulus, path);
  const modular_ring& ring = coeffs.ring();
  r.status = check_status::pass;
  for (std::size_t n = 0; a1 * n + b1 <= order && a2 * n + b2 <= order; ++n) {
    ++r.range_checked;
    const auto lhs = coeffs.coeff(a1 * n + b1);
    const auto rhs = coeffs.coeff(a2 * n + b2);
    if (lhs != rhs) {
      r.status = check_status::fail;
      r.failure = counterexample{static_cast<std::int64_t>(n), static_cast<std::int64_t>(a1 * n + b1),
                                 std::to_string(ring.add(lhs, ring.negate(rhs)))};
      break;
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace detail {

template <class Ring>
void compare_into(report& r, const basic_series<Ring>& lhs, const basic_series<Ring>& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  const Ring& ring = lhs.ring();
  r.range_checked += n + 1;
  for (std::size_t e = 0; e <= n; ++e) {
    if (!(lhs.coeffs()[e] == rhs.coeffs()[e])) {
      r.status = check_status::fail;
      r.failure = counterexample{static_cast<std::int64_t>(e), static_cast<std::int64_t>(e),
                                 ring.to_string(ring.add(lhs.coeffs()[e], ring.negate(rhs.coeffs()[e])))};
      return;
    }
  }
}

}  // namespace detail

inline report check_identity(const series_identity& identity, std::size_t order) {
  detail::stopwatch clock;
  report r;
  r.id = identity.id;
  r.order = order;
  r.status = check_status::pass;
  if (identity.modulus) {
    const modular_ring ring(*identity.modulus);
    detail::compare_into(r, identity.lhs.modular(order, ring), identity.rhs.modular(order, ring));
  } else {
    detail::compare_into(r, identity.lhs.exact(order), identity.rhs.exact(order));
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline report check_group(const identity_group& group, std::size_t order) {
  detail::stopwatch clock;
  report r;
  r.id = group.id;
  r.order = order;
  r.status = check_status::pass;
  for (const auto& part : group.parts) {
    const report sub = check_identity(part, order);
    r.range_checked += sub.range_checked;
    if (sub.status == check_status::fail) {
      r.status = check_status::fail;
      r.failure = sub.failure;
      break;
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace parity_forge
