#pragma once

/*
 * Named series: Pochhammer factors f_k = (q^k; q^k)_inf, eta-quotients
 * prod f_k^e, and the theta sums
 *
 *   D(q) = sum_n (-1)^n q^(n^2)        = f_1^2 / f_2
 *   Y(q) = sum_n (-1)^n q^(3n^2 - 2n)  = f_1 f_6^2 / (f_2 f_3)
 *
 * f_1 is expanded with Euler's pentagonal number theorem; f_k for k > 1 is the
 * dilation of f_1, so pentagonal exponent arithmetic lives in one place.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parity_forge/errors.hpp"
#include "parity_forge/series.hpp"

namespace parity_forge {

namespace detail {

// (exponent, sign) for every generalized pentagonal number j(3j-1)/2 <= order,
// j = 0, 1, -1, 2, -2, ..., in ascending exponent order.
inline std::vector<std::pair<std::size_t, int>> pentagonal_terms(std::size_t order) {
  std::vector<std::pair<std::size_t, int>> terms{{0, 1}};
  for (std::size_t j = 1;; ++j) {
    const std::size_t lo = j * (3 * j - 1) / 2;
    if (lo > order) break;
    const int sign = (j % 2 == 0) ? 1 : -1;
    terms.emplace_back(lo, sign);
    const std::size_t hi = j * (3 * j + 1) / 2;
    if (hi <= order) terms.emplace_back(hi, sign);
  }
  return terms;
}

}  // namespace detail

inline series pochhammer(std::int64_t k, std::int64_t order) {
  if (k < 1) throw std::invalid_argument("Pochhammer dilation must be >= 1, got " + std::to_string(k));
  const std::size_t n = detail::checked_order(order);
  std::vector<integer> c(n + 1);
  for (auto [e, sign] : detail::pentagonal_terms(n)) c[e] = sign;
  series f1(integer_ring{}, std::move(c));
  return k == 1 ? f1 : dilate(f1, static_cast<std::size_t>(k));
}

struct eta_factor {
  std::int64_t dilation;
  std::int64_t exponent;

  friend bool operator==(const eta_factor&, const eta_factor&) = default;
};

// A finite product prod f_k^e. Factors may repeat; evaluation uses the merged
// exponent per dilation, so factor order never matters.
class eta_quotient {
 public:
  eta_quotient() = default;

  eta_quotient(std::initializer_list<eta_factor> factors) {
    for (const auto& f : factors) append(f.dilation, f.exponent);
  }

  void append(std::int64_t dilation, std::int64_t exponent) {
    if (dilation < 1) {
      throw std::invalid_argument("eta factor dilation must be >= 1, got " + std::to_string(dilation));
    }
    factors_.push_back({dilation, exponent});
  }

  const std::vector<eta_factor>& factors() const noexcept { return factors_; }

  // Combined exponent per dilation, zero exponents removed, ascending dilation.
  std::vector<eta_factor> merged() const {
    std::map<std::int64_t, std::int64_t> acc;
    for (const auto& f : factors_) acc[f.dilation] += f.exponent;
    std::vector<eta_factor> out;
    for (auto [k, e] : acc) {
      if (e != 0) out.push_back({k, e});
    }
    return out;
  }

  eta_quotient operator*(const eta_quotient& other) const {
    eta_quotient out = *this;
    for (const auto& f : other.factors_) out.factors_.push_back(f);
    return out;
  }

  // Same product, compares merged forms.
  bool equivalent(const eta_quotient& other) const { return merged() == other.merged(); }

  // Canonical rendering such as "f2^4/f1^5" or "f1^2*f3/f6".
  std::string to_string() const {
    std::string num, den;
    for (const auto& f : merged()) {
      const std::int64_t e = f.exponent > 0 ? f.exponent : -f.exponent;
      std::string term = 'f' + std::to_string(f.dilation);
      if (e != 1) term += '^' + std::to_string(e);
      if (f.exponent > 0) {
        num += (num.empty() ? "" : "*") + term;
      } else {
        den += '/' + term;  // each denominator factor gets its own '/'
      }
    }
    if (num.empty()) num = "1";
    return num + den;
  }

 private:
  std::vector<eta_factor> factors_;
};

// Grammar: term (('*' | '/') term)*, term := 'f' <k> ['^' <signed int>] | '1'.
// Whitespace is ignored. '/' negates the exponent of the term that follows it.
inline eta_quotient parse_eta_quotient(std::string_view text) {
  eta_quotient q;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> parse_error {
    return parse_error(msg + " at position " + std::to_string(pos), pos);
  };
  auto read_int = [&](bool allow_sign) -> std::int64_t {
    skip_ws();
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw fail("expected an integer");
    }
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > (INT64_MAX - 9) / 10) throw fail("integer too large");
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return negative ? -v : v;
  };

  skip_ws();
  if (pos >= text.size()) throw fail("empty eta-quotient");
  int sign = 1;
  for (;;) {
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
      ++pos;  // literal unit factor
    } else if (pos < text.size() && (text[pos] == 'f' || text[pos] == 'F')) {
      ++pos;
      const std::size_t at = pos;
      const std::int64_t k = read_int(false);
      if (k < 1) {
        pos = at;
        throw fail("dilation must be >= 1");
      }
      std::int64_t e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = read_int(true);
      }
      q.append(k, sign * e);
    } else {
      throw fail("expected a factor 'f<k>'");
    }
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '*') {
      sign = 1;
    } else if (text[pos] == '/') {
      sign = -1;
    } else {
      throw fail("expected '*' or '/'");
    }
    ++pos;
  }
  return q;
}

namespace detail {

// Nonzero terms of f_k beyond the constant, as (exponent, +-1).
inline std::vector<std::pair<std::size_t, int>> pochhammer_tail(std::int64_t k, std::size_t order) {
  const series f = pochhammer(k, static_cast<std::int64_t>(order));
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t i = 1; i <= order; ++i) {
    const int s = sgn(f.coeffs()[i]);
    if (s != 0) out.emplace_back(i, s);
  }
  return out;
}

// c <- c * f_k in place. Descending n so c[n - t] still holds the old value.
template <class Ring>
void multiply_by_pochhammer(std::vector<typename Ring::value_type>& c,
                            const std::vector<std::pair<std::size_t, int>>& tail, const Ring& ring) {
  for (std::size_t n = c.size(); n-- > 0;) {
    for (auto [t, s] : tail) {
      if (t > n) break;
      if (s > 0) {
        ring.add_to(c[n], c[n - t]);
      } else {
        ring.sub_from(c[n], c[n - t]);
      }
    }
  }
}

// c <- c / f_k in place. Ascending n so c[n - t] already holds the quotient.
template <class Ring>
void divide_by_pochhammer(std::vector<typename Ring::value_type>& c,
                          const std::vector<std::pair<std::size_t, int>>& tail, const Ring& ring) {
  for (std::size_t n = 1; n < c.size(); ++n) {
    for (auto [t, s] : tail) {
      if (t > n) break;
      if (s > 0) {
        ring.sub_from(c[n], c[n - t]);
      } else {
        ring.add_to(c[n], c[n - t]);
      }
    }
  }
}

}  // namespace detail

// prod f_k^e truncated at `order`, in any coefficient ring. Numerator factors
// are applied first, then the denominators are divided out one at a time; the
// result equals the pow/invert composition coefficient for coefficient.
template <class Ring>
basic_series<Ring> eval_eta(const eta_quotient& q, std::size_t order, const Ring& ring) {
  std::vector<typename Ring::value_type> c(order + 1, ring.zero());
  c[0] = ring.one();
  const auto factors = q.merged();
  for (bool numerator : {true, false}) {
    for (const auto& f : factors) {
      if ((f.exponent > 0) != numerator) continue;
      const auto tail = detail::pochhammer_tail(f.dilation, order);
      const std::int64_t reps = f.exponent > 0 ? f.exponent : -f.exponent;
      for (std::int64_t i = 0; i < reps; ++i) {
        if (numerator) {
          detail::multiply_by_pochhammer(c, tail, ring);
        } else {
          detail::divide_by_pochhammer(c, tail, ring);
        }
      }
    }
  }
  return basic_series<Ring>(ring, std::move(c));
}

inline series eval_eta(const eta_quotient& q, std::int64_t order) {
  return eval_eta(q, detail::checked_order(order), integer_ring{});
}

inline series eval_eta(std::string_view text, std::int64_t order) {
  return eval_eta(parse_eta_quotient(text), order);
}

inline series theta_D(std::int64_t order) {
  const std::size_t n = detail::checked_order(order);
  std::vector<integer> c(n + 1);
  c[0] = 1;
  for (std::size_t j = 1; j * j <= n; ++j) c[j * j] = (j % 2 == 0) ? 2 : -2;
  return series(integer_ring{}, std::move(c));
}

inline series theta_Y(std::int64_t order) {
  const std::size_t n = detail::checked_order(order);
  std::vector<integer> c(n + 1);
  auto exponent = [](std::int64_t j) { return 3 * j * j - 2 * j; };
  for (std::int64_t j = 0; exponent(j) <= static_cast<std::int64_t>(n); ++j) {
    c[static_cast<std::size_t>(exponent(j))] += (j % 2 == 0) ? 1 : -1;
  }
  for (std::int64_t j = -1; exponent(j) <= static_cast<std::int64_t>(n); --j) {
    c[static_cast<std::size_t>(exponent(j))] += (j % 2 == 0) ? 1 : -1;
  }
  return series(integer_ring{}, std::move(c));
}

}  // namespace parity_forge
