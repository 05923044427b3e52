#pragma once

/*
 * The verification registry: every congruence family, internal congruence,
 * series identity and proof-step congruence this project checks, plus the
 * suite runner.
 *
 * Suites
 *   all          everything below
 *   ramanujan    p(5n+4), p(7n+5), p(11n+6)
 *   thm_1_1      a_{7j+c}(7n+d) == 0 (mod 7), five residue cases
 *   thm_1_2      a_5(5n+3) == 0 (mod 5)
 *   cor_3_2      a_{5j+5}(5n+3) == 0 (mod 5)
 *   thm_1_3      a_5(3^(2a+3) n + (153*9^a - 1)/8) == 0 (mod 3)
 *   thm_4_1      a_{3t+2}(27n+18+t) == 0 (mod 3)
 *   thm_4_2      a_{3t+2}(27n+r_t) == a_{3t+2}(3n+s_t) (mod 3)
 *   cor_4_3      the a_20 and a_23 families in alpha
 *   cor_4_4      a_{27j+3t+2}(27n+18+t) == 0 (mod 3)
 *   lemmas       theta products, the 3-dissections, f_a^(bp) == f_(ap)^b
 *   identities   every series identity (lemmas + proof_steps)
 *   proof_steps  PS_<k>_<stage>: each intermediate step of the 3-dissection arguments
 *
 * Proof-step stages are numbered by position within each chain.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "parity_forge/checks.hpp"

namespace parity_forge {

struct param_range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const param_range&, const param_range&) = default;
};

using param_bounds = std::map<std::string, param_range>;

// "alpha=0..2,j=0..2,t=0..8"; a single value "t=3" means 3..3.
inline param_bounds parse_param_bounds(std::string_view text) {
  param_bounds out;
  std::size_t pos = 0;
  auto to_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw config_error("empty bound in --params");
    std::int64_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw config_error("bad bound '" + std::string(s) + "' in --params");
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw config_error("expected name=lo..hi in --params");
    const std::string name(item.substr(0, eq));
    const std::string_view range = item.substr(eq + 1);
    const std::size_t dots = range.find("..");
    param_range r;
    if (dots == std::string_view::npos) {
      r.lo = r.hi = to_int(range);
    } else {
      r.lo = to_int(range.substr(0, dots));
      r.hi = to_int(range.substr(dots + 2));
    }
    if (r.lo > r.hi) throw config_error("empty range for parameter " + name);
    out[name] = r;
  }
  return out;
}

enum class order_policy {
  standard,  // runs at the requested order
  deep,      // runs at max(requested, deep_order), residues only
};

inline constexpr std::size_t deep_order = 20000;

using registry_check = std::variant<congruence_family, internal_congruence, series_identity, identity_group>;

struct registry_entry {
  registry_check check;
  std::vector<std::string> suites;
  order_policy policy = order_policy::standard;
  std::string description;

  const std::string& id() const {
    return std::visit([](const auto& c) -> const std::string& { return c.id; }, check);
  }

  std::size_t order_for(std::size_t requested) const {
    return policy == order_policy::deep ? std::max(requested, deep_order) : requested;
  }

  bool in_suite(std::string_view suite) const {
    return suite == "all" || std::find(suites.begin(), suites.end(), suite) != suites.end();
  }
};

inline report run_entry(const registry_entry& entry, std::size_t order) {
  const std::size_t n = entry.order_for(order);
  return std::visit(
      [n](const auto& c) -> report {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, congruence_family>) {
          return check_vanishing(c, n);
        } else if constexpr (std::is_same_v<T, internal_congruence>) {
          return check_internal(c, n);
        } else if constexpr (std::is_same_v<T, series_identity>) {
          return check_identity(c, n);
        } else {
          return check_group(c, n);
        }
      },
      entry.check);
}

// ---------------------------------------------------------------------------
// Family instantiation

// Exact quotient; a remainder means the family formula is malformed.
inline std::int64_t exact_offset(const integer& numerator, long denominator, const std::string& what) {
  integer q, rem;
  mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(),
                 static_cast<unsigned long>(denominator));
  if (rem != 0) {
    throw config_error(what + ": " + numerator.get_str() + " is not divisible by " +
                       std::to_string(denominator));
  }
  if (!q.fits_slong_p() || q < 0) throw config_error(what + ": offset out of range");
  return q.get_si();
}

inline integer power_of(unsigned long base, unsigned long exponent) {
  integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

// A = 3^(2 alpha + 3), B = (c * 9^alpha - d) / 8.
inline progression alpha_progression(std::int64_t alpha, long c, long d, const std::string& what) {
  if (alpha < 0) throw config_error(what + ": alpha must be >= 0");
  const integer stride = power_of(3, static_cast<unsigned long>(2 * alpha + 3));
  if (!stride.fits_slong_p()) throw config_error(what + ": stride 3^(2 alpha + 3) exceeds 64 bits");
  const integer numerator = c * power_of(9, static_cast<unsigned long>(alpha)) - d;
  return progression{stride.get_si(), exact_offset(numerator, 8, what)};
}

inline std::int64_t internal_r(std::int64_t t) { return t % 2 == 0 ? t : t + 9; }
inline std::int64_t internal_s(std::int64_t t) { return t % 2 == 0 ? 0 : 1; }

namespace detail {

struct param_spec {
  std::string name;
  std::int64_t default_lo;
  std::int64_t default_hi;
  std::int64_t domain_lo;
  std::int64_t domain_hi;
};

inline std::vector<std::int64_t> param_values(const param_bounds& bounds, const param_spec& spec) {
  param_range r{spec.default_lo, spec.default_hi};
  if (auto it = bounds.find(spec.name); it != bounds.end()) r = it->second;
  if (r.lo < spec.domain_lo || r.hi > spec.domain_hi) {
    throw config_error("parameter " + spec.name + " must stay within " + std::to_string(spec.domain_lo) +
                       ".." + std::to_string(spec.domain_hi));
  }
  std::vector<std::int64_t> out;
  for (std::int64_t v = r.lo; v <= r.hi; ++v) out.push_back(v);
  return out;
}

inline std::string family_text(std::int64_t k, const progression& p, std::uint32_t m) {
  return "a_" + std::to_string(k) + "(" + p.to_string() + ") == 0 (mod " + std::to_string(m) + ")";
}

// Left-hand sides of proof steps, all built from the a_k series.
inline series_recipe whole(std::int64_t k) {
  return make_recipe("sum a_" + std::to_string(k) + "(n) q^n", [k](const auto& c) { return c.ak(k); });
}

inline series_recipe comp(std::int64_t k, std::size_t m, std::size_t r) {
  const std::string idx = std::to_string(m) + "n+" + std::to_string(r);
  return make_recipe("sum a_" + std::to_string(k) + "(" + idx + ") q^(" + idx + ")",
                     [=](const auto& c) { return component(c.ak(k), m, r); });
}

inline series_recipe ext(std::int64_t k, std::size_t m, std::size_t r) {
  return make_recipe("sum a_" + std::to_string(k) + "(" + std::to_string(m) + "n+" + std::to_string(r) + ") q^n",
                     [=](const auto& c) { return extract(c.ak(k), m, r); });
}

// sum_n a_k(m(3n+r2)+r) q^(3n+r2)
inline series_recipe ext_comp(std::int64_t k, std::size_t m, std::size_t r, std::size_t r2) {
  const std::string idx = std::to_string(3 * m) + "n+" + std::to_string(m * r2 + r);
  return make_recipe("sum a_" + std::to_string(k) + "(" + idx + ") q^(3n+" + std::to_string(r2) + ")",
                     [=](const auto& c) { return component(extract(c.ak(k), m, r), 3, r2); });
}

inline std::string scalar_text(long scalar) { return scalar == 1 ? "" : std::to_string(scalar) + " "; }

// scalar * q^power * (eta-quotient)
inline series_recipe mono(long scalar, std::size_t power, std::string eta_text) {
  std::string text = scalar_text(scalar);
  if (power == 1) text += "q ";
  if (power > 1) text += "q^" + std::to_string(power) + " ";
  text += eta_text;
  return make_recipe(text, [=](const auto& c) { return scale(shift(c.eta(eta_text), power), scalar); });
}

inline series_recipe zero_series() {
  return make_recipe("0", [](const auto& c) { return c.zero(); });
}

// (D(q^9)^2 + 2q D(q^9) Y(q^3) + q^2 Y(q^3)^2) / D(q^3)
template <class C>
auto dissection_3(const C& c) {
  const auto d9 = c.D(9);
  const auto y3 = c.Y(3);
  return (d9 * d9 + 2 * (c.q(1) * d9 * y3) + c.q(2) * y3 * y3) / c.D(3);
}
template <class C>
auto part_0(const C& c) {  // D(q^9)^2 / D(q^3)
  const auto d9 = c.D(9);
  return d9 * d9 / c.D(3);
}
template <class C>
auto part_1(const C& c) {  // 2q D(q^9) Y(q^3) / D(q^3)
  return 2 * (c.q(1) * c.D(9) * c.Y(3)) / c.D(3);
}
template <class C>
auto part_2(const C& c) {  // q^2 Y(q^3)^2 / D(q^3)
  const auto y3 = c.Y(3);
  return c.q(2) * y3 * y3 / c.D(3);
}
template <class C>
auto psi_0(const C& c) {  // f6 f9^2 / (f3 f18)
  return c.eta("f6*f9^2/f3/f18");
}
template <class C>
auto psi_1(const C& c) {  // q f18^2 / f9
  return shift(c.eta("f18^2/f9"), 1);
}

inline const char* dissection_text = "(D(q^9)^2 + 2q D(q^9)Y(q^3) + q^2 Y(q^3)^2)/D(q^3)";

// prefix * X for X one of the dissection pieces above.
inline series_recipe times_dissection(long scalar, std::string prefix) {
  return make_recipe(scalar_text(scalar) + prefix + " * " + dissection_text, [=](const auto& c) {
    return scale(c.eta(prefix) * dissection_3(c), scalar);
  });
}
inline series_recipe times_part(long scalar, std::string prefix, int which) {
  static const char* names[] = {"D(q^9)^2/D(q^3)", "2q D(q^9)Y(q^3)/D(q^3)", "q^2 Y(q^3)^2/D(q^3)"};
  return make_recipe(scalar_text(scalar) + prefix + " * " + names[which], [=](const auto& c) {
    auto piece = which == 0 ? part_0(c) : which == 1 ? part_1(c) : part_2(c);
    return scale(c.eta(prefix) * piece, scalar);
  });
}
inline series_recipe times_psi(long scalar, std::string prefix, int which) {
  static const char* names[] = {"f6 f9^2/(f3 f18)", "q f18^2/f9", "(f6 f9^2/(f3 f18) + q f18^2/f9)"};
  return make_recipe(scalar_text(scalar) + prefix + " * " + names[which], [=](const auto& c) {
    auto piece = which == 0 ? psi_0(c) : which == 1 ? psi_1(c) : psi_0(c) + psi_1(c);
    return scale(c.eta(prefix) * piece, scalar);
  });
}

class registry_builder {
 public:
  explicit registry_builder(const param_bounds& bounds) : bounds_(bounds) {}

  std::vector<registry_entry> take() { return std::move(entries_); }

  std::vector<std::int64_t> values(const param_spec& spec) const { return param_values(bounds_, spec); }

  void family(std::string id, std::string suite, std::int64_t k, progression p, std::uint32_t m,
              order_policy policy = order_policy::standard) {
    registry_entry e{congruence_family{std::move(id), ak_quotient(k), p, m}, {std::move(suite)}, policy,
                     family_text(k, p, m)};
    entries_.push_back(std::move(e));
  }

  void internal(std::string id, std::string suite, std::int64_t k, progression lhs, progression rhs,
                std::uint32_t m) {
    std::string text = "a_" + std::to_string(k) + "(" + lhs.to_string() + ") == a_" + std::to_string(k) + "(" +
                       rhs.to_string() + ") (mod " + std::to_string(m) + ")";
    entries_.push_back({internal_congruence{std::move(id), ak_quotient(k), m, lhs, rhs}, {std::move(suite)},
                        order_policy::standard, std::move(text)});
  }

  void identity(std::string id, std::string suite, series_recipe lhs, series_recipe rhs,
                std::optional<std::uint32_t> m) {
    std::string text = lhs.text + (m ? " == " : " = ") + rhs.text;
    if (m) text += " (mod " + std::to_string(*m) + ")";
    entries_.push_back({series_identity{std::move(id), std::move(lhs), std::move(rhs), m, text},
                        {std::move(suite), "identities"}, order_policy::standard, text});
  }

  void group(identity_group g, std::string suite) {
    std::string text = g.note;
    entries_.push_back({std::move(g), {std::move(suite), "identities"}, order_policy::standard, std::move(text)});
  }

  // One proof step of chain `k`; stages are numbered in call order.
  void step(std::int64_t k, series_recipe lhs, series_recipe rhs, std::uint32_t m = 3,
            std::string chain = "") {
    const std::string key = std::to_string(k) + chain;
    const int stage = ++stages_[key];
    identity("PS_" + key + "_" + std::to_string(stage), "proof_steps", std::move(lhs), std::move(rhs), m);
  }

  void step_internal(std::int64_t k, progression lhs, progression rhs) {
    const std::string key = std::to_string(k);
    const int stage = ++stages_[key];
    internal("PS_" + key + "_" + std::to_string(stage), "proof_steps", k, lhs, rhs, 3);
  }

 private:
  const param_bounds& bounds_;
  std::vector<registry_entry> entries_;
  std::map<std::string, int> stages_;
};

inline void add_families(registry_builder& b) {
  b.family("RAM_5", "ramanujan", 1, {5, 4}, 5);
  b.family("RAM_7", "ramanujan", 1, {7, 5}, 7);
  b.family("RAM_11", "ramanujan", 1, {11, 6}, 11);

  struct mod7_case {
    std::int64_t color_offset;
    std::int64_t residue;
  };
  for (std::int64_t j : b.values({"j", 0, 2, 0, 1000})) {
    for (auto [c, r] : {mod7_case{1, 5}, mod7_case{3, 2}, mod7_case{4, 4}, mod7_case{5, 6}, mod7_case{7, 3}}) {
      const std::int64_t k = 7 * j + c;
      b.family("THM_1_1[j=" + std::to_string(j) + ",k=" + std::to_string(k) + ",7n+" + std::to_string(r) + "]",
               "thm_1_1", k, {7, r}, 7);
    }
  }

  b.family("THM_1_2", "thm_1_2", 5, {5, 3}, 5);
  for (std::int64_t j : b.values({"j", 0, 2, 0, 1000})) {
    b.family("COR_3_2[j=" + std::to_string(j) + "]", "cor_3_2", 5 * j + 5, {5, 3}, 5);
  }

  for (std::int64_t alpha : b.values({"alpha", 0, 2, 0, 18})) {
    const progression p = alpha_progression(alpha, 153, 1, "THM_1_3");
    b.family("THM_1_3[alpha=" + std::to_string(alpha) + "]", "thm_1_3", 5, p, 3,
             alpha >= 1 ? order_policy::deep : order_policy::standard);
  }

  for (std::int64_t t : b.values({"t", 0, 8, 0, 8})) {
    b.family("THM_4_1[t=" + std::to_string(t) + "]", "thm_4_1", 3 * t + 2, {27, 18 + t}, 3);
  }
  for (std::int64_t t : b.values({"t", 0, 8, 0, 8})) {
    b.internal("THM_4_2[t=" + std::to_string(t) + "]", "thm_4_2", 3 * t + 2, {27, internal_r(t)},
               {3, internal_s(t)}, 3);
  }

  for (std::int64_t alpha : b.values({"alpha", 0, 1, 0, 18})) {
    const auto policy = alpha >= 1 ? order_policy::deep : order_policy::standard;
    b.family("COR_4_3[a20,alpha=" + std::to_string(alpha) + "]", "cor_4_3", 20,
             alpha_progression(alpha, 198, 6, "COR_4_3 a20"), 3, policy);
    b.family("COR_4_3[a23,alpha=" + std::to_string(alpha) + "]", "cor_4_3", 23,
             alpha_progression(alpha, 207, 7, "COR_4_3 a23"), 3, policy);
  }

  for (std::int64_t j : b.values({"j", 0, 1, 0, 1000})) {
    for (std::int64_t t : b.values({"t", 0, 8, 0, 8})) {
      b.family("COR_4_4[j=" + std::to_string(j) + ",t=" + std::to_string(t) + "]", "cor_4_4",
               27 * j + 3 * t + 2, {27, 18 + t}, 3);
    }
  }
}

inline void add_lemmas(registry_builder& b) {
  b.identity("D_PROD", "lemmas", make_recipe("D(q)", [](const auto& c) { return c.D(1); }),
             make_recipe("f1^2/f2", [](const auto& c) { return c.eta("f1^2/f2"); }), std::nullopt);
  b.identity("Y_PROD", "lemmas", make_recipe("Y(q)", [](const auto& c) { return c.Y(1); }),
             make_recipe("f1*f6^2/f2/f3", [](const auto& c) { return c.eta("f1*f6^2/f2/f3"); }), std::nullopt);
  b.identity("LEM_2_1", "lemmas", mono(1, 0, "f2/f1^2"),
             make_recipe(dissection_text, [](const auto& c) { return dissection_3(c); }), 3);
  b.identity("LEM_2_2", "lemmas", mono(1, 0, "f2^2/f1"),
             make_recipe("f6 f9^2/(f3 f18) + q f18^2/f9", [](const auto& c) { return psi_0(c) + psi_1(c); }),
             std::nullopt);

  identity_group g{"LEM_2_3", {}, "f_a^(b p) == f_(a p)^b (mod p) for (p,a,b) in (3,1,1) (3,2,3) (5,1,1) (5,2,2) (7,1,1)"};
  struct sample {
    std::int64_t p, a, b;
  };
  for (auto [p, a, bb] : {sample{3, 1, 1}, sample{3, 2, 3}, sample{5, 1, 1}, sample{5, 2, 2}, sample{7, 1, 1}}) {
    const std::string tag = "(p=" + std::to_string(p) + ",a=" + std::to_string(a) + ",b=" + std::to_string(bb) + ")";
    g.parts.push_back(series_identity{
        "LEM_2_3" + tag,
        make_recipe("f" + std::to_string(a) + "^" + std::to_string(bb * p),
                    [=](const auto& c) { return pow(c.f(a), bb * p); }),
        make_recipe("f" + std::to_string(a * p) + "^" + std::to_string(bb),
                    [=](const auto& c) { return pow(c.f(a * p), bb); }),
        static_cast<std::uint32_t>(p), tag});
  }
  b.group(std::move(g), "lemmas");
}

// Mod-5 chains and the dilation chains behind the j-families.
inline void add_lifting_steps(registry_builder& b) {
  b.step(5, whole(5), mono(1, 0, "f10/f5/f2"), 5, "_MOD5");
  b.step(5, whole(5), make_recipe("f10/f5 * sum p(n) q^(2n)", [](const auto& c) {
           return c.eta("f10/f5") * dilate(c.eta("1/f1"), 2);
         }),
         5, "_MOD5");
  for (std::int64_t j = 1; j <= 2; ++j) {
    const std::string prefix = "f10^" + std::to_string(j) + "/f5^" + std::to_string(j);
    b.step(5 * j + 5, whole(5 * j + 5), make_recipe(prefix + " * sum a_5(n) q^n", [=](const auto& c) {
             return c.eta(prefix) * c.ak(5);
           }),
           5, "_MOD5");
  }
  for (std::int64_t t = 0; t <= 8; ++t) {
    const std::int64_t k = 27 + 3 * t + 2;
    b.step(k, whole(k), make_recipe("f54/f27 * sum a_" + std::to_string(3 * t + 2) + "(n) q^n",
                                    [=](const auto& c) { return c.eta("f54/f27") * c.ak(3 * t + 2); }));
  }
}

inline void add_proof_steps(registry_builder& b) {
  // a_5
  b.step(5, whole(5), mono(1, 0, "f6/f3*f2/f1^2"));
  b.step(5, whole(5), times_dissection(1, "f6/f3"));
  b.step(5, comp(5, 3, 1), times_part(1, "f6/f3", 1));
  b.step(5, comp(5, 3, 1), mono(2, 1, "f6*f9*f18/f3^2"));
  b.step(5, ext(5, 3, 1), mono(2, 0, "f3*f6*f2/f1^2"));
  b.step(5, ext(5, 3, 1), mono(2, 0, "f1*f2*f6"));
  b.step(5, ext_comp(5, 3, 1, 0), times_part(2, "f3*f6", 0));
  b.step(5, ext(5, 9, 1), make_recipe("2 f1 f2 D(q^3)^2/D(q)", [](const auto& c) {
           const auto d3 = c.D(3);
           return 2 * (c.eta("f1*f2") * d3 * d3 / c.D(1));
         }));
  b.step(5, ext(5, 9, 1), make_recipe("2 f1 f2 (f3^2/f6)^2 (f2/f1^2)", [](const auto& c) {
           return 2 * (c.eta("f1*f2") * pow(c.eta("f3^2/f6"), 2) * c.eta("f2/f1^2"));
         }));
  b.step(5, ext(5, 9, 1), mono(2, 0, "f3^4/f6^2*f2^2/f1"));
  b.step(5, ext(5, 9, 1), times_psi(2, "f3^4/f6^2", 2));
  b.step(5, ext(5, 27, 19), zero_series());
  b.step(5, ext_comp(5, 9, 1, 1), times_psi(2, "f3^4/f6^2", 1));
  b.step(5, ext_comp(5, 9, 1, 1), mono(2, 1, "f3^4*f6^6/f3^3/f6^2"));
  b.step(5, ext_comp(5, 9, 1, 1), mono(2, 1, "f3*f6^4"));
  b.step(5, ext(5, 27, 10), mono(2, 0, "f1*f2^4"));
  b.step(5, ext(5, 27, 10), mono(2, 0, "f1*f2*f6"));
  b.step_internal(5, {81, 10}, {9, 1});

  // a_8
  b.step(8, whole(8), mono(1, 0, "f6^2/f3^2*f2/f1^2"));
  b.step(8, whole(8), times_dissection(1, "f6^2/f3^2"));
  b.step(8, comp(8, 3, 2), times_part(1, "f6^2/f3^2", 2));
  b.step(8, comp(8, 3, 2), mono(1, 2, "f6*f18^4/f3^2/f9^2"));
  b.step(8, ext(8, 3, 2), mono(1, 0, "f2*f6^4/f1^2/f3^2"));
  b.step(8, ext_comp(8, 3, 2, 0), times_part(1, "f6^4/f3^2", 0));
  b.step(8, ext(8, 9, 2), make_recipe("f2^4/f1^2 D(q^3)^2/D(q)", [](const auto& c) {
           const auto d3 = c.D(3);
           return c.eta("f2^4/f1^2") * d3 * d3 / c.D(1);
         }));
  b.step(8, ext(8, 9, 2), make_recipe("f2^4/f1^2 (f3^2/f6)^2 f2/f1^2", [](const auto& c) {
           return c.eta("f2^4/f1^2") * pow(c.eta("f3^2/f6"), 2) * c.eta("f2/f1^2");
         }));
  b.step(8, ext(8, 9, 2), mono(1, 0, "f2^3*f3^4/f6^2/f1^3*f2^2/f1"));
  b.step(8, ext(8, 9, 2), mono(1, 0, "f3^3/f6*f2^2/f1"));
  b.step(8, ext(8, 9, 2), times_psi(1, "f3^3/f6", 2));
  b.step(8, ext(8, 27, 20), zero_series());
  b.step(8, ext(8, 3, 0), mono(1, 0, "f2^3*f3^4/f1^4/f6^2"));
  b.step(8, ext(8, 3, 0), mono(1, 0, "f1^8/f2^3"));
  b.step(8, ext_comp(8, 9, 2, 0), times_psi(1, "f3^3/f6", 0));
  b.step(8, ext_comp(8, 9, 2, 0), mono(1, 0, "f3^2*f9^2/f18"));
  b.step(8, ext(8, 27, 2), mono(1, 0, "f1^2*f3^2/f6"));
  b.step(8, ext(8, 27, 2), mono(1, 0, "f1^8/f2^3"));

  // a_11
  b.step(11, whole(11), mono(1, 0, "f6^3/f3^3*f2/f1^2"));
  b.step(11, whole(11), times_dissection(1, "f6^3/f3^3"));
  b.step(11, comp(11, 3, 0), times_part(1, "f6^3/f3^3", 0));
  b.step(11, comp(11, 3, 0), mono(1, 0, "f6^4*f9^4/f3^5/f18^2"));
  b.step(11, ext(11, 3, 0), mono(1, 0, "f2^4*f3^4/f1^5/f6^2"));
  b.step(11, ext(11, 3, 0), mono(1, 0, "f3^3/f6*f2/f1^2"));
  b.step(11, ext_comp(11, 3, 0, 1), times_part(1, "f3^3/f6", 1));
  b.step(11, ext(11, 9, 3), mono(2, 0, "f1^2*f3*f6/f2"));
  b.step(11, ext(11, 9, 3), mono(2, 0, "f3^2*f2^2/f1"));
  b.step(11, ext(11, 27, 21), zero_series());
  b.step(11, comp(11, 3, 1), times_part(1, "f6^3/f3^3", 1));
  b.step(11, comp(11, 3, 1), mono(2, 1, "f6^3*f9*f18/f3^4"));
  b.step(11, ext(11, 3, 1), mono(2, 0, "f2^3*f3*f6/f1^4"));
  b.step(11, ext(11, 3, 1), mono(2, 0, "f2^6/f1"));
  b.step(11, ext_comp(11, 9, 3, 1), times_psi(2, "f3^2", 1));
  b.step(11, ext(11, 27, 12), mono(2, 0, "f1^2*f6^2/f3"));
  b.step(11, ext(11, 27, 12), mono(2, 0, "f2^6/f1"));

  // a_14
  b.step(14, whole(14), mono(1, 0, "f6^4/f3^4*f2/f1^2"));
  b.step(14, whole(14), times_dissection(1, "f6^4/f3^4"));
  b.step(14, comp(14, 3, 1), times_part(1, "f6^4/f3^4", 1));
  b.step(14, comp(14, 3, 1), mono(2, 1, "f6^4*f9*f18/f3^5"));
  b.step(14, ext(14, 3, 1), mono(2, 0, "f2^4*f3*f6/f1^5"));
  b.step(14, ext(14, 3, 1), mono(2, 0, "f6^2*f2/f1^2"));
  b.step(14, ext_comp(14, 3, 1, 1), times_part(2, "f6^2", 1));
  b.step(14, ext(14, 9, 4), mono(1, 0, "f3*f6*f2^2/f1"));
  b.step(14, ext(14, 27, 22), zero_series());
  b.step(14, comp(14, 3, 0), times_part(1, "f6^4/f3^4", 0));
  b.step(14, comp(14, 3, 0), mono(1, 0, "f6^5*f9^4/f3^6/f18^2"));
  b.step(14, ext(14, 3, 0), mono(1, 0, "f2^5*f3^4/f1^6/f6^2"));
  b.step(14, ext(14, 3, 0), mono(1, 0, "f1^6/f2"));
  b.step(14, ext_comp(14, 9, 4, 0), times_psi(1, "f3*f6", 0));
  b.step(14, ext_comp(14, 9, 4, 0), mono(1, 0, "f6^2*f9^2/f18"));
  b.step(14, ext(14, 27, 4), mono(1, 0, "f2^2*f3^2/f6"));
  b.step(14, ext(14, 27, 4), mono(1, 0, "f1^6/f2"));

  // a_17
  b.step(17, whole(17), mono(1, 0, "f6^5/f3^5*f2/f1^2"));
  b.step(17, whole(17), times_dissection(1, "f6^5/f3^5"));
  b.step(17, comp(17, 3, 2), times_part(1, "f6^5/f3^5", 2));
  b.step(17, comp(17, 3, 2), mono(1, 2, "f6^4*f18^4/f3^5/f9^2"));
  b.step(17, ext(17, 3, 2), mono(1, 0, "f2^4*f6^4/f1^5/f3^2"));
  b.step(17, ext(17, 3, 2), mono(1, 0, "f6^5/f3^3*f2/f1^2"));
  b.step(17, ext_comp(17, 3, 2, 1), times_part(1, "f6^5/f3^3", 1));
  b.step(17, ext(17, 9, 5), mono(2, 0, "f6^2*f2^2/f1"));
  b.step(17, ext(17, 27, 23), zero_series());
  b.step(17, comp(17, 3, 1), times_part(1, "f6^5/f3^5", 1));
  b.step(17, comp(17, 3, 1), mono(2, 1, "f6^5*f9*f18/f3^6"));
  b.step(17, ext(17, 3, 1), mono(2, 0, "f2^8/f1^3"));
  b.step(17, ext_comp(17, 9, 5, 1), times_psi(2, "f6^2", 1));
  b.step(17, ext(17, 27, 14), mono(2, 0, "f2^2*f6^2/f3"));
  b.step(17, ext(17, 27, 14), mono(2, 0, "f2^8/f1^3"));

  // a_20
  b.step(20, whole(20), mono(1, 0, "f6^6/f3^6*f2/f1^2"));
  b.step(20, whole(20), times_dissection(1, "f6^6/f3^6"));
  b.step(20, comp(20, 3, 0), times_part(1, "f6^6/f3^6", 0));
  b.step(20, comp(20, 3, 0), mono(1, 0, "f6^7*f9^4/f3^8/f18^2"));
  b.step(20, ext(20, 3, 0), mono(1, 0, "f2^7*f3^4/f1^8/f6^2"));
  b.step(20, ext(20, 3, 0), mono(1, 0, "f3^2*f2/f1^2"));
  b.step(20, ext_comp(20, 3, 0, 2), times_part(1, "f3^2", 2));
  b.step(20, ext(20, 9, 6), mono(1, 0, "f6^3/f3*f2^2/f1"));
  b.step(20, ext(20, 27, 24), zero_series());
  b.step(20, ext(20, 3, 0), mono(1, 0, "f1^4*f2"));
  b.step(20, ext_comp(20, 9, 6, 0), times_psi(1, "f6^3/f3", 0));
  b.step(20, ext_comp(20, 9, 6, 0), mono(1, 0, "f6^4*f9^2/f3^2/f18"));
  b.step(20, ext(20, 27, 6), mono(1, 0, "f2^4*f3^2/f1^2/f6"));
  b.step(20, ext(20, 27, 6), mono(1, 0, "f1^4*f2"));

  // a_23
  b.step(23, whole(23), mono(1, 0, "f6^7/f3^7*f2/f1^2"));
  b.step(23, whole(23), times_dissection(1, "f6^7/f3^7"));
  b.step(23, comp(23, 3, 1), times_part(1, "f6^7/f3^7", 1));
  b.step(23, comp(23, 3, 1), mono(2, 1, "f6^7*f9*f18/f3^8"));
  b.step(23, ext(23, 3, 1), mono(2, 0, "f2^7*f3*f6/f1^8"));
  b.step(23, ext(23, 3, 1), mono(2, 0, "f6^3/f3*f2/f1^2"));
  b.step(23, ext_comp(23, 3, 1, 2), times_part(2, "f6^3/f3", 2));
  b.step(23, ext(23, 9, 7), mono(2, 0, "f6^4/f3^2*f2^2/f1"));
  b.step(23, ext(23, 27, 25), zero_series());
  b.step(23, ext(23, 3, 1), mono(2, 0, "f2^10/f1^5"));
  b.step(23, ext_comp(23, 9, 7, 1), times_psi(2, "f6^4/f3^2", 1));
  b.step(23, ext(23, 27, 16), mono(2, 0, "f2^4*f6^2/f1^2/f3"));
  b.step(23, ext(23, 27, 16), mono(2, 0, "f2^10/f1^5"));

  // a_26
  b.step(26, whole(26), mono(1, 0, "f6^8/f3^8*f2/f1^2"));
  b.step(26, whole(26), times_dissection(1, "f6^8/f3^8"));
  b.step(26, comp(26, 3, 2), times_part(1, "f6^8/f3^8", 2));
  b.step(26, comp(26, 3, 2), mono(1, 2, "f6^7*f18^4/f3^8/f9^2"));
  b.step(26, ext(26, 3, 2), mono(1, 0, "f2^7*f6^4/f1^8/f3^2"));
  b.step(26, ext(26, 3, 2), mono(1, 0, "f6^6/f3^4*f2/f1^2"));
  b.step(26, ext_comp(26, 3, 2, 2), times_part(1, "f6^6/f3^4", 2));
  b.step(26, ext(26, 9, 8), mono(1, 0, "f6^5/f3^3*f2^2/f1"));
  b.step(26, ext(26, 27, 26), zero_series());
  b.step(26, comp(26, 3, 0), times_part(1, "f6^8/f3^8", 0));
  b.step(26, comp(26, 3, 0), mono(1, 0, "f6^9*f9^4/f3^10/f18^2"));
  b.step(26, ext(26, 3, 0), mono(1, 0, "f2^9*f3^4/f1^10/f6^2"));
  b.step(26, ext(26, 3, 0), mono(1, 0, "f1^2*f2^3"));
  b.step(26, ext_comp(26, 9, 8, 0), times_psi(1, "f6^5/f3^3", 0));
  b.step(26, ext(26, 27, 8), mono(1, 0, "f2^6*f3^2/f1^4/f6"));
  b.step(26, ext(26, 27, 8), mono(1, 0, "f1^2*f2^3"));

  add_lifting_steps(b);
}

}  // namespace detail

inline std::vector<registry_entry> build_registry(const param_bounds& bounds = {}) {
  detail::registry_builder b(bounds);
  detail::add_families(b);
  detail::add_lemmas(b);
  detail::add_proof_steps(b);
  return b.take();
}

inline std::vector<std::string> suite_ids(const std::vector<registry_entry>& registry) {
  std::set<std::string> ids{"all"};
  for (const auto& e : registry) ids.insert(e.suites.begin(), e.suites.end());
  return {ids.begin(), ids.end()};
}

inline std::vector<const registry_entry*> select_suite(const std::vector<registry_entry>& registry,
                                                       std::string_view suite) {
  const auto known = suite_ids(registry);
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    std::string list;
    for (const auto& s : known) list += (list.empty() ? "" : ", ") + s;
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "' (known: " + list + ")");
  }
  std::vector<const registry_entry*> out;
  for (const auto& e : registry) {
    if (e.in_suite(suite)) out.push_back(&e);
  }
  return out;
}

// Runs a suite; reports come back in registry order regardless of `threads`.
inline std::vector<report> run_suite(std::string_view suite, std::size_t order, const param_bounds& bounds = {},
                                     unsigned threads = 1) {
  const auto registry = build_registry(bounds);
  const auto selected = select_suite(registry, suite);
  std::vector<report> reports(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) reports[i] = run_entry(*selected[i], order);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(selected.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return reports;
}

}  // namespace parity_forge
