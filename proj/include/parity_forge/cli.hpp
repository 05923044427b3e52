#pragma once

/*
 * Subcommand bodies for the parity_forge tool. Each takes its parsed config
 * and two streams and returns the process exit code:
 *   0  every check passed
 *   1  some check failed or was skipped
 *   2  usage, parse or configuration error
 */

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parity_forge/registry.hpp"
#include "parity_forge/series_io.hpp"

namespace parity_forge::cli {

inline constexpr std::size_t default_order = 2000;

struct config {
  std::size_t order = default_order;
  std::optional<std::uint64_t> modulus;
  series_format format = series_format::text;
  std::optional<std::string> out;  // handled by the caller
  std::string params;              // suite parameter bounds
  unsigned threads = 1;
};

// PARITY_FORGE_ORDER, when set, replaces the built-in default order.
inline std::size_t order_from_env(const char* value) {
  if (value == nullptr || *value == '\0') return default_order;
  std::string_view v(value);
  std::size_t n = 0;
  for (char ch : v) {
    if (ch < '0' || ch > '9') throw config_error("PARITY_FORGE_ORDER must be a nonnegative integer");
    n = n * 10 + static_cast<std::size_t>(ch - '0');
  }
  return n;
}

inline std::size_t env_default_order() { return order_from_env(std::getenv("PARITY_FORGE_ORDER")); }

// "error: msg" plus the offending input with a caret under `position`.
inline void print_caret(std::ostream& err, std::string_view input, const parse_error& e) {
  err << "error: " << e.what() << '\n';
  if (e.line() != 0 || input.empty()) return;
  err << "  " << input << '\n' << "  " << std::string(std::min(e.position(), input.size()), ' ') << "^\n";
}

namespace detail {

inline void check_modulus(std::uint64_t m) {
  if (m < 2 || m > 0xffffffffULL) throw config_error("modulus must satisfy 2 <= m < 2^32");
}

template <class Ring>
void emit(const basic_series<Ring>& s, const config& cfg, std::ostream& out) {
  out << render(s, cfg.format);
}

inline std::string reports_csv(const std::vector<report>& reports) {
  std::string out = "id,status,order,range_checked,n,index,residue,elapsed_ms\n";
  for (const auto& r : reports) {
    std::ostringstream row;
    row << r.id << ',' << to_string(r.status) << ',' << r.order << ',' << r.range_checked << ',';
    if (r.failure) row << r.failure->n << ',' << r.failure->index << ',' << r.failure->residue;
    else row << ",,";
    row << ',' << r.elapsed_ms << '\n';
    out += row.str();
  }
  return out;
}

// JSON goes to `out` with the table on `err`; otherwise the table is the output.
inline int emit_reports(const std::vector<report>& reports, const config& cfg, std::ostream& out,
                        std::ostream& err) {
  switch (cfg.format) {
    case series_format::json:
      out << to_json(reports).dump(2) << '\n';
      render_table(reports, err);
      break;
    case series_format::csv:
      out << reports_csv(reports);
      break;
    case series_format::text:
      render_table(reports, out);
      break;
  }
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.passed();
  return all_pass ? 0 : 1;
}

// Runs `body`, turning input and configuration errors into exit code 2.
template <class F>
int guarded(std::string_view input, std::ostream& err, F body) {
  try {
    return body();
  } catch (const parse_error& e) {
    print_caret(err, input, e);
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const non_unit_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ad-hoc check specs
//
//   ak=<k> A=<A> B=<B> mod=<M>
//   internal ak=<k> lhs=<A1>,<B1> rhs=<A2>,<B2> mod=<M>
//
// eta=<quotient> may replace ak=<k> (no spaces inside the quotient).

using check_spec = std::variant<congruence_family, internal_congruence>;

inline check_spec parse_check_spec(std::string_view text) {
  struct token {
    std::string_view text;
    std::size_t pos;
  };
  std::vector<token> tokens;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    tokens.push_back({text.substr(i, j - i), i});
    i = j;
  }
  if (tokens.empty()) throw parse_error("empty check spec", 0);

  auto number = [](std::string_view s, std::size_t pos) -> std::int64_t {
    if (s.empty()) throw parse_error("expected a number", pos);
    std::int64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw parse_error("expected a number", pos + i);
      if (v > (INT64_MAX - 9) / 10) throw parse_error("number too large", pos);
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };

  bool internal = false;
  std::size_t first = 0;
  if (tokens[0].text == "internal") {
    internal = true;
    first = 1;
  }
  std::optional<eta_quotient> source;
  std::optional<std::int64_t> a, b, mod;
  std::optional<progression> lhs, rhs;
  std::string source_text;

  for (std::size_t t = first; t < tokens.size(); ++t) {
    const auto [tok, pos] = tokens[t];
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos) throw parse_error("expected key=value", pos);
    const std::string_view key = tok.substr(0, eq);
    const std::string_view val = tok.substr(eq + 1);
    const std::size_t vpos = pos + eq + 1;
    if (key == "ak") {
      const std::int64_t k = number(val, vpos);
      if (k < 1) throw parse_error("ak needs k >= 1", vpos);
      source = ak_quotient(k);
      source_text = "a_" + std::to_string(k);
    } else if (key == "eta") {
      try {
        source = parse_eta_quotient(val);
      } catch (const parse_error& e) {
        throw parse_error(e.what(), vpos + e.position());
      }
      source_text = std::string(val);
    } else if (key == "mod") {
      mod = number(val, vpos);
      if (*mod < 2 || *mod > 0xffffffffLL) throw parse_error("mod must satisfy 2 <= M < 2^32", vpos);
    } else if (!internal && key == "A") {
      a = number(val, vpos);
      if (*a < 1) throw parse_error("A must be >= 1", vpos);
    } else if (!internal && key == "B") {
      b = number(val, vpos);
    } else if (internal && (key == "lhs" || key == "rhs")) {
      const std::size_t comma = val.find(',');
      if (comma == std::string_view::npos) throw parse_error("expected <A>,<B>", vpos);
      progression p{number(val.substr(0, comma), vpos), number(val.substr(comma + 1), vpos + comma + 1)};
      if (p.stride < 1) throw parse_error("stride must be >= 1", vpos);
      (key == "lhs" ? lhs : rhs) = p;
    } else {
      throw parse_error("unknown key '" + std::string(key) + "'", pos);
    }
  }

  const std::size_t end = text.size();
  if (!source) throw parse_error("missing ak=<k> (or eta=<quotient>)", end);
  if (!mod) throw parse_error("missing mod=<M>", end);
  const auto m = static_cast<std::uint32_t>(*mod);
  if (internal) {
    if (!lhs || !rhs) throw parse_error("internal spec needs lhs=<A1>,<B1> and rhs=<A2>,<B2>", end);
    return internal_congruence{source_text + "(" + lhs->to_string() + ") == " + source_text + "(" +
                                   rhs->to_string() + ") mod " + std::to_string(m),
                               *source, m, *lhs, *rhs};
  }
  if (!a || !b) throw parse_error("missing A=<A> or B=<B>", end);
  progression p{*a, *b};
  return congruence_family{source_text + "(" + p.to_string() + ") mod " + std::to_string(m), *source, p, m};
}

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_expand(std::string_view quotient, const config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(quotient, err, [&] {
    const eta_quotient q = parse_eta_quotient(quotient);
    if (cfg.modulus) {
      detail::check_modulus(*cfg.modulus);
      detail::emit(eval_eta_mod(q, cfg.order, *cfg.modulus), cfg, out);
    } else {
      detail::emit(eval_eta(q, cfg.order, integer_ring{}), cfg, out);
    }
    return 0;
  });
}

inline int cmd_ak(std::int64_t k, const config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded("", err, [&] {
    const auto n = static_cast<std::int64_t>(cfg.order);
    if (cfg.modulus) {
      detail::check_modulus(*cfg.modulus);
      detail::emit(ak_series_mod(k, n, *cfg.modulus), cfg, out);
    } else {
      detail::emit(ak_series(k, n), cfg, out);
    }
    return 0;
  });
}

// `input` is series text or JSON; the result is sum_n c(m n + r) q^n.
inline int cmd_dissect(std::string_view input, std::size_t m, std::size_t r, const config& cfg,
                       std::ostream& out, std::ostream& err) {
  return detail::guarded("", err, [&] {
    const series s = parse_series(input);
    const series part = extract(s, m, r);
    if (cfg.modulus) {
      detail::check_modulus(*cfg.modulus);
      detail::emit(reduce_mod(part, *cfg.modulus), cfg, out);
    } else {
      detail::emit(part, cfg, out);
    }
    return 0;
  });
}

inline int cmd_check(std::string_view spec, const config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(spec, err, [&] {
    const check_spec parsed = parse_check_spec(spec);
    const report r = std::visit(
        [&](const auto& c) -> report {
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, congruence_family>) {
            return check_vanishing(c, cfg.order);
          } else {
            return check_internal(c, cfg.order);
          }
        },
        parsed);
    return detail::emit_reports({r}, cfg, out, err);
  });
}

inline int cmd_suite(std::string_view suite, const config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(cfg.params, err, [&] {
    const param_bounds bounds = parse_param_bounds(cfg.params);
    return detail::emit_reports(run_suite(suite, cfg.order, bounds, cfg.threads), cfg, out, err);
  });
}

// One line per entry: id, suites, deep/standard, statement.
inline int cmd_list(std::string_view suite, const config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(cfg.params, err, [&] {
    const auto registry = build_registry(parse_param_bounds(cfg.params));
    for (const registry_entry* e : select_suite(registry, suite)) {
      out << e->id() << '\t' << (e->policy == order_policy::deep ? "deep" : "standard") << '\t'
          << e->description << '\n';
    }
    return 0;
  });
}

}  // namespace parity_forge::cli
