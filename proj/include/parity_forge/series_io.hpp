#pragma once

/*
 * Series file formats.
 *
 *   text  one term per line, "n<TAB>coefficient", ascending n; absent n are
 *         zero and the largest n listed is the truncation order
 *   json  {"order": N, "coeffs": [c0, ..., cN]}
 *   csv   header "n,coefficient" then one row per term
 *
 * Coefficients are always written as exact decimal integers. The JSON reader
 * keeps the raw token of every number so values beyond 64 bits survive.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parity_forge/errors.hpp"
#include "parity_forge/series.hpp"

namespace parity_forge {

enum class series_format { text, json, csv };

inline series_format parse_series_format(std::string_view name) {
  if (name == "text") return series_format::text;
  if (name == "json") return series_format::json;
  if (name == "csv") return series_format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (text, json, csv)");
}

template <class Ring>
std::string to_text(const basic_series<Ring>& s) {
  std::string out;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    out += std::to_string(n);
    out += '\t';
    out += s.ring().to_string(s.coeffs()[n]);
    out += '\n';
  }
  return out;
}

template <class Ring>
std::string to_csv(const basic_series<Ring>& s) {
  std::string out = "n,coefficient\n";
  for (std::size_t n = 0; n <= s.order(); ++n) {
    out += std::to_string(n) + ',' + s.ring().to_string(s.coeffs()[n]) + '\n';
  }
  return out;
}

template <class Ring>
std::string to_json(const basic_series<Ring>& s) {
  std::string out = "{\"order\": " + std::to_string(s.order()) + ", \"coeffs\": [";
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n != 0) out += ", ";
    out += s.ring().to_string(s.coeffs()[n]);
  }
  out += "]}";
  return out;
}

template <class Ring>
std::string render(const basic_series<Ring>& s, series_format format) {
  switch (format) {
    case series_format::json:
      return to_json(s) + '\n';
    case series_format::csv:
      return to_csv(s);
    case series_format::text:
      break;
  }
  return to_text(s);
}

namespace detail {

inline integer parse_integer_token(std::string_view tok, std::size_t line) {
  std::size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (i == tok.size()) throw parse_error("expected an integer", 0, line);
  for (std::size_t j = i; j < tok.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(tok[j]))) {
      throw parse_error("'" + std::string(tok) + "' is not an integer", j, line);
    }
  }
  std::string digits(tok.substr(tok[0] == '+' ? 1 : 0));
  return integer(digits, 10);
}

// SAX consumer for {"order": N, "coeffs": [...]}. Other keys are ignored.
class series_json_reader : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::optional<std::string> order;
  std::vector<std::string> coeffs;
  bool saw_coeffs = false;

  bool null() override { return in_ignored() || unexpected("null"); }
  bool boolean(bool) override { return in_ignored() || unexpected("boolean"); }
  bool number_integer(number_integer_t v) override { return number(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) override { return number(raw); }
  bool string(string_t&) override { return in_ignored() || unexpected("string"); }
  bool binary(binary_t&) override { return unexpected("binary"); }

  bool start_object(std::size_t) override {
    ++depth_;
    return depth_ == 1 || in_ignored() || unexpected("object");
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool key(string_t& k) override {
    if (depth_ == 1) key_ = k;
    return true;
  }
  bool start_array(std::size_t) override {
    ++depth_;
    if (depth_ == 2 && key_ == "coeffs") {
      saw_coeffs = true;
      return true;
    }
    return in_ignored() || unexpected("array");
  }
  bool end_array() override {
    --depth_;
    return true;
  }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    throw ::parity_forge::parse_error(ex.what(), position);
  }

 private:
  int depth_ = 0;
  std::string key_;

  // Inside the value of a top-level key other than "order" / "coeffs".
  bool in_ignored() const { return depth_ >= 1 && !key_.empty() && key_ != "coeffs" && key_ != "order"; }

  bool number(const std::string& raw) {
    if (depth_ == 1 && key_ == "order") {
      order = raw;
    } else if (depth_ == 2 && key_ == "coeffs") {
      coeffs.push_back(raw);
    } else if (!in_ignored()) {
      return unexpected("number");
    }
    return true;
  }

  bool unexpected(const char* what) {
    throw ::parity_forge::parse_error(std::string("unexpected ") + what + " in series JSON", 0);
  }
};

}  // namespace detail

inline series parse_series_json(std::string_view text) {
  detail::series_json_reader reader;
  nlohmann::json::sax_parse(text.begin(), text.end(), &reader);
  if (!reader.saw_coeffs) throw parse_error("series JSON lacks \"coeffs\"", 0);
  std::vector<integer> c;
  c.reserve(reader.coeffs.size());
  for (const auto& tok : reader.coeffs) c.push_back(detail::parse_integer_token(tok, 0));
  std::int64_t order = static_cast<std::int64_t>(c.size()) - 1;
  if (reader.order) {
    const integer declared = detail::parse_integer_token(*reader.order, 0);
    if (!declared.fits_slong_p() || declared < 0) throw parse_error("invalid \"order\"", 0);
    order = declared.get_si();
  }
  if (order < 0) throw parse_error("series JSON has no coefficients and no order", 0);
  return make_series(std::move(c), order);
}

inline series parse_series_text(std::string_view text) {
  std::vector<integer> c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::int64_t last = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string n_tok, c_tok, extra;
    if (!(fields >> n_tok)) continue;  // blank line
    if (!(fields >> c_tok)) throw parse_error("missing coefficient", 0, line_no);
    if (fields >> extra) throw parse_error("trailing field '" + extra + "'", 0, line_no);
    const integer n = detail::parse_integer_token(n_tok, line_no);
    if (n < 0 || !n.fits_slong_p()) throw parse_error("invalid exponent " + n_tok, 0, line_no);
    const std::int64_t e = n.get_si();
    if (e <= last) throw parse_error("exponents must be strictly ascending", 0, line_no);
    last = e;
    c.resize(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = detail::parse_integer_token(c_tok, line_no);
  }
  if (last < 0) throw parse_error("series text contains no terms", 0, line_no);
  return make_series(std::move(c), last);
}

// Dispatches on the first non-blank character: '{' means JSON.
inline series parse_series(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_series_json(text);
    break;
  }
  return parse_series_text(text);
}

inline series read_series(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_series(buf.str());
}

}  // namespace parity_forge
