#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace parity_forge {

enum class check_status { pass, fail, skipped };

inline const char* to_string(check_status s) {
  switch (s) {
    case check_status::pass:
      return "pass";
    case check_status::fail:
      return "fail";
    case check_status::skipped:
      return "skipped";
  }
  return "?";
}

inline check_status parse_check_status(const std::string& s) {
  if (s == "pass") return check_status::pass;
  if (s == "fail") return check_status::fail;
  if (s == "skipped") return check_status::skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

// First violation found. For vanishing checks n is the progression index and
// index = A n + B; for series comparisons both are the exponent. residue is
// the offending value (or lhs - rhs) reduced mod M, exact when unreduced.
struct counterexample {
  std::int64_t n = 0;
  std::int64_t index = 0;
  std::string residue;

  friend bool operator==(const counterexample&, const counterexample&) = default;
};

// Outcome of one registry check. A pass means "verified to order N": every
// coefficient up to the truncation order satisfied the claim.
struct report {
  std::string id;
  check_status status = check_status::skipped;
  std::size_t order = 0;
  std::size_t range_checked = 0;
  std::optional<counterexample> failure;
  double elapsed_ms = 0.0;

  bool passed() const { return status == check_status::pass; }
};

inline nlohmann::json to_json(const report& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["order"] = r.order;
  j["range_checked"] = r.range_checked;
  if (r.failure) {
    nlohmann::json residue;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(r.failure->residue, &used);
      residue = used == r.failure->residue.size() ? nlohmann::json(v) : nlohmann::json(r.failure->residue);
    } catch (const std::exception&) {
      residue = r.failure->residue;  // beyond 64 bits: keep exact decimal text
    }
    j["counterexample"] = {{"n", r.failure->n}, {"index", r.failure->index}, {"residue", residue}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline report report_from_json(const nlohmann::json& j) {
  report r;
  r.id = j.at("id").get<std::string>();
  r.status = parse_check_status(j.at("status").get<std::string>());
  r.order = j.at("order").get<std::size_t>();
  r.range_checked = j.at("range_checked").get<std::size_t>();
  const auto& ce = j.at("counterexample");
  if (!ce.is_null()) {
    counterexample c;
    c.n = ce.at("n").get<std::int64_t>();
    c.index = ce.at("index").get<std::int64_t>();
    const auto& res = ce.at("residue");
    c.residue = res.is_string() ? res.get<std::string>() : std::to_string(res.get<long long>());
    r.failure = c;
  }
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

inline nlohmann::json to_json(const std::vector<report>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

inline void render_table(const std::vector<report>& reports, std::ostream& out) {
  std::size_t width = 2;
  for (const auto& r : reports) width = std::max(width, r.id.size());
  out << std::left << std::setw(static_cast<int>(width)) << "id" << "  " << std::setw(7) << "status"
      << "  " << std::right << std::setw(6) << "order" << "  " << std::setw(7) << "checked" << "  "
      << std::setw(9) << "ms" << "  counterexample\n";
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(7)
        << to_string(r.status) << "  " << std::right << std::setw(6) << r.order << "  " << std::setw(7)
        << r.range_checked << "  " << std::setw(9) << std::fixed << std::setprecision(1) << r.elapsed_ms
        << "  ";
    if (r.failure) {
      out << "n=" << r.failure->n << " index=" << r.failure->index << " residue=" << r.failure->residue;
    } else {
      out << "-";
    }
    out << '\n';
    switch (r.status) {
      case check_status::pass:
        ++pass;
        break;
      case check_status::fail:
        ++fail;
        break;
      case check_status::skipped:
        ++skipped;
        break;
    }
  }
  out << pass << " passed, " << fail << " failed, " << skipped << " skipped";
  out << " (numerical verification to the stated truncation order)\n";
}

}  // namespace parity_forge
