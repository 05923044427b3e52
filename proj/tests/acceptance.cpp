// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "parity_forge/registry.hpp"

using namespace parity_forge;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool all_pass(const std::vector<report>& reports, std::string& detail) {
  for (const auto& r : reports) {
    if (!r.passed()) {
      detail = r.id + " " + to_string(r.status);
      return false;
    }
  }
  return true;
}

bool run_all(std::string_view suite, std::size_t order, const param_bounds& bounds, std::string& detail,
             std::size_t expected = 0) {
  const auto reports = run_suite(suite, order, bounds);
  if (expected != 0 && reports.size() != expected) {
    detail = std::string(suite) + ": " + std::to_string(reports.size()) + " reports, expected " +
             std::to_string(expected);
    return false;
  }
  if (!all_pass(reports, detail)) return false;
  detail = std::to_string(reports.size()) + " checks";
  return true;
}

const registry_entry& entry(const std::vector<registry_entry>& reg, const std::string& id) {
  for (const auto& e : reg) {
    if (e.id() == id) return e;
  }
  throw std::runtime_error("missing registry entry " + id);
}

// 1
bool oracle_equivalence(std::string& detail) {
  const auto t0 = clock_type::now();
  for (std::int64_t k : {1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 17, 20, 23, 26, 29}) {
    if (ak_oracle(k, 200) != ak_series(k, 200)) {
      detail = "mismatch at k=" + std::to_string(k);
      return false;
    }
  }
  const double s = seconds_since(t0);
  detail = std::to_string(s) + " s";
  return s < 5.0;
}

// 2
bool known_values(std::string& detail) {
  const bool p4 = ak_series(1, 4).coeff(4) == 5;
  // enumeration: 1, 5, 16, 45 (C(7,3) + 5 + 5 = 45 for n = 3)
  const bool a5 = ak_series(5, 3) == make_series({1, 5, 16, 45}, 3) && ak_oracle(5, 3) == ak_series(5, 3);
  detail = "p(4)=" + ak_series(1, 4).coeff(4).get_str() + ", a_5 prefix 1 5 16 " + ak_series(5, 3).coeff(3).get_str();
  return p4 && a5;
}

// 4
bool theorem_mod5(std::string& detail) {
  const auto t0 = clock_type::now();
  const auto reg = build_registry();
  const report r = run_entry(entry(reg, "THM_1_2"), 2000);
  const double s = seconds_since(t0);
  detail = std::to_string(r.range_checked) + " cases, " + std::to_string(s) + " s";
  return r.passed() && r.range_checked == 400 && s < 2.0;
}

// 7
bool theorem_mod3_alpha(std::string& detail) {
  const auto t0 = clock_type::now();
  const auto reg = build_registry(parse_param_bounds("alpha=0..2"));
  const progression expect[] = {{27, 19}, {243, 172}, {2187, 1549}};
  for (int a = 0; a <= 2; ++a) {
    const auto& e = entry(reg, "THM_1_3[alpha=" + std::to_string(a) + "]");
    if (std::get<congruence_family>(e.check).terms != expect[a]) {
      detail = "wrong progression for alpha=" + std::to_string(a);
      return false;
    }
  }
  const report r2 = run_entry(entry(reg, "THM_1_3[alpha=2]"), 2000);
  if (r2.order != 20000 || r2.range_checked != 9) {
    detail = "alpha=2 instance ran at order " + std::to_string(r2.order);
    return false;
  }
  if (!run_all("thm_1_3", 2000, parse_param_bounds("alpha=0..2"), detail, 3)) return false;
  const double s = seconds_since(t0);
  detail += ", " + std::to_string(s) + " s";
  return s < 60.0;
}

// 9
bool internal_congruences(std::string& detail) {
  const std::int64_t r[] = {0, 10, 2, 12, 4, 14, 6, 16, 8};
  const std::int64_t s[] = {0, 1, 0, 1, 0, 1, 0, 1, 0};
  const auto reg = build_registry();
  for (int t = 0; t <= 8; ++t) {
    const auto& c = std::get<internal_congruence>(entry(reg, "THM_4_2[t=" + std::to_string(t) + "]").check);
    if (c.lhs != progression{27, r[t]} || c.rhs != progression{3, s[t]}) {
      detail = "table mismatch at t=" + std::to_string(t);
      return false;
    }
  }
  return run_all("thm_4_2", 2000, {}, detail, 9);
}

// 10
bool corollaries_mod3(std::string& detail) {
  std::string a, b;
  const bool ok = run_all("cor_4_3", 2000, parse_param_bounds("alpha=0..1"), a, 4) &&
                  run_all("cor_4_4", 2000, parse_param_bounds("j=0..1,t=0..8"), b, 18);
  detail = a + (b.empty() ? "" : " + " + b);
  return ok;
}

// 11
bool identity_suite(std::string& detail) {
  const auto reg = build_registry();
  const std::pair<const char*, std::size_t> plan[] = {
      {"D_PROD", 1000}, {"Y_PROD", 1000}, {"LEM_2_1", 2000}, {"LEM_2_2", 2000}, {"LEM_2_3", 500}};
  for (auto [id, order] : plan) {
    const registry_entry& e = entry(reg, id);
    const report r = run_entry(e, order);
    if (!r.passed()) {
      detail = std::string(id) + " failed";
      return false;
    }
  }
  const auto& l21 = std::get<series_identity>(entry(reg, "LEM_2_1").check);
  const auto& l22 = std::get<series_identity>(entry(reg, "LEM_2_2").check);
  const auto& l23 = std::get<identity_group>(entry(reg, "LEM_2_3").check);
  detail = "5 identities";
  return l21.modulus == 3u && !l22.modulus && l23.parts.size() == 5;
}

// 12
bool proof_steps(std::string& detail) {
  const auto reports = run_suite("proof_steps", 1000);
  if (!all_pass(reports, detail)) return false;
  std::size_t covered = 0;
  for (const char* k : {"5", "8", "11", "14", "17", "20", "23", "26"}) {
    const std::string prefix = std::string("PS_") + k + "_";
    std::size_t n = 0;
    for (const auto& r : reports) n += r.id.rfind(prefix, 0) == 0;
    if (n == 0) {
      detail = "no steps for a_" + std::string(k);
      return false;
    }
    covered += n;
  }
  detail = std::to_string(reports.size()) + " steps, " + std::to_string(covered) + " in the k=5..26 chains";
  return covered >= 24;
}

// 13
bool mutation_sensitivity(std::string& detail) {
  const auto reg = build_registry();
  for (const char* id : {"THM_1_2", "THM_4_1[t=0]", "THM_4_1[t=1]", "THM_4_1[t=2]"}) {
    congruence_family f = std::get<congruence_family>(entry(reg, id).check);
    f.terms.offset += 1;
    const report r = check_vanishing(f, 500);
    if (r.status != check_status::fail || !r.failure) {
      detail = std::string(id) + " mutant did not fail";
      return false;
    }
    detail += std::string(detail.empty() ? "" : "; ") + id + "+1 fails at index " + std::to_string(r.failure->index);
  }
  return true;
}

// 14: the real binary, end to end.
bool full_suite(std::string& detail) {
  const auto t0 = clock_type::now();
  const std::string cmd = std::string(PARITY_FORGE_TOOL) + " suite all --order 2000 --format json > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const double s = seconds_since(t0);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  detail = "exit " + std::to_string(code) + ", " + std::to_string(s) + " s";
  return code == 0 && s < 180.0;
}

}  // namespace

int main() {
  struct criterion {
    int number;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<criterion> criteria = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "known values", known_values},
      {3, "Ramanujan anchors",
       [](std::string& d) { return run_all("ramanujan", 2000, {}, d, 3); }},
      {4, "a_5(5n+3) mod 5", theorem_mod5},
      {5, "a_{5j+5}(5n+3) mod 5",
       [](std::string& d) { return run_all("cor_3_2", 1000, parse_param_bounds("j=0..2"), d, 3); }},
      {6, "mod 7 families",
       [](std::string& d) { return run_all("thm_1_1", 1000, parse_param_bounds("j=0..2"), d, 15); }},
      {7, "a_5 mod 3 families in alpha", theorem_mod3_alpha},
      {8, "a_{3t+2}(27n+18+t) mod 3",
       [](std::string& d) { return run_all("thm_4_1", 2000, {}, d, 9); }},
      {9, "internal congruences", internal_congruences},
      {10, "a_20 / a_23 families and the 27j lift", corollaries_mod3},
      {11, "identity suite", identity_suite},
      {12, "proof-step suite", proof_steps},
      {13, "mutation sensitivity", mutation_sensitivity},
      {14, "full suite via the CLI", full_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::cout << "criterion " << (c.number < 10 ? " " : "") << c.number << ": " << (ok ? "PASS" : "FAIL") << "  "
              << c.name << " (" << detail << ")" << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
