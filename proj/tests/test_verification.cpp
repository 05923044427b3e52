#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "parity_forge/registry.hpp"

using namespace parity_forge;

namespace {

congruence_family family(std::int64_t k, std::int64_t a, std::int64_t b, std::uint32_t m) {
  return congruence_family{"adhoc", ak_quotient(k), {a, b}, m};
}

const registry_entry& find_entry(const std::vector<registry_entry>& reg, const std::string& id) {
  for (const auto& e : reg) {
    if (e.id() == id) return e;
  }
  throw std::runtime_error("no registry entry " + id);
}

template <class T>
const T& entry_as(const std::vector<registry_entry>& reg, const std::string& id) {
  return std::get<T>(find_entry(reg, id).check);
}

}  // namespace

TEST(check_vanishing, theorem_instance) {
  const report r = check_vanishing(family(5, 5, 3, 5), 2000);
  EXPECT_EQ(r.status, check_status::pass);
  EXPECT_EQ(r.range_checked, 400u);
  EXPECT_FALSE(r.failure);
}

TEST(check_vanishing, mutant_reports_first_violation) {
  const report r = check_vanishing(family(5, 5, 2, 5), 100);
  ASSERT_EQ(r.status, check_status::fail);
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(r.failure->n, 0);
  EXPECT_EQ(r.failure->index, 2);
  EXPECT_EQ(r.failure->residue, "1");
}

TEST(check_vanishing, skipped_below_offset) {
  EXPECT_EQ(check_vanishing(family(5, 27, 19, 3), 10).status, check_status::skipped);
}

TEST(check_vanishing, malformed_progression) {
  EXPECT_THROW(check_vanishing(family(5, 0, 3, 5), 100), config_error);
  EXPECT_THROW(check_vanishing(family(5, 5, -1, 5), 100), config_error);
}

TEST(check_vanishing, modular_path_equals_exact_path) {
  const auto reg = build_registry();
  const auto& f = entry_as<congruence_family>(reg, "THM_1_2");
  const report a = check_vanishing(f, 500, coefficient_path::modular);
  const report b = check_vanishing(f, 500, coefficient_path::exact);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.range_checked, b.range_checked);
  EXPECT_EQ(ak_series_mod(5, 500, 5), reduce_mod(ak_series(5, 500), 5));
  congruence_family mutant = f;
  mutant.terms.offset += 1;
  const report ma = check_vanishing(mutant, 500, coefficient_path::modular);
  const report mb = check_vanishing(mutant, 500, coefficient_path::exact);
  ASSERT_EQ(ma.status, check_status::fail);
  EXPECT_EQ(ma.failure, mb.failure);
}

TEST(check_internal, examples) {
  const auto t1 = internal_congruence{"t1", ak_quotient(5), 3, {27, 10}, {3, 1}};
  EXPECT_EQ(check_internal(t1, 2000).status, check_status::pass);
  const auto t0 = internal_congruence{"t0", ak_quotient(2), 3, {27, 0}, {3, 0}};
  EXPECT_EQ(check_internal(t0, 2000).status, check_status::pass);
  const auto mutant = internal_congruence{"m", ak_quotient(5), 3, {27, 10}, {3, 2}};
  const report r = check_internal(mutant, 2000);
  ASSERT_EQ(r.status, check_status::fail);
  ASSERT_TRUE(r.failure);
  EXPECT_LT(r.failure->n, 5);
}

TEST(check_identity, exact_and_modular) {
  const series_identity good{"good", make_recipe("D", [](const auto& c) { return c.D(1); }),
                             make_recipe("f1^2/f2", [](const auto& c) { return c.eta("f1^2/f2"); }),
                             std::nullopt, ""};
  const report r = check_identity(good, 300);
  EXPECT_EQ(r.status, check_status::pass);
  EXPECT_EQ(r.range_checked, 301u);

  const series_identity bad{"bad", make_recipe("f1^3", [](const auto& c) { return c.eta("f1^3"); }),
                            make_recipe("f3", [](const auto& c) { return c.eta("f3"); }), std::nullopt, ""};
  const report exact = check_identity(bad, 100);
  ASSERT_EQ(exact.status, check_status::fail);
  EXPECT_EQ(exact.failure->index, 1);
  EXPECT_EQ(exact.failure->residue, "-3");
  series_identity bad_mod3 = bad;
  bad_mod3.modulus = 3;
  EXPECT_EQ(check_identity(bad_mod3, 100).status, check_status::pass);
}

TEST(instantiation, alpha_offsets_are_exact) {
  EXPECT_EQ(alpha_progression(0, 153, 1, "x"), (progression{27, 19}));
  EXPECT_EQ(alpha_progression(1, 153, 1, "x"), (progression{243, 172}));
  EXPECT_EQ(alpha_progression(2, 153, 1, "x"), (progression{2187, 1549}));
  EXPECT_EQ(alpha_progression(0, 198, 6, "x"), (progression{27, 24}));
  EXPECT_EQ(alpha_progression(1, 198, 6, "x"), (progression{243, 222}));
  EXPECT_EQ(alpha_progression(0, 207, 7, "x"), (progression{27, 25}));
  EXPECT_EQ(alpha_progression(1, 207, 7, "x"), (progression{243, 232}));
  // a malformed closed form leaves a remainder
  EXPECT_THROW(alpha_progression(1, 153, 2, "x"), config_error);
  EXPECT_THROW(alpha_progression(19, 153, 1, "x"), config_error);
  EXPECT_THROW(alpha_progression(-1, 153, 1, "x"), config_error);
}

TEST(instantiation, internal_tables) {
  const std::int64_t r[] = {0, 10, 2, 12, 4, 14, 6, 16, 8};
  const std::int64_t s[] = {0, 1, 0, 1, 0, 1, 0, 1, 0};
  for (std::int64_t t = 0; t <= 8; ++t) {
    EXPECT_EQ(internal_r(t), r[t]);
    EXPECT_EQ(internal_s(t), s[t]);
  }
}

TEST(param_bounds, parsing_and_domains) {
  const param_bounds b = parse_param_bounds("alpha=0..2, j=0..2,t=3");
  EXPECT_EQ(b.at("alpha"), (param_range{0, 2}));
  EXPECT_EQ(b.at("t"), (param_range{3, 3}));
  EXPECT_THROW(parse_param_bounds("t=2..1"), config_error);
  EXPECT_THROW(parse_param_bounds("t"), config_error);
  EXPECT_THROW(parse_param_bounds("t=-1..2"), config_error);
  EXPECT_THROW(build_registry(parse_param_bounds("t=0..9")), config_error);

  const auto reg = build_registry(parse_param_bounds("t=3"));
  std::size_t thm41 = 0;
  for (const auto& e : reg) thm41 += e.in_suite("thm_4_1");
  EXPECT_EQ(thm41, 1u);
}

TEST(registry, required_entries_present) {
  const auto reg = build_registry();
  std::set<std::string> ids;
  for (const auto& e : reg) EXPECT_TRUE(ids.insert(e.id()).second) << "duplicate id " << e.id();
  for (const char* id : {"RAM_5", "RAM_7", "RAM_11", "THM_1_2", "LEM_2_1", "LEM_2_2", "LEM_2_3", "D_PROD",
                         "Y_PROD", "THM_1_3[alpha=2]", "COR_4_3[a23,alpha=1]", "COR_4_4[j=1,t=8]",
                         "THM_4_2[t=8]", "COR_3_2[j=2]", "THM_1_1[j=2,k=21,7n+3]"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  std::map<std::string, std::size_t> per_suite;
  for (const auto& e : reg) {
    for (const auto& s : e.suites) ++per_suite[s];
  }
  EXPECT_EQ(per_suite["ramanujan"], 3u);
  EXPECT_EQ(per_suite["thm_1_1"], 15u);
  EXPECT_EQ(per_suite["cor_3_2"], 3u);
  EXPECT_EQ(per_suite["thm_1_3"], 3u);
  EXPECT_EQ(per_suite["thm_4_1"], 9u);
  EXPECT_EQ(per_suite["thm_4_2"], 9u);
  EXPECT_EQ(per_suite["cor_4_3"], 4u);
  EXPECT_EQ(per_suite["cor_4_4"], 18u);
  EXPECT_EQ(per_suite["lemmas"], 5u);
  // PS_5_18 is an internal congruence, not a series identity
  EXPECT_EQ(per_suite["identities"], per_suite["lemmas"] + per_suite["proof_steps"] - 1);
  EXPECT_TRUE(std::holds_alternative<internal_congruence>(find_entry(reg, "PS_5_18").check));

  std::map<std::string, std::size_t> chains;
  for (const auto& e : reg) {
    if (e.id().rfind("PS_", 0) == 0) ++chains[e.id().substr(3, e.id().find('_', 3) - 3)];
  }
  for (const char* k : {"5", "8", "11", "14", "17", "20", "23", "26"}) EXPECT_GE(chains[k], 13u) << "a_" << k;
}

TEST(registry, deep_policy) {
  const auto reg = build_registry();
  EXPECT_EQ(find_entry(reg, "THM_1_3[alpha=2]").order_for(2000), deep_order);
  EXPECT_EQ(find_entry(reg, "THM_1_3[alpha=0]").order_for(2000), 2000u);
  const report r = run_entry(find_entry(reg, "THM_1_3[alpha=2]"), 2000);
  EXPECT_EQ(r.status, check_status::pass);
  EXPECT_EQ(r.order, 20000u);
  EXPECT_EQ(r.range_checked, 9u);  // n = 0..8
  const auto& f = entry_as<congruence_family>(reg, "THM_1_3[alpha=2]");
  EXPECT_EQ(f.terms, (progression{2187, 1549}));
}

TEST(registry, mutants_fail) {
  const auto reg = build_registry();
  for (const char* id : {"THM_1_2", "THM_4_1[t=0]", "THM_4_1[t=1]", "THM_4_1[t=2]"}) {
    congruence_family f = entry_as<congruence_family>(reg, id);
    f.terms.offset += 1;
    const report r = check_vanishing(f, 500);
    EXPECT_EQ(r.status, check_status::fail) << id;
    EXPECT_TRUE(r.failure) << id;
  }
}

TEST(registry, proof_step_mutants_fail) {
  // swapping the two sides of a nontrivial step for a neighbouring one must break it
  const auto reg = build_registry();
  series_identity s = entry_as<series_identity>(reg, "PS_5_6");
  s.rhs = entry_as<series_identity>(reg, "PS_8_5").rhs;
  EXPECT_EQ(check_identity(s, 300).status, check_status::fail);
}

class registry_orders : public ::testing::TestWithParam<std::size_t> {};

TEST_P(registry_orders, every_entry_passes) {
  for (const report& r : run_suite("all", GetParam())) {
    EXPECT_EQ(r.status, check_status::pass) << r.id;
  }
}

INSTANTIATE_TEST_SUITE_P(orders, registry_orders, ::testing::Values(std::size_t{2000}, std::size_t{700}));

TEST(run_suite, deterministic_order_and_threads) {
  const auto one = run_suite("proof_steps", 400, {}, 1);
  const auto four = run_suite("proof_steps", 400, {}, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].id, four[i].id);
    EXPECT_EQ(one[i].status, four[i].status);
  }
  EXPECT_EQ(run_suite("lemmas", 500).size(), 5u);
  EXPECT_THROW(run_suite("no_such_suite", 100), std::invalid_argument);
}

TEST(run_suite, thm_1_3_deep_instance) {
  const auto reports = run_suite("thm_1_3", 20000, parse_param_bounds("alpha=0..2"));
  ASSERT_EQ(reports.size(), 3u);
  for (const auto& r : reports) EXPECT_EQ(r.status, check_status::pass) << r.id;
}

TEST(docs, proof_step_table_covers_registry) {
  std::ifstream in(PARITY_FORGE_DOCS_DIR "/proof_steps.md");
  ASSERT_TRUE(in) << "docs/proof_steps.md missing";
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string doc = buf.str();
  for (const auto& e : build_registry()) {
    if (e.id().rfind("PS_", 0) == 0) {
      EXPECT_NE(doc.find("| " + e.id() + " |"), std::string::npos) << e.id();
    }
  }
}
