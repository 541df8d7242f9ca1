#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "exg/class_data.hpp"
#include "exg/subgroups.hpp"

using namespace exg;

namespace {

const std::vector<int> kChars = {0, 2, 3, 5, 7};

// The closure list of (subgroup, class, predicate) rows with alpha >= 2/3,
// frozen from the published classification. Entries as "group|subgroup|class".
std::set<std::string> expected_high_alpha(int p) {
  struct Row {
    const char* group;
    const char* subgroup;
    const char* cls;
    CharPredicate chars;
  };
  static const std::vector<Row> rows = [] {
    const auto any = CharPredicate::any();
    const auto p2 = CharPredicate::equals(2);
    const auto p3 = CharPredicate::equals(3);
    const auto np2 = CharPredicate::not_equals(2);
    std::vector<Row> r;
    for (const char* m : {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "A1E7", "A2E6",
                          "G2F4", "D8", "A8", "A4^2", "A2^4", "A1^8"})
      r.push_back({"E8", m, "u_alpha", any});
    r.push_back({"E8", "D4^2", "u_alpha", any});  // 37/48 at p=2, 3/4 otherwise
    r.push_back({"E8", "T8", "u_alpha", p2});
    r.push_back({"E8", "A1G2^2", "u_alpha", np2});
    for (const char* m : {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "E6T1", "A1D6", "A1^3D4",
                          "A2A5", "A7", "A1^7", "A1F4", "G2C3"})
      r.push_back({"E7", m, "u_alpha", any});
    r.push_back({"E7", "T7", "u_alpha", p2});
    for (const char* m : {"P1", "P2", "P3", "P4", "P5", "P6", "F4", "D4T2", "A1A5", "A2^3",
                          "A2G2"})
      r.push_back({"E6", m, "u_alpha", any});
    r.push_back({"E6", "T6", "u_alpha", p2});
    r.push_back({"E6", "C4", "u_alpha", np2});
    for (const char* m : {"P1", "P3", "P4", "B4", "D4", "A2~A2"})
      r.push_back({"F4", m, "u_alpha", any});
    r.push_back({"F4", "A1G2", "u_alpha", np2});
    for (const char* m : {"P1", "P2", "P4", "C4", "~D4", "A2~A2"})
      r.push_back({"F4", m, "u_beta", p2});
    for (const char* m : {"P1", "P2", "P4", "A1C3", "A2~A2"})
      r.push_back({"F4", m, "t", np2});
    r.push_back({"G2", "A2", "u_alpha", any});
    r.push_back({"G2", "~A2", "u_beta", p3});
    return r;
  }();

  std::set<std::string> out;
  for (const auto& row : rows)
    if (row.chars.admits(p))
      out.insert(std::string(row.group) + "|" + row.subgroup + "|" + row.cls);
  return out;
}

}  // namespace

TEST_CASE("class dimension lookups") {
  CHECK(lookup_class_dim(E8, "A_1", 0) == 58);
  CHECK(lookup_class_dim(E8, "u_alpha", 7) == 58);
  CHECK(lookup_class_dim(E8, "A_1^4", 2) == 128);
  CHECK(lookup_class_dim(F4, "t", 0) == 16);
  CHECK(lookup_class_dim(F4, "B4-involution", 5) == 16);
  CHECK(lookup_class_dim(F4, "u_beta", 0) == 22);
  CHECK(lookup_class_dim(F4, "u_beta", 2) == 16);
  CHECK(lookup_class_dim(G2, "u_beta", 0) == 8);
  CHECK(lookup_class_dim(G2, "u_beta", 3) == 6);

  CHECK_THROWS_AS(lookup_class_dim(E8, "A_1^4", 3), NotCuratedError);
  CHECK_THROWS_AS(lookup_class_dim(F4, "t", 2), NotCuratedError);
  CHECK_THROWS_AS(lookup_class_dim(G2, "E6(a1)", 0), NotCuratedError);
}

TEST_CASE("alpha lookups") {
  CHECK(lookup_alpha(E8, "P8", "u_alpha", 0).value == Rat(15, 19));
  CHECK(lookup_alpha(F4, "P1", "u_beta", 2).value == Rat(11, 15));
  CHECK(lookup_alpha(F4, "P1", "u_beta", 0).value == Rat(3, 5));
  CHECK(lookup_alpha(F4, "P2", "u_beta", 2).value == Rat(7, 10));
  CHECK(lookup_alpha(G2, "A2", "u_alpha", 5).value == Rat(2, 3));
  CHECK(lookup_alpha(G2, "P1", "u_beta", 3).value == Rat(3, 5));
  CHECK(lookup_alpha(E8, "A1G2^2", "u_alpha", 3).value == Rat(165, 217));
  CHECK_THROWS_AS(lookup_alpha(E8, "A1G2^2", "u_alpha", 2), NotCuratedError);
  CHECK_THROWS_AS(lookup_alpha(E8, "P1", "u_beta", 0), NotCuratedError);
  // the class alias resolves against the alpha rows too
  CHECK(lookup_alpha(E8, "P8", "A_1", 0).value == Rat(15, 19));
}

TEST_CASE("kappa constants at every characteristic") {
  for (int p : kChars) {
    CHECK(kappa(E8, p) == Rat(15, 19));
    CHECK(kappa(E7, p) == Rat(7, 9));
    CHECK(kappa(E6, p) == Rat(10, 13));
    CHECK(kappa(F4, p) == Rat(3, 4));
    CHECK(kappa(G2, p) == Rat(2, 3));
  }
  CHECK_THROWS_AS(kappa(D4, 0), InvalidTypeError);
}

TEST_CASE("rows at or above 2/3 are exactly the curated closure list") {
  for (int p : kChars) {
    std::set<std::string> computed;
    for (const auto& rec : all_alpha_records()) {
      if (!rec.chars.admits(p)) continue;
      if (rec.alpha(p) >= Rat(2, 3))
        computed.insert(rec.ambient.name() + "|" + rec.subgroup + "|" + rec.class_label);
    }
    INFO(p);
    CHECK(computed == expected_high_alpha(p));
  }
}

TEST_CASE("alpha times coset dimension is integral for every row") {
  for (int p : kChars) {
    for (const auto& rec : all_alpha_records()) {
      if (!rec.chars.admits(p)) continue;
      const auto catalog = catalog_all(rec.ambient);
      const SubgroupRecord* sub = find_subgroup(catalog, rec.subgroup);
      REQUIRE(sub != nullptr);
      if (!sub->chars.admits(p)) continue;
      const Rat fixed = rec.alpha(p) * Rat(sub->coset_dim());
      INFO(rec.ambient.name(), rec.subgroup, rec.class_label, p);
      CHECK(fixed.is_integer());
    }
  }
}

TEST_CASE("large-class alpha bounds") {
  const auto generic3 = large_class_alpha_bound(E8, "P1", 3, 0);
  CHECK(generic3.value == Rat(2, 5));
  CHECK_FALSE(generic3.exact);

  const auto generic2 = large_class_alpha_bound(E7, "A7", 2, 0);
  CHECK(generic2.value == Rat(3, 5));
  CHECK_FALSE(generic2.exact);

  const auto b3 = large_class_alpha_bound(D4, "B3", 2, 0);
  CHECK(b3.value == Rat(3, 7));
  CHECK(b3.exact);
  CHECK(large_class_alpha_bound(D4, "C3", 3, 2).value == Rat(3, 7));

  const auto a2 = large_class_alpha_bound(D4, "A2", 3, 0);
  CHECK(a2.value == Rat(2, 5));
  CHECK(a2.exact);
  CHECK_FALSE(large_class_alpha_bound(D4, "A2", 2, 0).exact);
}

TEST_CASE("module fixed-space records") {
  const ModuleFixRecord* g2 = find_module_fix_record(G2);
  REQUIRE(g2 != nullptr);
  CHECK(g2->dim_module(0) == 7);
  CHECK(g2->dim_fixed(0) == 5);

  const ModuleFixRecord* f4 = find_module_fix_record(F4);
  REQUIRE(f4 != nullptr);
  CHECK(f4->dim_module(0) == 26);
  CHECK(f4->dim_module(3) == 25);
  CHECK(f4->dim_fixed(3) == 19);
  CHECK(f4->fixed_is_lower_bound);

  const ModuleFixRecord* e8 = find_module_fix_record(E8);
  REQUIRE(e8 != nullptr);
  CHECK(e8->dim_module(2) == 248);
  CHECK(e8->dim_fixed(2) == 190);  // 248 - 58

  CHECK(find_module_fix_record(D4) == nullptr);

  // dim_fixed > (1 - 1/t) dim_module for the generating threshold t
  for (const auto& rec : all_module_fix_records()) {
    const int t = rec.ambient == G2 ? 3 : 4;
    for (int p : kChars)
      CHECK(t * rec.dim_fixed(p) > (t - 1) * rec.dim_module(p));
  }
}
