#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "exg/subgroups.hpp"

using namespace exg;

namespace {

std::set<std::string> bds_labels(GroupType type) {
  std::set<std::string> out;
  for (const auto& d : bds_maximal_subsystems(get_root_system(type))) out.insert(d.label);
  return out;
}

}  // namespace

TEST_CASE("parabolic coset dimensions") {
  const std::map<GroupType, std::vector<int>> expected = {
      {E8, {78, 92, 98, 106, 104, 97, 83, 57}}, {E7, {33, 42, 47, 53, 50, 42, 27}},
      {E6, {16, 21, 25, 29, 25, 16}},           {F4, {15, 20, 20, 15}},
      {G2, {5, 5}},                             {D4, {6, 9, 6, 6}},
      {B2, {3, 3}}};
  for (const auto& [type, dims] : expected) {
    const RootSystem& rs = get_root_system(type);
    for (int node = 1; node <= rs.rank(); ++node) {
      INFO(type.name(), node);
      CHECK(coset_dim_parabolic(rs, node) == dims[node - 1]);
    }
  }
  CHECK_THROWS_AS(coset_dim_parabolic(get_root_system(G2), 3), DomainError);
}

TEST_CASE("parabolic dimensions agree with the Levi root count") {
  // independent route: dim G/P_i = (|roots(G)| - |roots(Levi)|)/2 where the
  // Levi subsystem is the reflection closure of the remaining simple roots
  for (const auto& type : supported_groups()) {
    const RootSystem& rs = get_root_system(type);
    for (int node = 1; node <= rs.rank(); ++node) {
      std::vector<std::vector<int>> seeds;
      for (int j = 1; j <= rs.rank(); ++j) {
        if (j == node) continue;
        std::vector<int> e(rs.rank(), 0);
        e[j - 1] = 1;
        seeds.push_back(std::move(e));
      }
      const int levi_roots = static_cast<int>(rs.subsystem_closure(seeds).size());
      INFO(type.name(), node);
      CHECK(coset_dim_parabolic(rs, node) == (rs.root_count() - levi_roots) / 2);
    }
  }
}

TEST_CASE("prime-mark deletions") {
  CHECK(bds_labels(E8) == std::set<std::string>{"D8", "A1E7", "A8", "A2E6", "A4^2"});
  CHECK(bds_labels(E7) == std::set<std::string>{"A1D6", "A7", "A2A5"});
  CHECK(bds_labels(E6) == std::set<std::string>{"A1A5", "A2^3"});
  CHECK(bds_labels(F4) == std::set<std::string>{"B4", "A1C3", "A2~A2"});
  CHECK(bds_labels(G2) == std::set<std::string>{"A1~A1", "A2"});
  CHECK(bds_labels(D4) == std::set<std::string>{"A1^4"});
  CHECK(bds_labels(B2) == std::set<std::string>{"A1^2"});
}

TEST_CASE("deletion subsystems are closed with the expected root counts") {
  for (const auto& type : {E8, E7, E6, F4, G2, D4, B2}) {
    const RootSystem& rs = get_root_system(type);
    const auto ext = rs.extended_diagram();
    for (std::size_t node = 1; node < ext.marks.size(); ++node) {
      const int mark = ext.marks[node];
      if (mark != 2 && mark != 3 && mark != 5) continue;
      std::vector<std::vector<int>> seeds;
      for (std::size_t i = 0; i < ext.node_coeffs.size(); ++i)
        if (i != node) seeds.push_back(ext.node_coeffs[i]);
      const auto closure = rs.subsystem_closure(seeds);
      const auto descriptor = classify_simple_system(rs, seeds);
      int expected_roots = 0;
      for (const auto& c : descriptor.components)
        expected_roots += get_root_system(c.type).root_count();
      INFO(type.name(), " node ", node, " -> ", descriptor.label);
      CHECK(static_cast<int>(closure.size()) == expected_roots);
      CHECK(closure.size() % 2 == 0);
      CHECK(subsystem_dim(descriptor) == expected_roots + descriptor.rank());
    }
  }
}

TEST_CASE("iterated deletions reach the non-maximal subsystem types") {
  std::set<std::string> reach;
  for (const auto& d : bds_reachable(E8)) reach.insert(d.label);
  for (const char* label : {"D4^2", "A2^4", "A1^8", "A4^2", "D8", "A1E7"})
    CHECK(reach.count(label) == 1);
}

TEST_CASE("subsystem dimensions") {
  CHECK(subsystem_dim(parse_subsystem_label("A2E6")) == 86);
  CHECK(subsystem_dim(parse_subsystem_label("D4T2")) == 30);
  CHECK(get_root_system(E6).dimension() - subsystem_dim(parse_subsystem_label("D4T2")) == 48);
  CHECK(get_root_system(E8).dimension() - subsystem_dim(parse_subsystem_label("T8")) == 240);
  CHECK(subsystem_dim(parse_subsystem_label("A1G2^2")) == 31);
}

TEST_CASE("subsystem labels round-trip") {
  for (const char* label : {"A1E7", "A4^2", "A2~A2", "A1~A1", "D4T2", "T8", "A1^3D4", "G2C3",
                            "~A2", "A1B2", "A3T1"}) {
    CHECK(make_descriptor(parse_subsystem_label(label).components,
                          parse_subsystem_label(label).torus_rank)
              .label == label);
  }
}

TEST_CASE("catalog characteristic filters") {
  auto labels = [](GroupType g, int p) {
    std::set<std::string> out;
    for (const auto& rec : catalog_maximal(g, p)) out.insert(rec.label);
    return out;
  };

  const auto f4_2 = labels(F4, 2);
  CHECK(f4_2.count("C4") == 1);
  CHECK(f4_2.count("~D4") == 1);
  CHECK(f4_2.count("A1C3") == 0);
  CHECK(f4_2.count("A1G2") == 0);

  const auto f4_0 = labels(F4, 0);
  CHECK(f4_0.count("A1C3") == 1);
  CHECK(f4_0.count("C4") == 0);
  CHECK(f4_0.count("G2") == 0);  // needs p = 7

  const auto e8_7 = labels(E8, 7);
  CHECK(e8_7.count("A1(a)") == 0);
  CHECK(e8_7.count("A1(b)") == 0);
  CHECK(e8_7.count("A1(c)") == 0);
  CHECK(e8_7.count("A1xS5") == 1);

  const auto e8_0 = labels(E8, 0);  // characteristic zero admits the p >= bounds
  CHECK(e8_0.count("A1(a)") == 1);
  CHECK(e8_0.count("A1(c)") == 1);

  const auto e8_23 = labels(E8, 23);
  CHECK(e8_23.count("A1(a)") == 1);
  CHECK(e8_23.count("A1(b)") == 0);

  const auto g2_5 = labels(G2, 5);
  CHECK(g2_5.count("A1") == 0);   // needs p >= 7
  CHECK(g2_5.count("~A2") == 0);  // needs p = 3
  CHECK(g2_5.count("A2") == 1);

  CHECK_THROWS_AS(catalog_maximal(E8, 6), DomainError);
}

TEST_CASE("curated dimensions match the computed subsystem dimensions") {
  for (const auto& g : supported_groups()) {
    for (const auto& rec : catalog_all(g)) {
      if (!rec.descriptor) continue;
      INFO(g.name(), rec.label);
      CHECK(subsystem_dim(*rec.descriptor) == rec.dim_m0);
      CHECK(rec.dim_m0 < get_root_system(g).dimension());
      CHECK(rec.coset_dim() > 0);
    }
  }
}

TEST_CASE("coset dimensions of the curated subgroups") {
  const std::map<GroupType, std::map<std::string, int>> expected = {
      {E8,
       {{"D8", 128}, {"A1E7", 112}, {"A8", 168}, {"A2E6", 162}, {"A4^2", 200}, {"D4^2", 192},
        {"A2^4", 216}, {"A1^8", 224}, {"T8", 240}, {"A1(a)", 245}, {"B2", 238}, {"A1A2", 237},
        {"A1G2^2", 217}, {"G2F4", 182}, {"A1xS5", 245}}},
      {E7,
       {{"A1D6", 64}, {"A7", 70}, {"A2A5", 90}, {"A1^3D4", 96}, {"A1^7", 112}, {"E6T1", 54},
        {"T7", 126}, {"A1(a)", 130}, {"A2", 125}, {"A1^2", 127}, {"A1G2", 116}, {"A1F4", 78},
        {"G2C3", 98}, {"(2^2xD4).S3", 105}}},
      {E6,
       {{"A1A5", 40}, {"A2^3", 54}, {"D4T2", 48}, {"T6", 72}, {"A2", 70}, {"G2", 64},
        {"C4", 42}, {"F4", 26}, {"A2G2", 56}}},
      {F4,
       {{"B4", 16}, {"C4", 16}, {"D4", 24}, {"~D4", 24}, {"A1C3", 28}, {"A2~A2", 36},
        {"A1", 49}, {"G2", 38}, {"A1G2", 35}}},
      {G2, {{"A1~A1", 8}, {"A2", 6}, {"~A2", 6}, {"A1", 11}}},
  };
  for (const auto& [g, rows] : expected) {
    const auto catalog = catalog_all(g);
    for (const auto& [label, dim_x] : rows) {
      INFO(g.name(), label);
      const SubgroupRecord* rec = find_subgroup(catalog, label);
      REQUIRE(rec != nullptr);
      CHECK(rec->coset_dim() == dim_x);
    }
  }
}

TEST_CASE("component group orders of the torus normalizers") {
  CHECK(find_subgroup(catalog_all(E8), "T8")->component_group_order == 696729600);
  CHECK(find_subgroup(catalog_all(E7), "T7")->component_group_order == 2903040);
  CHECK(find_subgroup(catalog_all(E6), "T6")->component_group_order == 51840);
}
