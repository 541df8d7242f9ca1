#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "exg/root_system.hpp"

using namespace exg;

TEST_CASE("root counts, dimensions and Coxeter numbers") {
  struct Row {
    GroupType type;
    int roots, dim, h;
  };
  const Row rows[] = {
      {E8, 240, 248, 30}, {E7, 126, 133, 18}, {E6, 72, 78, 12},  {F4, 48, 52, 12},
      {G2, 12, 14, 6},    {D4, 24, 28, 6},    {B2, 8, 10, 4},    {{Family::A, 1}, 2, 3, 2},
      {{Family::A, 5}, 30, 35, 6},            {{Family::B, 3}, 18, 21, 6},
      {{Family::C, 3}, 18, 21, 6},            {{Family::D, 6}, 60, 66, 10},
  };
  for (const auto& row : rows) {
    INFO(row.type.name());
    const RootSystem& rs = get_root_system(row.type);
    CHECK(rs.root_count() == row.roots);
    CHECK(rs.dimension() == row.dim);
    CHECK(rs.coxeter_number() == row.h);
    CHECK(rs.root_count() == rs.rank() * rs.coxeter_number());
    CHECK(rs.dimension() == rs.rank() * (rs.coxeter_number() + 1));
    CHECK(rs.positive_root_count() * 2 == rs.root_count());
  }
}

TEST_CASE("roots are closed under the simple reflections") {
  for (const auto& type : supported_groups()) {
    const RootSystem& rs = get_root_system(type);
    std::set<std::vector<int>> all;
    for (const auto& r : rs.roots()) all.insert(r.coeffs);
    for (const auto& r : rs.roots()) {
      for (int j = 0; j < rs.rank(); ++j) {
        std::vector<int> image = r.coeffs;
        image[j] -= rs.pair_with_simple_coroot(r.coeffs, j);
        CHECK(all.count(image) == 1);
      }
    }
  }
}

TEST_CASE("positive roots and their negatives partition the root set") {
  const RootSystem& rs = get_root_system(F4);
  std::set<std::vector<int>> all;
  for (const auto& r : rs.roots()) all.insert(r.coeffs);
  int positives = 0;
  for (const auto& r : rs.roots()) {
    if (r.is_positive()) ++positives;
    std::vector<int> neg = r.coeffs;
    for (int& c : neg) c = -c;
    CHECK(all.count(neg) == 1);
  }
  CHECK(positives == rs.positive_root_count());
}

TEST_CASE("highest root dominates coefficientwise and has height h - 1") {
  for (const auto& type : supported_groups()) {
    const RootSystem& rs = get_root_system(type);
    const Root& top = rs.highest_root();
    CHECK(top.height() == rs.coxeter_number() - 1);
    for (const auto& r : rs.positive_roots()) {
      CHECK(r.height() <= top.height());
      for (int i = 0; i < rs.rank(); ++i) CHECK(r.coeffs[i] <= top.coeffs[i]);
    }
  }
}

TEST_CASE("Cartan matrix entries") {
  for (const auto& type : supported_groups()) {
    const auto c = cartan_matrix(type);
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c[i][i] == 2);
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (i == j) continue;
        CHECK(c[i][j] <= 0);
        CHECK(c[i][j] >= -3);
        if (c[i][j] == -3) CHECK(type == G2);
      }
    }
  }
}

TEST_CASE("extended-diagram marks") {
  const std::map<GroupType, std::vector<int>> expected = {
      {E8, {1, 2, 3, 4, 6, 5, 4, 3, 2}},
      {E7, {1, 2, 2, 3, 4, 3, 2, 1}},
      {E6, {1, 1, 2, 2, 3, 2, 1}},
      {F4, {1, 2, 3, 4, 2}},
      {G2, {1, 2, 3}},
      {D4, {1, 1, 2, 1, 1}},
      {B2, {1, 1, 2}},
      {{Family::A, 1}, {1, 1}},
  };
  for (const auto& [type, marks] : expected) {
    INFO(type.name());
    CHECK(get_root_system(type).extended_diagram().marks == marks);
  }
}

TEST_CASE("long and short roots") {
  const RootSystem& f4 = get_root_system(F4);
  int longs = 0;
  for (const auto& r : f4.roots())
    if (r.is_long) ++longs;
  CHECK(longs == 24);
  CHECK(f4.has_two_lengths());

  const RootSystem& g2 = get_root_system(G2);
  longs = 0;
  for (const auto& r : g2.roots())
    if (r.is_long) ++longs;
  CHECK(longs == 6);
  CHECK(g2.highest_root().is_long);

  CHECK_FALSE(get_root_system(E8).has_two_lengths());
}

TEST_CASE("invalid Dynkin types are rejected") {
  CHECK_THROWS_AS(RootSystem(GroupType{Family::E, 9}), InvalidTypeError);
  CHECK_THROWS_AS(RootSystem(GroupType{Family::F, 3}), InvalidTypeError);
  CHECK_THROWS_AS(RootSystem(GroupType{Family::G, 5}), InvalidTypeError);
  CHECK_THROWS_AS(RootSystem(GroupType{Family::A, 0}), InvalidTypeError);
  CHECK_THROWS_AS(parse_group_type("Z3"), InvalidTypeError);
  CHECK_THROWS_AS(parse_group_type("E"), InvalidTypeError);
  CHECK(parse_group_type("e8") == E8);
}
