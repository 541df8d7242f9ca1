#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exg/fixed_points.hpp"

using namespace exg;

TEST_CASE("fixed-space identity") {
  const auto a = fixed_space_dim(112, 58, 34);
  CHECK(a.dim_fixed == 88);
  CHECK(a.alpha == Rat(11, 14));
  CHECK(a.beta == 24);

  const auto identity = fixed_space_dim(26, 0, 0);
  CHECK(identity.dim_fixed == 26);
  CHECK(identity.alpha == Rat(1));

  const auto c = fixed_space_dim(26, 22, 16);
  CHECK(c.dim_fixed == 20);
  CHECK(c.alpha == Rat(10, 13));

  // the identity re-derives in both directions
  for (int dim_x : {20, 57, 112}) {
    for (int cls : {6, 16, 58}) {
      for (int inter : {0, 2, 6}) {
        if (dim_x - cls + inter < 0) continue;
        const auto f = fixed_space_dim(dim_x, cls, inter);
        CHECK(f.dim_class == f.dim_X - f.dim_fixed + f.dim_intersection);
        CHECK(f.beta == f.dim_X - f.dim_fixed);
      }
    }
  }

  CHECK_THROWS_AS(fixed_space_dim(10, 20, 2), InconsistencyError);
  CHECK_THROWS_AS(fixed_space_dim(10, 5, 7), DomainError);
  CHECK_THROWS_AS(fixed_space_dim(0, 0, 0), DomainError);
}

TEST_CASE("semisimple parabolic bound") {
  CHECK(semisimple_parabolic_bound(parse_subsystem_label("A1T1"), {G2, 1}) == 1);
  CHECK(semisimple_parabolic_bound(parse_subsystem_label("A2^3"), {E6, 2}) == 9);
  CHECK(semisimple_parabolic_bound(parse_subsystem_label("T8"), {E8, 3}) == 0);
  // capped at dim X
  CHECK(semisimple_parabolic_bound(parse_subsystem_label("E6T1"), {E7, 7}) == 27);
  // bound dominates the exact B4-involution values 11, 14, 10
  CHECK(semisimple_parabolic_bound(parse_subsystem_label("B4"), {F4, 1}) >= 11);
  CHECK(semisimple_parabolic_bound(parse_subsystem_label("B4"), {F4, 2}) >= 14);
  CHECK(semisimple_parabolic_bound(parse_subsystem_label("B4"), {F4, 4}) >= 10);
}

TEST_CASE("unipotent Borel bound") {
  CHECK(unipotent_borel_bound(27, 7) == 10);
  CHECK(unipotent_borel_bound(8, 8) == 0);
  CHECK(unipotent_borel_bound(4, 2) == 1);
  CHECK_THROWS_AS(unipotent_borel_bound(5, 8), DomainError);
}

TEST_CASE("permutation-character polynomials") {
  for (const auto& [index, degree] : {std::pair{1, 11}, {2, 14}, {4, 10}}) {
    const auto& poly = perm_char_polynomial(index);
    CHECK(poly.is_monic());
    CHECK(poly.degree() == degree);
    for (std::int64_t q : {2, 3, 4, 5}) CHECK(perm_char_eval(index, q).first > 0);
  }
  CHECK(perm_char_eval(1, 2).first == 5355);    // (16+4+1)(17)(5)(3)
  CHECK(perm_char_eval(2, 2).first == 80325);   // (21)(17)(25)(9)
  CHECK(perm_char_eval(4, 2).first == 2550);    // (17)(10)(5)(3)
  CHECK(perm_char_eval(4, 3).second == 10);
  CHECK_THROWS_AS(perm_char_polynomial(3), DomainError);
  CHECK_THROWS_AS(perm_char_eval(1, 1), DomainError);
}

TEST_CASE("alpha tables verify at every checked characteristic") {
  for (int p : {0, 2, 3, 5, 7}) {
    int rows = 0;
    for (const auto& check : verify_alpha_tables(p)) {
      ++rows;
      INFO(check.ambient.name(), check.subgroup, check.class_label, p, check.message);
      CHECK(check.pass);
    }
    CHECK(rows > 60);
  }
}

TEST_CASE("derived intersection dimensions match the stated values") {
  auto row = [](int p, const char* group, const char* sub, const char* cls) {
    for (const auto& check : verify_alpha_tables(p))
      if (check.ambient.name() == group && check.subgroup == sub && check.class_label == cls)
        return check;
    FAIL("row not found");
    return AlphaRowCheck{};
  };

  const auto e8p8 = row(0, "E8", "P8", "u_alpha");
  CHECK(e8p8.dim_X == 57);
  CHECK(e8p8.dim_fixed == 45);
  CHECK(e8p8.dim_intersection == 46);
  CHECK(e8p8.dim_m == 191);

  const auto e6f4 = row(0, "E6", "F4", "u_alpha");
  CHECK(e6f4.dim_fixed == 20);
  CHECK(e6f4.dim_intersection == 16);

  const auto g2 = row(3, "G2", "~A2", "u_beta");
  CHECK(g2.dim_X == 6);
  CHECK(g2.dim_fixed == 4);

  const auto t8 = row(2, "E8", "T8", "u_alpha");
  CHECK(t8.dim_fixed == 183);
  CHECK(t8.dim_intersection == 1);

  const auto d42 = row(2, "E8", "D4^2", "u_alpha");
  CHECK(d42.dim_fixed == 148);
  CHECK(d42.dim_intersection == 14);  // 10 + 4 at p = 2
}
