#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "exg/data_access.hpp"
#include "exg/rational.hpp"
#include "exg/char_predicate.hpp"

using namespace exg;

TEST_CASE("curated tables round-trip losslessly") {
  const std::string dump = curated_tables_dump();
  const auto parsed = nlohmann::json::parse(dump);
  CHECK(parsed.at("format_version").get<int>() == 1);
  CHECK(parsed.dump(2) + "\n" == dump);

  // re-parse of the canonical form is byte-identical
  const std::string again = nlohmann::json::parse(dump).dump(2) + "\n";
  CHECK(again == dump);

  // every row of every section carries a citation
  for (const char* section : {"subgroups", "class_dims", "alphas", "module_fixed_points"})
    for (const auto& row : parsed.at(section)) CHECK(row.contains("citation"));
}

TEST_CASE("rational parsing and formatting") {
  CHECK(Rat(30, 38) == Rat(15, 19));
  CHECK(Rat(15, 19).str() == "15/19");
  CHECK(Rat(-4, 8).str() == "-1/2");
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(3).pretty() == "3");
  CHECK(Rat::parse("15/19") == Rat(15, 19));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat(3, 4) + Rat(1, 4) == Rat(1));
  CHECK(Rat(3, 5) + Rat(2, 5) == Rat(1));
  CHECK(Rat(60, 19) > Rat(3));
  CHECK(Rat(75, 19) < Rat(4));
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
  CHECK_THROWS_AS(Rat::parse("x/y"), DomainError);
}

TEST_CASE("characteristic predicates") {
  CHECK(CharPredicate::any().admits(0));
  CHECK(CharPredicate::equals(2).admits(2));
  CHECK_FALSE(CharPredicate::equals(2).admits(0));
  CHECK(CharPredicate::not_equals(2).admits(0));
  CHECK_FALSE(CharPredicate::not_equals(2).admits(2));
  CHECK(CharPredicate::at_least(23).admits(0));  // characteristic zero is "large"
  CHECK(CharPredicate::at_least(23).admits(29));
  CHECK_FALSE(CharPredicate::at_least(23).admits(7));
  CHECK(CharPredicate::not_in({2, 3, 5}).admits(7));
  CHECK(CharPredicate::not_in({2, 3, 5}).admits(0));
  CHECK_FALSE(CharPredicate::not_in({2, 3, 5}).admits(3));

  for (const char* text : {"any", "p=2", "p!=3", "p>=23", "p in {2,3}", "p notin {2,3,5}"})
    CHECK(CharPredicate::parse(text).str() == text);
  CHECK_THROWS_AS(CharPredicate::parse("p<5"), InvalidTypeError);
}
