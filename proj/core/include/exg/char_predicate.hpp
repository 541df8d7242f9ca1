#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace exg {

// Characteristic condition attached to a curated row. p = 0 stands for
// characteristic zero and behaves like an arbitrarily large good prime:
// it satisfies every NotEquals/NotIn/AtLeast condition and no Equals/In one.
class CharPredicate {
 public:
  enum class Kind { Any, Equals, NotEquals, AtLeast, In, NotIn };

  static CharPredicate any() { return CharPredicate(Kind::Any, {}); }
  static CharPredicate equals(int p) { return CharPredicate(Kind::Equals, {p}); }
  static CharPredicate not_equals(int p) { return CharPredicate(Kind::NotEquals, {p}); }
  static CharPredicate at_least(int p) { return CharPredicate(Kind::AtLeast, {p}); }
  static CharPredicate in(std::vector<int> ps) { return CharPredicate(Kind::In, std::move(ps)); }
  static CharPredicate not_in(std::vector<int> ps) { return CharPredicate(Kind::NotIn, std::move(ps)); }

  bool admits(int p) const {
    switch (kind_) {
      case Kind::Any:
        return true;
      case Kind::Equals:
        return p == values_[0];
      case Kind::NotEquals:
        return p != values_[0];
      case Kind::AtLeast:
        return p == 0 || p >= values_[0];
      case Kind::In:
        return std::find(values_.begin(), values_.end(), p) != values_.end();
      case Kind::NotIn:
        return std::find(values_.begin(), values_.end(), p) == values_.end();
    }
    return false;
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& values() const { return values_; }

  // Display / serialization form: "any", "p=2", "p!=2", "p>=23", "p in {2,3}",
  // "p notin {2,3,5}". parse() accepts exactly these shapes.
  std::string str() const;
  static CharPredicate parse(const std::string& text);

  bool operator==(const CharPredicate&) const = default;

 private:
  CharPredicate(Kind k, std::vector<int> v) : kind_(k), values_(std::move(v)) {}

  Kind kind_;
  std::vector<int> values_;
};

}  // namespace exg
