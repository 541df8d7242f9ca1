#include "exg/char_predicate.hpp"

#include <sstream>

#include "exg/error.hpp"

namespace exg {

namespace {

std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::vector<int> parse_set(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw InvalidTypeError("cannot parse characteristic set '" + text + "'");
  std::vector<int> out;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

std::string CharPredicate::str() const {
  switch (kind_) {
    case Kind::Any:
      return "any";
    case Kind::Equals:
      return "p=" + std::to_string(values_[0]);
    case Kind::NotEquals:
      return "p!=" + std::to_string(values_[0]);
    case Kind::AtLeast:
      return "p>=" + std::to_string(values_[0]);
    case Kind::In:
      return "p in " + set_text(values_);
    case Kind::NotIn:
      return "p notin " + set_text(values_);
  }
  return "any";
}

CharPredicate CharPredicate::parse(const std::string& text) {
  if (text == "any") return any();
  if (text.rfind("p>=", 0) == 0) return at_least(std::stoi(text.substr(3)));
  if (text.rfind("p!=", 0) == 0) return not_equals(std::stoi(text.substr(3)));
  if (text.rfind("p=", 0) == 0) return equals(std::stoi(text.substr(2)));
  if (text.rfind("p in ", 0) == 0) return in(parse_set(text.substr(5)));
  if (text.rfind("p notin ", 0) == 0) return not_in(parse_set(text.substr(8)));
  throw InvalidTypeError("cannot parse characteristic predicate '" + text + "'");
}

}  // namespace exg
