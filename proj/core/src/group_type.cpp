#include "exg/group_type.hpp"

#include <cctype>

namespace exg {

bool is_valid_type(GroupType t) {
  switch (t.family) {
    case Family::A:
      return t.rank >= 1;
    case Family::B:
    case Family::C:
      return t.rank >= 2;
    case Family::D:
      return t.rank >= 2;
    case Family::E:
      return t.rank >= 6 && t.rank <= 8;
    case Family::F:
      return t.rank == 4;
    case Family::G:
      return t.rank == 2;
  }
  return false;
}

void require_valid_type(GroupType t) {
  if (!is_valid_type(t))
    throw InvalidTypeError("invalid Dynkin type " + t.name() +
                           " (valid: A_n n>=1, B_n/C_n/D_n n>=2, E6, E7, E8, F4, G2)");
}

GroupType parse_group_type(std::string_view text) {
  if (text.size() < 2) throw InvalidTypeError("cannot parse group type '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G')
    throw InvalidTypeError("unknown family '" + std::string(1, text[0]) + "' in group type '" +
                           std::string(text) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InvalidTypeError("cannot parse group type '" + std::string(text) + "'");
    rank = rank * 10 + (text[i] - '0');
  }
  const GroupType t{static_cast<Family>(f), rank};
  require_valid_type(t);
  return t;
}

const std::vector<GroupType>& supported_groups() {
  static const std::vector<GroupType> groups = {E8, E7, E6, F4, G2, D4, B2};
  return groups;
}

const std::vector<GroupType>& exceptional_groups() {
  static const std::vector<GroupType> groups = {E8, E7, E6, F4, G2};
  return groups;
}

bool is_exceptional(GroupType t) {
  for (const auto& g : exceptional_groups())
    if (g == t) return true;
  return false;
}

}  // namespace exg
