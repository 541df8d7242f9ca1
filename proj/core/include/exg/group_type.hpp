#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exg/error.hpp"

namespace exg {

// Dynkin families. E is restricted to ranks 6..8, F to rank 4, G to rank 2.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct GroupType {
  Family family;
  int rank;

  constexpr bool operator==(const GroupType&) const = default;
  constexpr auto operator<=>(const GroupType&) const = default;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

// Validity of (family, rank) as a Dynkin type. A_n needs n >= 1, B_n/C_n n >= 2,
// D_n n >= 2 (D2 = A1xA1 and D3 = A3 are accepted as types for subsystem work).
bool is_valid_type(GroupType t);

// Throwing variant used by constructors.
void require_valid_type(GroupType t);

// Parses "E8", "A5", "b2", ... Throws InvalidTypeError with the supported syntax.
GroupType parse_group_type(std::string_view text);

inline constexpr GroupType E8{Family::E, 8};
inline constexpr GroupType E7{Family::E, 7};
inline constexpr GroupType E6{Family::E, 6};
inline constexpr GroupType F4{Family::F, 4};
inline constexpr GroupType G2{Family::G, 2};
inline constexpr GroupType D4{Family::D, 4};
inline constexpr GroupType B2{Family::B, 2};

// The ambient groups handled by the catalogs and torsion tables.
const std::vector<GroupType>& supported_groups();

// The five exceptional types (catalog, kappa and generation criteria).
const std::vector<GroupType>& exceptional_groups();

bool is_exceptional(GroupType t);

}  // namespace exg
