#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exg/char_predicate.hpp"
#include "exg/dynkin.hpp"
#include "exg/group_type.hpp"
#include "exg/root_system.hpp"

namespace exg {

// Maximal parabolic P_i: delete node i (Bourbaki numbering, 1-based).
struct ParabolicDescriptor {
  GroupType group;
  int node;
};

// Number of positive roots whose coefficient at the node is nonzero,
// i.e. dim G/P_i.
int coset_dim_parabolic(const RootSystem& rs, int node);
int coset_dim_parabolic(ParabolicDescriptor pd);

// Maximal-rank subsystems from single prime-mark deletions on the extended
// diagram, deduplicated by type.
std::vector<SubsystemDescriptor> bds_maximal_subsystems(const RootSystem& rs);

// All subsystem types reachable by iterated prime-mark deletions (the input
// type itself excluded). Deletion recurses into each semisimple factor.
std::vector<SubsystemDescriptor> bds_reachable(GroupType type);

enum class SubgroupKind { Parabolic, Subsystem, Curated };

// One positive-dimensional maximal closed subgroup of the ambient group.
struct SubgroupRecord {
  GroupType ambient;
  SubgroupKind kind;
  std::string label;  // "P3", "A1E7", "A2~A2", "(2^2xD4).S3", ...
  std::optional<ParabolicDescriptor> parabolic;
  std::optional<SubsystemDescriptor> descriptor;
  int dim_m0 = 0;
  std::int64_t component_group_order = 1;
  CharPredicate chars = CharPredicate::any();
  std::string citation;

  int coset_dim() const;  // dim G - dim M^0 (parabolics use dim G/P_i)
};

// Every maximal parabolic plus the curated maximal-rank / low-rank rows whose
// characteristic condition admits p. Supported ambients: E8, E7, E6, F4, G2,
// D4 and B2.
std::vector<SubgroupRecord> catalog_maximal(GroupType group, int p);

// All curated rows regardless of characteristic (parabolics included).
std::vector<SubgroupRecord> catalog_all(GroupType group);

// Looks up a catalog row by display label (exact match), honoring p.
const SubgroupRecord* find_subgroup(const std::vector<SubgroupRecord>& catalog,
                                    const std::string& label);

}  // namespace exg
