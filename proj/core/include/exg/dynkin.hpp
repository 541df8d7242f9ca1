#pragma once

#include <string>
#include <vector>

#include "exg/group_type.hpp"

namespace exg {

class RootSystem;

// One simple factor of a subsystem: its abstract type, plus a tilde tag when
// the factor is generated entirely by short roots of an ambient system with
// two root lengths (e.g. the short-root A2 inside F4).
struct SubsystemComponent {
  GroupType type;
  bool tilde = false;

  bool operator==(const SubsystemComponent&) const = default;
};

// Semisimple-plus-torus shape of a subsystem subgroup.
struct SubsystemDescriptor {
  std::vector<SubsystemComponent> components;  // canonically ordered
  int torus_rank = 0;
  std::string label;  // e.g. "A1E7", "A4^2", "A2~A2", "D4T2", "T8"

  int rank() const;
  bool operator==(const SubsystemDescriptor& o) const {
    return components == o.components && torus_rank == o.torus_rank;
  }
};

// Canonical ordering: components sorted by (rank, family, tilde-last);
// equal factors compressed as X^k; torus appended as T_k.
std::string subsystem_label(const std::vector<SubsystemComponent>& components, int torus_rank);

// Puts components in canonical order and fills in the label.
SubsystemDescriptor make_descriptor(std::vector<SubsystemComponent> components, int torus_rank);

// Classifies the diagram spanned by a set of roots of `ambient` that forms a
// simple system (pairwise pairings <= 0). `torus_rank` of the result is
// ambient rank minus the number of nodes.
SubsystemDescriptor classify_simple_system(const RootSystem& ambient,
                                           const std::vector<std::vector<int>>& nodes);

// Parses a display label back into a descriptor ("A1E7", "A2~A2", "D4T2", ...).
SubsystemDescriptor parse_subsystem_label(const std::string& label);

}  // namespace exg
