#pragma once

#include <vector>

#include "exg/group_type.hpp"

namespace exg {

// A root in simple-root coordinates. Coefficients are all >= 0 for a positive
// root and all <= 0 for a negative one; mixed signs never occur.
struct Root {
  std::vector<int> coeffs;
  bool is_long = true;  // meaningful when the system has two root lengths

  int height() const;
  bool is_positive() const;
  bool operator==(const Root& other) const { return coeffs == other.coeffs; }
};

// Extended (affine) Dynkin diagram: node 0 is the negated highest root, nodes
// 1..rank are the simple roots. marks[0] = 1, marks[i] = highest-root coefficient.
struct ExtendedDiagram {
  std::vector<int> marks;                       // size rank+1
  std::vector<std::vector<int>> cartan;         // (rank+1) x (rank+1) pairing matrix
  std::vector<std::vector<int>> node_coeffs;    // node -> simple-root coordinates
  std::vector<bool> node_is_long;               // per node
};

// Immutable after construction; safe to share across threads.
class RootSystem {
 public:
  explicit RootSystem(GroupType type);

  GroupType type() const { return type_; }
  int rank() const { return type_.rank; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // All roots, negatives first mirrored after positives; deterministic order
  // (positive roots sorted by height then lexicographically).
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  const Root& highest_root() const { return highest_root_; }

  int root_count() const { return static_cast<int>(roots_.size()); }
  int positive_root_count() const { return static_cast<int>(positive_roots_.size()); }

  // |roots| + rank.
  int dimension() const { return root_count() + rank(); }

  // |roots| / rank; equals dimension()/rank - 1.
  int coxeter_number() const { return root_count() / rank(); }

  ExtendedDiagram extended_diagram() const;

  // Pairing <beta, alpha_j^vee> for beta given in simple-root coordinates.
  int pair_with_simple_coroot(const std::vector<int>& beta, int j) const;

  // General pairing <a, b^vee> = 2(a,b)/(b,b); exact integer for roots a, b.
  int pair_with_coroot(const std::vector<int>& a, const std::vector<int>& b) const;

  // Twice the inner product (a,b), normalized so short roots have length 2.
  int inner_twice(const std::vector<int>& a, const std::vector<int>& b) const;

  // Squared length of beta, normalized so that short roots have length 2.
  int squared_length(const std::vector<int>& beta) const;

  bool has_two_lengths() const { return two_lengths_; }

  bool contains(const std::vector<int>& coeffs) const;

  // Reflection closure of a seed set of roots inside this system.
  std::vector<Root> subsystem_closure(const std::vector<std::vector<int>>& seeds) const;

 private:
  GroupType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> simple_length_;  // squared lengths of the simple roots (2, 4 or 6)
  bool two_lengths_ = false;
  std::vector<Root> positive_roots_;
  std::vector<Root> roots_;
  Root highest_root_;
};

// Hard-coded Cartan matrix in Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(GroupType type);

// Process-wide cache of built systems; cheap repeated access from the
// catalogs and verification passes.
const RootSystem& get_root_system(GroupType type);

// Dimension of the (possibly reducible) group with the given semisimple
// factors and central torus: sum of |roots| + rank over factors, plus torus.
struct SubsystemDescriptor;
int subsystem_dim(const SubsystemDescriptor& descriptor);

}  // namespace exg
