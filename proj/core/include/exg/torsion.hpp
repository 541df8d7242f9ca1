#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exg/group_type.hpp"
#include "exg/root_system.hpp"

namespace exg {

// A semisimple conjugacy class of order r (modulo the center), computed at
// adjoint level where order-r classes are exactly the order-r torus classes.
struct TorsionClass {
  int order = 0;
  // Kac labels (s_0,...,s_l) with sum marks[i]*s[i] = r; empty for classes
  // found by the brute-force oracle.
  std::vector<int> kac;
  // Torus assignment: the value of each simple root in Z/r.
  std::vector<int> assignment;
  int centralizer_root_count = 0;
  int centralizer_dim = 0;
  int class_dim = 0;
  std::string centralizer_type;  // subsystem label, e.g. "A8", "A1^3T1" (Kac route only)
};

struct TorsionSummary {
  GroupType group;
  int r = 0;
  int max_class_dim = 0;
  TorsionClass witness;  // lexicographically least attaining the max
  std::int64_t class_count = 0;
};

// All non-identity Kac solutions for prime r. Each class is checked two ways:
// the roots pairing to 0 mod r against the reflection closure of the
// zero-labelled extended-diagram nodes; disagreement throws.
// Solutions are not deduplicated under affine-diagram automorphisms, so
// class_count in summaries counts Kac solutions.
std::vector<TorsionClass> enumerate_kac(const RootSystem& rs, int r);

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

// Independent oracle: enumerates every homomorphism from the root lattice to
// Z/r (all r^rank assignments) and maximizes the class dimension directly.
// Refuses with BudgetError when r^rank * |roots| exceeds the budget.
TorsionSummary brute_force_torsion(const RootSystem& rs, int r,
                                   std::uint64_t budget = kDefaultOracleBudget);

// Summary of enumerate_kac (identity excluded).
TorsionSummary kac_summary(const RootSystem& rs, int r);

// Max class dimension among semisimple elements of order r: dim G - rank for
// r >= h, otherwise the maximum over the Kac enumeration.
int dim_torsion_semisimple(const RootSystem& rs, int r);

// Curated table of dim G_[r] (covers every prime r < h; dim G - rank beyond).
// Characteristic-independent: for r = p the maximum is attained by a unipotent
// class of the same dimension.
int dim_torsion_table(GroupType group, int r);

// The lower-bound constant used away from r = p and r in {2,3}.
// (For D4 the value depends on r: 24 - 2*[r==5].)
int ell_value(GroupType group, int r);

// dim G_[r] when r = p or r in {2,3}; ell(G) otherwise.
int gamma_value(GroupType group, int r, int p);

struct Main6Report {
  GroupType group;
  int r = 0;
  int p = 0;
  int class_dim_bound = 0;  // certified max class dimension (computed or curated)
  int gamma = 0;
  bool pass = false;
  std::string witness;  // centralizer/class label when available
  std::string note;
};

// Existence inequality behind the random-generation bound: a class of order r
// (mod center) with dim >= gamma(G,r) exists. Rationality of the witness over
// a specific F_q is not certified here.
Main6Report check_main6_i(GroupType group, int r, int p);

}  // namespace exg
