#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exg/dynkin.hpp"
#include "exg/group_type.hpp"
#include "exg/rational.hpp"
#include "exg/subgroups.hpp"

namespace exg {

// dim X(g) = dim X - dim g^G + dim(g^G cap M), with alpha = dim X(g)/dim X
// and beta = dim X - dim X(g).
struct FixedPointComputation {
  int dim_X = 0;
  int dim_class = 0;
  int dim_intersection = 0;
  int dim_fixed = 0;
  int beta = 0;
  Rat alpha;
};

FixedPointComputation fixed_space_dim(int dim_X, int dim_class, int dim_intersection);

// Upper bound for semisimple g with connected centralizer D acting on G/P:
// dim X(g) = dim R_u(D cap P) <= min(#positive roots of D, dim X).
int semisimple_parabolic_bound(const SubsystemDescriptor& centralizer, ParabolicDescriptor pd);

// Upper bound for unipotent g: dim X(g) <= (dim C_G(g) - rank G)/2.
int unipotent_borel_bound(int centralizer_dim, int rank);

// Permutation-character polynomial counting fixed points of a B4-involution
// on F4(q)/P_i(q); kept in factored form. The degree equals dim X(g).
struct PermCharPolynomial {
  int parabolic_index = 0;
  struct Factor {
    std::vector<std::int64_t> coeffs;  // ascending powers of q
    int multiplicity = 1;
  };
  std::vector<Factor> factors;

  int degree() const;
  bool is_monic() const;
  std::int64_t eval(std::int64_t q) const;
  std::string str() const;
};

// Supported parabolic indices: 1, 2, 4.
const PermCharPolynomial& perm_char_polynomial(int parabolic_index);

// (value, degree) at an integer q >= 2.
std::pair<std::int64_t, int> perm_char_eval(int parabolic_index, std::int64_t q);

// One verified alpha-table row: recomputed coset dimension, integrality of
// alpha * dim X, and the derived intersection dimension within bounds.
struct AlphaRowCheck {
  GroupType ambient;
  std::string subgroup;
  std::string class_label;
  int p = 0;
  int dim_X = 0;
  Rat alpha;
  int dim_fixed = 0;
  int dim_class = 0;
  int dim_intersection = 0;
  int dim_m = 0;
  bool pass = false;
  std::string message;
  std::string citation;
};

// Re-derives every curated alpha row admitting p through the fixed-space
// identity. Failures are reported, not thrown.
std::vector<AlphaRowCheck> verify_alpha_tables(int p);

}  // namespace exg
