#pragma once

#include <string>
#include <vector>

#include "exg/char_predicate.hpp"
#include "exg/group_type.hpp"
#include "exg/rational.hpp"

namespace exg {

enum class ClassNature { Unipotent, Semisimple };

// A conjugacy class with a curated dimension. Unipotent classes carry their
// standard labels ("A_1", "~A_1", ...); semisimple classes are labelled by
// centralizer type ("D8", "A2^3", ...); "t" is the involution with
// centralizer B4 in F4. Dimensions may depend on the characteristic through
// a single Kronecker-delta term.
struct ClassRecord {
  GroupType ambient;
  std::string label;
  ClassNature nature;
  int dim_base = 0;
  int dim_delta_prime = 0;  // 0 when the dimension is characteristic-free
  int dim_delta_coeff = 0;
  CharPredicate chars = CharPredicate::any();
  std::string citation;

  int dim(int p) const { return dim_base + (dim_delta_prime != 0 && p == dim_delta_prime ? dim_delta_coeff : 0); }
};

// An exact fixed-point ratio alpha(G, M, g) for a named subgroup and class.
struct AlphaRecord {
  GroupType ambient;
  std::string subgroup;
  std::string class_label;  // "u_alpha", "u_beta", "t" or a class label
  int num_base = 0;
  int num_delta_prime = 0;
  int num_delta_coeff = 0;
  int den = 1;
  CharPredicate chars = CharPredicate::any();
  std::string citation;

  Rat alpha(int p) const {
    const int num = num_base + (num_delta_prime != 0 && p == num_delta_prime ? num_delta_coeff : 0);
    return Rat(num, den);
  }
};

// Fixed-space data of a long root element on a distinguished module.
struct ModuleFixRecord {
  GroupType ambient;
  std::string module_name;
  int dim_base = 0, dim_delta_prime = 0, dim_delta_coeff = 0;
  int fixed_base = 0, fixed_delta_prime = 0, fixed_delta_coeff = 0;
  bool fixed_is_lower_bound = false;
  std::string citation;

  int dim_module(int p) const {
    return dim_base + (dim_delta_prime != 0 && p == dim_delta_prime ? dim_delta_coeff : 0);
  }
  int dim_fixed(int p) const {
    return fixed_base + (fixed_delta_prime != 0 && p == fixed_delta_prime ? fixed_delta_coeff : 0);
  }
};

const std::vector<ClassRecord>& all_class_records();
const std::vector<AlphaRecord>& all_alpha_records();
const std::vector<ModuleFixRecord>& all_module_fix_records();

// Resolves "u_alpha"/"u_beta"/"b4-involution" style aliases against the class
// store ("A_1", "~A_1", "t") and vice versa for the alpha store.
std::string canonical_class_label(const std::string& label);
std::string canonical_alpha_class(const std::string& label);

// Class dimension with citation-backed row; throws NotCuratedError when the
// (ambient, label, p) combination has no row. Never guesses.
int lookup_class_dim(GroupType ambient, const std::string& label, int p);
const ClassRecord* find_class_record(GroupType ambient, const std::string& label, int p);

struct AlphaValue {
  Rat value;
  std::string citation;
};

// Exact curated alpha; throws NotCuratedError when absent.
AlphaValue lookup_alpha(GroupType ambient, const std::string& subgroup,
                        const std::string& class_label, int p);
const AlphaRecord* find_alpha_record(GroupType ambient, const std::string& subgroup,
                                     const std::string& class_label, int p);

// max alpha(G, M, g) over all curated rows admitting p. The maximum is the
// same in every characteristic: 15/19, 7/9, 10/13, 3/4, 2/3 down the
// exceptional series.
Rat kappa(GroupType ambient, int p);

// An alpha value that is either a strict upper bound or exactly attained.
struct AlphaBound {
  Rat value;
  bool exact = false;  // false: strict upper bound
};

// Upper bound on alpha(G, M, g_r) for a class of order r with
// dim g_r^G >= gamma(G, r): the strict bound (2 + [r==2])/5, except for the
// triality-group cases (M in {B3, C3}, r in {2,3} -> exactly 3/7 and
// M = A2, r = 3 -> exactly 2/5).
AlphaBound large_class_alpha_bound(GroupType ambient, const std::string& subgroup, int r, int p);

const ModuleFixRecord* find_module_fix_record(GroupType ambient);

}  // namespace exg
