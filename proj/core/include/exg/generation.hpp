#pragma once

#include <string>
#include <vector>

#include "exg/group_type.hpp"
#include "exg/rational.hpp"

namespace exg {

// A query: do elements of the given classes topologically generate with
// positive probability, by the coset-variety criterion sum alpha < t - 1?
struct GenerationQuery {
  GroupType ambient;
  int p = 0;
  std::vector<std::string> classes;  // length t >= 2
};

enum class AlphaSource { Exact, KappaFallback };

struct GenerationRow {
  std::string subgroup;
  Rat sum;
  Rat threshold;  // t - 1
  Rat margin;     // threshold - sum (positive = pass)
  bool pass = false;
  std::vector<AlphaSource> sources;  // one per class
  bool conservative = false;         // a failing row built on fallback values is inconclusive
};

struct GenerationReport {
  GenerationQuery query;
  bool pass = false;
  // Rows sorted tightest first: larger sum, then all-exact rows, then label.
  std::vector<GenerationRow> rows;
  std::string tightest_subgroup;
  bool conservative = false;  // the overall fail rests only on fallback rows
  std::vector<std::string> notes;
};

// Evaluates the criterion over every positive-dimensional maximal subgroup in
// the catalog for (ambient, p). Classes without a curated alpha for a given
// subgroup fall back to kappa(G): a pass stays sound, a fail may be
// conservative. Verdict pass means every row satisfies sum < t - 1 strictly;
// the conclusion is the openness half of the generation criterion (the
// nonemptiness half needs the ground field not algebraic over a finite field,
// and excludes some order-profile pairs when t = 2).
GenerationReport check_t_tuple(const GenerationQuery& query);

// Smallest t with t * kappa(G) < t - 1.
int minimal_t(GroupType ambient, int p);

// Classes excluded from the three-conjugate generation statement: long root
// elements always; short root elements for (F4, p=2) and (G2, p=3); the
// B4-involution for F4, p != 2.
bool is_generation_exceptional_class(GroupType ambient, const std::string& class_label, int p);

struct SharpnessReport {
  GroupType ambient;
  int t = 0;
  int p = 0;
  std::string module_name;
  int dim_module = 0;
  int dim_fixed = 0;  // may be a lower bound; the verdict stays sound
  bool forced = false;  // t * (dim V - dim C_V(g)) < dim V
  std::string detail;
};

// Certifies non-generation by any t long-root conjugates when they must share
// a fixed vector on the distinguished module.
SharpnessReport sharpness_fixed_space(GroupType ambient, int t, int p);

struct GenericFreeClassCheck {
  std::string class_label;
  bool exceptional = false;  // uses the five-conjugate route
  bool satisfied = false;
  std::string detail;
};

struct GenericFreeReport {
  GroupType ambient;
  int dim_v = 0;
  int dim_v_fixed = 0;
  int d_g = 0;  // 3 (dim G - rank G)
  bool generically_free = false;
  std::vector<GenericFreeClassCheck> class_checks;
};

// Sufficient condition dim V/V^G > d(G); optional per-class reporting of the
// stabilizer-dimension inequality.
GenericFreeReport generic_free_check(GroupType ambient, int dim_v, int dim_v_fixed,
                                     const std::vector<std::string>& classes, int p);

struct Cor1Row {
  std::string subgroup;
  Rat value_r;
  Rat value_s;
  bool exact_r = false;
  bool exact_s = false;
  Rat combined;
  bool pass = false;  // combined < 1, or == 1 with a strict component
};

struct Cor1Report {
  GroupType ambient;
  int r = 0, s = 0, p = 0;
  bool pass = false;
  std::vector<Cor1Row> rows;
  std::string tightest_subgroup;
  std::vector<std::string> notes;
};

// Two-class sum bound alpha(G,M,g_r) + alpha(G,M,g_s) < 1 over the whole
// catalog; rejects (r,s) = (2,2). A bound sum equal to 1 passes only when at
// least one side is strict.
Cor1Report check_cor1(GroupType ambient, int r, int s, int p);

}  // namespace exg
