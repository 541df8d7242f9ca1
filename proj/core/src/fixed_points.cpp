#include "exg/fixed_points.hpp"

#include <algorithm>

#include "exg/class_data.hpp"

namespace exg {

FixedPointComputation fixed_space_dim(int dim_X, int dim_class, int dim_intersection) {
  if (dim_X <= 0) throw DomainError("dim X must be positive");
  if (dim_intersection < 0 || dim_intersection > dim_class)
    throw DomainError("intersection dimension must lie in [0, dim g^G]");
  FixedPointComputation out;
  out.dim_X = dim_X;
  out.dim_class = dim_class;
  out.dim_intersection = dim_intersection;
  out.dim_fixed = dim_X - dim_class + dim_intersection;
  if (out.dim_fixed < 0)
    throw InconsistencyError("negative fixed-space dimension: dim X = " + std::to_string(dim_X) +
                             ", dim class = " + std::to_string(dim_class) +
                             ", intersection = " + std::to_string(dim_intersection));
  out.beta = dim_X - out.dim_fixed;
  out.alpha = Rat(out.dim_fixed, dim_X);
  return out;
}

int semisimple_parabolic_bound(const SubsystemDescriptor& centralizer, ParabolicDescriptor pd) {
  int positive = 0;
  for (const auto& c : centralizer.components)
    positive += get_root_system(c.type).positive_root_count();
  return std::min(positive, coset_dim_parabolic(pd));
}

int unipotent_borel_bound(int centralizer_dim, int rank) {
  if (centralizer_dim < rank)
    throw DomainError("centralizer dimension " + std::to_string(centralizer_dim) +
                      " below the rank " + std::to_string(rank));
  return (centralizer_dim - rank) / 2;
}

namespace {

std::int64_t eval_factor(const std::vector<std::int64_t>& coeffs, std::int64_t q) {
  std::int64_t value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * q + *it;
  return value;
}

PermCharPolynomial make_poly(int index, std::vector<PermCharPolynomial::Factor> factors) {
  PermCharPolynomial poly;
  poly.parabolic_index = index;
  poly.factors = std::move(factors);
  return poly;
}

}  // namespace

int PermCharPolynomial::degree() const {
  int d = 0;
  for (const auto& f : factors) d += (static_cast<int>(f.coeffs.size()) - 1) * f.multiplicity;
  return d;
}

bool PermCharPolynomial::is_monic() const {
  std::int64_t lead = 1;
  for (const auto& f : factors)
    for (int k = 0; k < f.multiplicity; ++k) lead *= f.coeffs.back();
  return lead == 1;
}

std::int64_t PermCharPolynomial::eval(std::int64_t q) const {
  std::int64_t value = 1;
  for (const auto& f : factors)
    for (int k = 0; k < f.multiplicity; ++k) value *= eval_factor(f.coeffs, q);
  return value;
}

std::string PermCharPolynomial::str() const {
  std::string out;
  for (const auto& f : factors) {
    std::string inner;
    for (int e = static_cast<int>(f.coeffs.size()) - 1; e >= 0; --e) {
      const std::int64_t c = f.coeffs[e];
      if (c == 0) continue;
      if (!inner.empty()) inner += "+";
      if (e == 0) {
        inner += std::to_string(c);
      } else {
        if (c != 1) inner += std::to_string(c);
        inner += "q";
        if (e > 1) inner += "^" + std::to_string(e);
      }
    }
    out += "(" + inner + ")";
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

const PermCharPolynomial& perm_char_polynomial(int parabolic_index) {
  // Fixed-point counts of a B4-involution acting on F4(q)/P_i(q).
  static const PermCharPolynomial p1 = make_poly(1, {{{1, 0, 1, 0, 1}, 1},  // q^4+q^2+1
                                                     {{1, 0, 0, 0, 1}, 1},  // q^4+1
                                                     {{1, 0, 1}, 1},        // q^2+1
                                                     {{1, 1}, 1}});         // q+1
  static const PermCharPolynomial p2 = make_poly(2, {{{1, 0, 1, 0, 1}, 1},
                                                     {{1, 0, 0, 0, 1}, 1},
                                                     {{1, 0, 1}, 2},
                                                     {{1, 1}, 2}});
  static const PermCharPolynomial p4 = make_poly(4, {{{1, 0, 0, 0, 1}, 1},
                                                     {{2, 0, 0, 1}, 1},  // q^3+2
                                                     {{1, 0, 1}, 1},
                                                     {{1, 1}, 1}});
  switch (parabolic_index) {
    case 1:
      return p1;
    case 2:
      return p2;
    case 4:
      return p4;
    default:
      throw DomainError("permutation-character polynomials exist for parabolic indices 1, 2, 4");
  }
}

std::pair<std::int64_t, int> perm_char_eval(int parabolic_index, std::int64_t q) {
  if (q < 2) throw DomainError("q must be at least 2");
  const PermCharPolynomial& poly = perm_char_polynomial(parabolic_index);
  return {poly.eval(q), poly.degree()};
}

std::vector<AlphaRowCheck> verify_alpha_tables(int p) {
  std::vector<AlphaRowCheck> out;
  for (const auto& rec : all_alpha_records()) {
    if (!rec.chars.admits(p)) continue;

    AlphaRowCheck check;
    check.ambient = rec.ambient;
    check.subgroup = rec.subgroup;
    check.class_label = rec.class_label;
    check.p = p;
    check.alpha = rec.alpha(p);
    check.citation = rec.citation;

    const auto catalog = catalog_all(rec.ambient);
    const SubgroupRecord* sub = find_subgroup(catalog, rec.subgroup);
    if (!sub) {
      check.pass = false;
      check.message = "subgroup not in catalog";
      out.push_back(std::move(check));
      continue;
    }
    if (!sub->chars.admits(p)) {
      check.pass = false;
      check.message = "subgroup does not exist in this characteristic";
      out.push_back(std::move(check));
      continue;
    }
    check.dim_X = sub->coset_dim();
    check.dim_m = get_root_system(rec.ambient).dimension() - check.dim_X;

    const ClassRecord* cls = find_class_record(rec.ambient, canonical_class_label(rec.class_label), p);
    if (!cls) {
      check.pass = false;
      check.message = "class dimension not curated";
      out.push_back(std::move(check));
      continue;
    }
    check.dim_class = cls->dim(p);

    // alpha * dim X must be an integer
    const Rat fixed = check.alpha * Rat(check.dim_X);
    if (!fixed.is_integer()) {
      check.pass = false;
      check.message = "alpha * dim X is not an integer";
      out.push_back(std::move(check));
      continue;
    }
    check.dim_fixed = static_cast<int>(fixed.num());
    check.dim_intersection = check.dim_fixed - check.dim_X + check.dim_class;

    if (check.dim_intersection < 0 || check.dim_intersection > check.dim_m ||
        check.dim_intersection > check.dim_class) {
      check.pass = false;
      check.message = "derived intersection dimension out of range";
    } else if (check.alpha < Rat(0) || check.alpha >= Rat(1)) {
      check.pass = false;
      check.message = "alpha outside [0, 1)";
    } else {
      check.pass = true;
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace exg
