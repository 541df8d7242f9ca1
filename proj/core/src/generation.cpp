#include "exg/generation.hpp"

#include <algorithm>

#include "exg/class_data.hpp"
#include "exg/subgroups.hpp"
#include "exg/torsion.hpp"

namespace exg {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

GenerationReport check_t_tuple(const GenerationQuery& query) {
  const int t = static_cast<int>(query.classes.size());
  if (t < 2) throw DomainError("generation queries need at least two classes");
  if (!is_exceptional(query.ambient))
    throw DomainError("generation criterion implemented for E8, E7, E6, F4, G2");

  const Rat kap = kappa(query.ambient, query.p);
  const Rat threshold(t - 1);

  GenerationReport report;
  report.query = query;

  for (const auto& sub : catalog_maximal(query.ambient, query.p)) {
    GenerationRow row;
    row.subgroup = sub.label;
    row.threshold = threshold;
    Rat sum(0);
    for (const auto& cls : query.classes) {
      const AlphaRecord* rec = find_alpha_record(query.ambient, sub.label, cls, query.p);
      if (rec) {
        sum = sum + rec->alpha(query.p);
        row.sources.push_back(AlphaSource::Exact);
      } else {
        sum = sum + kap;
        row.sources.push_back(AlphaSource::KappaFallback);
      }
    }
    row.sum = sum;
    row.margin = threshold - sum;
    row.pass = sum < threshold;
    const bool has_fallback =
        std::any_of(row.sources.begin(), row.sources.end(),
                    [](AlphaSource s) { return s == AlphaSource::KappaFallback; });
    row.conservative = !row.pass && has_fallback;
    report.rows.push_back(std::move(row));
  }

  auto exact_count = [](const GenerationRow& r) {
    return std::count(r.sources.begin(), r.sources.end(), AlphaSource::Exact);
  };
  std::sort(report.rows.begin(), report.rows.end(),
            [&](const GenerationRow& a, const GenerationRow& b) {
              if (a.sum != b.sum) return b.sum < a.sum;
              const auto ea = exact_count(a), eb = exact_count(b);
              if (ea != eb) return ea > eb;
              return a.subgroup < b.subgroup;
            });

  report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                            [](const GenerationRow& r) { return r.pass; });
  if (!report.rows.empty()) report.tightest_subgroup = report.rows.front().subgroup;
  report.conservative =
      !report.pass && std::all_of(report.rows.begin(), report.rows.end(), [](const GenerationRow& r) {
        return r.pass || r.conservative;
      });

  report.notes.push_back(
      "verdict certifies the open-avoidance half of the criterion; density additionally needs the "
      "ground field not algebraic over a finite field (and for t = 2 excludes the special "
      "class pairs with finite product)");
  if (t == 3) {
    for (const auto& cls : query.classes) {
      if (is_generation_exceptional_class(query.ambient, cls, query.p))
        report.notes.push_back("class '" + cls +
                               "' is on the three-conjugate exclusion list; triples from it never "
                               "generate");
    }
  }
  return report;
}

int minimal_t(GroupType ambient, int p) {
  const Rat kap = kappa(ambient, p);
  for (int t = 2; t <= 64; ++t)
    if (Rat(t) * kap < Rat(t - 1)) return t;
  throw InconsistencyError("no t <= 64 satisfies t*kappa < t-1");
}

bool is_generation_exceptional_class(GroupType ambient, const std::string& class_label, int p) {
  const std::string canonical = canonical_alpha_class(class_label);
  if (canonical == "u_alpha") return true;
  if (canonical == "u_beta") return (ambient == F4 && p == 2) || (ambient == G2 && p == 3);
  if (canonical == "t") return ambient == F4 && p != 2;
  return false;
}

SharpnessReport sharpness_fixed_space(GroupType ambient, int t, int p) {
  if (t < 1) throw DomainError("t must be positive");
  const ModuleFixRecord* rec = find_module_fix_record(ambient);
  if (!rec)
    throw NotCuratedError("no module fixed-space record for " + ambient.name());

  SharpnessReport report;
  report.ambient = ambient;
  report.t = t;
  report.p = p;
  report.module_name = rec->module_name;
  report.dim_module = rec->dim_module(p);
  report.dim_fixed = rec->dim_fixed(p);
  // dim V - dim C_V(g) stays an upper bound when dim_fixed is a lower bound,
  // so a "forced" verdict is sound either way.
  const int gap = report.dim_module - report.dim_fixed;
  report.forced = t * gap < report.dim_module;
  report.detail = std::to_string(t) + " * " + std::to_string(gap) +
                  (report.forced ? " < " : " >= ") + std::to_string(report.dim_module) + " on " +
                  rec->module_name;
  return report;
}

GenericFreeReport generic_free_check(GroupType ambient, int dim_v, int dim_v_fixed,
                                     const std::vector<std::string>& classes, int p) {
  if (dim_v_fixed < 0 || dim_v <= dim_v_fixed)
    throw DomainError("need dim V > dim V^G >= 0");
  if (!is_exceptional(ambient))
    throw DomainError("generic-freeness threshold implemented for E8, E7, E6, F4, G2");

  const RootSystem& rs = get_root_system(ambient);
  GenericFreeReport report;
  report.ambient = ambient;
  report.dim_v = dim_v;
  report.dim_v_fixed = dim_v_fixed;
  report.d_g = 3 * (rs.dimension() - rs.rank());
  report.generically_free = (dim_v - dim_v_fixed) > report.d_g;

  for (const auto& cls : classes) {
    GenericFreeClassCheck check;
    check.class_label = cls;
    check.exceptional = is_generation_exceptional_class(ambient, cls, p);
    if (check.exceptional) {
      // Five conjugates generate, so the fixed-space inequality holds as soon
      // as dim V exceeds five times the class dimension.
      const int class_dim = lookup_class_dim(ambient, cls, p);
      check.satisfied = dim_v > 5 * class_dim;
      check.detail = "five-conjugate route: dim V " + std::string(check.satisfied ? ">" : "<=") +
                     " 5 * " + std::to_string(class_dim);
    } else {
      // Three conjugates generate: dim V(g) <= (2/3) dim V, so the inequality
      // follows from dim V/V^G > d(G).
      check.satisfied = report.generically_free;
      check.detail = "three-conjugate route: covered by the d(G) threshold";
    }
    report.class_checks.push_back(std::move(check));
  }
  return report;
}

Cor1Report check_cor1(GroupType ambient, int r, int s, int p) {
  if (!is_prime(r) || !is_prime(s)) throw DomainError("r and s must be primes");
  if (r == 2 && s == 2)
    throw DomainError("the pair (r,s) = (2,2) is excluded: two involution classes never generate");

  Cor1Report report;
  report.ambient = ambient;
  report.r = r;
  report.s = s;
  report.p = p;

  if (ambient == B2 && (r == 3 || s == 3))
    report.notes.push_back(
        "order-3 elements do not arise for the rank-2 case; the combination below is formal");

  bool first = true;
  Rat tightest(0);
  for (const auto& sub : catalog_maximal(ambient, p)) {
    Cor1Row row;
    row.subgroup = sub.label;
    const AlphaBound br = large_class_alpha_bound(ambient, sub.label, r, p);
    const AlphaBound bs = large_class_alpha_bound(ambient, sub.label, s, p);
    row.value_r = br.value;
    row.value_s = bs.value;
    row.exact_r = br.exact;
    row.exact_s = bs.exact;
    row.combined = br.value + bs.value;
    const bool any_strict = !br.exact || !bs.exact;
    row.pass = row.combined < Rat(1) || (row.combined == Rat(1) && any_strict);
    if (first || row.combined > tightest) {
      tightest = row.combined;
      report.tightest_subgroup = row.subgroup;
      first = false;
    }
    report.rows.push_back(std::move(row));
  }
  report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                            [](const Cor1Row& row) { return row.pass; });
  return report;
}

}  // namespace exg
