#include "exg/torsion.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "data_tables.hpp"
#include "exg/dynkin.hpp"

namespace exg {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime_order(int r) {
  if (r < 2) throw DomainError("torsion order must be at least 2");
  if (!is_prime(r)) throw DomainError("torsion order " + std::to_string(r) + " is not prime");
}

// Positive roots pairing to 0 under the assignment (value of each simple root).
int positive_pairing_count(const RootSystem& rs, const std::vector<int>& assignment, int r) {
  int count = 0;
  for (const auto& root : rs.positive_roots()) {
    int dot = 0;
    for (int i = 0; i < rs.rank(); ++i) dot += root.coeffs[i] * assignment[i];
    if (dot % r == 0) ++count;
  }
  return count;
}

}  // namespace

std::vector<TorsionClass> enumerate_kac(const RootSystem& rs, int r) {
  require_prime_order(r);
  const ExtendedDiagram ext = rs.extended_diagram();
  const int nodes = static_cast<int>(ext.marks.size());

  std::vector<TorsionClass> classes;
  std::vector<int> s(nodes, 0);

  auto emit = [&]() {
    // Identity iff every nonaffine label is divisible by r (all roots pair to
    // zero); such solutions are the affine-automorphism images of s_0 = r.
    bool identity = true;
    for (int i = 1; i < nodes; ++i)
      if (s[i] % r != 0) identity = false;
    if (identity) return;

    TorsionClass tc;
    tc.order = r;
    tc.kac = s;
    tc.assignment.assign(s.begin() + 1, s.end());

    const int paired = positive_pairing_count(rs, tc.assignment, r);

    std::vector<std::vector<int>> zero_nodes;
    for (int i = 0; i < nodes; ++i)
      if (s[i] == 0) zero_nodes.push_back(ext.node_coeffs[i]);
    const auto closure = rs.subsystem_closure(zero_nodes);
    if (static_cast<int>(closure.size()) != 2 * paired)
      throw InconsistencyError("Kac zero-node subsystem disagrees with the pairing count for " +
                               rs.type().name() + ", r=" + std::to_string(r));

    tc.centralizer_root_count = 2 * paired;
    tc.centralizer_dim = rs.rank() + tc.centralizer_root_count;
    tc.class_dim = rs.dimension() - tc.centralizer_dim;
    tc.centralizer_type = classify_simple_system(rs, zero_nodes).label;
    classes.push_back(std::move(tc));
  };

  // Enumerate s >= 0 with sum marks[i]*s[i] = r, in lexicographic order.
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == nodes - 1) {
      if (remaining % ext.marks[index] == 0) {
        s[index] = remaining / ext.marks[index];
        emit();
        s[index] = 0;
      }
      return;
    }
    for (int v = 0; v * ext.marks[index] <= remaining; ++v) {
      s[index] = v;
      self(self, index + 1, remaining - v * ext.marks[index]);
    }
    s[index] = 0;
  };
  recurse(recurse, 0, r);
  return classes;
}

TorsionSummary kac_summary(const RootSystem& rs, int r) {
  static std::mutex mutex;
  static std::map<std::pair<GroupType, int>, TorsionSummary> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({rs.type(), r});
    if (it != cache.end()) return it->second;
  }

  const auto classes = enumerate_kac(rs, r);
  if (classes.empty()) throw InconsistencyError("no nontrivial torsion classes for r=" + std::to_string(r));
  TorsionSummary summary;
  summary.group = rs.type();
  summary.r = r;
  summary.class_count = static_cast<std::int64_t>(classes.size());
  summary.max_class_dim = 0;
  // enumeration is lexicographic, so the first class attaining the maximum is
  // the lexicographically least witness
  for (const auto& tc : classes) {
    if (tc.class_dim > summary.max_class_dim) {
      summary.max_class_dim = tc.class_dim;
      summary.witness = tc;
    }
  }

  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::make_pair(rs.type(), r), summary);
  return summary;
}

TorsionSummary brute_force_torsion(const RootSystem& rs, int r, std::uint64_t budget) {
  require_prime_order(r);
  std::uint64_t required = static_cast<std::uint64_t>(rs.root_count());
  for (int i = 0; i < rs.rank(); ++i) required *= static_cast<std::uint64_t>(r);
  if (required > budget)
    throw BudgetError(required, budget,
                      "brute-force torsion enumeration for " + rs.type().name() + ", r=" +
                          std::to_string(r) + " requires r^rank * |roots| = " +
                          std::to_string(required) + " > budget " + std::to_string(budget));

  const int rank = rs.rank();
  const int npos = rs.positive_root_count();
  std::vector<int> flat(static_cast<std::size_t>(npos) * rank);
  for (int j = 0; j < npos; ++j)
    for (int i = 0; i < rank; ++i) flat[static_cast<std::size_t>(j) * rank + i] = rs.positive_roots()[j].coeffs[i];

  TorsionSummary summary;
  summary.group = rs.type();
  summary.r = r;
  summary.max_class_dim = -1;
  summary.class_count = 0;

  std::vector<int> x(rank, 0);
  while (true) {
    // advance odometer; x runs over all of (Z/r)^rank in lexicographic order
    bool nonzero = std::any_of(x.begin(), x.end(), [](int v) { return v != 0; });
    if (nonzero) {
      ++summary.class_count;
      int paired = 0;
      const int* row = flat.data();
      for (int j = 0; j < npos; ++j, row += rank) {
        int dot = 0;
        for (int i = 0; i < rank; ++i) dot += row[i] * x[i];
        if (dot % r == 0) ++paired;
      }
      const int class_dim = rs.dimension() - (rank + 2 * paired);
      if (class_dim > summary.max_class_dim) {
        summary.max_class_dim = class_dim;
        summary.witness.order = r;
        summary.witness.assignment = x;
        summary.witness.centralizer_root_count = 2 * paired;
        summary.witness.centralizer_dim = rank + 2 * paired;
        summary.witness.class_dim = class_dim;
      }
    }
    int pos = rank - 1;
    while (pos >= 0 && x[pos] == r - 1) x[pos--] = 0;
    if (pos < 0) break;
    ++x[pos];
  }
  return summary;
}

int dim_torsion_semisimple(const RootSystem& rs, int r) {
  require_prime_order(r);
  if (r >= rs.coxeter_number()) return rs.dimension() - rs.rank();
  return kac_summary(rs, r).max_class_dim;
}

int dim_torsion_table(GroupType group, int r) {
  require_prime_order(r);
  const RootSystem& rs = get_root_system(group);
  if (r >= rs.coxeter_number()) return rs.dimension() - rs.rank();
  for (const auto& row : data::curated().at("torsion_dims"))
    if (parse_group_type(row.at("group").get<std::string>()) == group && row.at("r").get<int>() == r)
      return row.at("dim").get<int>();
  throw NotCuratedError("no torsion dimension row for " + group.name() + ", r=" + std::to_string(r));
}

int ell_value(GroupType group, int r) {
  for (const auto& row : data::curated().at("ell")) {
    if (parse_group_type(row.at("group").get<std::string>()) != group) continue;
    int value = row.at("value").get<int>();
    if (row.contains("delta5_coeff") && r == 5) value += row.at("delta5_coeff").get<int>();
    return value;
  }
  throw InvalidTypeError("no ell value for " + group.name() +
                         " (supported: E8, E7, E6, F4, G2, D4, B2)");
}

int gamma_value(GroupType group, int r, int p) {
  require_prime_order(r);
  if (p != 0 && !is_prime(p)) throw DomainError("characteristic must be 0 or a prime");
  if (r == p || r == 2 || r == 3) return dim_torsion_table(group, r);
  return ell_value(group, r);
}

Main6Report check_main6_i(GroupType group, int r, int p) {
  Main6Report report;
  report.group = group;
  report.r = r;
  report.p = p;
  report.gamma = gamma_value(group, r, p);

  const RootSystem& rs = get_root_system(group);
  if (r != p) {
    report.class_dim_bound = dim_torsion_semisimple(rs, r);
    if (r < rs.coxeter_number()) {
      report.witness = kac_summary(rs, r).witness.centralizer_type;
    } else {
      report.witness = "regular (T" + std::to_string(rs.rank()) + ")";
    }
    report.note = "semisimple witness; rationality over a specific F_q not certified";
  } else {
    report.class_dim_bound = dim_torsion_table(group, r);
    report.witness = "unipotent class of maximal dimension";
    report.note = "curated unipotent maximum; rationality over a specific F_q not certified";
  }
  report.pass = report.class_dim_bound >= report.gamma;
  return report;
}

}  // namespace exg
