#include "exg/subgroups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "data_tables.hpp"

namespace exg {

int coset_dim_parabolic(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank())
    throw DomainError("parabolic node " + std::to_string(node) + " out of range for " + rs.type().name());
  int count = 0;
  for (const auto& r : rs.positive_roots())
    if (r.coeffs[node - 1] != 0) ++count;
  return count;
}

int coset_dim_parabolic(ParabolicDescriptor pd) {
  return coset_dim_parabolic(get_root_system(pd.group), pd.node);
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Deletes one extended-diagram node and classifies what is left.
SubsystemDescriptor delete_node(const RootSystem& rs, const ExtendedDiagram& ext, int node) {
  std::vector<std::vector<int>> kept;
  for (std::size_t i = 0; i < ext.node_coeffs.size(); ++i)
    if (static_cast<int>(i) != node) kept.push_back(ext.node_coeffs[i]);
  return classify_simple_system(rs, kept);
}

}  // namespace

std::vector<SubsystemDescriptor> bds_maximal_subsystems(const RootSystem& rs) {
  const ExtendedDiagram ext = rs.extended_diagram();
  std::vector<SubsystemDescriptor> out;
  for (std::size_t i = 1; i < ext.marks.size(); ++i) {
    if (!is_prime(ext.marks[i])) continue;
    SubsystemDescriptor d = delete_node(rs, ext, static_cast<int>(i));
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  }
  return out;
}

std::vector<SubsystemDescriptor> bds_reachable(GroupType type) {
  // Breadth-first closure of single deletions, recursing into factors.
  // Works on semisimple types; tori are dropped (deletion never creates them).
  std::set<std::string> seen;
  std::vector<SubsystemDescriptor> out;
  std::vector<SubsystemDescriptor> frontier;

  SubsystemDescriptor start = make_descriptor({SubsystemComponent{type, false}}, 0);
  seen.insert(start.label);
  frontier.push_back(start);

  while (!frontier.empty()) {
    std::vector<SubsystemDescriptor> next;
    for (const auto& d : frontier) {
      for (std::size_t k = 0; k < d.components.size(); ++k) {
        const RootSystem& rs = get_root_system(d.components[k].type);
        for (const auto& replacement : bds_maximal_subsystems(rs)) {
          std::vector<SubsystemComponent> comps;
          for (std::size_t j = 0; j < d.components.size(); ++j) {
            if (j == k) {
              for (const auto& c : replacement.components) comps.push_back(c);
            } else {
              comps.push_back(d.components[j]);
            }
          }
          SubsystemDescriptor candidate = make_descriptor(std::move(comps), 0);
          if (seen.insert(candidate.label).second) {
            out.push_back(candidate);
            next.push_back(std::move(candidate));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

int SubgroupRecord::coset_dim() const {
  if (kind == SubgroupKind::Parabolic) return coset_dim_parabolic(*parabolic);
  return get_root_system(ambient).dimension() - dim_m0;
}

namespace {

std::vector<SubgroupRecord> load_catalog(GroupType group) {
  std::vector<SubgroupRecord> rows;

  const RootSystem& rs = get_root_system(group);
  for (int node = 1; node <= rs.rank(); ++node) {
    SubgroupRecord rec;
    rec.ambient = group;
    rec.kind = SubgroupKind::Parabolic;
    rec.label = "P" + std::to_string(node);
    rec.parabolic = ParabolicDescriptor{group, node};
    rec.dim_m0 = rs.dimension() - coset_dim_parabolic(rs, node);
    rec.component_group_order = 1;
    rec.chars = CharPredicate::any();
    rec.citation = "maximal parabolic subgroups, " + group.name() + " node " + std::to_string(node);
    rows.push_back(std::move(rec));
  }

  for (const auto& row : data::curated().at("subgroups")) {
    if (parse_group_type(row.at("ambient").get<std::string>()) != group) continue;
    SubgroupRecord rec;
    rec.ambient = group;
    const std::string kind = row.at("kind").get<std::string>();
    rec.kind = kind == "subsystem" ? SubgroupKind::Subsystem : SubgroupKind::Curated;
    rec.label = row.at("label").get<std::string>();
    if (row.contains("descriptor"))
      rec.descriptor = parse_subsystem_label(row.at("descriptor").get<std::string>());
    rec.dim_m0 = row.at("dim_m0").get<int>();
    rec.component_group_order = row.at("component_group_order").get<std::int64_t>();
    rec.chars = CharPredicate::parse(row.at("chars").get<std::string>());
    rec.citation = row.at("citation").get<std::string>();
    if (rec.dim_m0 >= rs.dimension())
      throw InconsistencyError("catalog row " + rec.label + " is not a proper subgroup");
    rows.push_back(std::move(rec));
  }
  return rows;
}

}  // namespace

std::vector<SubgroupRecord> catalog_all(GroupType group) {
  static std::mutex mutex;
  static std::map<GroupType, std::vector<SubgroupRecord>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(group);
  if (it == cache.end()) it = cache.emplace(group, load_catalog(group)).first;
  return it->second;
}

std::vector<SubgroupRecord> catalog_maximal(GroupType group, int p) {
  if (p != 0 && !is_prime(p)) throw DomainError("characteristic must be 0 or a prime");
  std::vector<SubgroupRecord> out;
  for (const auto& rec : catalog_all(group))
    if (rec.chars.admits(p)) out.push_back(rec);
  return out;
}

const SubgroupRecord* find_subgroup(const std::vector<SubgroupRecord>& catalog,
                                    const std::string& label) {
  for (const auto& rec : catalog)
    if (rec.label == label) return &rec;
  return nullptr;
}

}  // namespace exg
