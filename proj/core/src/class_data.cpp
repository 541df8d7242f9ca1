#include "exg/class_data.hpp"

#include <mutex>

#include "data_tables.hpp"

namespace exg {

namespace {

int field_or(const nlohmann::json& row, const char* key, int fallback) {
  return row.contains(key) ? row.at(key).get<int>() : fallback;
}

std::vector<ClassRecord> load_class_records() {
  std::vector<ClassRecord> out;
  for (const auto& row : data::curated().at("class_dims")) {
    ClassRecord rec;
    rec.ambient = parse_group_type(row.at("ambient").get<std::string>());
    rec.label = row.at("label").get<std::string>();
    rec.nature = row.at("nature").get<std::string>() == "unipotent" ? ClassNature::Unipotent
                                                                    : ClassNature::Semisimple;
    rec.dim_base = row.at("dim").get<int>();
    rec.dim_delta_prime = field_or(row, "dim_delta_prime", 0);
    rec.dim_delta_coeff = field_or(row, "dim_delta_coeff", 0);
    rec.chars = CharPredicate::parse(row.at("chars").get<std::string>());
    rec.citation = row.at("citation").get<std::string>();
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<AlphaRecord> load_alpha_records() {
  std::vector<AlphaRecord> out;
  for (const auto& row : data::curated().at("alphas")) {
    AlphaRecord rec;
    rec.ambient = parse_group_type(row.at("ambient").get<std::string>());
    rec.subgroup = row.at("subgroup").get<std::string>();
    rec.class_label = row.at("class").get<std::string>();
    rec.num_base = row.at("num").get<int>();
    rec.num_delta_prime = field_or(row, "num_delta_prime", 0);
    rec.num_delta_coeff = field_or(row, "num_delta_coeff", 0);
    rec.den = row.at("den").get<int>();
    rec.chars = CharPredicate::parse(row.at("chars").get<std::string>());
    rec.citation = row.at("citation").get<std::string>();
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ModuleFixRecord> load_module_fix_records() {
  std::vector<ModuleFixRecord> out;
  for (const auto& row : data::curated().at("module_fixed_points")) {
    ModuleFixRecord rec;
    rec.ambient = parse_group_type(row.at("ambient").get<std::string>());
    rec.module_name = row.at("module").get<std::string>();
    rec.dim_base = row.at("dim_module").get<int>();
    rec.dim_delta_prime = field_or(row, "dim_module_delta_prime", 0);
    rec.dim_delta_coeff = field_or(row, "dim_module_delta_coeff", 0);
    rec.fixed_base = row.at("dim_fixed").get<int>();
    rec.fixed_delta_prime = field_or(row, "dim_fixed_delta_prime", 0);
    rec.fixed_delta_coeff = field_or(row, "dim_fixed_delta_coeff", 0);
    rec.fixed_is_lower_bound = row.at("fixed_is_lower_bound").get<bool>();
    rec.citation = row.at("citation").get<std::string>();
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

const std::vector<ClassRecord>& all_class_records() {
  static const std::vector<ClassRecord> records = load_class_records();
  return records;
}

const std::vector<AlphaRecord>& all_alpha_records() {
  static const std::vector<AlphaRecord> records = load_alpha_records();
  return records;
}

const std::vector<ModuleFixRecord>& all_module_fix_records() {
  static const std::vector<ModuleFixRecord> records = load_module_fix_records();
  return records;
}

std::string canonical_class_label(const std::string& label) {
  if (label == "u_alpha" || label == "u_a") return "A_1";
  if (label == "u_beta" || label == "u_b") return "~A_1";
  if (label == "b4-involution" || label == "B4-involution") return "t";
  return label;
}

std::string canonical_alpha_class(const std::string& label) {
  if (label == "A_1" || label == "u_a") return "u_alpha";
  if (label == "~A_1" || label == "u_b") return "u_beta";
  if (label == "b4-involution" || label == "B4-involution") return "t";
  return label;
}

const ClassRecord* find_class_record(GroupType ambient, const std::string& label, int p) {
  const std::string canonical = canonical_class_label(label);
  for (const auto& rec : all_class_records())
    if (rec.ambient == ambient && rec.label == canonical && rec.chars.admits(p)) return &rec;
  return nullptr;
}

int lookup_class_dim(GroupType ambient, const std::string& label, int p) {
  const ClassRecord* rec = find_class_record(ambient, label, p);
  if (!rec)
    throw NotCuratedError("no curated class dimension for " + ambient.name() + ", class '" + label +
                          "', p=" + std::to_string(p));
  return rec->dim(p);
}

const AlphaRecord* find_alpha_record(GroupType ambient, const std::string& subgroup,
                                     const std::string& class_label, int p) {
  const std::string canonical = canonical_alpha_class(class_label);
  for (const auto& rec : all_alpha_records())
    if (rec.ambient == ambient && rec.subgroup == subgroup && rec.class_label == canonical &&
        rec.chars.admits(p))
      return &rec;
  return nullptr;
}

AlphaValue lookup_alpha(GroupType ambient, const std::string& subgroup,
                        const std::string& class_label, int p) {
  const AlphaRecord* rec = find_alpha_record(ambient, subgroup, class_label, p);
  if (!rec)
    throw NotCuratedError("no curated alpha for " + ambient.name() + ", subgroup '" + subgroup +
                          "', class '" + class_label + "', p=" + std::to_string(p));
  return AlphaValue{rec->alpha(p), rec->citation};
}

Rat kappa(GroupType ambient, int p) {
  if (!is_exceptional(ambient))
    throw InvalidTypeError("kappa is defined for the exceptional types E8, E7, E6, F4, G2");
  Rat best(0);
  bool found = false;
  for (const auto& rec : all_alpha_records()) {
    if (rec.ambient != ambient || !rec.chars.admits(p)) continue;
    const Rat a = rec.alpha(p);
    if (!found || a > best) {
      best = a;
      found = true;
    }
  }
  if (!found) throw NotCuratedError("no alpha rows for " + ambient.name());
  return best;
}

AlphaBound large_class_alpha_bound(GroupType ambient, const std::string& subgroup, int r, int p) {
  (void)p;
  if (r < 2) throw DomainError("class order must be a prime >= 2");
  if (ambient == D4) {
    if ((subgroup == "B3" || subgroup == "C3") && (r == 2 || r == 3)) return AlphaBound{Rat(3, 7), true};
    if (subgroup == "A2" && r == 3) return AlphaBound{Rat(2, 5), true};
  }
  return AlphaBound{Rat(2 + (r == 2 ? 1 : 0), 5), false};
}

const ModuleFixRecord* find_module_fix_record(GroupType ambient) {
  for (const auto& rec : all_module_fix_records())
    if (rec.ambient == ambient) return &rec;
  return nullptr;
}

}  // namespace exg
