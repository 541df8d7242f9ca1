// exg: command-line front end for the exceptional-group dimension engine.
//
// Subcommands cover the root systems, coset dimensions, subgroup catalogs,
// torsion classes, fixed-point ratios, generation criteria and the full
// verification suite. Output formats: table (default), json, csv.
// Exit codes: 0 pass/success, 1 verification failure, 2 usage error,
// 3 not-curated or budget refusal.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exg/class_data.hpp"
#include "exg/fixed_points.hpp"
#include "exg/generation.hpp"
#include "exg/subgroups.hpp"
#include "exg/torsion.hpp"
#include "exg/verification.hpp"

#include "exg/data_access.hpp"

namespace {

using exg::Rat;
using nlohmann::json;

enum class Format { Table, Json, Csv };

struct Output {
  json value;                                     // schema-stable object
  std::vector<std::string> columns;               // csv/table row model
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> scalars;  // table header lines
};

void print_output(const Output& out, Format format) {
  if (format == Format::Json) {
    std::cout << out.value.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    if (!out.columns.empty()) {
      for (std::size_t i = 0; i < out.columns.size(); ++i)
        std::cout << (i ? "," : "") << out.columns[i];
      std::cout << "\n";
      for (const auto& row : out.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
      }
    } else {
      std::cout << "key,value\n";
      for (const auto& [k, v] : out.scalars) std::cout << k << "," << v << "\n";
    }
    return;
  }
  for (const auto& [k, v] : out.scalars) std::cout << k << ": " << v << "\n";
  if (!out.columns.empty()) {
    std::vector<std::size_t> width(out.columns.size());
    for (std::size_t i = 0; i < out.columns.size(); ++i) width[i] = out.columns[i].size();
    for (const auto& row : out.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::cout << row[i] << std::string(width[i] - row[i].size(), ' ');
        std::cout << (i + 1 < row.size() ? "  " : "");
      }
      std::cout << "\n";
    };
    line(out.columns);
    for (const auto& row : out.rows) line(row);
  }
}

exg::GroupType parse_group_or_die(const std::string& name) {
  try {
    return exg::parse_group_type(name);
  } catch (const exg::InvalidTypeError&) {
    throw exg::InvalidTypeError("unknown group '" + name +
                                "' (supported: E8, E7, E6, F4, G2, D4, B2; classical A_n, B_n, "
                                "C_n, D_n for root-system queries)");
  }
}

std::string kind_name(exg::SubgroupKind k) {
  switch (k) {
    case exg::SubgroupKind::Parabolic:
      return "parabolic";
    case exg::SubgroupKind::Subsystem:
      return "subsystem";
    case exg::SubgroupKind::Curated:
      return "curated";
  }
  return "?";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("EXG_ORACLE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw exg::DomainError("EXG_ORACLE_BUDGET is not a valid integer");
    }
  }
  return exg::kDefaultOracleBudget;
}

Output cmd_roots(const std::string& group) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::RootSystem& rs = exg::get_root_system(g);
  const auto ext = rs.extended_diagram();

  Output out;
  out.scalars = {{"group", g.name()},
                 {"rank", std::to_string(rs.rank())},
                 {"roots", std::to_string(rs.root_count())},
                 {"positive_roots", std::to_string(rs.positive_root_count())},
                 {"coxeter_number", std::to_string(rs.coxeter_number())},
                 {"dim", std::to_string(rs.dimension())}};
  std::string highest, marks;
  for (int c : rs.highest_root().coeffs) highest += (highest.empty() ? "" : " ") + std::to_string(c);
  for (int m : ext.marks) marks += (marks.empty() ? "" : " ") + std::to_string(m);
  out.scalars.emplace_back("highest_root", highest);
  out.scalars.emplace_back("extended_marks", marks);

  out.value = json{{"group", g.name()},
                   {"rank", rs.rank()},
                   {"roots", rs.root_count()},
                   {"positive_roots", rs.positive_root_count()},
                   {"coxeter_number", rs.coxeter_number()},
                   {"dim", rs.dimension()},
                   {"highest_root", rs.highest_root().coeffs},
                   {"extended_marks", ext.marks}};
  return out;
}

Output cmd_parabolic_dims(const std::string& group) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::RootSystem& rs = exg::get_root_system(g);
  Output out;
  out.columns = {"node", "dim_G/P"};
  json dims = json::array();
  for (int node = 1; node <= rs.rank(); ++node) {
    const int d = exg::coset_dim_parabolic(rs, node);
    out.rows.push_back({"P" + std::to_string(node), std::to_string(d)});
    dims.push_back(d);
  }
  out.value = json{{"group", g.name()}, {"coset_dims", dims}};
  return out;
}

Output cmd_maxrank(const std::string& group) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::RootSystem& rs = exg::get_root_system(g);
  Output out;
  out.columns = {"subsystem", "dim", "coset_dim"};
  json list = json::array();
  for (const auto& d : exg::bds_maximal_subsystems(rs)) {
    const int dim = exg::subsystem_dim(d);
    out.rows.push_back({d.label, std::to_string(dim), std::to_string(rs.dimension() - dim)});
    list.push_back(json{{"label", d.label}, {"dim", dim}, {"coset_dim", rs.dimension() - dim}});
  }
  out.value = json{{"group", g.name()}, {"maximal_rank_subsystems", list}};
  return out;
}

Output cmd_catalog(const std::string& group, int p) {
  const exg::GroupType g = parse_group_or_die(group);
  Output out;
  out.columns = {"label", "kind", "dim_M0", "coset_dim", "component_group", "chars", "citation"};
  json list = json::array();
  for (const auto& rec : exg::catalog_maximal(g, p)) {
    const int dim_m0 = rec.kind == exg::SubgroupKind::Parabolic
                           ? exg::get_root_system(g).dimension() - rec.coset_dim()
                           : rec.dim_m0;
    out.rows.push_back({rec.label, kind_name(rec.kind), std::to_string(dim_m0),
                        std::to_string(rec.coset_dim()), std::to_string(rec.component_group_order),
                        rec.chars.str(), rec.citation});
    list.push_back(json{{"label", rec.label},
                        {"kind", kind_name(rec.kind)},
                        {"dim_m0", dim_m0},
                        {"coset_dim", rec.coset_dim()},
                        {"component_group_order", rec.component_group_order},
                        {"chars", rec.chars.str()},
                        {"citation", rec.citation}});
  }
  out.value = json{{"group", g.name()}, {"p", p}, {"subgroups", list}};
  return out;
}

Output cmd_torsion(const std::string& group, int r, bool oracle, std::uint64_t budget) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::RootSystem& rs = exg::get_root_system(g);
  const int dim = exg::dim_torsion_semisimple(rs, r);

  Output out;
  out.scalars = {{"group", g.name()},
                 {"r", std::to_string(r)},
                 {"dim_torsion_semisimple", std::to_string(dim)},
                 {"table_value", std::to_string(exg::dim_torsion_table(g, r))}};
  out.value = json{{"group", g.name()},
                   {"r", r},
                   {"dim_torsion_semisimple", dim},
                   {"table_value", exg::dim_torsion_table(g, r)}};
  if (r < rs.coxeter_number()) {
    const exg::TorsionSummary s = exg::kac_summary(rs, r);
    out.scalars.emplace_back("witness_centralizer", s.witness.centralizer_type);
    out.scalars.emplace_back("witness_centralizer_dim", std::to_string(s.witness.centralizer_dim));
    out.scalars.emplace_back("kac_solutions", std::to_string(s.class_count));
    out.value["witness_centralizer"] = s.witness.centralizer_type;
    out.value["witness_centralizer_dim"] = s.witness.centralizer_dim;
    out.value["witness_kac"] = s.witness.kac;
    out.value["kac_solutions"] = s.class_count;
  } else {
    out.scalars.emplace_back("witness_centralizer", "regular (maximal torus)");
    out.value["witness_centralizer"] = "regular (maximal torus)";
  }
  if (oracle) {
    const exg::TorsionSummary b = exg::brute_force_torsion(rs, r, budget);
    const bool agree = b.max_class_dim == dim;
    out.scalars.emplace_back("oracle_max", std::to_string(b.max_class_dim));
    out.scalars.emplace_back("oracle_agreement", agree ? "yes" : "NO");
    out.value["oracle_max"] = b.max_class_dim;
    out.value["oracle_agreement"] = agree;
    if (!agree) throw exg::InconsistencyError("oracle disagrees with the Kac enumeration");
  }
  return out;
}

Output cmd_gamma(const std::string& group, int r, int p) {
  const exg::GroupType g = parse_group_or_die(group);
  const int value = exg::gamma_value(g, r, p);
  const bool torsion_branch = (r == p || r == 2 || r == 3);
  Output out;
  out.scalars = {{"group", g.name()},
                 {"r", std::to_string(r)},
                 {"p", std::to_string(p)},
                 {"gamma", std::to_string(value)},
                 {"branch", torsion_branch ? "dim G_[r]" : "ell(G)"}};
  out.value = json{{"group", g.name()},
                   {"r", r},
                   {"p", p},
                   {"gamma", value},
                   {"branch", torsion_branch ? "dim_torsion" : "ell"}};
  return out;
}

Output cmd_alpha(const std::string& group, const std::string& subgroup, const std::string& cls,
                 int p) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::AlphaValue v = exg::lookup_alpha(g, subgroup, cls, p);
  Output out;
  out.scalars = {{"group", g.name()},
                 {"subgroup", subgroup},
                 {"class", cls},
                 {"p", std::to_string(p)},
                 {"alpha", v.value.str()},
                 {"citation", v.citation}};
  out.value = json{{"group", g.name()}, {"subgroup", subgroup}, {"class", cls},
                   {"p", p},           {"alpha", v.value.str()}, {"citation", v.citation}};
  return out;
}

Output cmd_kappa(const std::string& group) {
  const exg::GroupType g = parse_group_or_die(group);
  const Rat k0 = exg::kappa(g, 0);
  for (int p : {2, 3, 5, 7})
    if (exg::kappa(g, p) != k0)
      throw exg::InconsistencyError("kappa differs across characteristics");
  Output out;
  out.scalars = {{"group", g.name()}, {"kappa", k0.str()}};
  out.value = json{{"group", g.name()}, {"kappa", k0.str()}};
  return out;
}

Output cmd_gen_check(const std::string& group, const std::vector<std::string>& classes, int p,
                     bool* failed) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::GenerationReport rep = exg::check_t_tuple(exg::GenerationQuery{g, p, classes});
  *failed = !rep.pass;

  Output out;
  out.scalars = {{"group", g.name()},
                 {"p", std::to_string(p)},
                 {"t", std::to_string(classes.size())},
                 {"verdict", rep.pass ? "pass" : (rep.conservative ? "fail (conservative)" : "fail")},
                 {"tightest_subgroup", rep.tightest_subgroup}};
  out.columns = {"subgroup", "sum_alpha", "threshold", "margin", "verdict", "sources"};
  json rows = json::array();
  for (const auto& row : rep.rows) {
    std::string sources;
    for (const auto& s : row.sources) sources += (s == exg::AlphaSource::Exact ? "e" : "k");
    out.rows.push_back({row.subgroup, row.sum.str(), row.threshold.str(), row.margin.str(),
                        row.pass ? "pass" : (row.conservative ? "fail*" : "fail"), sources});
    rows.push_back(json{{"subgroup", row.subgroup},
                        {"sum", row.sum.str()},
                        {"threshold", row.threshold.str()},
                        {"margin", row.margin.str()},
                        {"pass", row.pass},
                        {"conservative", row.conservative},
                        {"sources", sources}});
  }
  out.value = json{{"group", g.name()},     {"p", p},
                   {"classes", classes},    {"pass", rep.pass},
                   {"conservative", rep.conservative}, {"tightest_subgroup", rep.tightest_subgroup},
                   {"rows", rows},          {"notes", rep.notes}};
  return out;
}

Output cmd_minimal_t(const std::string& group) {
  const exg::GroupType g = parse_group_or_die(group);
  const int t = exg::minimal_t(g, 0);
  Output out;
  out.scalars = {{"group", g.name()},
                 {"kappa", exg::kappa(g, 0).str()},
                 {"minimal_t", std::to_string(t)}};
  out.value = json{{"group", g.name()}, {"kappa", exg::kappa(g, 0).str()}, {"minimal_t", t}};
  return out;
}

Output cmd_sharpness(const std::string& group, int t, int p) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::SharpnessReport rep = exg::sharpness_fixed_space(g, t, p);
  Output out;
  out.scalars = {{"group", g.name()},
                 {"t", std::to_string(t)},
                 {"p", std::to_string(p)},
                 {"module", rep.module_name},
                 {"dim_module", std::to_string(rep.dim_module)},
                 {"dim_fixed", std::to_string(rep.dim_fixed)},
                 {"verdict", rep.forced ? "common fixed vector forced" : "not forced"},
                 {"detail", rep.detail}};
  out.value = json{{"group", g.name()},   {"t", t},
                   {"p", p},              {"module", rep.module_name},
                   {"dim_module", rep.dim_module}, {"dim_fixed", rep.dim_fixed},
                   {"forced", rep.forced}, {"detail", rep.detail}};
  return out;
}

Output cmd_cor1(const std::string& group, int r, int s, int p, bool* failed) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::Cor1Report rep = exg::check_cor1(g, r, s, p);
  *failed = !rep.pass;
  Output out;
  out.scalars = {{"group", g.name()},
                 {"r", std::to_string(r)},
                 {"s", std::to_string(s)},
                 {"p", std::to_string(p)},
                 {"verdict", rep.pass ? "pass" : "fail"},
                 {"tightest_subgroup", rep.tightest_subgroup}};
  out.columns = {"subgroup", "bound_r", "bound_s", "combined", "verdict"};
  json rows = json::array();
  for (const auto& row : rep.rows) {
    const std::string br = row.value_r.str() + (row.exact_r ? " (exact)" : " (strict)");
    const std::string bs = row.value_s.str() + (row.exact_s ? " (exact)" : " (strict)");
    out.rows.push_back({row.subgroup, br, bs, row.combined.str(), row.pass ? "pass" : "fail"});
    rows.push_back(json{{"subgroup", row.subgroup},
                        {"bound_r", row.value_r.str()},
                        {"exact_r", row.exact_r},
                        {"bound_s", row.value_s.str()},
                        {"exact_s", row.exact_s},
                        {"combined", row.combined.str()},
                        {"pass", row.pass}});
  }
  out.value = json{{"group", g.name()}, {"r", r}, {"s", s}, {"p", p},
                   {"pass", rep.pass},  {"tightest_subgroup", rep.tightest_subgroup},
                   {"rows", rows},      {"notes", rep.notes}};
  return out;
}

Output cmd_perm_char(int index, std::int64_t q) {
  const auto [value, degree] = exg::perm_char_eval(index, q);
  const auto& poly = exg::perm_char_polynomial(index);
  Output out;
  out.scalars = {{"parabolic", "P" + std::to_string(index)},
                 {"q", std::to_string(q)},
                 {"polynomial", poly.str()},
                 {"value", std::to_string(value)},
                 {"degree", std::to_string(degree)}};
  out.value = json{{"parabolic_index", index},
                   {"q", q},
                   {"polynomial", poly.str()},
                   {"value", value},
                   {"degree", degree}};
  return out;
}

Output cmd_generic_free(const std::string& group, int dim_v, int fixed,
                        const std::vector<std::string>& classes, int p) {
  const exg::GroupType g = parse_group_or_die(group);
  const exg::GenericFreeReport rep = exg::generic_free_check(g, dim_v, fixed, classes, p);
  Output out;
  out.scalars = {{"group", g.name()},
                 {"dim_v", std::to_string(dim_v)},
                 {"dim_v_fixed", std::to_string(fixed)},
                 {"d_g", std::to_string(rep.d_g)},
                 {"verdict", rep.generically_free ? "generically free" : "threshold not met"}};
  json checks = json::array();
  for (const auto& c : rep.class_checks) {
    out.scalars.emplace_back("class " + c.class_label,
                             std::string(c.satisfied ? "ok" : "not covered") + " (" + c.detail + ")");
    checks.push_back(json{{"class", c.class_label},
                          {"exceptional", c.exceptional},
                          {"satisfied", c.satisfied},
                          {"detail", c.detail}});
  }
  out.value = json{{"group", g.name()},
                   {"dim_v", dim_v},
                   {"dim_v_fixed", fixed},
                   {"d_g", rep.d_g},
                   {"generically_free", rep.generically_free},
                   {"class_checks", checks}};
  return out;
}

Output cmd_dump_data() {
  Output out;
  out.value = json::parse(exg::curated_tables_dump());
  return out;
}

Output cmd_verify_all(std::uint64_t budget, bool* failed) {
  const auto results = exg::run_verification(budget);
  *failed = !exg::all_passed(results);
  Output out;
  out.columns = {"id", "verdict", "criterion", "detail", "citation"};
  json rows = json::array();
  for (const auto& r : results) {
    out.rows.push_back({std::to_string(r.id), r.pass ? "PASS" : "FAIL", r.name, r.detail,
                        r.citation});
    rows.push_back(json{{"id", r.id},
                        {"pass", r.pass},
                        {"name", r.name},
                        {"detail", r.detail},
                        {"citation", r.citation},
                        {"seconds", r.seconds}});
  }
  out.scalars = {{"verdict", *failed ? "FAIL" : "PASS"}};
  out.value = json{{"pass", !*failed}, {"criteria", rows}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dimension arithmetic for exceptional algebraic groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  app.add_option("--format", format_name, "output format: table, json, csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::string group, subgroup_label, class_label;
  int r = 0, s = 0, p = 0, t = 0, index = 0, dim_v = 0, dim_fixed = 0;
  std::int64_t q = 0;
  bool oracle = false;
  std::uint64_t budget = 0;
  std::vector<std::string> classes;

  auto* roots = app.add_subcommand("roots", "root system summary");
  roots->add_option("group", group)->required();

  auto* parab = app.add_subcommand("parabolic-dims", "coset dimensions dim G/P_i");
  parab->add_option("group", group)->required();

  auto* maxrank = app.add_subcommand("maxrank", "maximal-rank subsystems by prime-mark deletion");
  maxrank->add_option("group", group)->required();

  auto* catalog = app.add_subcommand("catalog", "positive-dimensional maximal subgroups");
  catalog->add_option("group", group)->required();
  catalog->add_option("--char", p, "characteristic (0 or a prime)")->default_val(0);

  auto* torsion = app.add_subcommand("torsion", "dimension of the order-r torsion variety");
  torsion->add_option("group", group)->required();
  torsion->add_option("r", r)->required();
  torsion->add_flag("--oracle", oracle, "cross-check with the brute-force enumeration");
  torsion->add_option("--budget", budget, "oracle budget (default 2e8 or EXG_ORACLE_BUDGET)");

  auto* gamma = app.add_subcommand("gamma", "gamma(G, r) lower-bound constant");
  gamma->add_option("group", group)->required();
  gamma->add_option("r", r)->required();
  gamma->add_option("--char", p)->default_val(0);

  auto* alpha = app.add_subcommand("alpha", "curated fixed-point ratio alpha(G, M, g)");
  alpha->add_option("group", group)->required();
  alpha->add_option("subgroup", subgroup_label)->required();
  alpha->add_option("class", class_label)->required();
  alpha->add_option("--char", p)->default_val(0);

  auto* kappa_cmd = app.add_subcommand("kappa", "maximal fixed-point ratio kappa(G)");
  kappa_cmd->add_option("group", group)->required();

  auto* gen = app.add_subcommand("gen-check", "sum-alpha generation criterion for a class tuple");
  gen->add_option("group", group)->required();
  gen->add_option("--classes", classes, "comma-separated class labels")
      ->required()
      ->delimiter(',');
  gen->add_option("--char", p)->default_val(0);

  auto* mint = app.add_subcommand("minimal-t", "least t with t*kappa < t-1");
  mint->add_option("group", group)->required();

  auto* sharp = app.add_subcommand("sharpness", "forced common fixed vector for t long-root elements");
  sharp->add_option("group", group)->required();
  sharp->add_option("--t", t)->required();
  sharp->add_option("--char", p)->default_val(0);

  auto* cor1 = app.add_subcommand("cor1", "two-class sum bound over the catalog");
  cor1->add_option("group", group)->required();
  cor1->add_option("r", r)->required();
  cor1->add_option("s", s)->required();
  cor1->add_option("--char", p)->default_val(0);

  auto* perm = app.add_subcommand("perm-char", "B4-involution fixed-point polynomial at q");
  perm->add_option("index", index, "parabolic index (1, 2 or 4)")->required();
  perm->add_option("q", q)->required();

  auto* generic = app.add_subcommand("generic-free", "generic-freeness threshold for a module");
  generic->add_option("group", group)->required();
  generic->add_option("--dimv", dim_v)->required();
  generic->add_option("--fixedv", dim_fixed, "dim of the G-fixed subspace")->default_val(0);
  generic->add_option("--classes", classes)->delimiter(',');
  generic->add_option("--char", p)->default_val(0);

  auto* dump = app.add_subcommand("dump-data", "emit the embedded curated tables");

  auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
  verify->add_option("--budget", budget, "oracle budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format format = format_name == "json"   ? Format::Json
                        : format_name == "csv"  ? Format::Csv
                                                : Format::Table;
  if (budget == 0) {
    try {
      budget = default_budget();
    } catch (const exg::DomainError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    bool failed = false;
    Output out;
    if (*roots) out = cmd_roots(group);
    else if (*parab) out = cmd_parabolic_dims(group);
    else if (*maxrank) out = cmd_maxrank(group);
    else if (*catalog) out = cmd_catalog(group, p);
    else if (*torsion) out = cmd_torsion(group, r, oracle, budget);
    else if (*gamma) out = cmd_gamma(group, r, p);
    else if (*alpha) out = cmd_alpha(group, subgroup_label, class_label, p);
    else if (*kappa_cmd) out = cmd_kappa(group);
    else if (*gen) out = cmd_gen_check(group, classes, p, &failed);
    else if (*mint) out = cmd_minimal_t(group);
    else if (*sharp) out = cmd_sharpness(group, t, p);
    else if (*cor1) out = cmd_cor1(group, r, s, p, &failed);
    else if (*perm) out = cmd_perm_char(index, q);
    else if (*generic) out = cmd_generic_free(group, dim_v, dim_fixed, classes, p);
    else if (*dump) out = cmd_dump_data();
    else if (*verify) out = cmd_verify_all(budget, &failed);

    if (*dump && format != Format::Json) {
      std::cout << exg::curated_tables_dump();  // the canonical serialization is the table itself
    } else {
      print_output(out, format);
    }
    return failed ? 1 : 0;
  } catch (const exg::InvalidTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const exg::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const exg::NotCuratedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const exg::BudgetError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const exg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
