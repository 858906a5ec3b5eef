#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "frobdiam/catalog.hpp"
#include "frobdiam/character_table.hpp"
#include "frobdiam/depth.hpp"
#include "frobdiam/errors.hpp"
#include "frobdiam/frobenius.hpp"
#include "frobdiam/graph.hpp"
#include "frobdiam/subgroups.hpp"

namespace frobdiam::cli
{

namespace
{

using json = nlohmann::json;

struct RunConfig
{
  std::string group;
  std::string format = "text";
  std::size_t cap = Limits{}.max_order;

  // subgroup selectors
  std::vector<std::string> generators;
  std::size_t subgroup_order = 0;
  bool all_classes = false;
  std::size_t sylow = 0;
  bool prime_order = false;
  std::string seed_file;

  bool tables = false;
  bool check_minimal = false;
};

struct Selected
{
  Subgroup subgroup;
  std::size_t class_length;
};

bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::string subgroup_text(Subgroup const &h)
{
  auto gens = h.generator_perms();
  if (gens.empty())
    return "<()>";
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i)
    s += (i ? ", " : "") + gens[i].to_string();
  return s + ">";
}

std::vector<std::string> generator_strings(Subgroup const &h)
{
  std::vector<std::string> out;
  for (auto const &p : h.generator_perms())
    out.push_back(p.to_string());
  return out;
}

std::vector<Selected> select_subgroups(PermGroup const &group, RunConfig const &cfg)
{
  std::vector<Selected> res;
  auto from_perms = [&](std::vector<Permutation> const &perms) {
    auto h = Subgroup::generated_by(group, perms);
    res.push_back({h, group.order() / normalizer(group, h).order()});
  };

  if (!cfg.generators.empty()) {
    std::vector<Permutation> perms;
    for (auto const &g : cfg.generators)
      perms.push_back(parse_permutation(g, group.degree()));
    from_perms(perms);
    return res;
  }
  if (!cfg.seed_file.empty()) {
    auto spec = read_permutation_spec(cfg.seed_file);
    if (spec.degree != group.degree())
      throw InvalidSpec("subgroup file degree " + std::to_string(spec.degree) +
                        " differs from the group degree " + std::to_string(group.degree()));
    from_perms(spec.generators);
    return res;
  }

  std::size_t order = cfg.subgroup_order;
  if (cfg.sylow != 0) {
    if (!is_prime(cfg.sylow))
      throw InvalidSpec("--sylow needs a prime");
    order = 1;
    for (std::size_t n = group.order(); n % cfg.sylow == 0; n /= cfg.sylow)
      order *= cfg.sylow;
  }

  auto classes = cfg.prime_order ? prime_order_classes(group) : enumerate_subgroup_classes(group);
  for (auto const &c : classes) {
    if (order != 0 && c.order() != order)
      continue;
    res.push_back({c.representative, c.class_length});
  }
  if (res.empty())
    throw InvalidSpec("no subgroup matches the selector");
  return res;
}

std::string bool_text(bool b) { return b ? "yes" : "no"; }

json diameter_json(Diameter const &d)
{
  if (d.is_infinite())
    return "infinite";
  return d.value();
}

json analyze_json(Inclusion const &inc, std::size_t class_length)
{
  auto const &h = inc.subgroup();
  auto graph = frobenius_graph(inc);
  auto bii = satisfies_bii(inc);
  auto depth = minimal_depth(inc);
  auto cuts = bii_shortcuts(inc);

  std::vector<std::size_t> ecc;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    ecc.push_back(graph.eccentricity(v));

  json j{
    {"generators", generator_strings(h)},
    {"order", h.order()},
    {"index", inc.index()},
    {"class_length", class_length},
    {"core_order", core(inc.group(), h).order()},
    {"h_degrees", inc.table_h().degrees()},
    {"matrix", matrix_to_json(inc.matrix())},
    {"gram", matrix_to_json(induced_gram(inc.matrix()))},
    {"graph", {{"components", graph.component_count()},
               {"diameter", diameter_json(graph.diameter())},
               {"eccentricities", ecc}}},
    {"rich", nullptr},
    {"rich_witness", nullptr},
    {"bii", bii.holds},
    {"bii_witness", nullptr},
    {"diameter_three", is_diameter_three(inc)},
    {"shortcuts", {{"trivial_intersection", cuts.trivial_intersection},
                   {"transitive_normalizer", cuts.transitive_normalizer}}},
    {"depth", depth_to_json(depth)},
  };
  if (!h.is_whole()) {
    auto rich = is_rich(inc);
    j["rich"] = rich.holds;
    if (rich.failing_character)
      j["rich_witness"] = *rich.failing_character + 1;
  }
  if (bii.failing_pair)
    j["bii_witness"] = {bii.failing_pair->first + 1, bii.failing_pair->second + 1};
  return j;
}

void analyze_text(std::ostream &out, Inclusion const &inc, std::size_t class_length)
{
  auto const &h = inc.subgroup();
  auto graph = frobenius_graph(inc);
  auto bii = satisfies_bii(inc);
  auto depth = minimal_depth(inc);
  auto cuts = bii_shortcuts(inc);

  out << "H = " << subgroup_text(h) << "\n";
  out << "  order " << h.order() << ", index " << inc.index() << ", class length "
      << class_length << ", core order " << core(inc.group(), h).order() << "\n";
  out << "  F(G,H), rows Irr(H) of degrees";
  for (auto d : inc.table_h().degrees())
    out << ' ' << d;
  out << ":\n";
  std::istringstream rows(matrix_to_text(inc.matrix()));
  for (std::string line; std::getline(rows, line);)
    out << "    " << line << "\n";
  out << "  graph: " << graph.component_count() << " component(s), diameter "
      << graph.diameter().to_string() << "\n";
  if (h.is_whole()) {
    out << "  rich: not defined (H = G)\n";
  } else {
    auto rich = is_rich(inc);
    out << "  rich: " << bool_text(rich.holds);
    if (rich.failing_character)
      out << " (X." << *rich.failing_character + 1 << " has no trivial constituent on H)";
    out << "\n";
  }
  out << "  (b)(ii): " << bool_text(bii.holds);
  if (bii.failing_pair)
    out << " ([phi" << bii.failing_pair->first + 1 << "^G, phi" << bii.failing_pair->second + 1
        << "^G] = 0)";
  out << "\n";
  out << "  diameter three: " << bool_text(is_diameter_three(inc)) << "\n";
  out << "  shortcuts: trivial intersection " << bool_text(cuts.trivial_intersection)
      << ", transitive normalizer " << bool_text(cuts.transitive_normalizer) << "\n";
  out << "  depth: " << depth.minimal_depth << " (odd m = " << depth.odd_m
      << ", even m = " << depth.even_m << ")\n";
}

json group_json(std::string const &label, PermGroup const &g)
{ return {{"label", label}, {"order", g.order()}, {"degree", g.degree()}}; }

void emit_json(std::ostream &out, json const &j) { out << j.dump(2) << "\n"; }

int cmd_catalog(RunConfig const &cfg, std::ostream &out)
{
  Limits limits;
  limits.max_order = cfg.cap;
  json entries = json::array();
  if (cfg.format != "json")
    out << "label            order  supersolvable\n";
  for (auto const &e : standard_catalog()) {
    auto spec = parse_group_label(e.label);
    auto order = expected_order(spec);
    if (cfg.format == "json") {
      entries.push_back({{"label", e.label}, {"order", order}, {"supersolvable", e.supersolvable}});
    } else {
      char line[96];
      std::snprintf(line, sizeof line, "%-15s  %5zu  %s\n", e.label.c_str(), order,
                    e.supersolvable ? "yes" : "no");
      out << line;
    }
  }
  if (cfg.format == "json")
    emit_json(out, {{"schema", 1}, {"command", "catalog"}, {"groups", entries}});
  return 0;
}

int cmd_table(RunConfig const &cfg, PermGroup const &group, std::ostream &out)
{
  auto table = CharacterTable::compute(group);
  if (cfg.format == "json") {
    emit_json(out, {{"schema", 1}, {"command", "table"}, {"group", group_json(cfg.group, group)},
                    {"table", table_to_json(table)}});
    return 0;
  }
  auto stats = table_stats(table);
  out << "character table of " << cfg.group << " (order " << group.order() << ")\n";
  out << "T = " << stats.total_degree << ", k = " << stats.class_count << ", b = "
      << stats.max_degree << "\n\n";
  out << render_table(table);
  return 0;
}

// Exit code for results that failed an internal consistency check.
constexpr int inconsistent_exit = 3;

bool consistent(std::vector<Selected> const &selected, TablePtr const &tg, std::ostream &err)
{
  bool ok = true;
  for (auto const &s : selected) {
    for (auto const &v : inclusion_identity_violations(Inclusion(tg, s.subgroup))) {
      err << "consistency check failed for " << subgroup_text(s.subgroup) << ": " << v << "\n";
      ok = false;
    }
  }
  return ok;
}

int cmd_analyze(RunConfig const &cfg, PermGroup const &group, std::ostream &out,
                std::ostream &err)
{
  auto tg = make_character_table(group);
  auto selected = select_subgroups(group, cfg);
  if (!consistent(selected, tg, err))
    return inconsistent_exit;

  if (cfg.format == "dot") {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      Inclusion inc(tg, selected[i].subgroup);
      out << to_dot(frobenius_graph(inc), "frobenius_" + std::to_string(i + 1));
    }
    return 0;
  }

  if (cfg.format == "json") {
    json subs = json::array();
    for (auto const &s : selected)
      subs.push_back(analyze_json(Inclusion(tg, s.subgroup), s.class_length));
    json j{{"schema", 1}, {"command", "analyze"}, {"group", group_json(cfg.group, group)},
           {"subgroups", subs}};
    if (cfg.tables)
      j["table"] = table_to_json(*tg);
    emit_json(out, j);
    return 0;
  }

  auto stats = table_stats(*tg);
  out << "G = " << cfg.group << " (order " << group.order() << ", degree " << group.degree()
      << "), T = " << stats.total_degree << ", k = " << stats.class_count << ", b = "
      << stats.max_degree << "\n";
  out << selected.size() << " subgroup class(es) selected\n";
  if (cfg.tables)
    out << "\n" << render_table(*tg);
  for (auto const &s : selected) {
    Inclusion inc(tg, s.subgroup);
    out << "\n";
    analyze_text(out, inc, s.class_length);
    if (cfg.tables)
      out << render_table(inc.table_h());
  }
  return 0;
}

int cmd_scan(RunConfig const &cfg, PermGroup const &group, std::ostream &out)
{
  auto report = classify_subgroups(make_character_table(group), cfg.group);
  if (cfg.check_minimal)
    report.minimal_rich = is_minimal_rich_group(group);
  if (cfg.format == "json") {
    emit_json(out, {{"schema", 1}, {"command", "scan"}, {"report", report_to_json(report)}});
    return 0;
  }
  out << report_to_text(report);
  return 0;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Frobenius graphs, rich subgroups and subgroup depth of finite groups", "frobdiam"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto add_common = [&](CLI::App *sub, bool needs_group) {
    if (needs_group)
      sub->add_option("--group", cfg.group, "group label, e.g. S5, AGL1:27:13, file:gens.txt")
          ->required();
    sub->add_option("--cap", cfg.cap, "largest group order to construct");
  };

  auto *analyze = app.add_subcommand("analyze", "Frobenius matrix, graph and depth of H < G");
  add_common(analyze, true);
  analyze->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "dot"}));
  auto *gens_opt = analyze->add_option("--generators", cfg.generators,
                                       "generators of H in cycle notation");
  auto *order_opt = analyze->add_option("--subgroup-order", cfg.subgroup_order,
                                        "every class of subgroups of this order");
  auto *all_opt = analyze->add_flag("--all-classes", cfg.all_classes, "every subgroup class");
  auto *sylow_opt = analyze->add_option("--sylow", cfg.sylow, "the Sylow p-subgroup class");
  auto *prime_opt = analyze->add_flag("--prime-order", cfg.prime_order,
                                      "every class of subgroups of prime order");
  auto *file_opt = analyze->add_option("--seed-file", cfg.seed_file,
                                       "file with generators of H, same format as group files");
  analyze->add_flag("--tables", cfg.tables, "also print the character tables");
  gens_opt->excludes(order_opt, all_opt, sylow_opt, prime_opt, file_opt);
  file_opt->excludes(order_opt, all_opt, sylow_opt, prime_opt);
  sylow_opt->excludes(order_opt, prime_opt);

  auto *scan = app.add_subcommand("scan", "classify all subgroup classes");
  add_common(scan, true);
  scan->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  scan->add_flag("--check-minimal", cfg.check_minimal,
                 "check whether no proper subgroup has a nontrivial rich subgroup");

  auto *table = app.add_subcommand("table", "character table");
  add_common(table, true);
  table->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto *catalog = app.add_subcommand("catalog", "list the standard catalog");
  add_common(catalog, false);
  std::string catalog_action = "list";
  catalog->add_option("action", catalog_action, "only \"list\" is supported")
      ->check(CLI::IsMember({"list"}));
  catalog->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    return app.exit(e, out, err);
  }

  if (analyze->parsed() && cfg.generators.empty() && cfg.seed_file.empty() &&
      cfg.subgroup_order == 0 && !cfg.all_classes && cfg.sylow == 0 && !cfg.prime_order) {
    err << "error: analyze needs a subgroup selector\n";
    return 2;
  }

  try {
    if (catalog->parsed())
      return cmd_catalog(cfg, out);

    Limits limits;
    limits.max_order = cfg.cap;
    auto group = construct(cfg.group, limits);
    if (table->parsed())
      return cmd_table(cfg, group, out);
    if (analyze->parsed())
      return cmd_analyze(cfg, group, out, err);
    return cmd_scan(cfg, group, out);
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace frobdiam::cli
