// Acceptance run: one PASS/FAIL line per criterion, each under a time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "frobdiam/catalog.hpp"
#include "frobdiam/character_table.hpp"
#include "frobdiam/depth.hpp"
#include "frobdiam/errors.hpp"
#include "frobdiam/frobenius.hpp"
#include "frobdiam/graph.hpp"
#include "frobdiam/subgroups.hpp"

#include "../test_util.hpp"

using namespace frobdiam;

namespace
{

// Collects failed checks for one criterion.
class Checker
{
public:
  void expect(bool ok, std::string const &what)
  {
    ++_checks;
    if (!ok)
      _failures.push_back(what);
  }

  void note(std::string const &text) { _notes.push_back(text); }

  std::size_t checks() const { return _checks; }
  std::vector<std::string> const &failures() const { return _failures; }
  std::vector<std::string> const &notes() const { return _notes; }

private:
  std::size_t _checks = 0;
  std::vector<std::string> _failures;
  std::vector<std::string> _notes;
};

struct Criterion
{
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Checker &)> body;
};

std::string str(std::size_t v) { return std::to_string(v); }

Subgroup point_stabilizer(PermGroup const &g)
{
  std::size_t n = g.degree() - 1;
  std::vector<Permutation> gens{Permutation::from_cycles(n + 1, {{0, 1}})};
  std::vector<std::size_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i)
    cycle[i] = i;
  gens.push_back(Permutation::from_cycles(n + 1, {cycle}));
  return Subgroup::generated_by(g, gens);
}

// Component `c` is a path with `length` edges.
bool is_path(FrobeniusGraph const &graph, std::size_t c, std::size_t length)
{
  auto const &vs = graph.components()[c];
  if (vs.size() != length + 1)
    return false;
  std::size_t ends = 0;
  std::size_t edges = 0;
  for (auto v : vs) {
    auto deg = graph.neighbours(v).size();
    if (deg == 0 || deg > 2)
      return false;
    ends += deg == 1;
    edges += deg;
  }
  return ends == 2 && edges / 2 == length;
}

std::vector<SubgroupClass> classes_of_order(PermGroup const &g, std::size_t order)
{
  std::vector<SubgroupClass> res;
  for (auto const &c : enumerate_subgroup_classes(g)) {
    if (c.order() == order)
      res.push_back(c);
  }
  return res;
}

void criterion_order_80(Checker &ck)
{
  auto g = construct("Named:G80");
  auto tg = make_character_table(g);
  IntMatrix printed{{1, 1, 1, 1, 1, 1, 1, 1},
                    {0, 0, 0, 0, 0, 2, 2, 0},
                    {0, 0, 0, 0, 0, 2, 0, 2},
                    {0, 0, 0, 0, 0, 0, 2, 2}};
  std::size_t diam3 = 0;
  for (auto const &c : classes_of_order(g, 4)) {
    Inclusion inc(tg, c.representative);
    if (!is_diameter_three(inc))
      continue;
    ++diam3;
    ck.expect(test::equal_up_to_permutation(inc.matrix(), printed),
              "diameter three class has a different matrix");
  }
  ck.expect(diam3 == 1, "expected one diameter three class of order 4, found " + str(diam3));
}

void criterion_symmetric(Checker &ck)
{
  auto s3 = construct("S3");
  auto graph = frobenius_graph(Inclusion(make_character_table(s3), point_stabilizer(s3)));
  ck.expect(graph.component_count() == 1 && is_path(graph, 0, 4),
            "graph of S2 < S3 is not a path on 5 vertices");
  for (std::size_t n = 2; n <= 5; ++n) {
    auto g = construct("S" + str(n + 1));
    auto d = frobenius_graph(Inclusion(make_character_table(g), point_stabilizer(g))).diameter();
    ck.expect(!d.is_infinite() && d.value() == 2 * n,
              "S" + str(n) + " < S" + str(n + 1) + " has diameter " + d.to_string());
  }
}

void criterion_g351(Checker &ck)
{
  auto g = construct("Named:G351");
  auto tg = make_character_table(g);
  std::map<std::int64_t, std::size_t> degree_count;
  for (auto d : tg->degrees())
    ++degree_count[d];
  ck.expect(degree_count == std::map<std::int64_t, std::size_t>{{1, 13}, {13, 2}},
            "unexpected character degrees");

  auto nines = classes_of_order(g, 9);
  ck.expect(!nines.empty(), "no subgroup of order 9");
  for (auto const &c : nines) {
    Inclusion inc(tg, c.representative);
    auto pc = permutation_character(inc);
    ck.expect(std::all_of(pc.begin(), pc.end(), [](auto m) { return m == 1; }),
              "1_H^G is not multiplicity free over all of Irr(G)");
    ck.expect(is_rich(inc).holds, "order 9 subgroup is not rich");
    auto bii = satisfies_bii(inc);
    ck.expect(!bii.holds && bii.failing_pair.has_value(), "order 9 subgroup satisfies (b)(ii)");
    if (bii.failing_pair) {
      auto [phi, psi] = *bii.failing_pair;
      std::vector<std::size_t> targets;
      for (auto x : {phi, psi}) {
        std::size_t support = 0;
        for (std::size_t chi = 0; chi < tg->size(); ++chi) {
          if (inc.matrix()[x][chi] == 0)
            continue;
          ++support;
          targets.push_back(chi);
          ck.expect(inc.matrix()[x][chi] == 3, "witness induces with multiplicity other than 3");
        }
        ck.expect(support == 1, "witness induces to more than one irreducible");
      }
      ck.expect(targets.size() == 2 && targets[0] != targets[1],
                "witness pair does not induce to two distinct characters");
    }
    ck.expect(!is_diameter_three(inc), "order 9 subgroup has diameter three");
  }

  // The general affine example predicts a diameter three subgroup of order 3
  // while the order 9 point stabilizer is the one reported as rich but not
  // diameter three. Both verdicts are computed and shown.
  for (auto const &c : classes_of_order(g, 3)) {
    Inclusion inc(tg, c.representative);
    bool rich = is_rich(inc).holds;
    bool diam3 = is_diameter_three(inc);
    ck.note("order 3 subgroup of G351: rich " + std::string(rich ? "yes" : "no") +
            ", diameter three " + (diam3 ? "yes" : "no"));
    if (diam3) {
      ck.note("DISCREPANCY: G351 does have a diameter three subgroup (of order 3); the "
              "\"rich but not diameter three\" verdict holds only for the order 9 subgroup "
              "of index 39");
    }
  }
}

void criterion_simple_rows(Checker &ck)
{
  struct Row
  {
    std::string label;
    std::size_t n, g, m;
    std::vector<std::size_t> orders;
  };
  for (auto const &row : {Row{"A5", 9, 2, 2, {2, 3}}, Row{"PSL3:2", 15, 3, 2, {3, 4}}}) {
    auto r = classify_subgroups(construct(row.label), row.label);
    std::ostringstream got;
    got << "n=" << r.n << " g=" << r.g << " m=" << r.m;
    ck.expect(r.n == row.n && r.g == row.g && r.m == row.m, row.label + ": " + got.str());
    ck.expect(r.maximal_rich_orders == row.orders, row.label + ": wrong maximal rich orders");
  }
}

void criterion_sl2(Checker &ck)
{
  auto r5 = classify_subgroups(construct("SL2:5"), "SL2:5");
  for (auto const &c : r5.classes)
    ck.expect(!c.diameter_three, "SL2:5 has a diameter three subgroup of order " +
                                     str(c.cls.order()));
  ck.expect(!has_diameter_three_subgroup(construct("SL2:5")).found,
            "SL2:5 prime order search found a rich class");

  auto g7 = construct("SL2:7");
  auto r7 = classify_subgroups(g7, "SL2:7");
  std::size_t diam3 = 0;
  for (auto const &c : r7.classes) {
    if (!c.diameter_three)
      continue;
    ++diam3;
    ck.expect(c.cls.order() == 3, "SL2:7 diameter three subgroup of order " +
                                      str(c.cls.order()));
  }
  ck.expect(diam3 >= 1, "SL2:7 has no diameter three subgroup");
  ck.expect(is_minimal_rich_group(g7), "SL2:7 is not minimal");
}

void criterion_depth(Checker &ck)
{
  auto s3 = construct("S3");
  Inclusion a(make_character_table(s3), point_stabilizer(s3));
  ck.expect(minimal_depth(a).minimal_depth == 3, "d(S2,S3) != 3");
  auto da = frobenius_graph(a).diameter();
  ck.expect(!da.is_infinite() && da.value() == 4, "S2 < S3 diameter is not 4");

  auto d12 = construct("Named:D12");
  auto sylow = classes_of_order(d12, 4);
  ck.expect(sylow.size() == 1, "D12 should have one class of order 4 subgroups");
  if (sylow.empty())
    return;
  Inclusion b(make_character_table(d12), sylow[0].representative);
  ck.expect(minimal_depth(b).minimal_depth == 3, "Sylow 2 of D12 has depth other than 3");
  auto graph = frobenius_graph(b);
  ck.expect(graph.component_count() == 2, "Sylow 2 of D12 graph is not two components");
  for (std::size_t c = 0; c < graph.component_count(); ++c)
    ck.expect(is_path(graph, c, 4), "component " + str(c) + " is not a path of length 4");
}

template <typename F>
void for_each_catalog_group(std::size_t max_order, F f)
{
  for (auto const &e : standard_catalog()) {
    if (expected_order(parse_group_label(e.label)) > max_order)
      continue;
    f(e, construct(e.label));
  }
}

void criterion_equivalences(Checker &ck)
{
  std::size_t pairs = 0;
  for_each_catalog_group(2000, [&](CatalogEntry const &e, PermGroup const &g) {
    auto tg = make_character_table(g);
    for (auto const &c : enumerate_subgroup_classes(g)) {
      Inclusion inc(tg, c.representative);
      std::string where = e.label + " order " + str(c.order());
      ++pairs;
      for (auto const &v : inclusion_identity_violations(inc))
        ck.expect(false, where + ": " + v);
      auto graph = frobenius_graph(inc);
      auto orbits = irr_action_orbits(g, core(g, c.representative));
      ck.expect(graph.component_count() == orbits.count, where + ": components != orbits");
      auto d = graph.diameter();
      bool three = !d.is_infinite() && d.value() == 3;
      ck.expect(is_diameter_three(inc) == three, where + ": diameter three verdict mismatch");
      ck.expect(induced_gram(inc.matrix()) == mackey_gram(inc), where + ": Mackey != gram");
    }
  });
  ck.note(str(pairs) + " subgroup classes checked");
}

void criterion_bounds(Checker &ck)
{
  std::size_t rich_found = 0;
  for_each_catalog_group(Limits{}.max_order, [&](CatalogEntry const &e, PermGroup const &g) {
    auto report = classify_subgroups(make_character_table(g), e.label);
    auto tg = make_character_table(g);
    for (auto const &v : report.classes) {
      if (!v.rich || v.cls.representative.is_trivial() || !v.proper)
        continue;
      ++rich_found;
      std::string where = e.label + " order " + str(v.cls.order());
      ck.expect(!e.supersolvable, where + ": rich subgroup in a supersolvable group");
      for (auto const &msg : rich_consequence_violations(Inclusion(tg, v.cls.representative)))
        ck.expect(false, where + ": " + msg);
    }
  });
  ck.note(str(rich_found) + " nontrivial rich classes checked");
}

void criterion_affine(Checker &ck)
{
  std::size_t cases = 0;
  for (std::size_t p : {3, 5, 7}) {
    for (std::size_t d = 2; d <= p * p - 1; ++d) {
      if ((p * p - 1) % d != 0)
        continue;
      std::string label = "AGL1:" + str(p * p) + ":" + str(d);
      auto report = classify_subgroups(construct(label), label);
      bool found = std::any_of(report.classes.begin(), report.classes.end(),
                               [](auto const &c) { return c.diameter_three; });
      ++cases;
      ck.expect(found == affine_diam3_criterion(p, d),
                label + ": scan says " + (found ? "yes" : "no"));
    }
  }
  ck.note(str(cases) + " affine groups scanned");
}

void criterion_tables(Checker &ck)
{
  for_each_catalog_group(Limits{}.max_order, [&](CatalogEntry const &e, PermGroup const &g) {
    try {
      verify_character_table(CharacterTable::compute(g));
    } catch (Error const &err) {
      ck.expect(false, e.label + ": " + err.what());
      return;
    }
    ck.expect(true, e.label);
  });
}

} // namespace

int main()
{
  std::vector<Criterion> criteria{
      {1, "order 80 group, unique diameter three class of order 4", 5, criterion_order_80},
      {2, "point stabilizers in symmetric groups", 60, criterion_symmetric},
      {3, "order 351 group, order 9 subgroup", 30, criterion_g351},
      {4, "simple group rows for A5 and PSL(3,2)", 60, criterion_simple_rows},
      {5, "SL(2,5) and SL(2,7)", 300, criterion_sl2},
      {6, "depth of S2 < S3 and the Sylow 2-subgroup of D12", 1, criterion_depth},
      {7, "equivalence suite over catalog groups of order at most 2000", 600,
       criterion_equivalences},
      {8, "bounds and obstructions for rich subgroups", 600, criterion_bounds},
      {9, "affine criterion for AGL1(p^2) subgroups", 600, criterion_affine},
      {10, "character table self validation", 600, criterion_tables},
  };

  bool all = true;
  for (auto const &c : criteria) {
    Checker ck;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(ck);
    } catch (std::exception const &e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.limit_seconds;
    bool pass = ck.failures().empty() && in_time;
    all = all && pass;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title
              << " (" << ck.checks() << " checks, " << timing << ")\n";
    if (!in_time)
      std::cout << "      time limit exceeded\n";
    std::size_t shown = 0;
    for (auto const &f : ck.failures()) {
      if (++shown > 20) {
        std::cout << "      ... " << ck.failures().size() - 20 << " more\n";
        break;
      }
      std::cout << "      failed: " << f << "\n";
    }
    for (auto const &n : ck.notes())
      std::cout << "      " << n << "\n";
  }
  return all ? 0 : 1;
}
