#include "frobdiam/subgroups.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "frobdiam/depth.hpp"
#include "frobdiam/errors.hpp"
#include "frobdiam/frobenius.hpp"

namespace frobdiam
{

namespace
{

struct ElementsHash
{
  std::size_t operator()(std::vector<ElementId> const &v) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (ElementId x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
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

// Subgroup classes found so far, indexed by every conjugate's element list.
class ClassRegistry
{
public:
  explicit ClassRegistry(PermGroup const &group) : _group(group) {}

  bool known(std::vector<ElementId> const &elements) const
  { return _index.count(elements) != 0; }

  // `elements` sorted. Returns true when this is a new class.
  bool add(std::vector<ElementId> const &elements)
  {
    if (known(elements))
      return false;

    Subgroup sub(_group, elements, {});
    Subgroup norm = normalizer(_group, sub);
    std::size_t id = _reps.size();

    std::vector<bool> done(_group.order(), false);
    std::vector<ElementId> best = elements;
    std::size_t length = 0;
    for (ElementId g = 0; g < _group.order(); ++g) {
      if (done[g])
        continue;
      for (ElementId n : norm.elements())
        done[_group.mul(n, g)] = true;
      ++length;

      std::vector<ElementId> conj;
      conj.reserve(elements.size());
      for (ElementId x : elements)
        conj.push_back(_group.conj(x, g));
      std::sort(conj.begin(), conj.end());
      if (conj < best)
        best = conj;
      _index.emplace(std::move(conj), id);
    }

    _reps.push_back(std::move(best));
    _lengths.push_back(length);
    return true;
  }

  std::size_t size() const { return _reps.size(); }
  std::vector<ElementId> const &representative(std::size_t i) const { return _reps[i]; }

  std::vector<SubgroupClass> classes() const
  {
    std::vector<SubgroupClass> res;
    for (std::size_t i = 0; i < _reps.size(); ++i)
      res.push_back({Subgroup(_group, _reps[i], {}), _lengths[i]});
    std::sort(res.begin(), res.end(), [](SubgroupClass const &a, SubgroupClass const &b) {
      if (a.order() != b.order())
        return a.order() < b.order();
      return a.representative.generator_perms() < b.representative.generator_perms();
    });
    return res;
  }

private:
  PermGroup const &_group;
  std::unordered_map<std::vector<ElementId>, std::size_t, ElementsHash> _index;
  std::vector<std::vector<ElementId>> _reps;
  std::vector<std::size_t> _lengths;
};

std::vector<ElementId> cyclic_elements(PermGroup const &group, ElementId x)
{
  std::vector<ElementId> elems{0};
  for (ElementId y = x; y != 0; y = group.mul(y, x))
    elems.push_back(y);
  std::sort(elems.begin(), elems.end());
  return elems;
}

// Extensions K = <H, g> with g normalizing H and g^p in H for a prime p,
// one per coset gH.
void extend(PermGroup const &group, ClassRegistry &registry, std::size_t i)
{
  auto const h_elements = registry.representative(i);
  Subgroup h(group, h_elements, {});
  Subgroup norm = normalizer(group, h);
  if (norm.order() == h.order())
    return;

  std::vector<bool> done(group.order(), false);
  for (ElementId x : h_elements)
    done[x] = true;

  for (ElementId g : norm.elements()) {
    if (done[g])
      continue;
    for (ElementId x : h_elements)
      done[group.mul(g, x)] = true;

    std::size_t j = 1;
    ElementId power = g;
    while (!h.contains(power)) {
      power = group.mul(power, g);
      ++j;
    }
    if (!is_prime(j))
      continue;

    std::vector<ElementId> k;
    k.reserve(j * h_elements.size());
    ElementId gi = 0;
    for (std::size_t e = 0; e < j; ++e) {
      for (ElementId x : h_elements)
        k.push_back(group.mul(gi, x));
      gi = group.mul(gi, g);
    }
    std::sort(k.begin(), k.end());
    registry.add(k);
  }
}

bool is_perfect(Subgroup const &sub)
{ return derived_subgroup(sub).order() == sub.order(); }

// Every perfect group in the catalog range is generated by two elements, so
// closing <x, y> over class representatives x and all y finds them all.
void seed_perfect_subgroups(PermGroup const &group, ClassRegistry &registry)
{
  auto const &cd = group.classes();
  std::size_t abort_above = group.order() / 2;
  for (std::size_t c = 1; c < cd.size(); ++c) {
    ElementId x = cd.representative_ids[c];
    for (ElementId y = 1; y < group.order(); ++y) {
      ElementId gens[] = {x, y};
      auto sub = Subgroup::generated(group, gens, abort_above);
      // the smallest nontrivial perfect group has order 60
      if (!sub || sub->order() < 60)
        continue;
      std::vector<ElementId> elems(sub->elements().begin(), sub->elements().end());
      if (registry.known(elems) || !is_perfect(*sub))
        continue;
      registry.add(elems);
    }
  }
}

std::string yes_no(bool b) { return b ? "+" : "-"; }

} // namespace

std::string Fingerprint::to_string() const
{
  std::ostringstream os;
  os << (abelian ? "abelian" : "nonabelian") << " exp=" << exponent << " dl=";
  if (derived_length)
    os << *derived_length;
  else
    os << "-";
  return os.str();
}

Fingerprint fingerprint(PermGroup const &group)
{
  Fingerprint fp;
  fp.order = group.order();
  fp.abelian = group.is_abelian();
  fp.exponent = group.exponent();
  fp.derived_length = derived_length(group);
  return fp;
}

std::vector<SubgroupClass> enumerate_subgroup_classes(PermGroup const &group)
{
  ClassRegistry registry(group);
  registry.add({0});

  auto const &cd = group.classes();
  for (std::size_t c = 1; c < cd.size(); ++c) {
    if (is_prime(cd.element_orders[c]))
      registry.add(cyclic_elements(group, cd.representative_ids[c]));
  }

  if (!is_solvable(group))
    seed_perfect_subgroups(group, registry);

  std::vector<ElementId> all(group.order());
  for (ElementId x = 0; x < group.order(); ++x)
    all[x] = x;
  registry.add(all);

  for (std::size_t i = 0; i < registry.size(); ++i)
    extend(group, registry, i);

  return registry.classes();
}

std::vector<SubgroupClass> prime_order_classes(PermGroup const &group)
{
  ClassRegistry registry(group);
  auto const &cd = group.classes();
  for (std::size_t c = 1; c < cd.size(); ++c) {
    if (is_prime(cd.element_orders[c]))
      registry.add(cyclic_elements(group, cd.representative_ids[c]));
  }
  return registry.classes();
}

std::vector<SubgroupClass> maximal_subgroup_classes(PermGroup const &group,
                                                    std::vector<SubgroupClass> const &classes)
{
  std::vector<SubgroupClass> res;
  for (auto const &a : classes) {
    if (a.representative.is_whole())
      continue;
    bool maximal = true;
    for (auto const &b : classes) {
      if (b.representative.is_whole() || b.order() <= a.order() || b.order() % a.order() != 0)
        continue;
      if (conjugate_into(group, a.representative, b.representative)) {
        maximal = false;
        break;
      }
    }
    if (maximal)
      res.push_back(a);
  }
  return res;
}

DiameterThreeSearch has_diameter_three_subgroup(TablePtr const &table)
{
  DiameterThreeSearch res;
  for (auto const &cls : prime_order_classes(table->group())) {
    if (cls.representative.is_whole())
      continue;
    Inclusion inc(table, cls.representative);
    if (is_rich(inc).holds) {
      res.found = true;
      res.witness = cls;
      res.witness_is_diameter_three = is_diameter_three(inc);
      break;
    }
  }
  return res;
}

DiameterThreeSearch has_diameter_three_subgroup(PermGroup const &group)
{ return has_diameter_three_subgroup(make_character_table(group)); }

ClassificationReport classify_subgroups(TablePtr const &table, std::string label)
{
  PermGroup const &group = table->group();
  ClassificationReport report;
  report.label = std::move(label);
  report.group_order = group.order();

  for (auto const &cls : enumerate_subgroup_classes(group)) {
    ClassVerdict v{cls, fingerprint(cls.representative.as_group())};
    Inclusion inc(table, cls.representative);
    v.proper = !cls.representative.is_whole();
    if (v.proper) {
      auto rich = is_rich(inc);
      v.rich = rich.holds;
      v.failing_character = rich.failing_character;
    }
    auto bii = satisfies_bii(inc);
    v.bii = bii.holds;
    v.failing_pair = bii.failing_pair;
    v.diameter_three = is_diameter_three(inc);
    v.minimal_depth = minimal_depth(inc).minimal_depth;
    report.classes.push_back(std::move(v));
  }

  report.n = report.classes.size();
  auto nontrivial_rich = [](ClassVerdict const &v) {
    return v.rich && !v.cls.representative.is_trivial();
  };
  for (auto &a : report.classes) {
    if (!nontrivial_rich(a))
      continue;
    ++report.g;
    a.maximal_rich = true;
    for (auto const &b : report.classes) {
      if (!nontrivial_rich(b) || b.cls.order() <= a.cls.order() ||
          b.cls.order() % a.cls.order() != 0)
        continue;
      if (conjugate_into(group, a.cls.representative, b.cls.representative)) {
        a.maximal_rich = false;
        break;
      }
    }
    if (a.maximal_rich) {
      ++report.m;
      report.maximal_rich_orders.push_back(a.cls.order());
    }
  }
  return report;
}

ClassificationReport classify_subgroups(PermGroup const &group, std::string label)
{ return classify_subgroups(make_character_table(group), std::move(label)); }

bool is_minimal_rich_group(PermGroup const &group)
{
  if (!has_diameter_three_subgroup(group).found)
    return false;
  auto classes = enumerate_subgroup_classes(group);
  for (auto const &max : maximal_subgroup_classes(group, classes)) {
    if (max.order() == 1)
      continue;
    if (has_diameter_three_subgroup(max.representative.as_group()).found)
      return false;
  }
  return true;
}

std::string report_to_text(ClassificationReport const &report)
{
  std::ostringstream os;
  os << "group " << (report.label.empty() ? "?" : report.label) << "  order "
     << report.group_order << '\n';
  os << "n = " << report.n << "  g = " << report.g << "  m = " << report.m
     << "  maximal rich orders:";
  if (report.maximal_rich_orders.empty())
    os << " none";
  for (std::size_t i = 0; i < report.maximal_rich_orders.size(); ++i)
    os << (i ? ", " : " ") << report.maximal_rich_orders[i];
  os << '\n';
  if (report.minimal_rich)
    os << "minimal with a nontrivial rich subgroup: " << (*report.minimal_rich ? "yes" : "no")
       << '\n';
  os << '\n';

  os << "    #  order  length  rich  (b)(ii)  diam3  depth  max  structure\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    auto const &v = report.classes[i];
    char line[128];
    std::snprintf(line, sizeof line, "%5zu  %5zu  %6zu  %4s  %7s  %5s  %5zu  %3s  ", i + 1,
                  v.cls.order(), v.cls.class_length,
                  v.proper ? yes_no(v.rich).c_str() : ".", yes_no(v.bii).c_str(),
                  yes_no(v.diameter_three).c_str(), v.minimal_depth,
                  v.maximal_rich ? "*" : "");
    os << line << v.fp.to_string() << '\n';
  }
  return os.str();
}

nlohmann::json report_to_json(ClassificationReport const &report)
{
  nlohmann::json classes = nlohmann::json::array();
  for (auto const &v : report.classes) {
    std::vector<std::string> gens;
    for (auto const &p : v.cls.representative.generator_perms())
      gens.push_back(p.to_string());
    nlohmann::json c{
      {"order", v.cls.order()},
      {"class_length", v.cls.class_length},
      {"generators", gens},
      {"abelian", v.fp.abelian},
      {"exponent", v.fp.exponent},
      {"derived_length", nullptr},
      {"proper", v.proper},
      {"rich", v.rich},
      {"bii", v.bii},
      {"diameter_three", v.diameter_three},
      {"maximal_rich", v.maximal_rich},
      {"minimal_depth", v.minimal_depth},
      {"failing_character", nullptr},
      {"failing_pair", nullptr},
    };
    if (v.fp.derived_length)
      c["derived_length"] = *v.fp.derived_length;
    if (v.failing_character)
      c["failing_character"] = *v.failing_character;
    if (v.failing_pair)
      c["failing_pair"] = {v.failing_pair->first, v.failing_pair->second};
    classes.push_back(std::move(c));
  }
  nlohmann::json j{
    {"label", report.label},
    {"order", report.group_order},
    {"n", report.n},
    {"g", report.g},
    {"m", report.m},
    {"maximal_rich_orders", report.maximal_rich_orders},
    {"classes", classes},
  };
  if (report.minimal_rich)
    j["minimal_rich"] = *report.minimal_rich;
  return j;
}

} // namespace frobdiam
