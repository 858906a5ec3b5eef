#include "frobdiam/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "frobdiam/errors.hpp"

namespace frobdiam
{

namespace
{

constexpr std::uint32_t not_in_h = std::numeric_limits<std::uint32_t>::max();

std::int64_t exact_quotient(Cyclotomic const &value, std::int64_t divisor, char const *what)
{
  if (!value.is_rational())
    throw InternalInconsistency(std::string(what) + " is not rational");
  auto v = value.to_rational_integer();
  if (v % divisor != 0)
    throw InternalInconsistency(std::string(what) + " is not integral");
  return v / divisor;
}

Cyclotomic divide_exactly(Cyclotomic const &value, std::int64_t divisor)
{
  std::vector<std::int64_t> coeffs(value.coefficients().begin(), value.coefficients().end());
  for (auto &c : coeffs) {
    if (c % divisor != 0)
      throw InternalInconsistency("induced character value is not an algebraic integer");
    c /= divisor;
  }
  return Cyclotomic::from_exponents(value.conductor(), coeffs);
}

bool is_prime_power(std::size_t n)
{
  if (n < 2)
    return false;
  std::size_t p = 2;
  while (n % p != 0)
    ++p;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

// |H^g n H| class pair counts for one double coset representative:
// pairs (H-class of x, H-class of g x g^-1) over x in H^g n H.
struct IntersectionCounts
{
  std::size_t size = 0;
  std::vector<std::vector<std::int64_t>> counts;
};

IntersectionCounts intersection_counts(Inclusion const &inc, ElementId g)
{
  PermGroup const &group = inc.group();
  std::size_t kh = inc.table_h().size();
  IntersectionCounts res;
  res.counts.assign(kh, std::vector<std::int64_t>(kh, 0));
  ElementId g_inv = group.inv(g);
  for (ElementId x : inc.subgroup().elements()) {
    ElementId y = group.conj(x, g_inv);
    if (!inc.subgroup().contains(y))
      continue;
    ++res.size;
    ++res.counts[inc.h_class_of(x)][inc.h_class_of(y)];
  }
  return res;
}

std::int64_t mackey_term(Inclusion const &inc, IntersectionCounts const &ic,
                         std::size_t phi, std::size_t psi)
{
  auto const &th = inc.table_h();
  auto const &hcd = th.classes();
  CyclotomicSum sum(th.exponent());
  for (std::size_t a = 0; a < ic.counts.size(); ++a) {
    for (std::size_t b = 0; b < ic.counts.size(); ++b) {
      if (ic.counts[a][b] == 0)
        continue;
      sum.add_product(th.value(phi, a), th.value(psi, hcd.inverse_class[b]), ic.counts[a][b]);
    }
  }
  return exact_quotient(sum.value(), static_cast<std::int64_t>(ic.size),
                        "Mackey summand");
}

} // namespace

FusionMap fusion_map(CharacterTable const &tg, Subgroup const &h, CharacterTable const &th)
{
  (void)h;
  FusionMap fusion;
  auto const &gcd = tg.classes();
  auto const &hcd = th.classes();
  for (std::size_t c = 0; c < hcd.size(); ++c) {
    auto id = tg.group().find(hcd.representatives[c]);
    if (!id)
      throw InternalInconsistency("subgroup class representative not in the group");
    std::size_t j = gcd.class_of[*id];
    if (gcd.element_orders[j] != hcd.element_orders[c])
      throw InternalInconsistency("class fusion changes element orders");
    fusion.h_to_g.push_back(j);
  }
  if (fusion.h_to_g.empty() || fusion.h_to_g[0] != 0)
    throw InternalInconsistency("identity class does not fuse to the identity class");
  return fusion;
}

Inclusion::Inclusion(TablePtr tg, Subgroup h)
: _tg(std::move(tg)), _h(std::move(h))
{
  _th = make_character_table(_h.as_group());
  init();
}

Inclusion::Inclusion(TablePtr tg, Subgroup h, TablePtr th)
: _tg(std::move(tg)), _h(std::move(h)), _th(std::move(th))
{ init(); }

void Inclusion::init()
{
  if (!_h.parent().same_group(_tg->group()))
    throw InternalInconsistency("subgroup and table belong to different groups");

  _fusion = fusion_map(*_tg, _h, *_th);

  _h_class_of.assign(group().order(), not_in_h);
  auto const &hgroup = _th->group();
  for (ElementId x : _h.elements()) {
    auto id = hgroup.find(group().element(x));
    if (!id)
      throw InternalInconsistency("subgroup table does not match the subgroup");
    _h_class_of[x] = _th->classes().class_of[*id];
  }

  _matrix = frobenius_matrix(*_tg, _h, *_th, _fusion);
}

IntMatrix frobenius_matrix(CharacterTable const &tg, Subgroup const &h,
                           CharacterTable const &th, FusionMap const &fusion)
{
  auto const &hcd = th.classes();
  auto order = static_cast<std::int64_t>(h.order());
  IntMatrix m(th.size(), std::vector<std::int64_t>(tg.size(), 0));
  for (std::size_t phi = 0; phi < th.size(); ++phi) {
    for (std::size_t chi = 0; chi < tg.size(); ++chi) {
      CyclotomicSum sum(th.exponent());
      for (std::size_t c = 0; c < hcd.size(); ++c) {
        sum.add_product(tg.value(chi, fusion.h_to_g[c]), th.value(phi, hcd.inverse_class[c]),
                        static_cast<std::int64_t>(hcd.sizes[c]));
      }
      auto entry = exact_quotient(sum.value(), order, "Frobenius matrix entry");
      if (entry < 0)
        throw InternalInconsistency("negative Frobenius matrix entry");
      m[phi][chi] = entry;
    }
  }
  return m;
}

std::vector<std::int64_t> permutation_character(Inclusion const &inc)
{ return inc.matrix()[0]; }

std::vector<Cyclotomic> induced_character(Inclusion const &inc, std::size_t phi)
{
  auto const &gcd = inc.table_g().classes();
  auto const &th = inc.table_h();
  auto const &hcd = th.classes();
  auto order = static_cast<std::int64_t>(inc.subgroup().order());

  std::vector<CyclotomicSum> sums(gcd.size(), CyclotomicSum(th.exponent()));
  for (std::size_t c = 0; c < hcd.size(); ++c)
    sums[inc.fusion().h_to_g[c]].add(th.value(phi, c), static_cast<std::int64_t>(hcd.sizes[c]));

  std::vector<Cyclotomic> res;
  for (std::size_t j = 0; j < gcd.size(); ++j) {
    auto scaled = sums[j].value() * Cyclotomic(static_cast<std::int64_t>(gcd.centralizer_orders[j]));
    res.push_back(divide_exactly(scaled, order));
  }
  return res;
}

IntMatrix induced_gram(IntMatrix const &m)
{
  std::size_t n = m.size();
  IntMatrix s(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < m[a].size(); ++c)
        acc += m[a][c] * m[b][c];
      s[a][b] = acc;
    }
  }
  return s;
}

std::vector<ElementId> double_coset_representatives(Subgroup const &h)
{
  PermGroup const &group = h.parent();
  std::vector<bool> seen(group.order(), false);
  std::vector<ElementId> reps;
  for (ElementId g = 0; g < group.order(); ++g) {
    if (seen[g])
      continue;
    reps.push_back(g);
    for (ElementId a : h.elements()) {
      ElementId ag = group.mul(a, g);
      for (ElementId b : h.elements())
        seen[group.mul(ag, b)] = true;
    }
  }
  return reps;
}

std::int64_t mackey_inner_product(Inclusion const &inc, std::size_t phi, std::size_t psi)
{
  std::int64_t total = 0;
  for (ElementId g : double_coset_representatives(inc.subgroup()))
    total += mackey_term(inc, intersection_counts(inc, g), phi, psi);
  return total;
}

IntMatrix mackey_gram(Inclusion const &inc)
{
  std::size_t kh = inc.table_h().size();
  IntMatrix s(kh, std::vector<std::int64_t>(kh, 0));
  for (ElementId g : double_coset_representatives(inc.subgroup())) {
    auto ic = intersection_counts(inc, g);
    for (std::size_t phi = 0; phi < kh; ++phi) {
      for (std::size_t psi = 0; psi < kh; ++psi)
        s[phi][psi] += mackey_term(inc, ic, phi, psi);
    }
  }
  return s;
}

RichVerdict is_rich(Inclusion const &inc)
{
  if (inc.subgroup().is_whole())
    throw NotProper("richness is only defined for proper subgroups");
  RichVerdict v;
  auto const &row = inc.matrix()[0];
  for (std::size_t chi = 0; chi < row.size(); ++chi) {
    if (row[chi] == 0) {
      v.failing_character = chi;
      return v;
    }
  }
  v.holds = true;
  return v;
}

BiiVerdict satisfies_bii(Inclusion const &inc)
{
  BiiVerdict v;
  auto s = induced_gram(inc.matrix());
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a; b < s.size(); ++b) {
      if (s[a][b] == 0) {
        v.failing_pair = {a, b};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

bool is_diameter_three(Inclusion const &inc)
{
  auto const &h = inc.subgroup();
  if (h.is_trivial() || h.is_whole())
    return false;
  return is_rich(inc).holds && satisfies_bii(inc).holds;
}

BiiShortcuts bii_shortcuts(Inclusion const &inc)
{
  BiiShortcuts res;
  PermGroup const &group = inc.group();
  Subgroup const &h = inc.subgroup();

  for (ElementId g : double_coset_representatives(h)) {
    if (intersection_counts(inc, g).size == 1) {
      res.trivial_intersection = true;
      break;
    }
  }

  if (core(group, h).is_trivial()) {
    if (h.order() <= 2) {
      res.transitive_normalizer = true;
    } else {
      auto n = normalizer(group, h);
      ElementId first = h.elements()[1];
      std::vector<bool> hit(group.order(), false);
      std::size_t orbit = 0;
      for (ElementId x : n.elements()) {
        ElementId y = group.conj(first, x);
        if (!hit[y]) {
          hit[y] = true;
          ++orbit;
        }
      }
      res.transitive_normalizer = orbit == h.order() - 1;
    }
  }
  return res;
}

std::vector<std::string> rich_consequence_violations(Inclusion const &inc)
{
  std::vector<std::string> out;
  Subgroup const &h = inc.subgroup();
  if (h.is_whole() || !is_rich(inc).holds)
    return out;

  PermGroup const &group = inc.group();
  auto const &tg = inc.table_g();
  auto stats = table_stats(tg);
  auto order = static_cast<std::int64_t>(h.order());
  auto index = static_cast<std::int64_t>(inc.index());

  if (!core(group, h).is_trivial())
    out.push_back("rich subgroup with nontrivial core");
  if (stats.total_degree > index)
    out.push_back("T(G) exceeds the index of a rich subgroup");
  if (!derived_subgroup(group).contains(h))
    out.push_back("rich subgroup not contained in G'");

  auto const &gcd = tg.classes();
  auto h_derived = derived_subgroup(h);
  for (std::size_t chi = 0; chi < tg.size(); ++chi) {
    if (tg.degrees()[chi] != 2 || inc.matrix()[0][chi] == 0)
      continue;
    for (ElementId x : h_derived.elements()) {
      if (!(tg.value(chi, gcd.class_of[x]) == Cyclotomic(2))) {
        out.push_back("H' not in the kernel of a degree-2 character with a trivial constituent");
        break;
      }
    }
  }

  if (!h.is_trivial()) {
    if (order > index - static_cast<std::int64_t>(stats.class_count) + 1)
      out.push_back("|H| > [G:H] - k(G) + 1");
    if (order >= stats.max_degree)
      out.push_back("|H| >= b(G)");
    if (order * order >= static_cast<std::int64_t>(group.order()))
      out.push_back("|H| >= sqrt|G|");
    if (is_prime_power(inc.index()))
      out.push_back("nontrivial rich subgroup of prime-power index");
  }
  return out;
}

std::vector<std::string> inclusion_identity_violations(Inclusion const &inc)
{
  std::vector<std::string> out;
  auto const &tg = inc.table_g();
  auto const &th = inc.table_h();
  auto const &m = inc.matrix();
  auto const &gcd = tg.classes();
  auto index = static_cast<std::int64_t>(inc.index());

  if (m[0][0] != 1)
    out.push_back("entry (1_H, 1_G) is not 1");

  for (std::size_t chi = 0; chi < tg.size(); ++chi) {
    std::int64_t deg = 0;
    for (std::size_t phi = 0; phi < th.size(); ++phi)
      deg += m[phi][chi] * th.degrees()[phi];
    if (deg != tg.degrees()[chi])
      out.push_back("restriction of character " + std::to_string(chi) + " has the wrong degree");
  }

  for (std::size_t phi = 0; phi < th.size(); ++phi) {
    auto induced = induced_character(inc, phi);
    if (!(induced[0] == Cyclotomic(index * th.degrees()[phi])))
      out.push_back("induced character has the wrong degree");
    for (std::size_t chi = 0; chi < tg.size(); ++chi) {
      CyclotomicSum sum(tg.exponent());
      for (std::size_t j = 0; j < gcd.size(); ++j)
        sum.add_product(induced[j], tg.value(chi, gcd.inverse_class[j]),
                        static_cast<std::int64_t>(gcd.sizes[j]));
      auto mult = exact_quotient(sum.value(), static_cast<std::int64_t>(inc.group().order()),
                                 "induced multiplicity");
      if (mult != m[phi][chi])
        out.push_back("Frobenius reciprocity fails at (" + std::to_string(phi) + ", " +
                      std::to_string(chi) + ")");
    }
  }

  std::int64_t perm_degree = 0;
  for (std::size_t chi = 0; chi < tg.size(); ++chi)
    perm_degree += m[0][chi] * tg.degrees()[chi];
  if (perm_degree != index)
    out.push_back("permutation character degree differs from the index");

  auto s = induced_gram(m);
  if (mackey_gram(inc) != s)
    out.push_back("Mackey formula disagrees with M M^T");
  auto rank = static_cast<std::int64_t>(double_coset_representatives(inc.subgroup()).size());
  if (rank != s[0][0])
    out.push_back("double coset count differs from [1_H^G, 1_H^G]");
  return out;
}

std::string matrix_to_text(IntMatrix const &m)
{
  std::size_t width = 1;
  for (auto const &row : m) {
    for (auto x : row)
      width = std::max(width, std::to_string(x).size());
  }
  std::ostringstream os;
  for (auto const &row : m) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      auto s = std::to_string(row[c]);
      if (c > 0)
        os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json matrix_to_json(IntMatrix const &m)
{ return m; }

} // namespace frobdiam
