#include "frobdiam/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "frobdiam/errors.hpp"

namespace frobdiam
{

namespace
{

// Groups up to this order get a full Cayley table on first use.
constexpr std::size_t cayley_table_max = 5040;

} // namespace

namespace detail
{

struct GroupData
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<ElementId> generator_ids;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElementId> index;
  std::vector<ElementId> inverse;

  mutable std::once_flag table_once;
  mutable std::vector<std::uint16_t> table;

  mutable std::once_flag classes_once;
  mutable ClassData classes;

  mutable std::once_flag misc_once;
  mutable std::size_t exponent = 1;
  mutable bool abelian = true;

  void build_index()
  {
    index.clear();
    index.reserve(elements.size() * 2);
    for (std::size_t i = 0; i < elements.size(); ++i)
      index.emplace(elements[i], static_cast<ElementId>(i));

    inverse.resize(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
      inverse[i] = index.at(elements[i].inverse());

    generator_ids.clear();
    for (auto const &gen : generators)
      generator_ids.push_back(index.at(gen));
  }

  ElementId lookup_product(ElementId a, ElementId b) const
  { return index.at(elements[a] * elements[b]); }

  void ensure_table() const
  {
    std::call_once(table_once, [this] {
      std::size_t n = elements.size();
      if (n > cayley_table_max)
        return;
      table.resize(n * n);
      Permutation prod(degree);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          prod = elements[a];
          prod *= elements[b];
          table[a * n + b] = static_cast<std::uint16_t>(index.at(prod));
        }
      }
    });
  }
};

struct SubgroupData
{
  PermGroup parent;
  std::vector<ElementId> elements;
  std::vector<bool> mask;
  std::vector<ElementId> generators;

  mutable std::once_flag group_once;
  mutable std::optional<PermGroup> group;

  explicit SubgroupData(PermGroup p) : parent(std::move(p)) {}
};

} // namespace detail

// --- PermGroup --------------------------------------------------------------

PermGroup PermGroup::from_generators(std::size_t degree,
                                     std::vector<Permutation> generators,
                                     Limits const &limits)
{
  if (degree > limits.max_degree)
    throw DeskScaleExceeded("degree " + std::to_string(degree) +
                            " exceeds the limit " + std::to_string(limits.max_degree));
  if (degree == 0)
    throw InvalidPermutation("degree must be positive");

  for (auto const &gen : generators) {
    if (gen.degree() != degree)
      throw InvalidPermutation("generator " + gen.to_string() +
                               " does not have degree " + std::to_string(degree));
  }

  std::vector<Permutation> elements{Permutation(degree)};
  std::unordered_map<Permutation, ElementId> seen;
  seen.emplace(elements[0], 0);

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (auto const &gen : generators) {
      Permutation next = elements[i] * gen;
      if (seen.contains(next))
        continue;
      if (elements.size() >= limits.max_order)
        throw DeskScaleExceeded("group order exceeds the limit " +
                                std::to_string(limits.max_order));
      seen.emplace(next, static_cast<ElementId>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  std::sort(elements.begin(), elements.end());
  return from_closed_set(degree, std::move(generators), std::move(elements));
}

PermGroup PermGroup::from_closed_set(std::size_t degree,
                                     std::vector<Permutation> generators,
                                     std::vector<Permutation> elements)
{
  if (elements.empty() || !elements.front().is_identity())
    throw InternalInconsistency("element list must start with the identity");

  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->generators = std::move(generators);
  d->elements = std::move(elements);
  d->build_index();
  return PermGroup(std::move(d));
}

std::size_t PermGroup::degree() const { return _d->degree; }
std::size_t PermGroup::order() const { return _d->elements.size(); }
std::vector<Permutation> const &PermGroup::generators() const { return _d->generators; }
std::vector<ElementId> const &PermGroup::generator_ids() const { return _d->generator_ids; }
std::vector<Permutation> const &PermGroup::elements() const { return _d->elements; }
Permutation const &PermGroup::element(ElementId id) const { return _d->elements[id]; }

std::optional<ElementId> PermGroup::find(Permutation const &perm) const
{
  auto it = _d->index.find(perm);
  if (it == _d->index.end())
    return std::nullopt;
  return it->second;
}

ElementId PermGroup::id_of(Permutation const &perm) const
{
  auto id = find(perm);
  if (!id)
    throw InvalidPermutation(perm.to_string() + " is not an element of the group");
  return *id;
}

ElementId PermGroup::mul(ElementId a, ElementId b) const
{
  std::size_t n = _d->elements.size();
  if (n <= cayley_table_max) {
    _d->ensure_table();
    return _d->table[a * n + b];
  }
  return _d->lookup_product(a, b);
}

ElementId PermGroup::inv(ElementId a) const { return _d->inverse[a]; }

ElementId PermGroup::conj(ElementId x, ElementId g) const
{ return mul(mul(inv(g), x), g); }

ElementId PermGroup::comm(ElementId x, ElementId y) const
{ return mul(mul(inv(x), inv(y)), mul(x, y)); }

std::size_t PermGroup::element_order(ElementId a) const
{ return _d->elements[a].order(); }

ClassData const &PermGroup::classes() const
{
  std::call_once(_d->classes_once, [this] {
    ClassData &cd = _d->classes;
    std::size_t n = order();
    constexpr std::uint32_t unassigned = ~std::uint32_t{0};
    cd.class_of.assign(n, unassigned);

    for (ElementId x = 0; x < n; ++x) {
      if (cd.class_of[x] != unassigned)
        continue;

      auto cls = static_cast<std::uint32_t>(cd.sizes.size());
      std::vector<ElementId> members{x};
      cd.class_of[x] = cls;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (ElementId g : generator_ids()) {
          ElementId y = conj(members[i], g);
          if (cd.class_of[y] == unassigned) {
            cd.class_of[y] = cls;
            members.push_back(y);
          }
        }
      }
      std::sort(members.begin(), members.end());

      cd.representatives.push_back(element(x));
      cd.representative_ids.push_back(x);
      cd.sizes.push_back(members.size());
      cd.centralizer_orders.push_back(n / members.size());
      cd.element_orders.push_back(element_order(x));
      cd.members.push_back(std::move(members));
    }

    std::size_t k = cd.sizes.size();
    cd.inverse_class.resize(k);
    cd.power_map.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      ElementId rep = cd.representative_ids[i];
      cd.inverse_class[i] = cd.class_of[inv(rep)];
      ElementId x = 0;
      for (std::size_t j = 0; j < cd.element_orders[i]; ++j) {
        cd.power_map[i].push_back(cd.class_of[x]);
        x = mul(x, rep);
      }
      if (x != 0)
        throw InternalInconsistency("element order mismatch in power map");
    }
  });
  return _d->classes;
}

std::size_t PermGroup::exponent() const
{
  std::call_once(_d->misc_once, [this] {
    std::size_t e = 1;
    for (auto const &g : _d->elements)
      e = std::lcm(e, g.order());
    _d->exponent = e;
    _d->abelian = true;
    for (ElementId a : generator_ids()) {
      for (ElementId b : generator_ids()) {
        if (mul(a, b) != mul(b, a))
          _d->abelian = false;
      }
    }
  });
  return _d->exponent;
}

bool PermGroup::is_abelian() const
{
  exponent();
  return _d->abelian;
}

// --- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(PermGroup parent, std::vector<ElementId> elements,
                   std::vector<ElementId> generators)
: _d(std::make_shared<detail::SubgroupData>(std::move(parent)))
{
  std::sort(elements.begin(), elements.end());
  if (elements.empty() || elements.front() != 0)
    throw InternalInconsistency("subgroup must contain the identity");
  if (_d->parent.order() % elements.size() != 0)
    throw InternalInconsistency("subgroup order does not divide the group order");

  _d->mask.assign(_d->parent.order(), false);
  for (ElementId x : elements)
    _d->mask[x] = true;
  _d->elements = std::move(elements);
  _d->generators = std::move(generators);
  if (_d->generators.empty() && _d->elements.size() > 1)
    _d->generators = canonical_generators();
}

Subgroup Subgroup::whole(PermGroup const &parent)
{
  std::vector<ElementId> all(parent.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return Subgroup(parent, std::move(all), parent.generator_ids());
}

Subgroup Subgroup::trivial(PermGroup const &parent)
{ return Subgroup(parent, {0}, {}); }

std::optional<Subgroup> Subgroup::generated(PermGroup const &parent,
                                            std::span<ElementId const> generators,
                                            std::size_t abort_above)
{
  std::vector<bool> seen(parent.order(), false);
  std::vector<ElementId> elements{0};
  seen[0] = true;

  std::vector<ElementId> gens;
  for (ElementId g : generators) {
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (ElementId g : gens) {
      ElementId y = parent.mul(elements[i], g);
      if (!seen[y]) {
        seen[y] = true;
        elements.push_back(y);
        if (abort_above > 0 && elements.size() > abort_above)
          return std::nullopt;
      }
    }
  }

  return Subgroup(parent, std::move(elements), std::move(gens));
}

Subgroup Subgroup::generated_by(PermGroup const &parent,
                                std::vector<Permutation> const &generators)
{
  std::vector<ElementId> ids;
  for (auto const &g : generators)
    ids.push_back(parent.id_of(g));
  return *generated(parent, ids);
}

PermGroup const &Subgroup::parent() const { return _d->parent; }
std::size_t Subgroup::order() const { return _d->elements.size(); }
std::span<ElementId const> Subgroup::elements() const { return _d->elements; }
std::span<ElementId const> Subgroup::generators() const { return _d->generators; }

std::vector<Permutation> Subgroup::generator_perms() const
{
  std::vector<Permutation> res;
  for (ElementId g : _d->generators)
    res.push_back(_d->parent.element(g));
  return res;
}

std::vector<ElementId> Subgroup::canonical_generators() const
{
  std::vector<ElementId> gens;
  std::vector<bool> covered(_d->parent.order(), false);
  covered[0] = true;
  std::size_t count = 1;

  for (ElementId x : _d->elements) {
    if (covered[x])
      continue;
    gens.push_back(x);
    auto closure = *generated(_d->parent, gens);
    for (ElementId y : closure.elements())
      covered[y] = true;
    count = closure.order();
    if (count == order())
      break;
  }
  return gens;
}

bool Subgroup::contains(ElementId id) const { return _d->mask[id]; }

bool Subgroup::contains(Subgroup const &other) const
{
  if (other.order() > order() || order() % other.order() != 0)
    return false;
  for (ElementId g : other.elements()) {
    if (!contains(g))
      return false;
  }
  return true;
}

bool Subgroup::is_whole() const { return order() == _d->parent.order(); }

PermGroup const &Subgroup::as_group() const
{
  std::call_once(_d->group_once, [this] {
    std::vector<Permutation> elems;
    elems.reserve(order());
    for (ElementId x : _d->elements)
      elems.push_back(_d->parent.element(x));
    _d->group = PermGroup::from_closed_set(_d->parent.degree(), generator_perms(),
                                           std::move(elems));
  });
  return *_d->group;
}

bool Subgroup::operator==(Subgroup const &rhs) const
{ return _d->elements == rhs._d->elements; }

// --- operations -------------------------------------------------------------

ClassData const &conjugacy_classes(PermGroup const &group)
{ return group.classes(); }

Subgroup core(PermGroup const &group, Subgroup const &sub)
{
  std::vector<bool> in_core(group.order(), false);
  for (ElementId h : sub.elements())
    in_core[h] = true;

  // conjugates H^x only depend on the coset Hx
  std::vector<bool> covered(group.order(), false);
  for (ElementId x = 0; x < group.order(); ++x) {
    if (covered[x])
      continue;
    for (ElementId h : sub.elements())
      covered[group.mul(h, x)] = true;

    std::vector<bool> conj_mask(group.order(), false);
    for (ElementId h : sub.elements())
      conj_mask[group.conj(h, x)] = true;
    for (ElementId y = 0; y < group.order(); ++y)
      in_core[y] = in_core[y] && conj_mask[y];
  }

  std::vector<ElementId> elements;
  for (ElementId y = 0; y < group.order(); ++y) {
    if (in_core[y])
      elements.push_back(y);
  }
  auto gens = Subgroup(group, elements, {}).canonical_generators();
  return Subgroup(group, std::move(elements), std::move(gens));
}

Permutation CosetAction::image_of(PermGroup const &group, ElementId g) const
{
  std::vector<Point> images(coset_representatives.size());
  for (std::size_t c = 0; c < coset_representatives.size(); ++c)
    images[c] = static_cast<Point>(coset_of[group.mul(coset_representatives[c], g)]);
  return Permutation(std::move(images));
}

CosetAction coset_action(PermGroup const &group, Subgroup const &sub,
                         Limits const &limits)
{
  constexpr std::uint32_t unassigned = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(group.order(), unassigned);
  std::vector<ElementId> reps;

  for (ElementId x = 0; x < group.order(); ++x) {
    if (coset_of[x] != unassigned)
      continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (ElementId h : sub.elements())
      coset_of[group.mul(h, x)] = c;
  }

  std::size_t index = reps.size();
  if (index > std::numeric_limits<Point>::max())
    throw DeskScaleExceeded("coset action degree too large");

  std::vector<ElementId> kernel;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool trivial = true;
    for (std::size_t c = 0; c < index && trivial; ++c)
      trivial = coset_of[group.mul(reps[c], g)] == c;
    if (trivial)
      kernel.push_back(g);
  }

  CosetAction partial{PermGroup::from_closed_set(1, {}, {Permutation(1)}), reps,
                      coset_of, Subgroup::trivial(group)};

  std::vector<Permutation> gens;
  for (ElementId g : group.generator_ids())
    gens.push_back(partial.image_of(group, g));

  Limits image_limits = limits;
  image_limits.max_degree = std::max(limits.max_degree, index);
  image_limits.max_order = std::max(limits.max_order, group.order());
  partial.image = PermGroup::from_generators(index, std::move(gens), image_limits);

  auto kgens = Subgroup(group, kernel, {}).canonical_generators();
  partial.kernel = Subgroup(group, std::move(kernel), std::move(kgens));
  return partial;
}

Subgroup normalizer(PermGroup const &group, Subgroup const &sub)
{
  std::vector<ElementId> elements;
  auto gens = sub.generators();
  for (ElementId g = 0; g < group.order(); ++g) {
    bool normalizes = true;
    for (ElementId s : gens) {
      if (!sub.contains(group.conj(s, g))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes)
      elements.push_back(g);
  }
  auto ngens = Subgroup(group, elements, {}).canonical_generators();
  return Subgroup(group, std::move(elements), std::move(ngens));
}

namespace
{

// Normal closure of `seeds` under conjugation by `conjugators`.
Subgroup closure_under_conjugation(PermGroup const &group,
                                   std::vector<ElementId> seeds,
                                   std::span<ElementId const> conjugators)
{
  Subgroup current = *Subgroup::generated(group, seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElementId> gens(current.generators().begin(), current.generators().end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (ElementId t : conjugators) {
        ElementId c = group.conj(gens[i], t);
        if (!current.contains(c)) {
          gens.push_back(c);
          current = *Subgroup::generated(group, gens);
          changed = true;
        }
      }
    }
  }
  return current;
}

} // namespace

Subgroup normal_closure(PermGroup const &group, std::span<ElementId const> generators)
{
  return closure_under_conjugation(group, {generators.begin(), generators.end()},
                                   group.generator_ids());
}

Subgroup derived_subgroup(Subgroup const &sub)
{
  PermGroup const &group = sub.parent();
  std::vector<ElementId> comms;
  auto gens = sub.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ElementId c = group.comm(gens[i], gens[j]);
      if (c != 0)
        comms.push_back(c);
    }
  }
  return closure_under_conjugation(group, std::move(comms), gens);
}

Subgroup derived_subgroup(PermGroup const &group)
{ return derived_subgroup(Subgroup::whole(group)); }

std::optional<std::size_t> derived_length(PermGroup const &group)
{
  Subgroup current = Subgroup::whole(group);
  std::size_t length = 0;
  while (!current.is_trivial()) {
    Subgroup next = derived_subgroup(current);
    if (next.order() == current.order())
      return std::nullopt;
    current = std::move(next);
    ++length;
  }
  return length;
}

bool is_solvable(PermGroup const &group)
{ return derived_length(group).has_value(); }

bool is_normal(PermGroup const &group, Subgroup const &sub)
{
  for (ElementId s : sub.generators()) {
    for (ElementId g : group.generator_ids()) {
      if (!sub.contains(group.conj(s, g)))
        return false;
    }
  }
  return true;
}

Subgroup conjugate(Subgroup const &sub, ElementId g)
{
  PermGroup const &group = sub.parent();
  std::vector<ElementId> elements;
  elements.reserve(sub.order());
  for (ElementId h : sub.elements())
    elements.push_back(group.conj(h, g));
  std::vector<ElementId> gens;
  for (ElementId s : sub.generators())
    gens.push_back(group.conj(s, g));
  return Subgroup(group, std::move(elements), std::move(gens));
}

Subgroup intersection(Subgroup const &a, Subgroup const &b)
{
  std::vector<ElementId> elements;
  for (ElementId x : a.elements()) {
    if (b.contains(x))
      elements.push_back(x);
  }
  auto gens = Subgroup(a.parent(), elements, {}).canonical_generators();
  return Subgroup(a.parent(), std::move(elements), std::move(gens));
}

std::vector<std::size_t> class_distribution(Subgroup const &sub)
{
  auto const &cd = sub.parent().classes();
  std::vector<std::size_t> counts(cd.size(), 0);
  for (ElementId x : sub.elements())
    ++counts[cd.class_of[x]];
  return counts;
}

std::optional<ElementId> conjugate_into(PermGroup const &group,
                                        Subgroup const &a, Subgroup const &b)
{
  if (b.order() % a.order() != 0)
    return std::nullopt;

  auto gens = a.generators();
  for (ElementId g = 0; g < group.order(); ++g) {
    bool inside = true;
    for (ElementId s : gens) {
      if (!b.contains(group.conj(s, g))) {
        inside = false;
        break;
      }
    }
    if (inside)
      return g;
  }
  return std::nullopt;
}

std::optional<ElementId> subgroups_conjugate(PermGroup const &group,
                                             Subgroup const &a, Subgroup const &b)
{
  if (a.order() != b.order())
    return std::nullopt;
  if (class_distribution(a) != class_distribution(b))
    return std::nullopt;
  return conjugate_into(group, a, b);
}

} // namespace frobdiam
