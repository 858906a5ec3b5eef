#ifndef FROBDIAM_PERM_GROUP_HPP
#define FROBDIAM_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "frobdiam/permutation.hpp"

namespace frobdiam
{

/// Desk-scale limits. Groups are stored by explicit element lists, so the
/// order cap bounds memory and time for everything downstream.
struct Limits
{
  std::size_t max_order = 10080;
  std::size_t max_degree = 128;
};

/// Index of an element in its group's canonical (lexicographic) element list.
/// Id 0 is always the identity.
using ElementId = std::uint32_t;

struct ClassData
{
  std::vector<Permutation> representatives;    // lex-minimal member of each class
  std::vector<ElementId> representative_ids;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> class_of;         // indexed by ElementId
  std::vector<std::size_t> centralizer_orders;
  std::vector<std::size_t> element_orders;
  std::vector<std::uint32_t> inverse_class;
  // power_map[i][j] is the class of rep_i^j for 0 <= j < element_orders[i]
  std::vector<std::vector<std::uint32_t>> power_map;
  std::vector<std::vector<ElementId>> members;

  std::size_t size() const { return sizes.size(); }
};

namespace detail
{
struct GroupData;
struct SubgroupData;
} // namespace detail

/// A finite permutation group with its full, lexicographically sorted element
/// list. Cheap to copy: copies share the same immutable data.
class PermGroup
{
public:
  // Closure of the generators. Throws InvalidPermutation on a degree mismatch
  // and DeskScaleExceeded when the degree or the order exceed `limits`.
  static PermGroup from_generators(std::size_t degree,
                                   std::vector<Permutation> generators,
                                   Limits const &limits = {});

  // `elements` must be a group, sorted; only sizes are checked.
  static PermGroup from_closed_set(std::size_t degree,
                                   std::vector<Permutation> generators,
                                   std::vector<Permutation> elements);

  std::size_t degree() const;
  std::size_t order() const;
  std::vector<Permutation> const &generators() const;
  std::vector<ElementId> const &generator_ids() const;
  std::vector<Permutation> const &elements() const;
  Permutation const &element(ElementId id) const;

  std::optional<ElementId> find(Permutation const &perm) const;
  ElementId id_of(Permutation const &perm) const;
  bool contains(Permutation const &perm) const { return find(perm).has_value(); }

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const;
  // g^-1 x g
  ElementId conj(ElementId x, ElementId g) const;
  // x^-1 y^-1 x y
  ElementId comm(ElementId x, ElementId y) const;
  std::size_t element_order(ElementId a) const;

  ClassData const &classes() const;
  std::size_t exponent() const;
  bool is_abelian() const;

  bool same_group(PermGroup const &other) const { return _d == other._d; }

private:
  explicit PermGroup(std::shared_ptr<detail::GroupData> d) : _d(std::move(d)) {}

  std::shared_ptr<detail::GroupData> _d;
};

/// A subgroup stored as a sorted set of parent element ids.
class Subgroup
{
public:
  Subgroup(PermGroup parent, std::vector<ElementId> elements,
           std::vector<ElementId> generators);

  static Subgroup whole(PermGroup const &parent);
  static Subgroup trivial(PermGroup const &parent);

  // Subgroup generated by `generators`. With `abort_above` > 0 returns
  // nullopt as soon as the closure exceeds that many elements.
  static std::optional<Subgroup> generated(PermGroup const &parent,
                                           std::span<ElementId const> generators,
                                           std::size_t abort_above = 0);
  static Subgroup generated_by(PermGroup const &parent,
                               std::vector<Permutation> const &generators);

  PermGroup const &parent() const;
  std::size_t order() const;
  std::span<ElementId const> elements() const;
  std::span<ElementId const> generators() const;
  std::vector<Permutation> generator_perms() const;

  // Greedy lexicographically first generating set.
  std::vector<ElementId> canonical_generators() const;

  bool contains(ElementId id) const;
  bool contains(Subgroup const &other) const;
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const;

  // The subgroup as a permutation group in its own right (cached).
  PermGroup const &as_group() const;

  bool operator==(Subgroup const &rhs) const;

private:
  std::shared_ptr<detail::SubgroupData> _d;
};

ClassData const &conjugacy_classes(PermGroup const &group);

/// Intersection of all conjugates of `sub`.
Subgroup core(PermGroup const &group, Subgroup const &sub);

/// Action of `group` on the right cosets Hx of `sub`, x -> Hx g.
struct CosetAction
{
  PermGroup image;
  std::vector<ElementId> coset_representatives;  // lex-first element of each coset
  std::vector<std::uint32_t> coset_of;           // indexed by ElementId
  Subgroup kernel;

  Permutation image_of(PermGroup const &group, ElementId g) const;
};

CosetAction coset_action(PermGroup const &group, Subgroup const &sub,
                         Limits const &limits = {});

Subgroup normalizer(PermGroup const &group, Subgroup const &sub);
Subgroup normal_closure(PermGroup const &group, std::span<ElementId const> generators);
Subgroup derived_subgroup(PermGroup const &group);
Subgroup derived_subgroup(Subgroup const &sub);
// Length of the derived series; nullopt when the group is not solvable.
std::optional<std::size_t> derived_length(PermGroup const &group);
bool is_solvable(PermGroup const &group);
bool is_normal(PermGroup const &group, Subgroup const &sub);

/// g^-1 H g.
Subgroup conjugate(Subgroup const &sub, ElementId g);
Subgroup intersection(Subgroup const &a, Subgroup const &b);

/// Number of elements of `sub` in each class of its parent; invariant under
/// conjugation and used as a cheap pre-filter before conjugacy tests.
std::vector<std::size_t> class_distribution(Subgroup const &sub);

/// Some g with g^-1 A g = B, if one exists.
std::optional<ElementId> subgroups_conjugate(PermGroup const &group,
                                             Subgroup const &a, Subgroup const &b);

/// Some g with g^-1 A g <= B, if one exists.
std::optional<ElementId> conjugate_into(PermGroup const &group,
                                        Subgroup const &a, Subgroup const &b);

} // namespace frobdiam

#endif // FROBDIAM_PERM_GROUP_HPP
