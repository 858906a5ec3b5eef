#ifndef FROBDIAM_SUBGROUPS_HPP
#define FROBDIAM_SUBGROUPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "frobdiam/character_table.hpp"
#include "frobdiam/perm_group.hpp"

namespace frobdiam
{

struct SubgroupClass
{
  Subgroup representative;  // the conjugate with the smallest element list
  std::size_t class_length;

  std::size_t order() const { return representative.order(); }
};

/// Cheap isomorphism invariants used to describe classes in reports.
struct Fingerprint
{
  std::size_t order = 0;
  bool abelian = false;
  std::size_t exponent = 0;
  std::optional<std::size_t> derived_length;  // nullopt: not solvable

  std::string to_string() const;
};

Fingerprint fingerprint(PermGroup const &group);

/// All subgroups up to conjugacy, sorted by order and then by canonical
/// generators. Solvable subgroups are reached by cyclic extension from the
/// trivial group; perfect subgroups are seeded from two-generator closures.
std::vector<SubgroupClass> enumerate_subgroup_classes(PermGroup const &group);

/// Classes of subgroups of prime order.
std::vector<SubgroupClass> prime_order_classes(PermGroup const &group);

/// Classes (from `classes`) of maximal proper subgroups.
std::vector<SubgroupClass> maximal_subgroup_classes(PermGroup const &group,
                                                    std::vector<SubgroupClass> const &classes);

struct DiameterThreeSearch
{
  bool found = false;
  std::optional<SubgroupClass> witness;
  bool witness_is_diameter_three = false;
};

/// Scans the prime-order classes for a rich one.
DiameterThreeSearch has_diameter_three_subgroup(TablePtr const &table);
DiameterThreeSearch has_diameter_three_subgroup(PermGroup const &group);

struct ClassVerdict
{
  SubgroupClass cls;
  Fingerprint fp;
  bool proper = true;
  bool rich = false;
  bool bii = false;
  bool diameter_three = false;
  bool maximal_rich = false;
  std::size_t minimal_depth = 0;
  std::optional<std::size_t> failing_character;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

struct ClassificationReport
{
  std::string label;
  std::size_t group_order = 0;
  std::vector<ClassVerdict> classes;
  std::size_t n = 0;  // all classes
  std::size_t g = 0;  // nontrivial rich classes
  std::size_t m = 0;  // rich classes maximal under inclusion among rich classes
  std::vector<std::size_t> maximal_rich_orders;
  std::optional<bool> minimal_rich;  // set when minimality was checked
};

ClassificationReport classify_subgroups(TablePtr const &table, std::string label = {});
ClassificationReport classify_subgroups(PermGroup const &group, std::string label = {});

/// G has a nontrivial rich subgroup and no maximal subgroup of G has one.
bool is_minimal_rich_group(PermGroup const &group);

std::string report_to_text(ClassificationReport const &report);
nlohmann::json report_to_json(ClassificationReport const &report);

} // namespace frobdiam

#endif // FROBDIAM_SUBGROUPS_HPP
