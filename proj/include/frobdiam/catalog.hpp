#ifndef FROBDIAM_CATALOG_HPP
#define FROBDIAM_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frobdiam/perm_group.hpp"

namespace frobdiam
{

/// GF(q) for a prime power q, elements encoded as 0..q-1 by their base-p
/// coefficient vectors over a fixed primitive polynomial.
class FiniteField
{
public:
  // Throws InvalidSpec unless q is a prime power in [2, max_field_order].
  explicit FiniteField(std::size_t q);

  std::size_t order() const { return _q; }
  std::size_t characteristic() const { return _p; }
  std::size_t degree() const { return _k; }
  // Coefficients of the modulus, lowest degree first (monic).
  std::vector<std::size_t> const &modulus() const { return _modulus; }

  std::size_t add(std::size_t a, std::size_t b) const { return _add[a * _q + b]; }
  std::size_t neg(std::size_t a) const { return _neg[a]; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  // Generator of the multiplicative group.
  std::size_t primitive_element() const { return _exp[1]; }
  std::size_t power_of_primitive(std::size_t k) const { return _exp[k % (_q - 1)]; }

  static constexpr std::size_t max_field_order = 128;

private:
  std::size_t _q;
  std::size_t _p;
  std::size_t _k;
  std::vector<std::size_t> _modulus;
  std::vector<std::size_t> _add;
  std::vector<std::size_t> _neg;
  std::vector<std::size_t> _exp;
  std::vector<std::size_t> _log;
};

struct GroupSpec
{
  enum class Kind
  {
    symmetric,
    alternating,
    cyclic,
    dihedral,
    elementary_abelian,
    direct_product,
    agl1,
    agl1_subgroup,
    sl2,
    psl2,
    psl3_2,
    from_file,
    named,
  };

  Kind kind;
  std::vector<std::size_t> params;
  std::vector<GroupSpec> factors;  // direct_product
  std::string text;                // file path or name

  std::string label() const;
};

/// Parses labels such as "S5", "A4", "C6", "D12", "E:2:3", "AGL1:9",
/// "AGL1:27:13", "SL2:7", "PSL2:11", "PSL3:2", "Named:G80", "S3xC4" and
/// "file:path". Throws InvalidSpec.
GroupSpec parse_group_label(std::string_view label);

/// Throws InvalidSpec or DeskScaleExceeded; verifies the resulting order.
PermGroup construct(GroupSpec const &spec, Limits const &limits = {});
PermGroup construct(std::string_view label, Limits const &limits = {});

/// Order the spec is expected to produce (0 when unknown, e.g. files).
std::size_t expected_order(GroupSpec const &spec);

struct PermutationSpec
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// "degree N" on the first non-comment line, then one generator per line;
/// "#" starts a comment. Throws ParseError with line and column.
PermutationSpec parse_permutation_spec(std::string_view text);
std::string render_permutation_spec(PermutationSpec const &spec);
PermutationSpec read_permutation_spec(std::string const &path);

struct CatalogEntry
{
  std::string label;
  bool supersolvable;
};

/// The groups analyzed by default: everything of order at most 2000 the
/// reports and property suites sweep.
std::vector<CatalogEntry> const &standard_catalog();

/// Whether AGL1(p^2) restricted to the index-(p^2-1)/d subgroup has a
/// diameter three subgroup: d divisible by (p+1)(p-1)_2. Throws InvalidSpec
/// unless p is prime, d > 1 and d divides p^2-1.
bool affine_diam3_criterion(std::size_t p, std::size_t d);

} // namespace frobdiam

#endif // FROBDIAM_CATALOG_HPP
