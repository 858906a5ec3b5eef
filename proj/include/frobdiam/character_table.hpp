#ifndef FROBDIAM_CHARACTER_TABLE_HPP
#define FROBDIAM_CHARACTER_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobdiam/cyclotomic.hpp"
#include "frobdiam/perm_group.hpp"

namespace frobdiam
{

/// Exact character table of a permutation group.
///
/// Rows are the irreducible characters (trivial character first, then sorted
/// by degree and by the canonical order of their values), columns follow the
/// group's conjugacy classes. A table is only ever returned after all of its
/// orthogonality and degree invariants have been re-checked exactly.
class CharacterTable
{
public:
  // Dixon-Schneider: common eigenvectors of the class matrices over F_p,
  // lifted to Z[zeta_e] via root-of-unity multiplicities.
  // Throws InternalInconsistency if the result fails verification.
  static CharacterTable compute(PermGroup const &group);

  PermGroup const &group() const { return _group; }
  ClassData const &classes() const { return _group.classes(); }

  std::size_t size() const { return _degrees.size(); }
  int exponent() const { return _exponent; }
  std::uint64_t prime() const { return _prime; }

  Cyclotomic const &value(std::size_t chi, std::size_t cls) const
  { return _values[chi][cls]; }
  std::vector<std::vector<Cyclotomic>> const &values() const { return _values; }
  std::vector<std::int64_t> const &degrees() const { return _degrees; }

  std::size_t linear_count() const;

private:
  CharacterTable(PermGroup group, int exponent, std::uint64_t prime,
                 std::vector<std::vector<Cyclotomic>> values);

  PermGroup _group;
  int _exponent;
  std::uint64_t _prime;
  std::vector<std::vector<Cyclotomic>> _values;
  std::vector<std::int64_t> _degrees;
};

using TablePtr = std::shared_ptr<CharacterTable const>;

TablePtr make_character_table(PermGroup const &group);

struct TableStats
{
  std::int64_t total_degree = 0;  // T(G)
  std::size_t class_count = 0;    // k(G)
  std::int64_t max_degree = 0;    // b(G)
};

TableStats table_stats(CharacterTable const &table);

/// #{(x, y) in C_i x C_j : xy = rep(C_k)}.
std::int64_t class_multiplication_coefficient(PermGroup const &group, std::size_t i,
                                              std::size_t j, std::size_t k);

/// Re-checks every table invariant exactly; throws InternalInconsistency.
void verify_character_table(CharacterTable const &table);

/// Smallest prime p = 1 (mod exponent) with p > 2 * floor(sqrt(order)).
std::uint64_t dixon_prime(std::size_t order, std::size_t exponent);

std::string render_table(CharacterTable const &table);
nlohmann::json table_to_json(CharacterTable const &table);

} // namespace frobdiam

#endif // FROBDIAM_CHARACTER_TABLE_HPP
