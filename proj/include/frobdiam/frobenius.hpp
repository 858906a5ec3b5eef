#ifndef FROBDIAM_FROBENIUS_HPP
#define FROBDIAM_FROBENIUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "frobdiam/character_table.hpp"
#include "frobdiam/perm_group.hpp"

namespace frobdiam
{

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// H-class index -> G-class index.
struct FusionMap
{
  std::vector<std::size_t> h_to_g;
};

FusionMap fusion_map(CharacterTable const &tg, Subgroup const &h, CharacterTable const &th);

/// A subgroup H of G together with both character tables, the class fusion
/// and the Frobenius matrix M (rows Irr(H), columns Irr(G)) with
/// M[phi][chi] = [chi_H, phi].
class Inclusion
{
public:
  // Computes the table of H.
  Inclusion(TablePtr tg, Subgroup h);
  Inclusion(TablePtr tg, Subgroup h, TablePtr th);

  PermGroup const &group() const { return _tg->group(); }
  Subgroup const &subgroup() const { return _h; }
  CharacterTable const &table_g() const { return *_tg; }
  CharacterTable const &table_h() const { return *_th; }
  TablePtr table_g_ptr() const { return _tg; }
  FusionMap const &fusion() const { return _fusion; }

  IntMatrix const &matrix() const { return _matrix; }
  std::size_t index() const { return group().order() / _h.order(); }

  // H-class of a parent element lying in H.
  std::size_t h_class_of(ElementId g) const { return _h_class_of[g]; }

private:
  void init();

  TablePtr _tg;
  Subgroup _h;
  TablePtr _th;
  FusionMap _fusion;
  std::vector<std::uint32_t> _h_class_of;
  IntMatrix _matrix;
};

/// Entries (1/|H|) sum_c |c| chi(c) conj(phi(c)) computed exactly; throws
/// InternalInconsistency on a non-integral or negative entry.
IntMatrix frobenius_matrix(CharacterTable const &tg, Subgroup const &h,
                           CharacterTable const &th, FusionMap const &fusion);

/// Multiplicities of Irr(G) in 1_H^G (the first row of M).
std::vector<std::int64_t> permutation_character(Inclusion const &inc);

/// Values of phi^G on the classes of G.
std::vector<Cyclotomic> induced_character(Inclusion const &inc, std::size_t phi);

/// S = M M^T, S[phi][psi] = [phi^G, psi^G].
IntMatrix induced_gram(IntMatrix const &m);

/// Representatives of the H-H double cosets, first element of each in the
/// canonical element order.
std::vector<ElementId> double_coset_representatives(Subgroup const &h);

/// [phi^G, psi^G] via Mackey: sum over double coset representatives g of
/// [phi restricted to H^g n H, psi^g restricted to H^g n H].
std::int64_t mackey_inner_product(Inclusion const &inc, std::size_t phi, std::size_t psi);

/// The full Gram matrix by the Mackey formula; shares the double coset
/// bookkeeping between entries.
IntMatrix mackey_gram(Inclusion const &inc);

struct RichVerdict
{
  bool holds = false;
  std::optional<std::size_t> failing_character;  // some chi with [chi_H, 1_H] = 0
};

struct BiiVerdict
{
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // [phi^G, psi^G] = 0
};

// Throws NotProper if H = G.
RichVerdict is_rich(Inclusion const &inc);
BiiVerdict satisfies_bii(Inclusion const &inc);
bool is_diameter_three(Inclusion const &inc);

struct BiiShortcuts
{
  bool trivial_intersection = false;   // |H^g n H| = 1 for some g
  bool transitive_normalizer = false;  // core-free, N_G(H) fuses H \ {1}
};

BiiShortcuts bii_shortcuts(Inclusion const &inc);

/// Consequences every rich subgroup must satisfy: trivial core, T(G) <= [G:H],
/// H in G', the degree-2 kernel condition, the order bounds and the
/// prime-power index obstruction. Returns a description of each violation;
/// empty for subgroups that are not rich.
std::vector<std::string> rich_consequence_violations(Inclusion const &inc);

/// Identities every inclusion must satisfy: degree bookkeeping, Frobenius
/// reciprocity against directly induced characters, Mackey and Burnside
/// cross-checks. Returns a description of each violation.
std::vector<std::string> inclusion_identity_violations(Inclusion const &inc);

std::string matrix_to_text(IntMatrix const &m);
nlohmann::json matrix_to_json(IntMatrix const &m);

} // namespace frobdiam

#endif // FROBDIAM_FROBENIUS_HPP
