#ifndef FROBDIAM_PERMUTATION_HPP
#define FROBDIAM_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frobdiam
{

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products act from the right: (a * b)(x) = b(a(x)), i.e. `a` is applied
/// first. Ordering is lexicographic on the image arrays, which makes the
/// identity the smallest permutation of a given degree.
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree);

  // Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  // Cycles use 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<std::size_t>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  Point operator[](std::size_t x) const { return _images[x]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;

  // Nontrivial cycles only, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;

  // Disjoint cycle notation on 1-based points, "()" for the identity.
  std::string to_string() const;

  bool operator==(Permutation const &rhs) const = default;
  std::strong_ordering operator<=>(Permutation const &rhs) const = default;

  Permutation &operator*=(Permutation const &rhs);

private:
  std::vector<Point> _images;
};

Permutation operator*(Permutation const &lhs, Permutation const &rhs);

/// Parses cycle notation with 1-based points, e.g. "(1,2)(3,4,5)" or "()".
/// Whitespace is ignored. Throws ParseError (line 1, column of the offending
/// character) on malformed input or points outside 1..degree.
Permutation parse_permutation(std::string_view text, std::size_t degree,
                              std::size_t line = 1);

} // namespace frobdiam

template<>
struct std::hash<frobdiam::Permutation>
{
  std::size_t operator()(frobdiam::Permutation const &perm) const noexcept;
};

#endif // FROBDIAM_PERMUTATION_HPP
