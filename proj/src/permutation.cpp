#include "frobdiam/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <cctype>

#include "frobdiam/errors.hpp"

namespace frobdiam
{

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw InvalidPermutation("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<std::size_t>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t x = cycle[i];
      if (x >= degree || used[x])
        throw InvalidPermutation("cycles are not disjoint or exceed the degree");
      used[x] = true;
      images[x] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
  }

  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation res;
  res._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    res._images[_images[i]] = static_cast<Point>(i);
  return res;
}

std::size_t Permutation::order() const
{
  std::size_t ord = 1;
  for (auto const &cycle : cycles())
    ord = std::lcm(ord, cycle.size());
  return ord;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> done(_images.size(), false);

  for (std::size_t start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;

    std::vector<Point> cycle;
    std::size_t x = start;
    while (!done[x]) {
      done[x] = true;
      cycle.push_back(static_cast<Point>(x));
      x = _images[x];
    }
    res.push_back(std::move(cycle));
  }

  return res;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::string res;
  for (auto const &cycle : cs) {
    res += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        res += ',';
      res += std::to_string(cycle[i] + 1);
    }
    res += ')';
  }
  return res;
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  for (auto &x : _images)
    x = rhs._images[x];
  return *this;
}

Permutation operator*(Permutation const &lhs, Permutation const &rhs)
{
  Permutation res(lhs);
  res *= rhs;
  return res;
}

Permutation parse_permutation(std::string_view text, std::size_t degree,
                              std::size_t line)
{
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](std::string const &msg) -> ParseError {
    return ParseError(msg, line, pos + 1);
  };

  skip_ws();
  if (pos == text.size())
    throw fail("empty permutation");

  while (true) {
    skip_ws();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      throw fail("expected '('");
    ++pos;

    std::vector<std::size_t> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      continue;
    }

    while (true) {
      skip_ws();
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1000000)
          throw fail("point out of range");
        ++pos;
      }
      if (pos == start)
        throw fail("expected a point");
      if (value < 1 || value > degree) {
        pos = start;
        throw fail("point " + std::to_string(value) + " out of range 1.." +
                   std::to_string(degree));
      }
      if (used[value - 1]) {
        pos = start;
        throw fail("point " + std::to_string(value) + " repeated");
      }
      used[value - 1] = true;
      cycle.push_back(value - 1);

      skip_ws();
      if (pos == text.size())
        throw fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
  }

  return Permutation::from_cycles(degree, cycles);
}

} // namespace frobdiam

std::size_t std::hash<frobdiam::Permutation>::operator()(
  frobdiam::Permutation const &perm) const noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto x : perm.images()) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}
