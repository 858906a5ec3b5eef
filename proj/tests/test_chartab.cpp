#include <algorithm>
#include <complex>
#include <numbers>

#include "doctest.h"

#include "frobdiam/character_table.hpp"
#include "frobdiam/errors.hpp"

#include "test_util.hpp"

using namespace frobdiam;
using namespace frobdiam::test;

namespace
{

std::vector<std::int64_t> sorted_degrees(CharacterTable const &t)
{
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

std::complex<double> evaluate(Cyclotomic const &c)
{
  std::complex<double> res = 0;
  auto coeffs = c.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    res += static_cast<double>(coeffs[k]) *
           std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / c.conductor());
  return res;
}

// Frobenius' class sum formula:
//   a_ijk = |C_i||C_j|/|G| sum_chi chi(g_i) chi(g_j) conj(chi(g_k)) / chi(1),
// checked numerically against brute-force structure constants.
void check_structure_constants(CharacterTable const &t)
{
  auto const &g = t.group();
  auto const &cd = t.classes();
  std::size_t k = cd.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        std::complex<double> s = 0;
        for (std::size_t chi = 0; chi < k; ++chi) {
          s += evaluate(t.value(chi, i)) * evaluate(t.value(chi, j)) *
               std::conj(evaluate(t.value(chi, l))) / static_cast<double>(t.degrees()[chi]);
        }
        s *= static_cast<double>(cd.sizes[i] * cd.sizes[j]) / static_cast<double>(g.order());
        auto brute = class_multiplication_coefficient(g, i, j, l);
        CHECK(std::abs(s - static_cast<double>(brute)) < 1e-6);
      }
    }
  }
}

} // namespace

TEST_CASE("dixon prime")
{
  auto p = dixon_prime(60, 30);
  CHECK(p == 31);
  CHECK(dixon_prime(6, 6) == 7);
  // prime exceeds 2 sqrt|G| and is 1 mod e
  auto q = dixon_prime(5040, 420);
  CHECK(q % 420 == 1);
  CHECK(q > 140);
}

TEST_CASE("symmetric group S3")
{
  auto t = CharacterTable::compute(symmetric(3));
  CHECK(t.degrees() == std::vector<std::int64_t>{1, 1, 2});
  check_structure_constants(t);
  auto stats = table_stats(t);
  CHECK(stats.total_degree == 4);
  CHECK(stats.class_count == 3);
  CHECK(stats.max_degree == 2);
}

TEST_CASE("explicit values for C2 and S3")
{
  auto c2 = CharacterTable::compute(cyclic(2));
  REQUIRE(c2.size() == 2);
  CHECK(c2.values()[0] == std::vector<Cyclotomic>{1, 1});
  CHECK(c2.values()[1] == std::vector<Cyclotomic>{1, -1});

  auto s3 = CharacterTable::compute(symmetric(3));
  auto const &orders = conjugacy_classes(s3.group()).element_orders;
  auto const &chi = s3.values()[2];
  for (std::size_t c = 0; c < orders.size(); ++c) {
    CAPTURE(orders[c]);
    Cyclotomic expected = orders[c] == 1 ? 2 : orders[c] == 3 ? -1 : 0;
    CHECK(chi[c] == expected);
  }
}

TEST_CASE("alternating group A5 has irrational values")
{
  auto t = CharacterTable::compute(alternating5());
  CHECK(sorted_degrees(t) == std::vector<std::int64_t>{1, 3, 3, 4, 5});
  bool golden = false;
  auto g = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  for (auto const &row : t.values()) {
    for (auto const &v : row) {
      if (v == -g)
        golden = true;
    }
  }
  CHECK(golden);
  check_structure_constants(t);
}

TEST_CASE("cyclic groups have only linear characters")
{
  for (std::size_t n : {1u, 2u, 5u, 8u, 12u}) {
    auto t = CharacterTable::compute(cyclic(n));
    CHECK(t.size() == n);
    CHECK(t.linear_count() == n);
    check_structure_constants(t);
  }
}

TEST_CASE("small tables")
{
  CHECK(sorted_degrees(CharacterTable::compute(symmetric(4))) ==
        std::vector<std::int64_t>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees(CharacterTable::compute(symmetric(5))) ==
        std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6});
  auto agl = CharacterTable::compute(agl1_7());
  CHECK(sorted_degrees(agl) == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 6});
  check_structure_constants(agl);

  auto q8 = CharacterTable::compute(group_of(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"}));
  CHECK(q8.group().order() == 8);
  CHECK(sorted_degrees(q8) == std::vector<std::int64_t>{1, 1, 1, 1, 2});
  check_structure_constants(q8);
}

TEST_CASE("row order: trivial first then by degree")
{
  auto t = CharacterTable::compute(symmetric(5));
  for (std::size_t j = 0; j < t.size(); ++j)
    CHECK(t.value(0, j) == Cyclotomic(1));
  CHECK(std::is_sorted(t.degrees().begin(), t.degrees().end()));
}

TEST_CASE("large degree S7")
{
  auto t = CharacterTable::compute(symmetric(7));
  CHECK(t.size() == 15);
  auto stats = table_stats(t);
  CHECK(stats.max_degree == 35);
}

TEST_CASE("rendering and json")
{
  auto t = CharacterTable::compute(symmetric(3));
  auto text = render_table(t);
  CHECK(text.find("X.3") != std::string::npos);
  auto j = table_to_json(t);
  CHECK(j["order"] == 6);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0][0] == "1");
}
