#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"

#include "frobdiam/catalog.hpp"
#include "frobdiam/character_table.hpp"
#include "frobdiam/errors.hpp"

using namespace frobdiam;

namespace
{

std::size_t count_of_order(PermGroup const &g, std::size_t o)
{
  std::size_t c = 0;
  for (ElementId x = 0; x < g.order(); ++x)
    c += g.element_order(x) == o;
  return c;
}

// A normal subgroup of order q acting regularly: the elements with no fixed
// points together with the identity.
bool has_regular_normal_subgroup(PermGroup const &g, std::size_t q)
{
  std::vector<ElementId> fpf;
  for (ElementId x = 1; x < g.order(); ++x) {
    auto const &p = g.element(x);
    bool fixes = false;
    for (std::size_t i = 0; i < p.degree() && !fixes; ++i)
      fixes = p[i] == i;
    if (!fixes)
      fpf.push_back(x);
  }
  if (fpf.size() != q - 1)
    return false;
  auto sub = Subgroup::generated(g, fpf);
  return sub && sub->order() == q && is_normal(g, *sub) && sub->as_group().is_abelian();
}

} // namespace

TEST_CASE("finite fields")
{
  for (std::size_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u, 49u, 121u}) {
    FiniteField f(q);
    CHECK(f.order() == q);
    // x -> w x is a bijection of order q-1 on the nonzero elements
    std::set<std::size_t> powers;
    for (std::size_t k = 0; k < q - 1; ++k)
      powers.insert(f.power_of_primitive(k));
    CHECK(powers.size() == q - 1);
    for (std::size_t a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      for (std::size_t b = 0; b < q; b += 3) {
        // distributivity
        for (std::size_t c = 0; c < q; c += 5)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
      if (a != 0)
        CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
  CHECK_THROWS_AS(FiniteField(6), InvalidSpec);
  CHECK_THROWS_AS(FiniteField(256), InvalidSpec);
}

TEST_CASE("label parsing round trips")
{
  for (std::string l : {"S5", "A4", "C6", "D12", "E:2:3", "AGL1:9", "AGL1:27:13", "SL2:7",
                        "PSL2:11", "PSL3:2", "Named:G80", "S3xC4", "C2xA4", "Named:V9C2x2"})
    CHECK(parse_group_label(l).label() == l);
  CHECK_THROWS_AS(parse_group_label("Q5"), InvalidSpec);
  CHECK_THROWS_AS(parse_group_label("Named:G999"), InvalidSpec);
  CHECK_THROWS_AS(parse_group_label("AGL1:x"), InvalidSpec);
  CHECK_THROWS_AS(construct("AGL1:6"), InvalidSpec);
  CHECK_THROWS_AS(construct("AGL1:9:3"), InvalidSpec);
  CHECK_THROWS_AS(construct("D7"), InvalidSpec);
}

TEST_CASE("catalog orders")
{
  CHECK(construct("AGL1:8").order() == 56);
  CHECK(construct("AGL1:27:13").order() == 351);
  CHECK(construct("Named:G351").order() == 351);
  CHECK(construct("Named:G80").order() == 80);
  CHECK(construct("Named:D12").order() == 12);
  CHECK(construct("Named:V9C2x2").order() == 36);
  auto sl25 = construct("SL2:5");
  CHECK(sl25.order() == 120);
  CHECK(sl25.degree() == 24);
  CHECK(construct("PSL2:7").order() == 168);
  CHECK(construct("PSL2:8").order() == 504);
  CHECK(construct("PSL3:2").order() == 168);
  CHECK(construct("E:2:3").order() == 8);
  CHECK(construct("S3xS3").order() == 36);
  CHECK(construct("D4").order() == 4);
  CHECK(construct("D2").order() == 2);
  CHECK(construct("S1").order() == 1);
  CHECK(construct("C1").order() == 1);
}

TEST_CASE("named groups have the intended structure")
{
  auto q8 = construct("Named:Q8");
  CHECK(count_of_order(q8, 2) == 1);
  CHECK(count_of_order(q8, 4) == 6);
  auto d12 = construct("Named:D12");
  CHECK(count_of_order(d12, 2) == 7);
  // SL(2,q) has a unique involution
  CHECK(count_of_order(construct("SL2:5"), 2) == 1);
  CHECK(count_of_order(construct("SL2:7"), 2) == 1);
}

TEST_CASE("affine groups have a regular elementary abelian normal subgroup")
{
  for (std::string l : {"AGL1:8", "AGL1:9", "AGL1:9:4", "Named:G80", "Named:G351", "AGL1:25:8"}) {
    auto g = construct(l);
    CHECK(has_regular_normal_subgroup(g, g.degree()));
  }
}

TEST_CASE("desk scale limits")
{
  CHECK_THROWS_AS(construct("S8"), DeskScaleExceeded);
  Limits big;
  big.max_order = 50000;
  CHECK(construct("S8", big).order() == 40320);
  CHECK_THROWS_AS(construct("SL2:13"), DeskScaleExceeded);
}

TEST_CASE("permutation spec files")
{
  auto s3 = parse_permutation_spec("degree 3\n(1,2)\n(1,2,3)");
  CHECK(s3.degree == 3);
  CHECK(s3.generators.size() == 2);
  CHECK(PermGroup::from_generators(s3.degree, s3.generators).order() == 6);
  CHECK(render_permutation_spec(s3) == "degree 3\n(1,2)\n(1,2,3)\n");
  CHECK(render_permutation_spec(parse_permutation_spec(render_permutation_spec(s3))) ==
        render_permutation_spec(s3));

  auto triv = parse_permutation_spec("degree 1\n");
  CHECK(triv.generators.empty());
  CHECK(PermGroup::from_generators(1, {}).order() == 1);

  auto commented = parse_permutation_spec("# the Klein group\ndegree 4\n(1,2)(3,4) # a\n\n(1,3)(2,4)\n");
  CHECK(commented.generators.size() == 2);

  try {
    parse_permutation_spec("degree 4\n(1,2,3,4,5)");
    FAIL("expected ParseError");
  } catch (ParseError const &e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(parse_permutation_spec("(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_permutation_spec("degree x\n"), ParseError);
  CHECK_THROWS_AS(parse_permutation_spec(""), ParseError);
}

TEST_CASE("groups from files")
{
  auto path = (std::filesystem::temp_directory_path() / "frobdiam_catalog_s4.txt").string();
  {
    std::ofstream out(path);
    out << "degree 4\n(1,2)\n(1,2,3,4)\n";
  }
  CHECK(construct("file:" + path).order() == 24);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(construct("file:/nonexistent/group.txt"), InvalidSpec);
}

TEST_CASE("shipped generator files match the named groups")
{
  std::string dir = FROBDIAM_DATA_DIR;
  for (auto [label, file] : std::vector<std::pair<std::string, std::string>>{
           {"Named:G80", "g80"}, {"Named:G351", "g351"}, {"Named:D12", "d12"},
           {"Named:Q8", "q8"}, {"Named:V9C2x2", "v9c2x2"}}) {
    CAPTURE(label);
    auto named = construct(label);
    auto loaded = construct("file:" + dir + "/" + file + ".txt");
    CHECK(loaded.elements() == named.elements());
  }
}

TEST_CASE("affine criterion")
{
  CHECK(affine_diam3_criterion(3, 8));
  CHECK(!affine_diam3_criterion(3, 4));
  CHECK(affine_diam3_criterion(5, 24));
  CHECK_THROWS_AS(affine_diam3_criterion(4, 3), InvalidSpec);
  CHECK_THROWS_AS(affine_diam3_criterion(5, 1), InvalidSpec);
  CHECK_THROWS_AS(affine_diam3_criterion(5, 7), InvalidSpec);

  // the equivalent form: (p^2-1)/d is an odd divisor of p-1
  for (std::size_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::size_t d = 2; d <= p * p - 1; ++d) {
      if ((p * p - 1) % d != 0)
        continue;
      std::size_t r = (p * p - 1) / d;
      bool alt = r % 2 == 1 && (p - 1) % r == 0;
      CHECK(affine_diam3_criterion(p, d) == alt);
    }
  }
}

TEST_CASE("standard catalog constructs and tabulates")
{
  for (auto const &entry : standard_catalog()) {
    CAPTURE(entry.label);
    auto g = construct(entry.label);
    CHECK(g.order() == expected_order(parse_group_label(entry.label)));
  }
}
