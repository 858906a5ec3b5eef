#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "frobdiam/errors.hpp"
#include "frobdiam/perm_group.hpp"
#include "frobdiam/permutation.hpp"

#include "test_util.hpp"

using namespace frobdiam;
using namespace frobdiam::test;

namespace
{

std::vector<std::size_t> sorted_sizes(ClassData const &cd)
{
  std::vector<std::size_t> s = cd.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

// Conjugacy classes by brute force over the whole group.
std::vector<std::size_t> brute_class_sizes(PermGroup const &g)
{
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> sizes;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::set<ElementId> cls;
    for (ElementId y = 0; y < g.order(); ++y)
      cls.insert(g.conj(x, y));
    for (auto c : cls)
      seen[c] = true;
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace

TEST_CASE("permutation multiplication acts from the right")
{
  auto a = parse_permutation("(1,2)", 3);
  auto b = parse_permutation("(2,3)", 3);
  auto ab = a * b;
  // 1 -> 2 -> 3
  CHECK(ab[0] == 2);
  CHECK(ab.to_string() == "(1,3,2)");
  CHECK((a * a).is_identity());
  CHECK(ab.order() == 3);
  CHECK((ab * ab.inverse()).is_identity());
}

TEST_CASE("permutation text round trip")
{
  for (std::string s : {"()", "(1,2)(3,4,5)", "(1,5,2)", "(2,4)"}) {
    auto p = parse_permutation(s, 6);
    CHECK(p.to_string() == s);
  }
  CHECK(parse_permutation(" ( 1 , 2 ) ", 3).to_string() == "(1,2)");
}

TEST_CASE("permutation parse errors carry positions")
{
  CHECK_THROWS_AS(parse_permutation("(1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,1)", 3), ParseError);
  try {
    parse_permutation("(1,x)", 3, 7);
    FAIL("expected ParseError");
  } catch (ParseError const &e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InvalidPermutation);
}

TEST_CASE("identity is the smallest permutation")
{
  auto g = symmetric(4);
  CHECK(g.order() == 24);
  CHECK(g.element(0).is_identity());
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
}

TEST_CASE("group orders")
{
  CHECK(symmetric(3).order() == 6);
  CHECK(symmetric(5).order() == 120);
  CHECK(alternating5().order() == 60);
  CHECK(agl1_7().order() == 42);
  CHECK(cyclic(12).order() == 12);
}

TEST_CASE("order limits are enforced")
{
  Limits small;
  small.max_order = 100;
  std::vector<Permutation> gens{parse_permutation("(1,2)", 5),
                                parse_permutation("(1,2,3,4,5)", 5)};
  CHECK_THROWS_AS(PermGroup::from_generators(5, gens, small), DeskScaleExceeded);
}

TEST_CASE("conjugacy classes of small groups")
{
  auto s3 = conjugacy_classes(symmetric(3));
  CHECK(sorted_sizes(s3) == std::vector<std::size_t>{1, 2, 3});

  auto a5 = conjugacy_classes(alternating5());
  CHECK(sorted_sizes(a5) == std::vector<std::size_t>{1, 12, 12, 15, 20});

  for (auto const &g : {symmetric(4), symmetric(5), agl1_7(), cyclic(6)})
    CHECK(sorted_sizes(g.classes()) == brute_class_sizes(g));
}

TEST_CASE("class data invariants")
{
  for (auto const &g : {symmetric(5), agl1_7(), alternating5()}) {
    auto const &cd = g.classes();
    CHECK(std::accumulate(cd.sizes.begin(), cd.sizes.end(), std::size_t{0}) == g.order());
    CHECK(cd.sizes[0] == 1);
    for (std::size_t i = 0; i < cd.size(); ++i) {
      CHECK(cd.sizes[i] * cd.centralizer_orders[i] == g.order());
      CHECK(cd.members[i].size() == cd.sizes[i]);
      // representative is the lex-smallest member
      CHECK(cd.representative_ids[i] == cd.members[i].front());
      auto inv = g.inv(cd.representative_ids[i]);
      CHECK(cd.inverse_class[i] == cd.class_of[inv]);
      CHECK(cd.power_map[i].size() == cd.element_orders[i]);
      CHECK(cd.power_map[i][0] == 0);
      if (cd.element_orders[i] > 1)
        CHECK(cd.power_map[i][1] == i);
    }
  }
}

TEST_CASE("derived series and solvability")
{
  CHECK(derived_subgroup(symmetric(4)).order() == 12);
  CHECK(derived_length(symmetric(4)) == std::optional<std::size_t>(3));
  CHECK(!is_solvable(symmetric(5)));
  CHECK(derived_subgroup(alternating5()).order() == 60);
  CHECK(derived_subgroup(agl1_7()).order() == 7);
  CHECK(is_solvable(agl1_7()));
}

TEST_CASE("subgroups, normalizers, cores")
{
  auto g = symmetric(4);
  auto h = Subgroup::generated_by(g, {parse_permutation("(1,2)", 4)});
  CHECK(h.order() == 2);
  CHECK(normalizer(g, h).order() == 4);
  CHECK(core(g, h).order() == 1);
  CHECK(!is_normal(g, h));

  auto v4 = Subgroup::generated_by(g, {parse_permutation("(1,2)(3,4)", 4),
                                       parse_permutation("(1,3)(2,4)", 4)});
  CHECK(v4.order() == 4);
  CHECK(is_normal(g, v4));
  CHECK(core(g, v4) == v4);

  auto k = Subgroup::generated_by(g, {parse_permutation("(3,4)", 4)});
  auto w = subgroups_conjugate(g, h, k);
  REQUIRE(w.has_value());
  CHECK(conjugate(h, *w) == k);

  auto s3 = Subgroup::generated_by(g, {parse_permutation("(1,2)", 4),
                                       parse_permutation("(1,2,3)", 4)});
  CHECK(conjugate_into(g, k, s3).has_value());
  CHECK(!conjugate_into(g, v4, s3).has_value());
  CHECK(intersection(s3, v4).order() == 1);
}

TEST_CASE("coset action")
{
  auto g = symmetric(4);
  auto h = Subgroup::generated_by(g, {parse_permutation("(1,2)", 4),
                                      parse_permutation("(1,2,3)", 4)});
  auto act = coset_action(g, h);
  CHECK(act.image.degree() == 4);
  CHECK(act.image.order() == 24);
  CHECK(act.kernel.is_trivial());

  auto v4 = Subgroup::generated_by(g, {parse_permutation("(1,2)(3,4)", 4),
                                       parse_permutation("(1,3)(2,4)", 4)});
  auto quotient = coset_action(g, v4);
  CHECK(quotient.image.order() == 6);
  CHECK(quotient.kernel == v4);
}

TEST_CASE("property: random products agree with composed images")
{
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> a(9), b(9);
    std::iota(a.begin(), a.end(), Point{0});
    std::iota(b.begin(), b.end(), Point{0});
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation pa(a), pb(b);
    auto ab = pa * pb;
    for (std::size_t x = 0; x < 9; ++x)
      CHECK(ab[x] == pb[pa[x]]);
    CHECK(parse_permutation(ab.to_string(), 9) == ab);
    auto inv = ab.inverse();
    CHECK((inv * ab).is_identity());
  }
}

TEST_CASE("property: group multiplication table is consistent")
{
  auto g = agl1_7();
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = 0; b < g.order(); b += 5) {
      CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
    }
    CHECK(g.mul(a, g.inv(a)) == 0);
  }
}
