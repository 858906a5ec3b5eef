#include <random>

#include "doctest.h"

#include "frobdiam/catalog.hpp"
#include "frobdiam/depth.hpp"
#include "frobdiam/graph.hpp"

#include "test_util.hpp"

using namespace frobdiam;
using namespace frobdiam::test;

namespace
{

IntMatrix product(IntMatrix const &a, IntMatrix const &b)
{
  IntMatrix c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Existence of q in 1..max(A) with A <= qB, searched directly.
bool dominated_by_search(IntMatrix const &a, IntMatrix const &b)
{
  std::int64_t top = 1;
  for (auto const &row : a)
    for (auto x : row)
      top = std::max(top, x);
  for (std::int64_t q = 1; q <= top; ++q) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a[i].size() && ok; ++j)
        ok = a[i][j] <= q * b[i][j];
    if (ok)
      return true;
  }
  return false;
}

IntMatrix transpose(IntMatrix const &m)
{
  IntMatrix t(m[0].size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j)
      t[j][i] = m[i][j];
  return t;
}

// Minimal depth straight from the definition with integer matrix powers.
std::size_t depth_by_definition(IntMatrix const &m)
{
  IntMatrix s = product(m, transpose(m));
  std::size_t k = s.size();
  IntMatrix id(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    id[i][i] = 1;
  std::vector<IntMatrix> powers{id};
  for (std::size_t j = 1; j <= 2 * k + 2; ++j)
    powers.push_back(product(powers.back(), s));
  for (std::size_t n = 1;; ++n) {
    std::size_t mm = n / 2;
    bool holds = n % 2 == 1
                     ? dominated_by_search(powers[mm + 1], powers[mm])
                     : dominated_by_search(product(powers[mm], m), product(powers[mm - 1], m));
    if (holds)
      return n;
  }
}

Inclusion inclusion(PermGroup const &g, Subgroup const &h)
{ return Inclusion(make_character_table(g), h); }

} // namespace

TEST_CASE("support containment agrees with the q search")
{
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(0, 3);
  std::uniform_int_distribution<int> zero(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a(r, std::vector<std::int64_t>(c)), b = a;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        a[i][j] = zero(rng) == 0 ? 0 : entry(rng);
        b[i][j] = zero(rng) == 0 ? 0 : entry(rng);
      }
    }
    CHECK(support_contained(support_of(a), support_of(b)) == dominated_by_search(a, b));
  }
}

TEST_CASE("random matrices: depth agrees with the definition")
{
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> entry(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    IntMatrix m(r, std::vector<std::int64_t>(c));
    for (auto &row : m)
      for (auto &x : row)
        x = entry(rng);
    // every row and column needs a nonzero entry, as in a Frobenius matrix
    for (std::size_t i = 0; i < r; ++i)
      m[i][i % c] = std::max<std::int64_t>(m[i][i % c], 1);
    for (std::size_t j = 0; j < c; ++j)
      m[j % r][j] = std::max<std::int64_t>(m[j % r][j], 1);
    auto report = minimal_depth(m);
    CHECK(report.minimal_depth == depth_by_definition(m));
    for (std::size_t n = report.minimal_depth; n < report.minimal_depth + 4; ++n)
      CHECK(has_depth(m, n));
    if (report.minimal_depth > 1)
      CHECK(!has_depth(m, report.minimal_depth - 1));
  }
}

TEST_CASE("normal subgroups have depth two")
{
  auto a4 = group_of(4, {"(1,2,3)", "(2,3,4)"});
  auto r = minimal_depth(inclusion(a4, sub_of(a4, {"(1,2)(3,4)", "(1,3)(2,4)"})));
  CHECK(r.minimal_depth == 2);
  CHECK(r.even_m == 1);
}

TEST_CASE("S2 < S3 has depth three")
{
  auto g = symmetric(3);
  auto inc = inclusion(g, sub_of(g, {"(1,2)"}));
  auto r = minimal_depth(inc);
  CHECK(r.minimal_depth == 3);
  CHECK(r.odd_m == 1);
  CHECK(frobenius_graph(inc).diameter() == Diameter::finite(4));
}

TEST_CASE("Sylow 2-subgroup of D12 has depth three")
{
  auto g = construct("Named:D12");
  auto inc = inclusion(g, sub_of(g, {"(1,4)(2,5)(3,6)", "(2,6)(3,5)"}));
  CHECK(minimal_depth(inc).minimal_depth == 3);
  CHECK(frobenius_graph(inc).component_count() == 2);
}

TEST_CASE("property: depth against normality and diameter")
{
  for (std::string label : {"S4", "A5", "Named:D12", "AGL1:8", "Named:G80", "SL2:3"}) {
    CAPTURE(label);
    auto g = construct(label);
    auto tg = make_character_table(g);
    for (std::size_t order : {2u, 3u, 4u}) {
      if (g.order() % order != 0)
        continue;
      for (auto const &h : two_generated_subgroups(g, order)) {
        Inclusion inc(tg, h);
        auto r = minimal_depth(inc);
        CHECK(r.minimal_depth == depth_by_definition(inc.matrix()));
        CHECK((r.minimal_depth <= 2) == is_normal(g, h));
        auto graph = frobenius_graph(inc);
        if (graph.diameter() == Diameter::finite(3))
          CHECK(r.minimal_depth <= 3);
        if (r.minimal_depth == 3 && core(g, h).is_trivial())
          CHECK((graph.diameter() == Diameter::finite(3) ||
                 graph.diameter() == Diameter::finite(4)));
        auto const &chain = r.support_chain_lengths;
        CHECK(std::is_sorted(chain.begin(), chain.end()));
        CHECK(chain.size() <= inc.table_h().size() + 1);
      }
    }
  }
}

TEST_CASE("depth json")
{
  auto g = symmetric(3);
  auto j = depth_to_json(minimal_depth(inclusion(g, sub_of(g, {"(1,2)"}))));
  CHECK(j["minimal_depth"] == 3);
  CHECK(j.contains("support_chain_lengths"));
}
