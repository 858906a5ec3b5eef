#include "frobdiam/depth.hpp"

#include "frobdiam/errors.hpp"

namespace frobdiam
{

namespace
{

Support identity_support(std::size_t n)
{
  Support s(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    s[i][i] = true;
  return s;
}

std::size_t count(Support const &s)
{
  std::size_t c = 0;
  for (auto const &row : s) {
    for (bool b : row)
      c += b;
  }
  return c;
}

// supp(S^j) for j = 0..n.
std::vector<Support> support_powers(Support const &s, std::size_t n)
{
  std::vector<Support> powers{identity_support(s.size())};
  for (std::size_t j = 1; j <= n; ++j)
    powers.push_back(support_product(powers.back(), s));
  return powers;
}

bool odd_holds(std::vector<Support> const &powers, std::size_t m)
{ return support_contained(powers[m + 1], powers[m]); }

bool even_holds(std::vector<Support> const &powers, Support const &sm, std::size_t m)
{
  return support_contained(support_product(powers[m], sm),
                           support_product(powers[m - 1], sm));
}

} // namespace

Support support_of(IntMatrix const &a)
{
  Support s;
  for (auto const &row : a) {
    std::vector<bool> r;
    for (auto x : row) {
      if (x < 0)
        throw InternalInconsistency("negative entry in a depth computation");
      r.push_back(x != 0);
    }
    s.push_back(std::move(r));
  }
  return s;
}

Support support_product(Support const &a, Support const &b)
{
  std::size_t n = a.size();
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Support res(n, std::vector<bool>(cols, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (!a[i][k])
        continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j])
          res[i][j] = true;
      }
    }
  }
  return res;
}

bool support_contained(Support const &a, Support const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] && !b[i][j])
        return false;
    }
  }
  return true;
}

bool has_depth(IntMatrix const &m, std::size_t n)
{
  if (n == 0)
    throw InvalidSpec("depth is a positive integer");
  Support sm = support_of(m);
  Support s = support_of(induced_gram(m));
  auto powers = support_powers(s, n / 2 + 1);
  if (n % 2 == 1)
    return odd_holds(powers, n / 2);
  return even_holds(powers, sm, n / 2);
}

DepthReport minimal_depth(IntMatrix const &m)
{
  Support sm = support_of(m);
  Support s = support_of(induced_gram(m));
  std::size_t k = s.size();

  // supp(S^j) grows with j (S has a positive diagonal) and stabilizes within
  // k steps, after which both conditions hold.
  auto powers = support_powers(s, k + 2);

  DepthReport report;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    report.support_chain_lengths.push_back(count(powers[j]));
    if (j > 0 && support_contained(powers[j], powers[j - 1]))
      break;
  }

  bool odd_found = false;
  for (std::size_t mm = 0; mm + 1 < powers.size(); ++mm) {
    if (odd_holds(powers, mm)) {
      report.odd_m = mm;
      odd_found = true;
      break;
    }
  }
  bool even_found = false;
  for (std::size_t mm = 1; mm < powers.size(); ++mm) {
    if (even_holds(powers, sm, mm)) {
      report.even_m = mm;
      even_found = true;
      break;
    }
  }
  if (!odd_found || !even_found)
    throw InternalInconsistency("support chain did not stabilize");

  report.minimal_depth = std::min(2 * report.odd_m + 1, 2 * report.even_m);
  report.degenerate = report.minimal_depth == 1;

  // depth n implies depth n + 1
  for (std::size_t n = report.minimal_depth; n <= report.minimal_depth + 3; ++n) {
    std::size_t mm = n / 2;
    if (mm + 1 >= powers.size())
      break;
    bool holds = n % 2 == 1 ? odd_holds(powers, mm) : even_holds(powers, sm, mm);
    if (!holds)
      throw InternalInconsistency("depth is not monotone");
  }
  return report;
}

DepthReport minimal_depth(Inclusion const &inc)
{ return minimal_depth(inc.matrix()); }

nlohmann::json depth_to_json(DepthReport const &report)
{
  return {
    {"minimal_depth", report.minimal_depth},
    {"odd_m", report.odd_m},
    {"even_m", report.even_m},
    {"degenerate", report.degenerate},
    {"support_chain_lengths", report.support_chain_lengths},
  };
}

} // namespace frobdiam
