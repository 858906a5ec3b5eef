#include "frobdiam/character_table.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frobdiam/errors.hpp"

namespace frobdiam
{

namespace
{

using u64 = std::uint64_t;

class Field
{
public:
  explicit Field(u64 p) : _p(p) {}

  u64 p() const { return _p; }
  u64 add(u64 a, u64 b) const { return (a + b) % _p; }
  u64 sub(u64 a, u64 b) const { return (a + _p - b) % _p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % _p; }
  u64 neg(u64 a) const { return a == 0 ? 0 : _p - a; }

  u64 pow(u64 a, u64 e) const
  {
    u64 r = 1;
    a %= _p;
    while (e > 0) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  u64 inv(u64 a) const
  {
    if (a % _p == 0)
      throw InternalInconsistency("division by zero in F_p");
    return pow(a, _p - 2);
  }

  u64 reduce(std::int64_t a) const
  {
    auto m = static_cast<std::int64_t>(_p);
    return static_cast<u64>(((a % m) + m) % m);
  }

private:
  u64 _p;
};

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

bool is_prime(u64 n)
{
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n)
{
  std::vector<u64> res;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      res.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    res.push_back(n);
  return res;
}

u64 primitive_root(Field const &f)
{
  auto factors = prime_factors(f.p() - 1);
  for (u64 g = 2; g < f.p(); ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (f.pow(g, (f.p() - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return g;
  }
  return 1;  // p = 2
}

u64 isqrt(u64 n)
{
  u64 r = 0;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

// A subspace of F_p^k held by a basis in reduced row echelon form.
struct Block
{
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
};

Block row_reduce(Field const &f, std::vector<Vec> rows)
{
  Block res;
  if (rows.empty())
    return res;
  std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[r], rows[piv]);
    u64 inv = f.inv(rows[r][c]);
    for (auto &x : rows[r])
      x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      u64 factor = rows[i][c];
      for (std::size_t cc = 0; cc < ncols; ++cc)
        rows[i][cc] = f.sub(rows[i][cc], f.mul(factor, rows[r][cc]));
    }
    res.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  res.basis = std::move(rows);
  return res;
}

// Basis of the null space of a square matrix.
std::vector<Vec> null_space(Field const &f, Mat a)
{
  std::size_t n = a.size();
  Block reduced = row_reduce(f, std::move(a));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : reduced.pivots)
    is_pivot[c] = true;

  std::vector<Vec> res;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.pivots.size(); ++r)
      v[reduced.pivots[r]] = f.neg(reduced.basis[r][free]);
    res.push_back(std::move(v));
  }
  return res;
}

// Characteristic polynomial via reduction to Hessenberg form; coefficients
// lowest degree first, monic.
Vec characteristic_polynomial(Field const &f, Mat h)
{
  std::size_t n = h.size();
  for (std::size_t m = 0; m + 2 < n; ++m) {
    std::size_t i = m + 1;
    while (i < n && h[i][m] == 0)
      ++i;
    if (i == n)
      continue;
    if (i != m + 1) {
      std::swap(h[i], h[m + 1]);
      for (auto &row : h)
        std::swap(row[i], row[m + 1]);
    }
    u64 inv = f.inv(h[m + 1][m]);
    for (std::size_t r = m + 2; r < n; ++r) {
      u64 u = f.mul(h[r][m], inv);
      if (u == 0)
        continue;
      for (std::size_t c = 0; c < n; ++c)
        h[r][c] = f.sub(h[r][c], f.mul(u, h[m + 1][c]));
      for (std::size_t c = 0; c < n; ++c)
        h[c][m + 1] = f.add(h[c][m + 1], f.mul(u, h[c][r]));
    }
  }

  std::vector<Vec> polys{Vec{1}};
  for (std::size_t m = 0; m < n; ++m) {
    Vec next(m + 2, 0);
    Vec const &prev = polys[m];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], prev[d]);
      next[d] = f.sub(next[d], f.mul(h[m][m], prev[d]));
    }
    u64 t = 1;
    for (std::size_t i = m; i-- > 0;) {
      t = f.mul(t, h[i + 1][i]);
      u64 coeff = f.mul(h[i][m], t);
      if (coeff == 0)
        continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d)
        next[d] = f.sub(next[d], f.mul(coeff, polys[i][d]));
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

std::vector<u64> roots(Field const &f, Vec const &poly)
{
  std::vector<u64> res;
  for (u64 x = 0; x < f.p(); ++x) {
    u64 v = 0;
    for (std::size_t d = poly.size(); d-- > 0;)
      v = f.add(f.mul(v, x), poly[d]);
    if (v == 0)
      res.push_back(x);
  }
  return res;
}

// Class matrix M_j with (M_j)[i][k] = a_{j i k}; the vector of central
// character values is a right eigenvector with eigenvalue omega(K_j).
Mat class_matrix(Field const &f, PermGroup const &group, std::size_t j)
{
  auto const &cd = group.classes();
  std::size_t k = cd.size();
  Mat m(k, Vec(k, 0));
  for (std::size_t target = 0; target < k; ++target) {
    ElementId rep = cd.representative_ids[target];
    for (ElementId x : cd.members[j]) {
      ElementId y = group.mul(group.inv(x), rep);
      ++m[cd.class_of[y]][target];
    }
  }
  for (auto &row : m) {
    for (auto &x : row)
      x %= f.p();
  }
  return m;
}

std::vector<Block> split_block(Field const &f, Mat const &m, Block const &block)
{
  std::size_t d = block.basis.size();
  std::size_t k = m.size();

  Mat restricted(d, Vec(d, 0));
  for (std::size_t r = 0; r < d; ++r) {
    Vec const &b = block.basis[r];
    Vec image(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      u64 acc = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (m[i][c] != 0 && b[c] != 0)
          acc = f.add(acc, f.mul(m[i][c], b[c]));
      }
      image[i] = acc;
    }
    for (std::size_t s = 0; s < d; ++s)
      restricted[s][r] = image[block.pivots[s]];
  }

  auto eigenvalues = roots(f, characteristic_polynomial(f, restricted));

  std::vector<Block> res;
  std::size_t total = 0;
  for (u64 lambda : eigenvalues) {
    Mat shifted = restricted;
    for (std::size_t s = 0; s < d; ++s)
      shifted[s][s] = f.sub(shifted[s][s], lambda);

    std::vector<Vec> ambient;
    for (auto const &coords : null_space(f, shifted)) {
      Vec v(k, 0);
      for (std::size_t s = 0; s < d; ++s) {
        if (coords[s] == 0)
          continue;
        for (std::size_t c = 0; c < k; ++c)
          v[c] = f.add(v[c], f.mul(coords[s], block.basis[s][c]));
      }
      ambient.push_back(std::move(v));
    }
    total += ambient.size();
    res.push_back(row_reduce(f, std::move(ambient)));
  }

  if (total != d)
    throw InternalInconsistency("class matrix is not diagonalizable over F_p");
  return res;
}

} // namespace

std::uint64_t dixon_prime(std::size_t order, std::size_t exponent)
{
  u64 bound = 2 * isqrt(order);
  for (u64 p = exponent + 1;; p += exponent) {
    if (p > bound && is_prime(p))
      return p;
  }
}

CharacterTable::CharacterTable(PermGroup group, int exponent, std::uint64_t prime,
                               std::vector<std::vector<Cyclotomic>> values)
: _group(std::move(group)), _exponent(exponent), _prime(prime), _values(std::move(values))
{
  for (auto const &row : _values)
    _degrees.push_back(row[0].to_rational_integer());
}

std::size_t CharacterTable::linear_count() const
{ return static_cast<std::size_t>(std::count(_degrees.begin(), _degrees.end(), 1)); }

CharacterTable CharacterTable::compute(PermGroup const &group)
{
  auto const &cd = group.classes();
  std::size_t k = cd.size();
  std::size_t n = group.order();
  auto e = group.exponent();
  if (static_cast<std::int64_t>(e) > conductor_limit())
    throw ConductorOverflow("group exponent " + std::to_string(e) +
                            " exceeds the conductor limit");

  Field f(dixon_prime(n, e));

  std::vector<Block> blocks;
  {
    Block all;
    for (std::size_t i = 0; i < k; ++i) {
      Vec v(k, 0);
      v[i] = 1;
      all.basis.push_back(std::move(v));
      all.pivots.push_back(i);
    }
    blocks.push_back(std::move(all));
  }

  for (std::size_t j = 1; j < k; ++j) {
    bool degenerate = std::any_of(blocks.begin(), blocks.end(),
                                  [](Block const &b) { return b.basis.size() > 1; });
    if (!degenerate)
      break;

    Mat m = class_matrix(f, group, j);
    std::vector<Block> next;
    for (auto &block : blocks) {
      if (block.basis.size() == 1) {
        next.push_back(std::move(block));
        continue;
      }
      for (auto &piece : split_block(f, m, block))
        next.push_back(std::move(piece));
    }
    blocks = std::move(next);
  }

  if (blocks.size() != k)
    throw InternalInconsistency("class matrices did not separate all characters");

  u64 root = f.pow(primitive_root(f), (f.p() - 1) / e);
  u64 max_degree = isqrt(n);

  std::vector<std::vector<Cyclotomic>> rows;
  for (auto const &block : blocks) {
    Vec v = block.basis[0];
    if (v[0] == 0)
      throw InternalInconsistency("central character vanishes on the identity class");
    u64 scale = f.inv(v[0]);
    for (auto &x : v)
      x = f.mul(x, scale);

    // omega_i = |C_i| chi(g_i) / chi(1); sum_i omega_i omega_i' / |C_i| = |G| / chi(1)^2
    u64 s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s = f.add(s, f.mul(f.mul(v[i], v[cd.inverse_class[i]]), f.inv(cd.sizes[i] % f.p())));
    if (s == 0)
      throw InternalInconsistency("degenerate degree equation");
    u64 target = f.mul(n % f.p(), f.inv(s));

    u64 degree = 0;
    for (u64 d = 1; d <= max_degree; ++d) {
      if (f.mul(d, d) == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0)
      throw InternalInconsistency("no admissible character degree");

    Vec theta(k);
    for (std::size_t i = 0; i < k; ++i)
      theta[i] = f.mul(f.mul(v[i], degree), f.inv(cd.sizes[i] % f.p()));

    std::vector<Cyclotomic> row;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t o = cd.element_orders[i];
      u64 omega = f.pow(root, e / o);
      u64 omega_inv = f.inv(omega);
      u64 o_inv = f.inv(o % f.p());

      std::vector<std::int64_t> mult(o, 0);
      for (std::size_t r = 0; r < o; ++r) {
        u64 acc = 0;
        u64 step = f.pow(omega_inv, r);
        u64 w = 1;
        for (std::size_t jj = 0; jj < o; ++jj) {
          acc = f.add(acc, f.mul(theta[cd.power_map[i][jj]], w));
          w = f.mul(w, step);
        }
        u64 m = f.mul(acc, o_inv);
        if (m > degree)
          throw InternalInconsistency("root-of-unity multiplicity out of range");
        mult[r] = static_cast<std::int64_t>(m);
      }
      row.push_back(Cyclotomic::from_exponents(static_cast<int>(o), mult));
    }
    rows.push_back(std::move(row));
  }

  auto is_trivial = [](std::vector<Cyclotomic> const &row) {
    return std::all_of(row.begin(), row.end(),
                       [](Cyclotomic const &c) { return c == Cyclotomic(1); });
  };
  auto trivial = std::find_if(rows.begin(), rows.end(), is_trivial);
  if (trivial == rows.end())
    throw InternalInconsistency("trivial character missing");
  std::iter_swap(rows.begin(), trivial);

  std::sort(rows.begin() + 1, rows.end(), [](auto const &a, auto const &b) {
    auto da = a[0].to_rational_integer();
    auto db = b[0].to_rational_integer();
    if (da != db)
      return da < db;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto c = canonical_order(a[i], b[i]);
      if (c != 0)
        return c < 0;
    }
    return false;
  });

  CharacterTable table(group, static_cast<int>(e), f.p(), std::move(rows));
  verify_character_table(table);
  return table;
}

TablePtr make_character_table(PermGroup const &group)
{ return std::make_shared<CharacterTable const>(CharacterTable::compute(group)); }

TableStats table_stats(CharacterTable const &table)
{
  TableStats stats;
  stats.class_count = table.size();
  for (auto d : table.degrees()) {
    stats.total_degree += d;
    stats.max_degree = std::max(stats.max_degree, d);
  }
  return stats;
}

std::int64_t class_multiplication_coefficient(PermGroup const &group, std::size_t i,
                                              std::size_t j, std::size_t k)
{
  auto const &cd = group.classes();
  ElementId rep = cd.representative_ids.at(k);
  std::int64_t count = 0;
  for (ElementId x : cd.members.at(i)) {
    if (cd.class_of[group.mul(group.inv(x), rep)] == j)
      ++count;
  }
  return count;
}

void verify_character_table(CharacterTable const &table)
{
  auto const &cd = table.classes();
  PermGroup const &group = table.group();
  std::size_t k = cd.size();
  auto n = static_cast<std::int64_t>(group.order());
  auto fail = [](std::string const &what) {
    throw InternalInconsistency("character table check failed: " + what);
  };

  if (table.size() != k)
    fail("table is not square");
  for (std::size_t j = 0; j < k; ++j) {
    if (!(table.value(0, j) == Cyclotomic(1)))
      fail("first row is not the trivial character");
  }

  std::int64_t sum_sq = 0;
  for (std::size_t i = 0; i < k; ++i) {
    auto d = table.degrees()[i];
    if (d < 1 || n % d != 0)
      fail("degree does not divide the group order");
    sum_sq += d * d;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(table.value(i, cd.inverse_class[j]) == table.value(i, j).complex_conjugate()))
        fail("value on inverse class is not the complex conjugate");
    }
  }
  if (sum_sq != n)
    fail("sum of squared degrees differs from the group order");

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      CyclotomicSum sum(table.exponent());
      for (std::size_t j = 0; j < k; ++j) {
        sum.add_product(table.value(a, j), table.value(b, cd.inverse_class[j]),
                        static_cast<std::int64_t>(cd.sizes[j]));
      }
      auto v = sum.value();
      if (!v.is_rational() || v.to_rational_integer() != (a == b ? n : 0))
        fail("row orthogonality");
    }
  }

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      int conductor = std::lcm(static_cast<int>(cd.element_orders[a]),
                               static_cast<int>(cd.element_orders[b]));
      CyclotomicSum sum(conductor);
      for (std::size_t i = 0; i < k; ++i)
        sum.add_product(table.value(i, a), table.value(i, cd.inverse_class[b]));
      auto v = sum.value();
      auto expected = a == b ? static_cast<std::int64_t>(cd.centralizer_orders[a]) : 0;
      if (!v.is_rational() || v.to_rational_integer() != expected)
        fail("column orthogonality");
    }
  }

  auto stats = table_stats(table);
  auto b = stats.max_degree;
  auto commutator_index = n / static_cast<std::int64_t>(derived_subgroup(group).order());
  if (static_cast<std::int64_t>(table.linear_count()) != commutator_index)
    fail("number of linear characters differs from [G:G']");

  std::int64_t middle = 0;
  for (auto d : table.degrees()) {
    if (d > 1 && d < b)
      middle += d * (b - d);
  }
  if (n != stats.total_degree * b - commutator_index * (b - 1) - middle)
    fail("degree sum identity");

  bool equality = n == stats.total_degree * b;
  if (n > stats.total_degree * b || equality != group.is_abelian())
    fail("|G| <= T(G) b(G) bound");
}

std::string render_table(CharacterTable const &table)
{
  auto const &cd = table.classes();
  std::size_t k = cd.size();

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  std::vector<std::string> orders{"order"};
  std::vector<std::string> sizes{"size"};
  for (std::size_t j = 0; j < k; ++j) {
    header.push_back("c" + std::to_string(j + 1));
    orders.push_back(std::to_string(cd.element_orders[j]));
    sizes.push_back(std::to_string(cd.sizes[j]));
  }
  cells.push_back(header);
  cells.push_back(orders);
  cells.push_back(sizes);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1)};
    for (std::size_t j = 0; j < k; ++j)
      row.push_back(table.value(i, j).to_string());
    cells.push_back(std::move(row));
  }

  std::vector<std::size_t> width(k + 1, 0);
  for (auto const &row : cells) {
    for (std::size_t j = 0; j <= k; ++j)
      width[j] = std::max(width[j], row[j].size());
  }

  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t j = 0; j <= k; ++j) {
      if (j > 0)
        os << "  ";
      os << std::string(width[j] - cells[r][j].size(), ' ') << cells[r][j];
    }
    os << '\n';
    if (r == 2)
      os << '\n';
  }
  return os.str();
}

nlohmann::json table_to_json(CharacterTable const &table)
{
  auto const &cd = table.classes();
  nlohmann::json rows = nlohmann::json::array();
  for (auto const &row : table.values()) {
    nlohmann::json r = nlohmann::json::array();
    for (auto const &v : row)
      r.push_back(v.to_string());
    rows.push_back(std::move(r));
  }
  std::vector<std::string> reps;
  for (auto const &rep : cd.representatives)
    reps.push_back(rep.to_string());

  return {
    {"order", table.group().order()},
    {"exponent", table.exponent()},
    {"class_sizes", cd.sizes},
    {"element_orders", cd.element_orders},
    {"class_representatives", reps},
    {"degrees", table.degrees()},
    {"rows", rows},
  };
}

} // namespace frobdiam
