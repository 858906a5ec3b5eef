#include "frobdiam/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "frobdiam/errors.hpp"

namespace frobdiam
{

namespace
{

bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

// (p, k) with q = p^k, or (0, 0).
std::pair<std::size_t, std::size_t> prime_power(std::size_t q)
{
  if (q < 2)
    return {0, 0};
  std::size_t p = 2;
  while (q % p != 0)
    ++p;
  std::size_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1)
    return {0, 0};
  return {p, k};
}

std::size_t factorial(std::size_t n)
{
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

std::vector<std::size_t> digits(std::size_t a, std::size_t p, std::size_t k)
{
  std::vector<std::size_t> d(k);
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::size_t undigits(std::vector<std::size_t> const &d, std::size_t p)
{
  std::size_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    a = a * p + d[i];
  return a;
}

Permutation perm_from(std::vector<std::size_t> const &images)
{
  std::vector<Point> pts(images.begin(), images.end());
  return Permutation(std::move(pts));
}

Permutation cycle_perm(std::size_t degree, std::size_t offset, std::size_t length)
{
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = 0; i < length; ++i)
    images[offset + i] = offset + (i + 1) % length;
  return perm_from(images);
}

std::size_t parse_number(std::string_view text, std::string_view label)
{
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InvalidSpec("malformed number in group label '" + std::string(label) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

struct Generated
{
  std::size_t degree;
  std::vector<Permutation> generators;
};

FiniteField field_for(std::size_t q)
{
  auto [p, k] = prime_power(q);
  if (p == 0)
    throw InvalidSpec(std::to_string(q) + " is not a prime power");
  return FiniteField(q);
}

Generated agl1_generators(std::size_t q, std::size_t d)
{
  FiniteField f = field_for(q);
  if (d == 0 || (q - 1) % d != 0)
    throw InvalidSpec("d must divide q - 1");

  Generated res{q, {}};
  std::size_t basis = 1;
  for (std::size_t i = 0; i < f.degree(); ++i, basis *= f.characteristic()) {
    std::vector<std::size_t> images(q);
    for (std::size_t x = 0; x < q; ++x)
      images[x] = f.add(x, basis);
    res.generators.push_back(perm_from(images));
  }
  if (d > 1) {
    std::size_t w = f.power_of_primitive((q - 1) / d);
    std::vector<std::size_t> images(q);
    for (std::size_t x = 0; x < q; ++x)
      images[x] = f.mul(w, x);
    res.generators.push_back(perm_from(images));
  }
  return res;
}

// Unitriangular generators of SL(2,q), as functions on row vectors (a, b).
template<typename Act>
std::vector<Permutation> transvection_generators(FiniteField const &f, std::size_t degree,
                                                 Act const &act)
{
  std::vector<Permutation> gens;
  std::size_t basis = 1;
  for (std::size_t i = 0; i < f.degree(); ++i, basis *= f.characteristic()) {
    for (bool upper : {true, false}) {
      std::vector<std::size_t> images(degree);
      for (std::size_t pt = 0; pt < degree; ++pt)
        images[pt] = act(pt, basis, upper);
      gens.push_back(perm_from(images));
    }
  }
  return gens;
}

Generated sl2_generators(std::size_t q)
{
  FiniteField f = field_for(q);
  std::size_t degree = q * q - 1;
  auto act = [&](std::size_t pt, std::size_t t, bool upper) {
    std::size_t a = (pt + 1) / q;
    std::size_t b = (pt + 1) % q;
    if (upper)
      b = f.add(b, f.mul(a, t));
    else
      a = f.add(a, f.mul(b, t));
    return a * q + b - 1;
  };
  return {degree, transvection_generators(f, degree, act)};
}

Generated psl2_generators(std::size_t q)
{
  FiniteField f = field_for(q);
  std::size_t degree = q + 1;
  // point x < q is [x : 1], point q is [1 : 0]
  auto act = [&](std::size_t pt, std::size_t t, bool upper) -> std::size_t {
    std::size_t a = pt < q ? pt : 1;
    std::size_t b = pt < q ? 1 : 0;
    if (upper)
      b = f.add(b, f.mul(a, t));
    else
      a = f.add(a, f.mul(b, t));
    if (b == 0)
      return q;
    return f.mul(a, f.inv(b));
  };
  return {degree, transvection_generators(f, degree, act)};
}

Generated psl3_2_generators()
{
  // nonzero vectors of F_2^3 as 1..7, point v-1
  Generated res{7, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j)
        continue;
      std::vector<std::size_t> images(7);
      for (std::size_t v = 1; v <= 7; ++v) {
        std::size_t w = ((v >> i) & 1) ? v ^ (std::size_t{1} << j) : v;
        images[v - 1] = w - 1;
      }
      res.generators.push_back(perm_from(images));
    }
  }
  return res;
}

Generated from_cycle_text(std::size_t degree, std::vector<std::string> const &gens)
{
  Generated res{degree, {}};
  for (auto const &g : gens)
    res.generators.push_back(parse_permutation(g, degree));
  return res;
}

GroupSpec named(std::string name) { return {GroupSpec::Kind::named, {}, {}, std::move(name)}; }

GroupSpec resolve_named(GroupSpec const &spec)
{
  using K = GroupSpec::Kind;
  if (spec.text == "G351")
    return {K::agl1_subgroup, {27, 13}, {}, {}};
  if (spec.text == "G80")
    return {K::agl1_subgroup, {16, 5}, {}, {}};
  if (spec.text == "D12")
    return {K::dihedral, {12}, {}, {}};
  if (spec.text == "V9C2x2" || spec.text == "Q8")
    return spec;
  throw InvalidSpec("unknown named group '" + spec.text + "'");
}

Generated generators_of(GroupSpec const &spec)
{
  using K = GroupSpec::Kind;
  auto const &p = spec.params;
  switch (spec.kind) {
  case K::symmetric: {
    std::size_t n = p[0];
    if (n < 2)
      return {std::max<std::size_t>(n, 1), {}};
    return {n, {cycle_perm(n, 0, 2), cycle_perm(n, 0, n)}};
  }
  case K::alternating: {
    std::size_t n = p[0];
    if (n < 3)
      return {std::max<std::size_t>(n, 1), {}};
    Generated res{n, {}};
    for (std::size_t k = 2; k < n; ++k)
      res.generators.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
    return res;
  }
  case K::cyclic: {
    std::size_t n = p[0];
    if (n < 2)
      return {1, {}};
    return {n, {cycle_perm(n, 0, n)}};
  }
  case K::dihedral: {
    std::size_t order = p[0];
    if (order < 2 || order % 2 != 0)
      throw InvalidSpec("dihedral groups have even order");
    std::size_t n = order / 2;
    if (n == 1)
      return {2, {cycle_perm(2, 0, 2)}};
    if (n == 2)
      return {4, {cycle_perm(4, 0, 2), cycle_perm(4, 2, 2)}};
    std::vector<std::size_t> reflection(n);
    for (std::size_t x = 0; x < n; ++x)
      reflection[x] = (n - x) % n;
    return {n, {cycle_perm(n, 0, n), perm_from(reflection)}};
  }
  case K::elementary_abelian: {
    std::size_t prime = p[0], k = p[1];
    if (!is_prime(prime) || k == 0)
      throw InvalidSpec("elementary abelian groups need a prime and a positive rank");
    Generated res{prime * k, {}};
    for (std::size_t i = 0; i < k; ++i)
      res.generators.push_back(cycle_perm(prime * k, i * prime, prime));
    return res;
  }
  case K::direct_product: {
    std::vector<Generated> parts;
    std::size_t degree = 0;
    for (auto const &f : spec.factors) {
      parts.push_back(generators_of(f));
      degree += parts.back().degree;
    }
    Generated res{degree, {}};
    std::size_t offset = 0;
    for (auto const &part : parts) {
      for (auto const &g : part.generators) {
        std::vector<std::size_t> images(degree);
        std::iota(images.begin(), images.end(), 0);
        for (std::size_t x = 0; x < part.degree; ++x)
          images[offset + x] = offset + g[x];
        res.generators.push_back(perm_from(images));
      }
      offset += part.degree;
    }
    return res;
  }
  case K::agl1:
    return agl1_generators(p[0], p[0] - 1);
  case K::agl1_subgroup:
    return agl1_generators(p[0], p[1]);
  case K::sl2:
    return sl2_generators(p[0]);
  case K::psl2:
    return psl2_generators(p[0]);
  case K::psl3_2:
    return psl3_2_generators();
  case K::from_file: {
    auto ps = read_permutation_spec(spec.text);
    return {ps.degree, ps.generators};
  }
  case K::named: {
    if (spec.text == "V9C2x2")
      return from_cycle_text(13, {"(1,2)(3,4)", "(2,3,4)(5,6,7,8,9,10,11,12,13)"});
    if (spec.text == "Q8")
      return from_cycle_text(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"});
    return generators_of(resolve_named(spec));
  }
  }
  throw InvalidSpec("unknown group kind");
}

} // namespace

FiniteField::FiniteField(std::size_t q) : _q(q)
{
  auto [p, k] = prime_power(q);
  if (p == 0)
    throw InvalidSpec(std::to_string(q) + " is not a prime power");
  if (q > max_field_order)
    throw InvalidSpec("field order " + std::to_string(q) + " exceeds " +
                      std::to_string(max_field_order));
  _p = p;
  _k = k;

  _add.resize(q * q);
  _neg.resize(q);
  for (std::size_t a = 0; a < q; ++a) {
    auto da = digits(a, p, k);
    std::vector<std::size_t> dn(k);
    for (std::size_t i = 0; i < k; ++i)
      dn[i] = (p - da[i]) % p;
    _neg[a] = undigits(dn, p);
    for (std::size_t b = 0; b < q; ++b) {
      auto db = digits(b, p, k);
      std::vector<std::size_t> ds(k);
      for (std::size_t i = 0; i < k; ++i)
        ds[i] = (da[i] + db[i]) % p;
      _add[a * q + b] = undigits(ds, p);
    }
  }

  // First monic polynomial x^k + c(x), c encoded in base p, for which x has
  // multiplicative order q - 1; such a polynomial is primitive.
  for (std::size_t c = 1; c < q; ++c) {
    auto low = digits(c, p, k);
    if (low[0] == 0)
      continue;
    std::vector<std::size_t> exp_table{1};
    std::vector<std::size_t> cur = digits(1, p, k);
    bool primitive = true;
    for (std::size_t step = 1; step < q; ++step) {
      std::size_t top = cur[k - 1];
      for (std::size_t i = k; i-- > 1;)
        cur[i] = cur[i - 1];
      cur[0] = 0;
      for (std::size_t i = 0; i < k; ++i)
        cur[i] = (cur[i] + (p - (top * low[i]) % p)) % p;
      std::size_t v = undigits(cur, p);
      if (v == 1 && step < q - 1) {
        primitive = false;
        break;
      }
      if (step < q - 1)
        exp_table.push_back(v);
      else if (v != 1)
        primitive = false;
    }
    if (!primitive)
      continue;
    _modulus = low;
    _modulus.push_back(1);
    _exp = std::move(exp_table);
    _log.assign(q, 0);
    for (std::size_t i = 0; i < _exp.size(); ++i)
      _log[_exp[i]] = i;
    if (q == 2)
      _exp.push_back(1);  // primitive_element() reads _exp[1]
    return;
  }
  throw InternalInconsistency("no primitive polynomial found for GF(" + std::to_string(q) + ")");
}

std::size_t FiniteField::mul(std::size_t a, std::size_t b) const
{
  if (a == 0 || b == 0)
    return 0;
  return _exp[(_log[a] + _log[b]) % (_q - 1)];
}

std::size_t FiniteField::inv(std::size_t a) const
{
  if (a == 0)
    throw InvalidSpec("zero has no inverse");
  return _exp[(_q - 1 - _log[a]) % (_q - 1)];
}

std::string GroupSpec::label() const
{
  using K = Kind;
  auto num = [this](std::size_t i) { return std::to_string(params[i]); };
  switch (kind) {
  case K::symmetric: return "S" + num(0);
  case K::alternating: return "A" + num(0);
  case K::cyclic: return "C" + num(0);
  case K::dihedral: return "D" + num(0);
  case K::elementary_abelian: return "E:" + num(0) + ":" + num(1);
  case K::direct_product: {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i)
      s += (i ? "x" : "") + factors[i].label();
    return s;
  }
  case K::agl1: return "AGL1:" + num(0);
  case K::agl1_subgroup: return "AGL1:" + num(0) + ":" + num(1);
  case K::sl2: return "SL2:" + num(0);
  case K::psl2: return "PSL2:" + num(0);
  case K::psl3_2: return "PSL3:2";
  case K::from_file: return "file:" + text;
  case K::named: return "Named:" + text;
  }
  return "?";
}

GroupSpec parse_group_label(std::string_view label)
{
  using K = GroupSpec::Kind;
  if (label.starts_with("Named:")) {
    auto spec = named(std::string(label.substr(6)));
    resolve_named(spec);
    return spec;
  }
  if (label.starts_with("file:"))
    return {K::from_file, {}, {}, std::string(label.substr(5))};

  if (label.find('x') != std::string_view::npos) {
    GroupSpec spec{K::direct_product, {}, {}, {}};
    for (auto part : split(label, 'x'))
      spec.factors.push_back(parse_group_label(part));
    return spec;
  }

  auto fields = split(label, ':');
  auto head = fields[0];
  auto arg = [&](std::size_t i) { return parse_number(fields.at(i), label); };
  auto expect_fields = [&](std::size_t n) {
    if (fields.size() != n)
      throw InvalidSpec("wrong number of parameters in group label '" + std::string(label) + "'");
  };

  if (head == "E") {
    expect_fields(3);
    return {K::elementary_abelian, {arg(1), arg(2)}, {}, {}};
  }
  if (head == "AGL1") {
    if (fields.size() == 2)
      return {K::agl1, {arg(1)}, {}, {}};
    expect_fields(3);
    return {K::agl1_subgroup, {arg(1), arg(2)}, {}, {}};
  }
  if (head == "SL2") {
    expect_fields(2);
    return {K::sl2, {arg(1)}, {}, {}};
  }
  if (head == "PSL2") {
    expect_fields(2);
    return {K::psl2, {arg(1)}, {}, {}};
  }
  if (head == "PSL3") {
    expect_fields(2);
    if (arg(1) != 2)
      throw InvalidSpec("only PSL3:2 is supported");
    return {K::psl3_2, {2}, {}, {}};
  }

  expect_fields(1);
  if (head.size() >= 2) {
    auto n = parse_number(head.substr(1), label);
    switch (head[0]) {
    case 'S': return {K::symmetric, {n}, {}, {}};
    case 'A': return {K::alternating, {n}, {}, {}};
    case 'C': return {K::cyclic, {n}, {}, {}};
    case 'D': return {K::dihedral, {n}, {}, {}};
    default: break;
    }
  }
  throw InvalidSpec("unknown group label '" + std::string(label) + "'");
}

std::size_t expected_order(GroupSpec const &spec)
{
  using K = GroupSpec::Kind;
  auto const &p = spec.params;
  switch (spec.kind) {
  case K::symmetric: return factorial(p[0]);
  case K::alternating: return p[0] < 2 ? 1 : factorial(p[0]) / 2;
  case K::cyclic: return std::max<std::size_t>(p[0], 1);
  case K::dihedral: return p[0];
  case K::elementary_abelian: {
    std::size_t r = 1;
    for (std::size_t i = 0; i < p[1]; ++i)
      r *= p[0];
    return r;
  }
  case K::direct_product: {
    std::size_t r = 1;
    for (auto const &f : spec.factors) {
      auto o = expected_order(f);
      if (o == 0)
        return 0;
      r *= o;
    }
    return r;
  }
  case K::agl1: return p[0] * (p[0] - 1);
  case K::agl1_subgroup: return p[0] * p[1];
  case K::sl2: return p[0] * (p[0] * p[0] - 1);
  case K::psl2: return p[0] * (p[0] * p[0] - 1) / (p[0] % 2 == 1 ? 2 : 1);
  case K::psl3_2: return 168;
  case K::from_file: return 0;
  case K::named:
    if (spec.text == "V9C2x2")
      return 36;
    if (spec.text == "Q8")
      return 8;
    return expected_order(resolve_named(spec));
  }
  return 0;
}

PermGroup construct(GroupSpec const &spec, Limits const &limits)
{
  auto gens = generators_of(spec);
  auto expected = expected_order(spec);
  if (expected > limits.max_order)
    throw DeskScaleExceeded(spec.label() + " has order " + std::to_string(expected) +
                            ", above the limit " + std::to_string(limits.max_order));
  auto group = PermGroup::from_generators(gens.degree, std::move(gens.generators), limits);
  if (expected != 0 && group.order() != expected)
    throw InternalInconsistency(spec.label() + " generated a group of order " +
                                std::to_string(group.order()) + " instead of " +
                                std::to_string(expected));
  return group;
}

PermGroup construct(std::string_view label, Limits const &limits)
{ return construct(parse_group_label(label), limits); }

PermutationSpec parse_permutation_spec(std::string_view text)
{
  PermutationSpec spec;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto hash = line.find('#');
    if (hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos)
      continue;

    if (!have_degree) {
      auto rest = line.substr(first);
      if (!rest.starts_with("degree"))
        throw ParseError("expected 'degree N'", line_no, first + 1);
      auto num_start = rest.find_first_not_of(" \t", 6);
      if (num_start == std::string_view::npos || num_start == 6)
        throw ParseError("expected a degree", line_no, first + 7);
      auto num = rest.substr(num_start);
      auto num_end = num.find_last_not_of(" \t");
      num = num.substr(0, num_end + 1);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc() || ptr != num.data() + num.size() || value == 0)
        throw ParseError("malformed degree", line_no, first + num_start + 1);
      spec.degree = value;
      have_degree = true;
      continue;
    }
    spec.generators.push_back(parse_permutation(line, spec.degree, line_no));
  }
  if (!have_degree)
    throw ParseError("missing 'degree N' line", line_no == 0 ? 1 : line_no, 1);
  return spec;
}

std::string render_permutation_spec(PermutationSpec const &spec)
{
  std::string out = "degree " + std::to_string(spec.degree) + "\n";
  for (auto const &g : spec.generators)
    out += g.to_string() + "\n";
  return out;
}

PermutationSpec read_permutation_spec(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidSpec("cannot read group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_permutation_spec(ss.str());
}

std::vector<CatalogEntry> const &standard_catalog()
{
  static std::vector<CatalogEntry> const entries{
    {"C2", true},
    {"C4", true},
    {"C6", true},
    {"E:2:3", true},
    {"D8", true},
    {"Named:Q8", true},
    {"Named:D12", true},
    {"S3", true},
    {"S4", false},
    {"S5", false},
    {"S6", false},
    {"A4", false},
    {"A5", false},
    {"A6", false},
    {"C2xA4", false},
    {"S3xC4", true},
    {"S3xS3", true},
    {"Named:V9C2x2", false},
    {"AGL1:5", true},
    {"AGL1:7", true},
    {"AGL1:8", false},
    {"AGL1:9", false},
    {"AGL1:9:4", false},
    {"Named:G80", false},
    {"AGL1:16", false},
    {"AGL1:25", false},
    {"Named:G351", false},
    {"SL2:3", false},
    {"SL2:5", false},
    {"SL2:7", false},
    {"PSL3:2", false},
    {"PSL2:8", false},
    {"PSL2:11", false},
    {"AGL1:49", false},
    {"A7", false},
  };
  return entries;
}

bool affine_diam3_criterion(std::size_t p, std::size_t d)
{
  if (!is_prime(p))
    throw InvalidSpec(std::to_string(p) + " is not prime");
  if (d <= 1 || (p * p - 1) % d != 0)
    throw InvalidSpec("d must be a divisor of p^2 - 1 greater than 1");
  std::size_t two_part = 1;
  for (std::size_t m = p - 1; m % 2 == 0 && m > 0; m /= 2)
    two_part *= 2;
  return d % ((p + 1) * two_part) == 0;
}

} // namespace frobdiam
