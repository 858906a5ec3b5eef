#include "frobdiam/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

#include "frobdiam/errors.hpp"

namespace frobdiam
{

namespace
{

std::atomic<int> g_conductor_limit{5040};

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("cyclotomic coefficient overflow");
  return r;
}

void check_conductor(std::int64_t e)
{
  if (e < 1)
    throw InvalidSpec("conductor must be positive");
  if (e > conductor_limit())
    throw ConductorOverflow("conductor " + std::to_string(e) + " exceeds the limit " +
                            std::to_string(conductor_limit()));
}

int lcm_conductor(int a, int b)
{
  std::int64_t l = std::lcm(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  check_conductor(l);
  return static_cast<int>(l);
}

// Reduces exponent coefficients of length >= phi(e) modulo Phi_e in place.
void reduce_in_place(std::vector<std::int64_t> &v, int e)
{
  auto const &poly = cyclotomic_polynomial(e);
  std::size_t deg = poly.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    std::int64_t c = v[i];
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (poly[j] != 0)
        v[i - deg + j] = checked_add(v[i - deg + j], -checked_mul(c, poly[j]));
    }
    v[i] = 0;
  }
  v.resize(deg);
}

} // namespace

int conductor_limit() { return g_conductor_limit.load(); }

void set_conductor_limit(int limit) { g_conductor_limit.store(limit); }

int euler_phi(int n)
{
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

namespace
{

std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                       std::vector<std::int64_t> const &den)
{
  std::size_t dsz = den.size();
  std::vector<std::int64_t> quot(num.size() - dsz + 1, 0);
  for (std::size_t i = num.size(); i-- > dsz - 1;) {
    std::int64_t c = num[i];
    quot[i - (dsz - 1)] = c;
    for (std::size_t j = 0; j < dsz; ++j)
      num[i - (dsz - 1) + j] -= c * den[j];
  }
  return quot;
}

std::vector<std::int64_t> const &
cyclotomic_polynomial_locked(int n, std::map<int, std::vector<std::int64_t>> &cache)
{
  if (auto it = cache.find(n); it != cache.end())
    return it->second;

  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0)
      poly = divide_exact(std::move(poly), cyclotomic_polynomial_locked(d, cache));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

} // namespace

std::vector<std::int64_t> const &cyclotomic_polynomial(int n)
{
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;

  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_polynomial_locked(n, cache);
}

// --- Cyclotomic -------------------------------------------------------------

Cyclotomic::Cyclotomic(std::int64_t value)
: _conductor(1), _coeffs{value}
{}

Cyclotomic::Cyclotomic(int conductor, std::vector<std::int64_t> coeffs)
: _conductor(conductor), _coeffs(std::move(coeffs))
{
  reduce_in_place(_coeffs, _conductor);
  if (_conductor != 1 && is_rational()) {
    std::int64_t c = _coeffs.empty() ? 0 : _coeffs[0];
    _conductor = 1;
    _coeffs = {c};
  }
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, std::int64_t k)
{
  check_conductor(conductor);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(conductor), 0);
  k %= conductor;
  if (k < 0)
    k += conductor;
  coeffs[static_cast<std::size_t>(k)] = 1;
  return Cyclotomic(conductor, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_exponents(int conductor, std::span<std::int64_t const> coeffs)
{
  check_conductor(conductor);
  std::vector<std::int64_t> v(static_cast<std::size_t>(conductor), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    auto &slot = v[k % static_cast<std::size_t>(conductor)];
    slot = checked_add(slot, coeffs[k]);
  }
  return Cyclotomic(conductor, std::move(v));
}

bool Cyclotomic::is_zero() const
{
  return std::all_of(_coeffs.begin(), _coeffs.end(), [](auto c) { return c == 0; });
}

bool Cyclotomic::is_rational() const
{
  return std::all_of(_coeffs.begin() + (_coeffs.empty() ? 0 : 1), _coeffs.end(),
                     [](auto c) { return c == 0; });
}

std::int64_t Cyclotomic::to_rational_integer() const
{
  if (!is_rational())
    throw NotRational(to_string() + " is not a rational integer");
  return _coeffs.empty() ? 0 : _coeffs[0];
}

Cyclotomic Cyclotomic::galois_conjugate(std::int64_t k) const
{
  std::int64_t e = _conductor;
  if (std::gcd(k, e) != 1)
    throw NotCoprime("exponent " + std::to_string(k) + " is not coprime to " +
                     std::to_string(e));
  if (e == 1)
    return *this;

  k %= e;
  if (k < 0)
    k += e;
  std::vector<std::int64_t> v(static_cast<std::size_t>(e), 0);
  for (std::size_t i = 0; i < _coeffs.size(); ++i) {
    auto &slot = v[static_cast<std::size_t>((static_cast<std::int64_t>(i) * k) % e)];
    slot = checked_add(slot, _coeffs[i]);
  }
  return Cyclotomic(_conductor, std::move(v));
}

Cyclotomic Cyclotomic::lifted(int conductor) const
{
  if (conductor % _conductor != 0)
    throw InvalidSpec("cannot lift conductor " + std::to_string(_conductor) + " to " +
                      std::to_string(conductor));
  if (conductor == _conductor)
    return *this;
  CyclotomicSum sum(conductor);
  sum.add(*this);
  auto res = sum.value();
  return res;
}

std::string Cyclotomic::to_string() const
{
  if (_conductor == 1)
    return std::to_string(_coeffs.empty() ? 0 : _coeffs[0]);

  std::string res;
  for (std::size_t i = 0; i < _coeffs.size(); ++i) {
    std::int64_t c = _coeffs[i];
    if (c == 0)
      continue;

    std::int64_t mag = c < 0 ? -c : c;
    if (res.empty())
      res += c < 0 ? "-" : "";
    else
      res += c < 0 ? " - " : " + ";

    if (i == 0) {
      res += std::to_string(mag);
    } else {
      if (mag != 1)
        res += std::to_string(mag) + "*";
      res += "z(" + std::to_string(_conductor) + ")^" + std::to_string(i);
    }
  }
  return res.empty() ? "0" : res;
}

Cyclotomic Cyclotomic::parse(std::string_view text)
{
  std::size_t pos = 0;
  auto fail = [&](std::string const &msg) -> ParseError {
    return ParseError("cyclotomic: " + msg, 1, pos + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto read_int = [&]() -> std::optional<std::int64_t> {
    std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = checked_add(checked_mul(v, 10), text[pos] - '0');
      ++pos;
    }
    if (pos == start)
      return std::nullopt;
    return v;
  };

  int conductor = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;  // (exponent, coefficient)

  skip_ws();
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first)
        throw fail("empty input");
      break;
    }

    std::int64_t sign = 1;
    if (text[pos] == '-' || text[pos] == '+') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    std::int64_t coeff = 1;
    bool has_coeff = false;
    if (auto v = read_int()) {
      coeff = *v;
      has_coeff = true;
      skip_ws();
    }

    bool has_root = false;
    if (pos < text.size() && text[pos] == '*') {
      if (!has_coeff)
        throw fail("unexpected '*'");
      ++pos;
      skip_ws();
      has_root = true;
    } else if (pos < text.size() && text[pos] == 'z') {
      has_root = true;
    }

    if (!has_root) {
      if (!has_coeff)
        throw fail("expected a term");
      terms.emplace_back(0, sign * coeff);
      continue;
    }

    if (text.substr(pos, 2) != "z(")
      throw fail("expected 'z('");
    pos += 2;
    auto e = read_int();
    if (!e || *e < 1)
      throw fail("expected a conductor");
    if (pos >= text.size() || text[pos] != ')')
      throw fail("expected ')'");
    ++pos;
    if (pos >= text.size() || text[pos] != '^')
      throw fail("expected '^'");
    ++pos;
    auto k = read_int();
    if (!k)
      throw fail("expected an exponent");

    if (conductor != 1 && *e != conductor)
      throw fail("mixed conductors");
    check_conductor(*e);
    conductor = static_cast<int>(*e);
    terms.emplace_back(*k, sign * coeff);
  }

  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(conductor), 0);
  for (auto [k, c] : terms) {
    auto &slot = coeffs[static_cast<std::size_t>(k % conductor)];
    slot = checked_add(slot, c);
  }
  return from_exponents(conductor, coeffs);
}

Cyclotomic operator+(Cyclotomic const &a, Cyclotomic const &b)
{
  CyclotomicSum sum(lcm_conductor(a._conductor, b._conductor));
  sum.add(a);
  sum.add(b);
  return sum.value();
}

Cyclotomic operator-(Cyclotomic const &a, Cyclotomic const &b)
{
  CyclotomicSum sum(lcm_conductor(a._conductor, b._conductor));
  sum.add(a);
  sum.add(b, -1);
  return sum.value();
}

Cyclotomic operator*(Cyclotomic const &a, Cyclotomic const &b)
{
  CyclotomicSum sum(lcm_conductor(a._conductor, b._conductor));
  sum.add_product(a, b);
  return sum.value();
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic res = *this;
  for (auto &c : res._coeffs)
    c = checked_mul(c, -1);
  return res;
}

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a._conductor == b._conductor)
    return a._coeffs == b._coeffs;
  return (a - b).is_zero();
}

std::strong_ordering canonical_order(Cyclotomic const &a, Cyclotomic const &b)
{
  if (auto c = a.conductor() <=> b.conductor(); c != 0)
    return c;
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

// --- CyclotomicSum ----------------------------------------------------------

CyclotomicSum::CyclotomicSum(int conductor)
: _conductor(conductor)
{
  check_conductor(conductor);
  _acc.assign(static_cast<std::size_t>(conductor), 0);
}

int CyclotomicSum::step_for(Cyclotomic const &a) const
{
  if (_conductor % a.conductor() != 0)
    throw InvalidSpec("operand conductor " + std::to_string(a.conductor()) +
                      " does not divide " + std::to_string(_conductor));
  return _conductor / a.conductor();
}

void CyclotomicSum::add(Cyclotomic const &a, std::int64_t scale)
{
  auto step = static_cast<std::size_t>(step_for(a));
  auto coeffs = a.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) {
      auto &slot = _acc[i * step];
      slot = checked_add(slot, checked_mul(coeffs[i], scale));
    }
  }
}

void CyclotomicSum::add_product(Cyclotomic const &a, Cyclotomic const &b,
                                std::int64_t scale)
{
  auto sa = static_cast<std::size_t>(step_for(a));
  auto sb = static_cast<std::size_t>(step_for(b));
  auto e = static_cast<std::size_t>(_conductor);
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0)
      continue;
    std::int64_t ci = checked_mul(ca[i], scale);
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0)
        continue;
      auto &slot = _acc[(i * sa + j * sb) % e];
      slot = checked_add(slot, checked_mul(ci, cb[j]));
    }
  }
}

Cyclotomic CyclotomicSum::value() const
{ return Cyclotomic(_conductor, _acc); }

} // namespace frobdiam
