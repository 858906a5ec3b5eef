#ifndef FROBDIAM_CYCLOTOMIC_HPP
#define FROBDIAM_CYCLOTOMIC_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frobdiam
{

/// Largest conductor any arithmetic result may have; exceeding it throws
/// ConductorOverflow.
int conductor_limit();
void set_conductor_limit(int limit);

int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> const &cyclotomic_polynomial(int n);

/// An element of Z[zeta_e] held exactly.
///
/// The canonical form is the remainder modulo the e-th cyclotomic polynomial:
/// phi(e) integer coefficients on 1, zeta_e, ..., zeta_e^(phi(e)-1). Rational
/// integers are always stored with conductor 1. Equality lifts both operands
/// to a common conductor, so values of different conductors compare by value.
/// All coefficient arithmetic is overflow-checked.
class Cyclotomic
{
public:
  Cyclotomic() : Cyclotomic(0) {}
  Cyclotomic(std::int64_t value);  // NOLINT: integers convert implicitly

  static Cyclotomic root_of_unity(int conductor, std::int64_t k);

  // `coeffs[k]` is the coefficient of zeta_e^k; any length is accepted and
  // exponents are taken modulo e.
  static Cyclotomic from_exponents(int conductor, std::span<std::int64_t const> coeffs);

  int conductor() const { return _conductor; }
  std::span<std::int64_t const> coefficients() const { return _coeffs; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws NotRational unless the value is a rational integer.
  std::int64_t to_rational_integer() const;

  // zeta_e -> zeta_e^k; throws NotCoprime unless gcd(k, e) = 1.
  Cyclotomic galois_conjugate(std::int64_t k) const;
  Cyclotomic complex_conjugate() const { return galois_conjugate(_conductor - 1); }

  // The same value written over a multiple of the conductor.
  Cyclotomic lifted(int conductor) const;

  // "c0 + c1*z(e)^1 + ..." with zero terms omitted; integers render plainly.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

  friend Cyclotomic operator+(Cyclotomic const &a, Cyclotomic const &b);
  friend Cyclotomic operator-(Cyclotomic const &a, Cyclotomic const &b);
  friend Cyclotomic operator*(Cyclotomic const &a, Cyclotomic const &b);
  Cyclotomic operator-() const;

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);

private:
  friend class CyclotomicSum;

  Cyclotomic(int conductor, std::vector<std::int64_t> coeffs);

  int _conductor = 1;
  std::vector<std::int64_t> _coeffs;
};

/// Total order on canonical forms (conductor first, then coefficients). Used
/// only for deterministic sorting; it is not compatible with the field order.
std::strong_ordering canonical_order(Cyclotomic const &a, Cyclotomic const &b);

/// Accumulates sums of (scaled) values and products over a fixed conductor in
/// Z[x]/(x^e - 1), reducing modulo the cyclotomic polynomial once at the end.
/// Operand conductors must divide the accumulator's conductor.
class CyclotomicSum
{
public:
  explicit CyclotomicSum(int conductor);

  void add(Cyclotomic const &a, std::int64_t scale = 1);
  void add_product(Cyclotomic const &a, Cyclotomic const &b, std::int64_t scale = 1);

  Cyclotomic value() const;
  int conductor() const { return _conductor; }

private:
  int step_for(Cyclotomic const &a) const;

  int _conductor;
  std::vector<std::int64_t> _acc;
};

} // namespace frobdiam

#endif // FROBDIAM_CYCLOTOMIC_HPP
