#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lieord/bigint.hpp"

namespace lieord {

/// Dense integer polynomial, constant term first. The zero polynomial has no
/// coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);

  static IntPoly monomial(unsigned degree, const BigInt& coefficient = 1);
  /// x^d - 1
  static IntPoly power_minus_one(unsigned d);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(unsigned i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt operator()(const BigInt& x) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Quotient by a monic divisor; nullopt when the remainder is nonzero.
  std::optional<IntPoly> exact_div(const IntPoly& monic_divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::uint64_t totient(std::uint64_t n);
/// Ascending list of positive divisors.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// The n-th cyclotomic polynomial. Memoized; safe to call concurrently.
const IntPoly& cyclotomic(unsigned n);

/// A product of cyclotomic polynomials, stored as index -> multiplicity.
class CycloProduct {
 public:
  CycloProduct() = default;
  CycloProduct(std::initializer_list<std::pair<const int, int>> exps);
  explicit CycloProduct(std::map<int, int> exps);

  static CycloProduct phi(int d, int multiplicity = 1);

  const std::map<int, int>& exponents() const { return exps_; }
  int exponent(int d) const;
  bool empty() const { return exps_.empty(); }
  /// sum of multiplicity * totient(index)
  int degree() const;
  std::set<int> indices() const;

  CycloProduct& operator*=(const CycloProduct& other);
  friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }
  /// Exact quotient; nullopt when other does not divide *this.
  std::optional<CycloProduct> divide(const CycloProduct& other) const;
  bool divisible_by(const CycloProduct& other) const;
  /// Drops the factor of the given index entirely.
  CycloProduct without(int d) const;
  void add(int d, int multiplicity);

  IntPoly expand() const;
  /// e.g. "P1^2*P3"; "1" for the empty product.
  std::string to_string() const;

  friend auto operator<=>(const CycloProduct&, const CycloProduct&) = default;
  friend bool operator==(const CycloProduct&, const CycloProduct&) = default;

 private:
  std::map<int, int> exps_;
};

/// x^d - 1 = prod_{e | d} Phi_e
CycloProduct factor_power_minus_one(int d);
/// x^d + 1 = prod over e | 2d, e not dividing d
CycloProduct factor_power_plus_one(int d);

BigInt eval_cyclo_product(const CycloProduct& p, const BigInt& q);

/// Factor a monic polynomial known to be a product of cyclotomic polynomials.
/// nullopt if it is not such a product.
std::optional<CycloProduct> cyclotomic_factorization(const IntPoly& poly);

/// Same, starting from int64 coefficients (constant term first).
std::optional<CycloProduct> cyclotomic_factorization(std::span<const std::int64_t> coefficients);

}  // namespace lieord
