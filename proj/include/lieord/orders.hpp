#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lieord/cyclotomic.hpp"
#include "lieord/types.hpp"

namespace lieord {

/// q^N * prod (q^d - 1), kept symbolic.
struct FactoredOrder {
  BigInt q;
  BigInt p;
  unsigned t = 0;  // q = p^t
  int n_exp = 0;
  DegreeMultiset degrees;

  BigInt value() const;
  /// prod over degrees of x^d - 1 as cyclotomic exponents.
  CycloProduct cyclotomic_part() const;
  /// e.g. "q^6*(q^2-1)*(q^6-1)" with q written out.
  std::string to_string() const;
};

/// (p, t) with q = p^t; DomainError if q is not a prime power.
std::pair<BigInt, unsigned> require_prime_power(const BigInt& q);

FactoredOrder order_factored(const SemisimpleType& t, const BigInt& q);
BigInt order_value(const SemisimpleType& t, const BigInt& q);

/// Equal degree multisets, hence equal orders over every finite field.
bool same_order_all_extensions(const SemisimpleType& t1, const SemisimpleType& t2);

struct LargestPowerWitness {
  bool p_is_largest = false;
  BigInt p_part;  // q^N
  BigInt other_prime;  // prime of the largest prime power in the prime-to-p part (0 if that part is 1)
  unsigned other_exponent = 0;
  BigInt other_part;  // other_prime^other_exponent (1 if none)
};

/// Compares q^N with the largest prime power dividing prod (q^d - 1). The
/// prime-to-p part is factored one cyclotomic value Phi_e(q) at a time.
LargestPowerWitness p_contribution_is_largest(const SemisimpleType& t, const BigInt& q);

/// A1 over q in {8, 9}, q = 2^r with 2^r + 1 prime, or q = p prime with
/// p = 2^s +- 1; B2 over 3.
bool in_exception_list(const SimpleType& t, const BigInt& q);

struct FieldDeterminationReport {
  BigInt order1;
  BigInt order2;
  bool orders_equal = false;
  bool q_equal = false;
  bool degrees_equal = false;
  std::vector<std::string> trail;

  /// Equal orders force equal q and equal degrees.
  bool holds() const { return !orders_equal || (q_equal && degrees_equal); }
};

/// q1 and q2 must be powers of one prime (DomainError otherwise).
FieldDeterminationReport check_field_determination(const SemisimpleType& t1, const BigInt& q1, const SemisimpleType& t2,
                                                   const BigInt& q2);

/// All (t, q) with rank(t) <= rank_bound and order_value(t, q) = m, sorted.
std::vector<std::pair<SemisimpleType, BigInt>> recognize_order(const BigInt& m, int rank_bound);

struct OrderCollision {
  SemisimpleType t1;
  BigInt q1;
  SemisimpleType t2;
  BigInt q2;
  BigInt order;
};

/// Pairs of (type, q) over different characteristics with equal order, for
/// rank <= rank_bound and prime powers q <= q_bound.
std::vector<OrderCollision> cross_characteristic_collisions(int rank_bound, const BigInt& q_bound);

/// Prime powers 2 <= q <= bound, ascending.
std::vector<BigInt> prime_powers_up_to(const BigInt& bound);

}  // namespace lieord
