#include "lieord/orders.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lieord/errors.hpp"
#include "lieord/factor.hpp"

namespace lieord {

std::pair<BigInt, unsigned> require_prime_power(const BigInt& q) {
  auto pp = as_prime_power(q);
  if (!pp) throw DomainError("q = " + q.str() + " is not a prime power");
  return *pp;
}

BigInt FactoredOrder::value() const {
  BigInt v = pow(q, static_cast<unsigned>(n_exp));
  for (int d : degrees) v *= pow(q, static_cast<unsigned>(d)) - 1;
  return v;
}

CycloProduct FactoredOrder::cyclotomic_part() const {
  CycloProduct c;
  for (int d : degrees) c *= factor_power_minus_one(d);
  return c;
}

std::string FactoredOrder::to_string() const {
  std::string s = q.str() + "^" + std::to_string(n_exp);
  for (int d : degrees) s += "*(" + q.str() + "^" + std::to_string(d) + "-1)";
  return s;
}

FactoredOrder order_factored(const SemisimpleType& t, const BigInt& q) {
  auto [p, e] = require_prime_power(q);
  return {q, p, e, t.positive_root_count(), t.degrees()};
}

BigInt order_value(const SemisimpleType& t, const BigInt& q) { return order_factored(t, q).value(); }

bool same_order_all_extensions(const SemisimpleType& t1, const SemisimpleType& t2) {
  return t1.degrees() == t2.degrees();
}

LargestPowerWitness p_contribution_is_largest(const SemisimpleType& t, const BigInt& q) {
  const FactoredOrder order = order_factored(t, q);
  std::map<BigInt, unsigned> other;
  const CycloProduct part = order.cyclotomic_part();
  for (const auto& [e, k] : part.exponents()) {
    const BigInt value = cyclotomic(static_cast<unsigned>(e))(q);
    if (value < 2) continue;
    for (const auto& [prime, mult] : factorize(value)) other[prime] += mult * static_cast<unsigned>(k);
  }
  LargestPowerWitness w;
  w.p_part = pow(q, static_cast<unsigned>(order.n_exp));
  w.other_part = 1;
  w.other_prime = 0;
  if (!other.empty()) {
    auto [prime, exp] = largest_prime_power(other);
    w.other_prime = prime;
    w.other_exponent = exp;
    w.other_part = pow(prime, exp);
  }
  w.p_is_largest = w.p_part > w.other_part;
  return w;
}

namespace {

bool is_power_of_two(const BigInt& n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

bool in_exception_list(const SimpleType& t, const BigInt& q) {
  auto pp = as_prime_power(q);
  if (!pp) return false;
  if (t == SimpleType::make('B', 2)) return q == 3;
  if (t != SimpleType::make('A', 1)) return false;
  if (q == 8 || q == 9) return true;
  const auto& [p, e] = *pp;
  if (p == 2 && is_prime(q + 1)) return true;
  if (e == 1 && (is_power_of_two(q - 1) || is_power_of_two(q + 1))) return true;
  return false;
}

FieldDeterminationReport check_field_determination(const SemisimpleType& t1, const BigInt& q1, const SemisimpleType& t2,
                                                   const BigInt& q2) {
  const auto f1 = order_factored(t1, q1);
  const auto f2 = order_factored(t2, q2);
  if (f1.p != f2.p) throw DomainError("q1 and q2 must be powers of the same prime");
  FieldDeterminationReport r;
  r.order1 = f1.value();
  r.order2 = f2.value();
  r.orders_equal = r.order1 == r.order2;
  r.q_equal = q1 == q2;
  r.degrees_equal = f1.degrees == f2.degrees;
  r.trail.push_back("|" + t1.render() + "(F_" + q1.str() + ")| = " + f1.to_string() + " = " + r.order1.str());
  r.trail.push_back("|" + t2.render() + "(F_" + q2.str() + ")| = " + f2.to_string() + " = " + r.order2.str());
  if (!r.orders_equal) {
    r.trail.push_back("orders differ");
  } else {
    r.trail.push_back(std::string("orders equal; q ") + (r.q_equal ? "equal" : "DIFFERENT") + ", degrees " +
                      (r.degrees_equal ? "equal" : "DIFFERENT"));
  }
  return r;
}

namespace {

BigInt order_from_degrees(const DegreeMultiset& degs, const BigInt& q) {
  BigInt v = 1;
  for (int d : degs) v *= pow(q, static_cast<unsigned>(d - 1)) * (pow(q, static_cast<unsigned>(d)) - 1);
  return v;
}

}  // namespace

std::vector<std::pair<SemisimpleType, BigInt>> recognize_order(const BigInt& m, int rank_bound) {
  if (m < 2) throw DomainError("recognize_order requires m >= 2");
  // Types whose order at the smallest field already exceeds m are pruned.
  const auto catalogue = simple_types_up_to(rank_bound);
  std::map<DegreeMultiset, std::vector<SemisimpleType>> by_degrees;
  std::vector<SimpleType> chosen;
  std::function<void(std::size_t, int, const BigInt&)> extend = [&](std::size_t from, int budget,
                                                                    const BigInt& at_two) {
    if (!chosen.empty()) {
      SemisimpleType t(chosen);
      by_degrees[t.degrees()].push_back(t);
    }
    for (std::size_t i = from; i < catalogue.size(); ++i) {
      if (catalogue[i].rank() > budget) continue;
      const BigInt next = at_two * order_from_degrees(catalogue[i].degrees(), 2);
      if (next > m) continue;
      chosen.push_back(catalogue[i]);
      extend(i, budget - catalogue[i].rank(), next);
      chosen.pop_back();
    }
  };
  extend(0, rank_bound, 1);

  std::vector<std::pair<SemisimpleType, BigInt>> out;
  for (const auto& [degs, types] : by_degrees) {
    // order is strictly increasing in q
    BigInt lo = 2;
    BigInt hi = 2;
    while (order_from_degrees(degs, hi) < m) {
      lo = hi;
      hi *= 2;
    }
    while (lo < hi) {
      BigInt mid = (lo + hi) / 2;
      if (order_from_degrees(degs, mid) < m) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (order_from_degrees(degs, lo) != m || !as_prime_power(lo)) continue;
    for (const auto& t : types) {
      if (order_value(t, lo) != m) throw Error("recognize_order: verification failed for " + t.render());
      out.emplace_back(t, lo);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> prime_powers_up_to(const BigInt& bound) {
  std::vector<BigInt> out;
  for (BigInt q = 2; q <= bound; ++q) {
    if (as_prime_power(q)) out.push_back(q);
  }
  return out;
}

std::vector<OrderCollision> cross_characteristic_collisions(int rank_bound, const BigInt& q_bound) {
  std::map<BigInt, std::vector<std::pair<SemisimpleType, BigInt>>> by_order;
  const auto types = semisimple_types_up_to(rank_bound, simple_types_up_to(rank_bound));
  for (const auto& q : prime_powers_up_to(q_bound)) {
    for (const auto& t : types) by_order[order_value(t, q)].emplace_back(t, q);
  }
  std::vector<OrderCollision> out;
  for (const auto& [order, hits] : by_order) {
    for (std::size_t i = 0; i < hits.size(); ++i) {
      for (std::size_t j = i + 1; j < hits.size(); ++j) {
        if (require_prime_power(hits[i].second).first == require_prime_power(hits[j].second).first) continue;
        out.push_back({hits[i].first, hits[i].second, hits[j].first, hits[j].second, order});
      }
    }
  }
  return out;
}

}  // namespace lieord
