#include "lieord/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "lieord/errors.hpp"

namespace lieord {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly IntPoly::monomial(unsigned degree, const BigInt& coefficient) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = coefficient;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::power_minus_one(unsigned d) {
  std::vector<BigInt> c(d + 1);
  c[0] = -1;
  c[d] += 1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

std::optional<IntPoly> IntPoly::exact_div(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1) throw DomainError("exact_div requires a monic divisor");
  if (is_zero()) return IntPoly{};
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<BigInt> quot(degree() - dd + 1);
  for (int i = degree(); i >= dd; --i) {
    const BigInt c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  for (int i = 0; i < dd; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw DomainError("totient of 0");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors of 0");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::unordered_map<unsigned, std::unique_ptr<IntPoly>> polys;
};

CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

}  // namespace

const IntPoly& cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic polynomial index must be >= 1");
  auto& cache = cyclotomic_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.polys.find(n); it != cache.polys.end()) return *it->second;
  }
  // Phi_n = (x^n - 1) / prod_{e | n, e < n} Phi_e
  IntPoly poly = IntPoly::power_minus_one(n);
  for (std::uint64_t e : divisors(n)) {
    if (e == n) break;
    auto q = poly.exact_div(cyclotomic(static_cast<unsigned>(e)));
    if (!q) throw std::logic_error("cyclotomic division failed");
    poly = std::move(*q);
  }
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.polys.try_emplace(n, std::make_unique<IntPoly>(std::move(poly)));
  return *it->second;
}

CycloProduct::CycloProduct(std::initializer_list<std::pair<const int, int>> exps) {
  for (const auto& [d, t] : exps) add(d, t);
}

CycloProduct::CycloProduct(std::map<int, int> exps) {
  for (const auto& [d, t] : exps) add(d, t);
}

CycloProduct CycloProduct::phi(int d, int multiplicity) {
  CycloProduct p;
  p.add(d, multiplicity);
  return p;
}

void CycloProduct::add(int d, int multiplicity) {
  if (d < 1) throw DomainError("cyclotomic index must be >= 1");
  if (multiplicity < 0) throw DomainError("cyclotomic multiplicity must be >= 0");
  if (multiplicity == 0) return;
  exps_[d] += multiplicity;
}

int CycloProduct::exponent(int d) const {
  auto it = exps_.find(d);
  return it == exps_.end() ? 0 : it->second;
}

int CycloProduct::degree() const {
  int total = 0;
  for (const auto& [d, t] : exps_) total += t * static_cast<int>(totient(d));
  return total;
}

std::set<int> CycloProduct::indices() const {
  std::set<int> out;
  for (const auto& [d, t] : exps_) out.insert(d);
  return out;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& other) {
  for (const auto& [d, t] : other.exps_) exps_[d] += t;
  return *this;
}

bool CycloProduct::divisible_by(const CycloProduct& other) const {
  for (const auto& [d, t] : other.exps_) {
    if (exponent(d) < t) return false;
  }
  return true;
}

std::optional<CycloProduct> CycloProduct::divide(const CycloProduct& other) const {
  if (!divisible_by(other)) return std::nullopt;
  CycloProduct out = *this;
  for (const auto& [d, t] : other.exps_) {
    auto it = out.exps_.find(d);
    it->second -= t;
    if (it->second == 0) out.exps_.erase(it);
  }
  return out;
}

CycloProduct CycloProduct::without(int d) const {
  CycloProduct out = *this;
  out.exps_.erase(d);
  return out;
}

IntPoly CycloProduct::expand() const {
  IntPoly acc(std::vector<BigInt>{1});
  for (const auto& [d, t] : exps_) {
    for (int k = 0; k < t; ++k) acc = acc * cyclotomic(static_cast<unsigned>(d));
  }
  return acc;
}

std::string CycloProduct::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [d, t] : exps_) {
    if (!out.empty()) out += "*";
    out += "P" + std::to_string(d);
    if (t != 1) out += "^" + std::to_string(t);
  }
  return out;
}

CycloProduct factor_power_minus_one(int d) {
  if (d < 1) throw DomainError("factor_power_minus_one requires d >= 1");
  CycloProduct p;
  for (std::uint64_t e : divisors(static_cast<std::uint64_t>(d))) p.add(static_cast<int>(e), 1);
  return p;
}

CycloProduct factor_power_plus_one(int d) {
  if (d < 1) throw DomainError("factor_power_plus_one requires d >= 1");
  CycloProduct p;
  for (std::uint64_t e : divisors(2 * static_cast<std::uint64_t>(d))) {
    if (static_cast<std::uint64_t>(d) % e != 0) p.add(static_cast<int>(e), 1);
  }
  return p;
}

BigInt eval_cyclo_product(const CycloProduct& p, const BigInt& q) {
  BigInt acc = 1;
  for (const auto& [d, t] : p.exponents()) {
    acc *= pow(cyclotomic(static_cast<unsigned>(d))(q), static_cast<unsigned>(t));
  }
  return acc;
}

std::optional<CycloProduct> cyclotomic_factorization(const IntPoly& poly) {
  if (poly.is_zero() || poly.leading() != 1) return std::nullopt;
  IntPoly rest = poly;
  CycloProduct out;
  // totient(d) >= sqrt(d / 2), so only d <= 2 deg^2 can occur
  const int deg = poly.degree();
  const int bound = 2 * deg * deg + 2;
  for (int d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (static_cast<int>(totient(d)) > rest.degree()) continue;
    const IntPoly& phi = cyclotomic(static_cast<unsigned>(d));
    while (rest.degree() >= phi.degree()) {
      auto q = rest.exact_div(phi);
      if (!q) break;
      rest = std::move(*q);
      out.add(d, 1);
    }
  }
  if (rest.degree() != 0 || rest.leading() != 1) return std::nullopt;
  return out;
}

std::optional<CycloProduct> cyclotomic_factorization(std::span<const std::int64_t> coefficients) {
  std::vector<BigInt> c(coefficients.begin(), coefficients.end());
  return cyclotomic_factorization(IntPoly(std::move(c)));
}

}  // namespace lieord
