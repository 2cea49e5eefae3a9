#include "lieord/rootsystem.hpp"

#include "lieord/errors.hpp"

namespace lieord {

IntMatrix::IntMatrix(int n, std::vector<std::int64_t> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n) * n) throw DomainError("matrix entry count does not match size");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n_ != y.n_) throw DomainError("matrix size mismatch");
  IntMatrix z(x.n_);
  for (int i = 0; i < x.n_; ++i) {
    for (int k = 0; k < x.n_; ++k) {
      const std::int64_t xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < x.n_; ++j) z(i, j) += xik * y(k, j);
    }
  }
  return z;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

int IntMatrix::order(int limit) const {
  IntMatrix p = *this;
  for (int k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
  return 0;
}

IntMatrix cartan_matrix(const SimpleType& t) {
  const int n = t.rank();
  IntMatrix c(n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto bond = [&](int i, int j) {  // simple bond between 1-based nodes
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  switch (t.letter()) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      // alpha_n short
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case 'G':
      // alpha_1 short, alpha_2 long
      c(0, 1) = -1;
      c(1, 0) = -3;
      break;
    case 'F':
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(1, 2);
      bond(3, 4);
      c(1, 2) = -1;
      c(2, 1) = -2;
      break;
    case 'E':
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < n; ++i) bond(i, i + 1);
      break;
    default:
      throw DomainError("no Cartan matrix for " + t.render());
  }
  return c;
}

std::vector<IntMatrix> reflection_generators(const SimpleType& t) {
  const IntMatrix c = cartan_matrix(t);
  const int n = t.rank();
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) s(i, j) -= c(i, j);
    gens.push_back(std::move(s));
  }
  return gens;
}

std::vector<IntMatrix> reflection_generators(const SemisimpleType& t) {
  const int n = t.rank();
  std::vector<IntMatrix> gens;
  int offset = 0;
  for (const auto& f : t.factors()) {
    for (const auto& block : reflection_generators(f)) {
      IntMatrix g = IntMatrix::identity(n);
      for (int i = 0; i < f.rank(); ++i) {
        for (int j = 0; j < f.rank(); ++j) g(offset + i, offset + j) = block(i, j);
      }
      gens.push_back(std::move(g));
    }
    offset += f.rank();
  }
  return gens;
}

int expected_braid_order(const IntMatrix& cartan, int i, int j) {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw DomainError("not a finite-type Cartan matrix");
  }
}

}  // namespace lieord
