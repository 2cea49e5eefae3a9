#pragma once

#include <cstdint>
#include <vector>

#include "lieord/types.hpp"

namespace lieord {

/// Small dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(int n, std::vector<std::int64_t> entries);
  static IntMatrix identity(int n);

  int size() const { return n_; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::int64_t>& entries() const { return a_; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  bool is_identity() const;
  /// Smallest k >= 1 with M^k = I, or 0 if none up to `limit`.
  int order(int limit = 1000) const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Cartan matrix in Bourbaki labelling with entry (i, j) = <alpha_j, alpha_i^vee>.
IntMatrix cartan_matrix(const SimpleType& t);

/// Simple reflections acting on the root lattice: s_i(alpha_j) = alpha_j - c(j, i) alpha_i.
/// Column j of each matrix holds the coordinates of the image of alpha_j.
std::vector<IntMatrix> reflection_generators(const SimpleType& t);

/// Block-diagonal generators of a semisimple type (one block per factor).
std::vector<IntMatrix> reflection_generators(const SemisimpleType& t);

/// Coxeter matrix entry m_ij implied by the Cartan matrix: 2, 3, 4 or 6.
int expected_braid_order(const IntMatrix& cartan, int i, int j);

}  // namespace lieord
