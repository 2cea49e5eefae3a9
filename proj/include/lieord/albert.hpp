#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lieord/errors.hpp"
#include "lieord/octonion.hpp"

namespace lieord {

/// Gamma-hermitian 3x3 octonion matrix: X_ij = g_i^{-1} g_j conj(X_ji).
/// All nine entries are stored; construction checks the invariant.
template <class F>
class AlbertElement {
 public:
  using Matrix = std::array<Octonion<F>, 9>;

  AlbertElement(Matrix m, std::array<F, 3> gamma) : m_(std::move(m)), gamma_(std::move(gamma)) {
    for (const auto& g : gamma_) {
      if (g.is_zero()) throw DomainError("gamma entries must be nonzero");
    }
    if (!is_hermitian()) throw DomainError("matrix is not fixed by the gamma involution");
  }

  /// [[x1, c3, g1^-1 g3 conj(c2)], [g2^-1 g1 conj(c3), x2, c1], [c2, g3^-1 g2 conj(c1), x3]]
  static AlbertElement make(const std::array<F, 3>& gamma, const std::array<F, 3>& x,
                            const std::array<Octonion<F>, 3>& c) {
    for (const auto& g : gamma) {
      if (g.is_zero()) throw DomainError("gamma entries must be nonzero");
    }
    const auto& [g1, g2, g3] = gamma;
    Matrix m{Octonion<F>::scalar(x[0]),
             c[2],
             (g3 / g1) * oct_conj(c[1]),
             (g1 / g2) * oct_conj(c[2]),
             Octonion<F>::scalar(x[1]),
             c[0],
             c[1],
             (g2 / g3) * oct_conj(c[0]),
             Octonion<F>::scalar(x[2])};
    return AlbertElement(std::move(m), gamma);
  }

  static AlbertElement identity(const std::array<F, 3>& gamma) {
    const F& like = gamma[0];
    const auto z = Octonion<F>::zero(like);
    return make(gamma, {like.make(1), like.make(1), like.make(1)}, {z, z, z});
  }

  const Octonion<F>& operator()(int i, int j) const { return m_[static_cast<std::size_t>(3 * i + j)]; }
  const Matrix& entries() const { return m_; }
  const std::array<F, 3>& gamma() const { return gamma_; }

  F x(int i) const { return oct_scalar_part((*this)(i, i)); }
  /// c1 = X(2,3), c2 = X(3,1), c3 = X(1,2) in 1-based positions.
  const Octonion<F>& c(int k) const {
    static constexpr int rows[3] = {1, 2, 0};
    static constexpr int cols[3] = {2, 0, 1};
    return (*this)(rows[k - 1], cols[k - 1]);
  }

  bool is_hermitian() const {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if ((*this)(i, j) != (gamma_[j] / gamma_[i]) * oct_conj((*this)(j, i))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const AlbertElement&, const AlbertElement&) = default;

 private:
  Matrix m_;
  std::array<F, 3> gamma_;
};

/// Plain 3x3 octonion matrix product (no hermitian requirement on the result).
template <class F>
std::array<Octonion<F>, 9> octonion_matrix_product(const std::array<Octonion<F>, 9>& a,
                                                   const std::array<Octonion<F>, 9>& b) {
  const F like = a[0].x.a;
  std::array<Octonion<F>, 9> out{Octonion<F>::zero(like), Octonion<F>::zero(like), Octonion<F>::zero(like),
                                 Octonion<F>::zero(like), Octonion<F>::zero(like), Octonion<F>::zero(like),
                                 Octonion<F>::zero(like), Octonion<F>::zero(like), Octonion<F>::zero(like)};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) out[3 * i + j] = out[3 * i + j] + oct_mul(a[3 * i + k], b[3 * k + j]);
    }
  }
  return out;
}

/// Jordan product (XY + YX) / 2.
template <class F>
AlbertElement<F> albert_mul(const AlbertElement<F>& X, const AlbertElement<F>& Y) {
  if (X.gamma() != Y.gamma()) throw DomainError("Albert elements with different gamma");
  const auto xy = octonion_matrix_product(X.entries(), Y.entries());
  const auto yx = octonion_matrix_product(Y.entries(), X.entries());
  const F half = X.gamma()[0].make(2).inverse();
  typename AlbertElement<F>::Matrix m = xy;
  for (std::size_t k = 0; k < 9; ++k) m[k] = half * (xy[k] + yx[k]);
  return AlbertElement<F>(std::move(m), X.gamma());
}

/// Sum of the diagonal scalars.
template <class F>
F albert_trace(const AlbertElement<F>& X) {
  return X.x(0) + X.x(1) + X.x(2);
}

/// Q(X) = tr(X^2) / 2 via the associative square.
template <class F>
F albert_q_trace(const AlbertElement<F>& X) {
  const auto sq = octonion_matrix_product(X.entries(), X.entries());
  F t = oct_scalar_part(sq[0]) + oct_scalar_part(sq[4]) + oct_scalar_part(sq[8]);
  return t / t.make(2);
}

/// (x1^2 + x2^2 + x3^2) / 2 + g2/g3 N(c1) + g3/g1 N(c2) + g1/g2 N(c3)
template <class F>
F albert_q_formula(const AlbertElement<F>& X) {
  const auto& [g1, g2, g3] = X.gamma();
  const F x1 = X.x(0), x2 = X.x(1), x3 = X.x(2);
  return (x1 * x1 + x2 * x2 + x3 * x3) / x1.make(2) + (g2 / g3) * oct_norm(X.c(1)) + (g3 / g1) * oct_norm(X.c(2)) +
         (g1 / g2) * oct_norm(X.c(3));
}

/// Q computed both ways; throws if they disagree.
template <class F>
F albert_q(const AlbertElement<F>& X) {
  F a = albert_q_trace(X);
  if (!(a == albert_q_formula(X))) throw Error("the two evaluations of Q disagree");
  return a;
}

/// Bilinear form <X, Y> = tr(X x Y).
template <class F>
F albert_pairing(const AlbertElement<F>& X, const AlbertElement<F>& Y) {
  return albert_trace(albert_mul(X, Y));
}

/// diag(0, 0, 1)
template <class F>
AlbertElement<F> albert_idempotent_u(const std::array<F, 3>& gamma) {
  const F& like = gamma[0];
  const auto z = Octonion<F>::zero(like);
  return AlbertElement<F>::make(gamma, {like.make(0), like.make(0), like.make(1)}, {z, z, z});
}

template <class F>
void require_rank_one_gamma(const std::array<F, 3>& gamma) {
  const F& like = gamma[0];
  if (!(gamma[0] == like.make(1) && gamma[1] == like.make(-1) && gamma[2] == like.make(1))) {
    throw DomainError("E0 is defined here for gamma = (1, -1, 1) only");
  }
}

/// [[x, c, 0], [-conj(c), -x, 0], [0, 0, 0]] for gamma = (1, -1, 1).
template <class F>
AlbertElement<F> e0_element(const F& x, const Octonion<F>& c) {
  const std::array<F, 3> gamma{x.make(1), x.make(-1), x.make(1)};
  const auto z = Octonion<F>::zero(x);
  return AlbertElement<F>::make(gamma, {x, -x, x.make(0)}, {z, z, c});
}

/// The nine elements (1, 0) and (0, e_k) of E0.
template <class F>
std::vector<AlbertElement<F>> e0_basis(const std::array<F, 3>& gamma) {
  require_rank_one_gamma(gamma);
  const F& like = gamma[0];
  std::vector<AlbertElement<F>> out;
  out.push_back(e0_element(like.make(1), Octonion<F>::zero(like)));
  for (int k = 0; k < 8; ++k) out.push_back(e0_element(like.make(0), Octonion<F>::basis(k, like)));
  return out;
}

/// x^2 - N(c)
template <class F>
F e0_form(const F& x, const Octonion<F>& c) {
  return x * x - oct_norm(c);
}

/// <X, 1> = <X, u> = 0 and u x X = 0.
template <class F>
bool in_e0(const AlbertElement<F>& X) {
  const auto one = AlbertElement<F>::identity(X.gamma());
  const auto u = albert_idempotent_u(X.gamma());
  const F zero = X.gamma()[0].make(0);
  const auto z = Octonion<F>::zero(zero);
  const auto null = AlbertElement<F>::make(X.gamma(), {zero, zero, zero}, {z, z, z});
  return albert_pairing(X, one) == zero && albert_pairing(X, u) == zero && albert_mul(u, X) == null;
}

/// Rank of the 72-coordinate vectors of the given elements (Gaussian elimination).
template <class F>
int albert_rank(const std::vector<AlbertElement<F>>& elements) {
  if (elements.empty()) return 0;
  std::vector<std::vector<F>> rows;
  for (const auto& e : elements) {
    std::vector<F> row;
    for (const auto& o : e.entries()) {
      for (const auto& v : o.coordinates()) row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (!pivot) continue;
    std::swap(rows[*pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col].is_zero()) continue;
      const F factor = rows[r][col] / prow[col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] = rows[r][k] - factor * prow[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace lieord
