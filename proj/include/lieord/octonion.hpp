#pragma once

#include <array>
#include <string>

namespace lieord {

/// 2x2 matrix over a scalar field F (see field.hpp).
template <class F>
struct Mat2 {
  F a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 zero(const F& like) { return {like.make(0), like.make(0), like.make(0), like.make(0)}; }
  static Mat2 identity(const F& like) { return {like.make(1), like.make(0), like.make(0), like.make(1)}; }

  F det() const { return a * d - b * c; }
  /// Adjugate [[d, -b], [-c, a]].
  Mat2 bar() const { return {d, -b, -c, a}; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const F& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Split octonion as a Zorn pair (x, y) of 2x2 matrices.
template <class F>
struct Octonion {
  Mat2<F> x;
  Mat2<F> y;

  static Octonion zero(const F& like) { return {Mat2<F>::zero(like), Mat2<F>::zero(like)}; }
  static Octonion unit(const F& like) { return {Mat2<F>::identity(like), Mat2<F>::zero(like)}; }
  static Octonion scalar(const F& s) { return {s * Mat2<F>::identity(s), Mat2<F>::zero(s)}; }

  /// Coordinates x.a, x.b, x.c, x.d, y.a, y.b, y.c, y.d.
  std::array<F, 8> coordinates() const { return {x.a, x.b, x.c, x.d, y.a, y.b, y.c, y.d}; }
  static Octonion from_coordinates(const std::array<F, 8>& v) {
    return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
  }
  /// Basis vector k (0..7) of the coordinate order above.
  static Octonion basis(int k, const F& like) {
    std::array<F, 8> v{like.make(0), like.make(0), like.make(0), like.make(0),
                       like.make(0), like.make(0), like.make(0), like.make(0)};
    v[static_cast<std::size_t>(k)] = like.make(1);
    return from_coordinates(v);
  }

  friend Octonion operator+(const Octonion& p, const Octonion& q) { return {p.x + q.x, p.y + q.y}; }
  friend Octonion operator-(const Octonion& p, const Octonion& q) { return {p.x - q.x, p.y - q.y}; }
  friend Octonion operator-(const Octonion& p) { return {-p.x, -p.y}; }
  friend Octonion operator*(const F& s, const Octonion& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Octonion&, const Octonion&) = default;
};

/// (x, y)(u, v) = (xu + bar(v) y, v x + y bar(u))
template <class F>
Octonion<F> oct_mul(const Octonion<F>& p, const Octonion<F>& q) {
  return {p.x * q.x + q.y.bar() * p.y, q.y * p.x + p.y * q.x.bar()};
}

/// det(x) - det(y)
template <class F>
F oct_norm(const Octonion<F>& p) {
  return p.x.det() - p.y.det();
}

/// (x, y) -> (bar(x), -y)
template <class F>
Octonion<F> oct_conj(const Octonion<F>& p) {
  return {p.x.bar(), -p.y};
}

/// Half the trace a + conj(a), i.e. the coefficient of the unit.
template <class F>
F oct_scalar_part(const Octonion<F>& p) {
  return (p.x.a + p.x.d) / p.x.a.make(2);
}

/// Bilinear form polar to N: N(p + q) - N(p) - N(q).
template <class F>
F oct_polar(const Octonion<F>& p, const Octonion<F>& q) {
  return oct_norm(p + q) - oct_norm(p) - oct_norm(q);
}

}  // namespace lieord
