#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wordkit/errors.hpp"
#include "wordkit/exact.hpp"

namespace wordkit {

// Rational quaternion a + bi + cj + dk with i^2 = j^2 = -1, ij = -ji = k.
// Nonzero elements are invertible, so this is a division algebra whose
// center is the scalars.
struct quaternion {
  rational a, b, c, d;

  static quaternion scalar(rational v) { return {std::move(v), 0, 0, 0}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_scalar() const { return b == 0 && c == 0 && d == 0; }

  quaternion conjugate() const { return {a, -b, -c, -d}; }
  rational norm() const { return a * a + b * b + c * c + d * d; }

  quaternion inverse() const {
    if (is_zero())
      throw parameter_error("the zero quaternion has no inverse");
    const rational n = norm();
    return {a / n, -b / n, -c / n, -d / n};
  }

  friend quaternion operator+(const quaternion& x, const quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend quaternion operator-(const quaternion& x, const quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend quaternion operator*(const quaternion& x, const quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  friend bool operator==(const quaternion& x, const quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Monic polynomial over the rationals, coefficients ascending by power,
// leading coefficient 1.
struct minimal_polynomial {
  std::vector<rational> coefficients;

  std::size_t degree() const { return coefficients.size() - 1; }
};

inline quaternion evaluate(const minimal_polynomial& poly,
                           const quaternion& x) {
  quaternion acc = quaternion::scalar(poly.coefficients.back());
  for (std::size_t k = poly.coefficients.size() - 1; k-- > 0;)
    acc = acc * x + quaternion::scalar(poly.coefficients[k]);
  return acc;
}

// X - a for central elements; otherwise X^2 - 2aX + (a^2+b^2+c^2+d^2),
// which x satisfies since x + conj(x) = 2a and x*conj(x) = norm(x). The
// substitution is re-done exactly before returning.
inline minimal_polynomial quaternion_min_poly(const quaternion& x) {
  minimal_polynomial poly;
  if (x.is_scalar())
    poly.coefficients = {-x.a, 1};
  else
    poly.coefficients = {x.norm(), -2 * x.a, 1};
  if (!evaluate(poly, x).is_zero())
    throw error("minimal polynomial fails to annihilate its input");
  return poly;
}

// Dimension over the rationals of the span of the given quaternions, by
// exact Gaussian elimination on their coordinate vectors.
inline std::size_t rank_over_rationals(std::span<const quaternion> elements) {
  std::vector<std::vector<rational>> rows;
  for (const quaternion& x : elements)
    rows.push_back({x.a, x.b, x.c, x.d});
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 4 && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t cc = col; cc < 4; ++cc)
        rows[r][cc] -= factor * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace wordkit
