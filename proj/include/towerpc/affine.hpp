#pragma once

#include <array>
#include <sstream>
#include <string>

#include "towerpc/errors.hpp"
#include "towerpc/int_types.hpp"

namespace towerpc {

using Vec3Q = std::array<Rat, 3>;
using Mat3Q = std::array<std::array<Rat, 3>, 3>;

// An exact-rational affine self-map of 3-space, x -> A x + t. Used as the
// independent oracle for the height-3 families: no floating point anywhere.
//
// Composition convention, fixed globally: the group product g*h acts as the
// map composition g after h (apply h first).
struct AffineMapQ3 {
  Mat3Q a{};
  Vec3Q t{};

  static AffineMapQ3 identity() {
    AffineMapQ3 m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
    return m;
  }

  static AffineMapQ3 translation(Rat x, Rat y, Rat z) {
    AffineMapQ3 m = identity();
    m.t = {std::move(x), std::move(y), std::move(z)};
    return m;
  }

  Vec3Q apply(const Vec3Q& v) const {
    Vec3Q r{};
    for (int i = 0; i < 3; ++i) {
      r[i] = t[i];
      for (int j = 0; j < 3; ++j) r[i] += a[i][j] * v[j];
    }
    return r;
  }

  // this after other
  AffineMapQ3 compose(const AffineMapQ3& other) const {
    AffineMapQ3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        r.a[i][j] = 0;
        for (int k = 0; k < 3; ++k) r.a[i][j] += a[i][k] * other.a[k][j];
      }
    r.t = apply(other.t);
    return r;
  }

  Rat det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }

  AffineMapQ3 inverse() const {
    const Rat d = det();
    if (d == 0) throw PreconditionError("affine map is singular");
    AffineMapQ3 r;
    // adjugate / det
    r.a[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / d;
    r.a[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / d;
    r.a[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / d;
    r.a[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / d;
    r.a[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / d;
    r.a[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / d;
    r.a[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / d;
    r.a[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / d;
    r.a[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / d;
    for (int i = 0; i < 3; ++i) {
      r.t[i] = 0;
      for (int j = 0; j < 3; ++j) r.t[i] -= r.a[i][j] * t[j];
    }
    return r;
  }

  AffineMapQ3 pow(const Int& k) const {
    if (k == 0) return identity();
    if (k < 0) return inverse().pow(-k);
    AffineMapQ3 base = *this;
    AffineMapQ3 acc = identity();
    Int m = k;
    while (m > 0) {
      if ((m & 1) != 0) acc = acc.compose(base);
      m >>= 1;
      if (m > 0) base = base.compose(base);
    }
    return acc;
  }

  bool is_identity() const { return *this == identity(); }

  bool operator==(const AffineMapQ3&) const = default;

  // "linear = [[1,0,0],[0,-1,0],[0,-1/2,-1]] ; translation = (1/2,0,0)"
  std::string str() const {
    std::ostringstream out;
    out << "linear = [";
    for (int i = 0; i < 3; ++i) {
      if (i) out << ',';
      out << '[';
      for (int j = 0; j < 3; ++j) {
        if (j) out << ',';
        out << a[i][j];
      }
      out << ']';
    }
    out << "] ; translation = (" << t[0] << ',' << t[1] << ',' << t[2] << ')';
    return out.str();
  }
};

}  // namespace towerpc
