#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace focusopt {

using Vec3 = std::array<double, 3>;
using cplx = std::complex<double>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  return {a[0] / n, a[1] / n, a[2] / n};
}

/// Complex 3-vector with value semantics; the third component is kept
/// zero for planar (d = 2) data.
struct CVec3 {
  cplx v[3]{};

  cplx& operator[](int i) { return v[i]; }
  const cplx& operator[](int i) const { return v[i]; }

  friend CVec3 operator+(const CVec3& a, const CVec3& b) {
    return {{a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]}};
  }
  friend CVec3 operator-(const CVec3& a, const CVec3& b) {
    return {{a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2]}};
  }
  friend CVec3 operator*(double s, const CVec3& a) {
    return {{s * a.v[0], s * a.v[1], s * a.v[2]}};
  }
  friend CVec3 operator*(cplx s, const CVec3& a) {
    return {{s * a.v[0], s * a.v[1], s * a.v[2]}};
  }
};

inline cplx dot(const Vec3& a, const CVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Unconjugated euclidean pairing.
inline cplx dot(const CVec3& a, const CVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Conjugated pairing <a, b> = sum conj(a_i) b_i.
inline cplx cdot(const CVec3& a, const CVec3& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

inline double norm2(const CVec3& a) {
  return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
}

inline CVec3 cross(const Vec3& a, const CVec3& b) {
  return {{a[1] * b[2] - a[2] * b[1],
           a[2] * b[0] - a[0] * b[2],
           a[0] * b[1] - a[1] * b[0]}};
}

inline CVec3 to_cvec(const Vec3& a) { return {{a[0], a[1], a[2]}}; }

/// Dense 3x3 real matrix, row major.
struct Mat3 {
  double m[3][3]{};

  Vec3 apply(const Vec3& x) const {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
      y[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
    return y;
  }

  CVec3 apply(const CVec3& x) const {
    CVec3 y;
    for (int i = 0; i < 3; ++i)
      y[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
    return y;
  }

  Mat3 transposed() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
    return t;
  }

  static Mat3 identity() {
    Mat3 id;
    id.m[0][0] = id.m[1][1] = id.m[2][2] = 1.0;
    return id;
  }
};

/// Rodrigues rotation about a (not necessarily unit) axis.
inline Mat3 axis_angle_rotation(const Vec3& axis, double angle) {
  const Vec3 a = normalized(axis);
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = (1.0 - c) * a[i] * a[j];
  r.m[0][0] += c;
  r.m[1][1] += c;
  r.m[2][2] += c;
  r.m[0][1] -= s * a[2];
  r.m[0][2] += s * a[1];
  r.m[1][0] += s * a[2];
  r.m[1][2] -= s * a[0];
  r.m[2][0] -= s * a[1];
  r.m[2][1] += s * a[0];
  return r;
}

}  // namespace focusopt
