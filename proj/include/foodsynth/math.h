// Copyright 2026 The foodsynth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef FOODSYNTH_MATH_H_
#define FOODSYNTH_MATH_H_

#include <array>
#include <cmath>

namespace foodsynth {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline constexpr double Dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline constexpr Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline constexpr Vec3 Hadamard(const Vec3& a, const Vec3& b) {
  return {a.x * b.x, a.y * b.y, a.z * b.z};
}

inline double Norm(const Vec3& v) { return std::sqrt(Dot(v, v)); }

// Returns the zero vector unchanged.
inline Vec3 Normalized(const Vec3& v) {
  const double n = Norm(v);
  return n > 0.0 ? v / n : v;
}

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m = {1, 0, 0, 0, 1, 0, 0, 0, 1};

  static constexpr Mat3 Identity() { return {}; }

  constexpr double operator()(int r, int c) const { return m[r * 3 + c]; }
  constexpr double& operator()(int r, int c) { return m[r * 3 + c]; }

  constexpr Vec3 Row(int r) const { return {m[r * 3], m[r * 3 + 1], m[r * 3 + 2]}; }
  constexpr Vec3 Col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }

  constexpr Vec3 operator*(const Vec3& v) const {
    return {Dot(Row(0), v), Dot(Row(1), v), Dot(Row(2), v)};
  }

  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    }
    return r;
  }

  constexpr Mat3 Transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    }
    return r;
  }

  constexpr double Determinant() const {
    return Dot(Row(0), Cross(Row(1), Row(2)));
  }

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 RotationAboutAxis(const Vec3& axis, double angle);
inline Mat3 RotationZ(double angle) { return RotationAboutAxis({0, 0, 1}, angle); }

// True when R^T R = I and det R = +1 within `tolerance`.
bool IsProperRotation(const Mat3& r, double tolerance = 1e-9);

// x -> rotation * x + translation.
struct RigidTransform {
  Mat3 rotation;
  Vec3 translation;

  static RigidTransform Identity() { return {}; }
  static RigidTransform Translation(const Vec3& t) { return {Mat3::Identity(), t}; }

  Vec3 Apply(const Vec3& p) const { return rotation * p + translation; }
  Vec3 ApplyToDirection(const Vec3& d) const { return rotation * d; }

  // (a * b).Apply(p) == a.Apply(b.Apply(p)).
  RigidTransform operator*(const RigidTransform& inner) const {
    return {rotation * inner.rotation, rotation * inner.translation + translation};
  }

  RigidTransform Inverse() const {
    const Mat3 rt = rotation.Transposed();
    return {rt, -(rt * translation)};
  }

  friend bool operator==(const RigidTransform&, const RigidTransform&) = default;
};

}  // namespace foodsynth

#endif  // FOODSYNTH_MATH_H_
