// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdescent/field.hpp"

namespace pdescent {

using Vec3 = std::array<GQ, 3>;

/// Row-major 3x3 matrix over Q(i).
struct Mat3 {
  std::array<GQ, 9> a{};

  static Mat3 identity();
  static Mat3 diagonal(const GQ& x, const GQ& y, const GQ& z);
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

  GQ& operator()(std::size_t r, std::size_t c) { return a[3 * r + c]; }
  const GQ& operator()(std::size_t r, std::size_t c) const { return a[3 * r + c]; }

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 operator*(const Mat3& x, const Mat3& y);
Mat3 operator+(const Mat3& x, const Mat3& y);
Mat3 operator*(const GQ& s, const Mat3& m);
Vec3 operator*(const Mat3& m, const Vec3& v);
GQ det(const Mat3& m);
Mat3 adjugate(const Mat3& m);
/// Throws InvalidOperand when singular.
Mat3 inverse(const Mat3& m);
Mat3 conj(const Mat3& m);
Vec3 conj(const Vec3& v);
/// Scales so the first nonzero entry in row-major order is 1.
Mat3 canonical_scaling(const Mat3& m);
/// True iff m is a nonzero multiple of the identity.
bool is_scalar(const Mat3& m);

/// A point of P^2(Q(i)); the stored representative has its leftmost nonzero
/// coordinate equal to 1.
class ProjPoint {
 public:
  /// Throws DegenerateInput for the zero vector.
  explicit ProjPoint(const Vec3& coords);
  ProjPoint(GQ x, GQ y, GQ z) : ProjPoint(Vec3{std::move(x), std::move(y), std::move(z)}) {}

  const Vec3& coords() const { return coords_; }
  const GQ& operator[](std::size_t i) const { return coords_[i]; }

  /// "(x:y:z)" with each coordinate in the Q(i) grammar.
  std::string to_string() const;
  static ProjPoint parse(std::string_view text);

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Vec3 coords_;
};

/// Lexicographic order on the canonical coordinate strings.
bool point_less(const ProjPoint& p, const ProjPoint& q);

ProjPoint conj(const ProjPoint& p);

/// A line, stored by dual coordinates with the same canonical scaling as
/// ProjPoint.
class Line {
 public:
  explicit Line(const Vec3& dual);

  const Vec3& dual() const { return dual_; }
  bool contains(const ProjPoint& p) const;
  std::string to_string() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Vec3 dual_;
};

/// Coefficients of xx, yy, zz, xy, xz, yz, scaled like ProjPoint.
class Conic {
 public:
  explicit Conic(const std::array<GQ, 6>& coeffs);

  const std::array<GQ, 6>& coeffs() const { return coeffs_; }
  GQ evaluate(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return evaluate(p).is_zero(); }
  Mat3 symmetric_matrix() const;
  bool is_degenerate() const;

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  std::array<GQ, 6> coeffs_;
};

/// A projective-linear map, optionally composed with complex conjugation of
/// the coordinates. The antiholomorphic variant acts by p -> M conj(p).
class SemiProjMap {
 public:
  /// Throws InvalidOperand for a singular matrix.
  explicit SemiProjMap(const Mat3& m, bool antiholo = false);

  static SemiProjMap identity() { return SemiProjMap(Mat3::identity()); }

  const Mat3& matrix() const { return m_; }
  bool antiholo() const { return anti_; }

  Vec3 apply(const Vec3& v) const;
  ProjPoint apply(const ProjPoint& p) const;

  friend bool operator==(const SemiProjMap&, const SemiProjMap&) = default;

 private:
  Mat3 m_;
  bool anti_;
};

/// Orders by the matrix entry strings in row-major order, then by the flag.
bool map_less(const SemiProjMap& g, const SemiProjMap& h);

/// g after h.
SemiProjMap compose(const SemiProjMap& g, const SemiProjMap& h);
SemiProjMap inverse(const SemiProjMap& g);

/// A finite set of distinct points kept in point_less order.
class PointConfig {
 public:
  PointConfig() = default;
  /// Throws DegenerateInput on duplicates.
  explicit PointConfig(std::vector<ProjPoint> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const std::vector<ProjPoint>& points() const { return points_; }

  bool contains(const ProjPoint& p) const;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::vector<ProjPoint> points_;
};

PointConfig apply(const SemiProjMap& g, const PointConfig& s);
PointConfig conj_config(const PointConfig& s);

GQ det3(const Vec3& p, const Vec3& q, const Vec3& r);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
/// Throws DegenerateInput when p == q.
Line line_through(const ProjPoint& p, const ProjPoint& q);
/// Throws DegenerateInput unless exactly five points determine a unique conic.
Conic conic_through_5(std::span<const ProjPoint> five);
Conic conic_through_5(const PointConfig& five);

using Frame = std::array<ProjPoint, 4>;

bool in_general_position(const Frame& f);
/// The holomorphic map sending (1:0:0),(0:1:0),(0:0:1),(1:1:1) to f in order.
/// Throws NotAFrame if three of the points are collinear.
SemiProjMap frame_map(const Frame& f);
/// The holomorphic map sending f[k] to g[k] for every k.
SemiProjMap map_between_frames(const Frame& f, const Frame& g);

}  // namespace pdescent
