// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdescent/projective.hpp"

namespace pdescent {

/// Enumeration is exhaustive over ordered 4-tuples, so the size is capped.
struct Limits {
  std::size_t max_points = 20;
};

enum class ConfigTag { HasFrame, LinePlusPoint, Collinear, Tiny };

const char* to_string(ConfigTag tag) noexcept;

struct ConfigClass {
  ConfigTag tag;
  std::optional<Frame> frame;      // HasFrame: least general-position 4-subset
  std::optional<Line> line;        // Collinear / LinePlusPoint
  std::optional<ProjPoint> apex;   // LinePlusPoint: the point off the line
};

ConfigClass classify(const PointConfig& s);

/// Every holomorphic g with g(s) == t, sorted by map_less. The source must have
/// a frame; otherwise NeedsReduction. Size mismatch gives an empty list.
std::vector<SemiProjMap> equivalences(const PointConfig& s, const PointConfig& t,
                                      const Limits& limits = {});

/// equivalences(s, s), checked for closure under composition and inverse.
std::vector<SemiProjMap> aut_group(const PointConfig& s, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Projective line

using Vec2 = std::array<GQ, 2>;

/// A point of P^1(Q(i)), stored as (z:1) or (1:0).
class P1Point {
 public:
  explicit P1Point(const Vec2& coords);
  P1Point(GQ s, GQ t) : P1Point(Vec2{std::move(s), std::move(t)}) {}
  static P1Point infinity() { return P1Point(1, 0); }
  static P1Point affine(GQ z) { return P1Point(std::move(z), 1); }

  const Vec2& coords() const { return coords_; }
  bool is_infinity() const { return coords_[1].is_zero(); }
  /// The affine value s/t, or "inf".
  std::string to_string() const;
  static P1Point parse(std::string_view text);

  friend bool operator==(const P1Point&, const P1Point&) = default;

 private:
  Vec2 coords_;
};

bool p1_less(const P1Point& p, const P1Point& q);
P1Point conj(const P1Point& p);

/// Row-major 2x2 matrix; as a map it is scaled like SemiProjMap.
struct Mat2 {
  std::array<GQ, 4> a{};
  GQ& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }
  const GQ& operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 conj(const Mat2& m);
GQ det(const Mat2& m);

/// Element of PGL2 optionally composed with conjugation: z -> h conj(z).
class P1Map {
 public:
  explicit P1Map(const Mat2& m, bool antiholo = false);
  const Mat2& matrix() const { return m_; }
  bool antiholo() const { return anti_; }
  P1Point apply(const P1Point& p) const;
  friend bool operator==(const P1Map&, const P1Map&) = default;

 private:
  Mat2 m_;
  bool anti_;
};

bool p1_map_less(const P1Map& g, const P1Map& h);
P1Map compose(const P1Map& g, const P1Map& h);

/// Points of a line, in the chart given by the first two columns of `chart`.
/// The plane point chart * (s, t, 0) corresponds to (s:t).
struct P1Config {
  std::vector<P1Point> points;  // sorted by p1_less, no duplicates
  Mat3 chart;
};

P1Config make_p1_config(std::vector<P1Point> points, const Mat3& chart = Mat3::identity());
P1Config conj_config(const P1Config& a);
ProjPoint embed(const P1Config& a, const P1Point& p);

struct LineReduction {
  P1Config line_part;
  std::optional<ProjPoint> residue;
};

/// For Collinear and LinePlusPoint inputs. The chart's third column is the
/// residue when present, so chart^-1 sends the residue to (0:0:1). For a line
/// z = 0 the chart is the identity. Other classes give Misuse.
LineReduction reduce_to_line(const PointConfig& s);

/// cr(z1,z2,z3,z4) = ((z1-z3)(z2-z4)) / ((z1-z4)(z2-z3)), as a point of P^1.
P1Point cross_ratio(const P1Point& z1, const P1Point& z2, const P1Point& z3, const P1Point& z4);

/// Every holomorphic g in PGL2 with g(a) == b, sorted. TooSmall below three points.
std::vector<P1Map> pgl2_equivalences(const P1Config& a, const P1Config& b,
                                     const Limits& limits = {});

}  // namespace pdescent
