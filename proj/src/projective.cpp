// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include "pdescent/projective.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace pdescent {

Mat3 Mat3::identity() { return diagonal(1, 1, 1); }

Mat3 Mat3::diagonal(const GQ& x, const GQ& y, const GQ& z) {
  Mat3 m;
  m(0, 0) = x;
  m(1, 1) = y;
  m(2, 2) = z;
  return m;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    m(r, 0) = c0[r];
    m(r, 1) = c1[r];
    m(r, 2) = c2[r];
  }
  return m;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      GQ acc;
      for (std::size_t k = 0; k < 3; ++k) {
        if (x(r, k).is_zero() || y(k, c).is_zero()) continue;
        acc += x(r, k) * y(k, c);
      }
      out(r, c) = std::move(acc);
    }
  return out;
}

Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 out;
  for (std::size_t k = 0; k < 9; ++k) out.a[k] = x.a[k] + y.a[k];
  return out;
}

Mat3 operator*(const GQ& s, const Mat3& m) {
  Mat3 out;
  for (std::size_t k = 0; k < 9; ++k) out.a[k] = s * m.a[k];
  return out;
}

Vec3 operator*(const Mat3& m, const Vec3& v) {
  Vec3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    GQ acc;
    for (std::size_t k = 0; k < 3; ++k) {
      if (m(r, k).is_zero() || v[k].is_zero()) continue;
      acc += m(r, k) * v[k];
    }
    out[r] = std::move(acc);
  }
  return out;
}

GQ det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 adjugate(const Mat3& m) {
  Mat3 adj;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      // cofactor of (c, r)
      std::size_t r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      std::size_t c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      adj(r, c) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return adj;
}

Mat3 inverse(const Mat3& m) {
  GQ d = det(m);
  if (d.is_zero()) throw Error(ErrorCode::InvalidOperand, "singular matrix");
  return d.inverse() * adjugate(m);
}

Mat3 conj(const Mat3& m) {
  Mat3 out;
  for (std::size_t k = 0; k < 9; ++k) out.a[k] = conj(m.a[k]);
  return out;
}

Vec3 conj(const Vec3& v) { return {conj(v[0]), conj(v[1]), conj(v[2])}; }

namespace {

template <std::size_t N>
std::array<GQ, N> scale_leading_to_one(std::array<GQ, N> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const GQ& x) { return !x.is_zero(); });
  if (lead == v.end()) throw Error(ErrorCode::DegenerateInput, "zero vector has no projective class");
  if (*lead == GQ(1)) return v;
  GQ inv = lead->inverse();
  for (auto it = lead; it != v.end(); ++it)
    if (!it->is_zero()) *it *= inv;
  return v;
}

std::string join_coords(std::span<const GQ> v, char sep) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += format_gq(v[k]);
  }
  s += ')';
  return s;
}

}  // namespace

Mat3 canonical_scaling(const Mat3& m) { return {scale_leading_to_one(m.a)}; }

bool is_scalar(const Mat3& m) {
  if (m(0, 0).is_zero()) return false;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (r != c && !m(r, c).is_zero()) return false;
  return m(0, 0) == m(1, 1) && m(1, 1) == m(2, 2);
}

ProjPoint::ProjPoint(const Vec3& coords) : coords_(scale_leading_to_one(coords)) {}

std::string ProjPoint::to_string() const { return join_coords(coords_, ':'); }

ProjPoint ProjPoint::parse(std::string_view text) {
  auto fail = [&](const std::string& what, std::size_t pos) -> ProjPoint {
    throw Error(ErrorCode::ParseError,
                what + " at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"", pos);
  };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    return fail("point must be written as (x:y:z)", 0);
  std::string_view body = text.substr(1, text.size() - 2);
  Vec3 v;
  std::size_t start = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t end = k < 2 ? body.find(':', start) : body.size();
    if (end == std::string_view::npos) return fail("expected ':'", start + 1 + body.size());
    try {
      v[k] = parse_gq(body.substr(start, end - start));
    } catch (const Error& e) {
      return fail(e.detail(), start + 1 + e.position().value_or(0));
    }
    start = end + 1;
  }
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) return fail("all coordinates zero", 1);
  return ProjPoint(v);
}

bool point_less(const ProjPoint& p, const ProjPoint& q) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (p[k] == q[k]) continue;
    return format_gq(p[k]) < format_gq(q[k]);
  }
  return false;
}

ProjPoint conj(const ProjPoint& p) { return ProjPoint(conj(p.coords())); }

Line::Line(const Vec3& dual) : dual_(scale_leading_to_one(dual)) {}

bool Line::contains(const ProjPoint& p) const {
  return (dual_[0] * p[0] + dual_[1] * p[1] + dual_[2] * p[2]).is_zero();
}

std::string Line::to_string() const { return join_coords(dual_, ':'); }

Conic::Conic(const std::array<GQ, 6>& coeffs) : coeffs_(scale_leading_to_one(coeffs)) {}

GQ Conic::evaluate(const ProjPoint& p) const {
  const auto& [x, y, z] = p.coords();
  const auto& c = coeffs_;
  return c[0] * x * x + c[1] * y * y + c[2] * z * z + c[3] * x * y + c[4] * x * z + c[5] * y * z;
}

Mat3 Conic::symmetric_matrix() const {
  GQ half(Rational(1, 2));
  const auto& c = coeffs_;
  Mat3 m;
  m(0, 0) = c[0];
  m(1, 1) = c[1];
  m(2, 2) = c[2];
  m(0, 1) = m(1, 0) = half * c[3];
  m(0, 2) = m(2, 0) = half * c[4];
  m(1, 2) = m(2, 1) = half * c[5];
  return m;
}

bool Conic::is_degenerate() const { return det(symmetric_matrix()).is_zero(); }

SemiProjMap::SemiProjMap(const Mat3& m, bool antiholo) : m_(canonical_scaling(m)), anti_(antiholo) {
  if (det(m_).is_zero()) throw Error(ErrorCode::InvalidOperand, "singular matrix is not a projective map");
}

Vec3 SemiProjMap::apply(const Vec3& v) const { return anti_ ? m_ * conj(v) : m_ * v; }

ProjPoint SemiProjMap::apply(const ProjPoint& p) const { return ProjPoint(apply(p.coords())); }

bool map_less(const SemiProjMap& g, const SemiProjMap& h) {
  for (std::size_t k = 0; k < 9; ++k) {
    const GQ& x = g.matrix().a[k];
    const GQ& y = h.matrix().a[k];
    if (x == y) continue;
    return format_gq(x) < format_gq(y);
  }
  return g.antiholo() < h.antiholo();
}

SemiProjMap compose(const SemiProjMap& g, const SemiProjMap& h) {
  const Mat3& rhs = g.antiholo() ? conj(h.matrix()) : h.matrix();
  return SemiProjMap(g.matrix() * rhs, g.antiholo() != h.antiholo());
}

SemiProjMap inverse(const SemiProjMap& g) {
  // (M, anti)^-1 = (conj(M^-1), anti) since M conj(conj(M^-1)) = I.
  Mat3 adj = adjugate(g.matrix());
  return SemiProjMap(g.antiholo() ? conj(adj) : adj, g.antiholo());
}

PointConfig::PointConfig(std::vector<ProjPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), point_less);
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw Error(ErrorCode::DegenerateInput, "duplicate point in configuration");
}

bool PointConfig::contains(const ProjPoint& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointConfig apply(const SemiProjMap& g, const PointConfig& s) {
  std::vector<ProjPoint> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(g.apply(p));
  return PointConfig(std::move(out));
}

PointConfig conj_config(const PointConfig& s) {
  std::vector<ProjPoint> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(conj(p));
  return PointConfig(std::move(out));
}

GQ det3(const Vec3& p, const Vec3& q, const Vec3& r) { return det(Mat3::from_columns(p, q, r)); }

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return det3(p.coords(), q.coords(), r.coords()).is_zero();
}

Line line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(ErrorCode::DegenerateInput, "a line needs two distinct points");
  const auto& u = p.coords();
  const auto& v = q.coords();
  return Line(Vec3{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]});
}

Conic conic_through_5(std::span<const ProjPoint> five) {
  if (five.size() != 5) throw Error(ErrorCode::DegenerateInput, "conic_through_5 needs exactly five points");
  std::vector<detail::Row> rows;
  for (const auto& p : five) {
    const auto& [x, y, z] = p.coords();
    rows.push_back({x * x, y * y, z * z, x * y, x * z, y * z});
  }
  auto basis = detail::nullspace(std::move(rows), 6);
  if (basis.size() != 1) throw Error(ErrorCode::DegenerateInput, "the five points do not determine a unique conic");
  std::array<GQ, 6> c;
  std::copy(basis[0].begin(), basis[0].end(), c.begin());
  return Conic(c);
}

Conic conic_through_5(const PointConfig& five) { return conic_through_5(std::span(five.points())); }

bool in_general_position(const Frame& f) {
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<const ProjPoint*, 3> t;
    std::size_t k = 0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != skip) t[k++] = &f[j];
    if (collinear(*t[0], *t[1], *t[2])) return false;
  }
  return true;
}

SemiProjMap frame_map(const Frame& f) {
  if (!in_general_position(f)) throw Error(ErrorCode::NotAFrame, "three of the four points are collinear");
  Mat3 basis = Mat3::from_columns(f[0].coords(), f[1].coords(), f[2].coords());
  // Column scalings solve basis * lambda = f[3]; the adjugate suffices up to scale.
  Vec3 lambda = adjugate(basis) * f[3].coords();
  Mat3 m = basis * Mat3::diagonal(lambda[0], lambda[1], lambda[2]);
  return SemiProjMap(m);
}

SemiProjMap map_between_frames(const Frame& f, const Frame& g) {
  return compose(frame_map(g), inverse(frame_map(f)));
}

}  // namespace pdescent
