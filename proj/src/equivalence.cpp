// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include "pdescent/equivalence.hpp"

#include <algorithm>
#include <initializer_list>

namespace pdescent {

const char* to_string(ConfigTag tag) noexcept {
  switch (tag) {
    case ConfigTag::HasFrame: return "HasFrame";
    case ConfigTag::LinePlusPoint: return "LinePlusPoint";
    case ConfigTag::Collinear: return "Collinear";
    case ConfigTag::Tiny: return "Tiny";
  }
  return "unknown";
}

namespace {

void check_size(std::size_t n, const Limits& limits) {
  if (n > limits.max_points)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " points exceed the enumeration limit of " +
                                         std::to_string(limits.max_points));
}

// collinear(i, j, k) for all index triples of a configuration.
class CollinearityTable {
 public:
  explicit CollinearityTable(const std::vector<ProjPoint>& pts) : n_(pts.size()), table_(n_ * n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k) {
          char c = collinear(pts[i], pts[j], pts[k]) ? 1 : 0;
          for (auto [x, y, z] : std::initializer_list<std::array<std::size_t, 3>>{
                   {i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}})
            table_[(x * n_ + y) * n_ + z] = c;
        }
  }

  bool operator()(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * n_ + j) * n_ + k]; }

  bool general(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return !(*this)(a, b, c) && !(*this)(a, b, d) && !(*this)(a, c, d) && !(*this)(b, c, d);
  }

 private:
  std::size_t n_;
  std::vector<char> table_;
};

// Matrix whose columns, scaled, send the standard frame onto (p, q, r, s).
Mat3 frame_matrix(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& s) {
  Mat3 basis = Mat3::from_columns(p, q, r);
  Vec3 lambda = adjugate(basis) * s;
  return basis * Mat3::diagonal(lambda[0], lambda[1], lambda[2]);
}

}  // namespace

ConfigClass classify(const PointConfig& s) {
  const auto& pts = s.points();
  const std::size_t n = pts.size();
  if (n <= 3) return {ConfigTag::Tiny, std::nullopt, std::nullopt, std::nullopt};

  CollinearityTable col(pts);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (col.general(a, b, c, d)) return {ConfigTag::HasFrame, Frame{pts[a], pts[b], pts[c], pts[d]}, {}, {}};

  // No frame: some line holds at least n - 1 points, and it passes through
  // two of the first three.
  for (auto [i, j] : std::initializer_list<std::array<std::size_t, 2>>{{0, 1}, {0, 2}, {1, 2}}) {
    Line l = line_through(pts[i], pts[j]);
    std::vector<std::size_t> off;
    for (std::size_t k = 0; k < n; ++k)
      if (!l.contains(pts[k])) off.push_back(k);
    if (off.empty()) return {ConfigTag::Collinear, std::nullopt, l, std::nullopt};
    if (off.size() == 1) return {ConfigTag::LinePlusPoint, std::nullopt, l, pts[off[0]]};
  }
  throw Error(ErrorCode::InternalError, "configuration without frame is neither collinear nor line plus point");
}

std::vector<SemiProjMap> equivalences(const PointConfig& s, const PointConfig& t, const Limits& limits) {
  check_size(s.size(), limits);
  check_size(t.size(), limits);
  ConfigClass cls = classify(s);
  if (cls.tag != ConfigTag::HasFrame)
    throw Error(ErrorCode::NeedsReduction,
                std::string("source configuration is ") + to_string(cls.tag) + "; use the line reduction");
  if (s.size() != t.size()) return {};

  const Frame& f = *cls.frame;
  // to_standard sends the source frame to the standard frame.
  Mat3 to_standard = adjugate(frame_matrix(f[0].coords(), f[1].coords(), f[2].coords(), f[3].coords()));
  std::vector<Vec3> rest;
  for (const auto& p : s)
    if (std::find(f.begin(), f.end(), p) == f.end()) rest.push_back(to_standard * p.coords());

  const auto& tp = t.points();
  const std::size_t n = tp.size();
  CollinearityTable col(tp);
  std::vector<SemiProjMap> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || col(a, b, c)) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || d == c || !col.general(a, b, c, d)) continue;
          Mat3 from_standard = frame_matrix(tp[a].coords(), tp[b].coords(), tp[c].coords(), tp[d].coords());
          bool ok = std::all_of(rest.begin(), rest.end(), [&](const Vec3& q) {
            return t.contains(ProjPoint(from_standard * q));
          });
          if (ok) out.emplace_back(from_standard * to_standard);
        }
      }
    }
  std::sort(out.begin(), out.end(), map_less);
  return out;
}

std::vector<SemiProjMap> aut_group(const PointConfig& s, const Limits& limits) {
  auto group = equivalences(s, s, limits);
  auto member = [&](const SemiProjMap& g) { return std::binary_search(group.begin(), group.end(), g, map_less); };
  if (!member(SemiProjMap::identity())) throw Error(ErrorCode::InternalError, "automorphism list lacks identity");
  for (const auto& g : group) {
    if (!member(inverse(g))) throw Error(ErrorCode::InternalError, "automorphism list not closed under inverse");
    for (const auto& h : group)
      if (!member(compose(g, h))) throw Error(ErrorCode::InternalError, "automorphism list not closed under composition");
  }
  return group;
}

// ---------------------------------------------------------------------------

namespace {

Vec2 scale_p1(const Vec2& v) {
  if (v[1].is_zero()) {
    if (v[0].is_zero()) throw Error(ErrorCode::DegenerateInput, "zero vector has no projective class");
    return {GQ(1), GQ(0)};
  }
  return {v[0] / v[1], GQ(1)};
}

Vec2 mul(const Mat2& m, const Vec2& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

Mat2 adjugate(const Mat2& m) {
  Mat2 r;
  r(0, 0) = m(1, 1);
  r(0, 1) = -m(0, 1);
  r(1, 0) = -m(1, 0);
  r(1, 1) = m(0, 0);
  return r;
}

Mat2 canonical_scaling(const Mat2& m) {
  auto lead = std::find_if(m.a.begin(), m.a.end(), [](const GQ& x) { return !x.is_zero(); });
  if (lead == m.a.end()) throw Error(ErrorCode::InvalidOperand, "zero matrix");
  GQ inv = lead->inverse();
  Mat2 out;
  for (std::size_t k = 0; k < 4; ++k) out.a[k] = m.a[k] * inv;
  return out;
}

Mat2 frame2(const Vec2& p, const Vec2& q, const Vec2& r) {
  Mat2 basis;
  basis(0, 0) = p[0];
  basis(1, 0) = p[1];
  basis(0, 1) = q[0];
  basis(1, 1) = q[1];
  Vec2 lambda = mul(adjugate(basis), r);
  Mat2 out;
  out(0, 0) = p[0] * lambda[0];
  out(1, 0) = p[1] * lambda[0];
  out(0, 1) = q[0] * lambda[1];
  out(1, 1) = q[1] * lambda[1];
  return out;
}

}  // namespace

P1Point::P1Point(const Vec2& coords) : coords_(scale_p1(coords)) {}

std::string P1Point::to_string() const { return is_infinity() ? "inf" : format_gq(coords_[0]); }

P1Point P1Point::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return affine(parse_gq(text));
}

bool p1_less(const P1Point& p, const P1Point& q) { return p != q && p.to_string() < q.to_string(); }

P1Point conj(const P1Point& p) { return P1Point(conj(p.coords()[0]), conj(p.coords()[1])); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

Mat2 conj(const Mat2& m) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.a[k] = conj(m.a[k]);
  return r;
}

GQ det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

P1Map::P1Map(const Mat2& m, bool antiholo) : m_(canonical_scaling(m)), anti_(antiholo) {
  if (det(m_).is_zero()) throw Error(ErrorCode::InvalidOperand, "singular 2x2 matrix");
}

P1Point P1Map::apply(const P1Point& p) const {
  const Vec2& v = p.coords();
  return P1Point(mul(m_, anti_ ? Vec2{conj(v[0]), conj(v[1])} : v));
}

bool p1_map_less(const P1Map& g, const P1Map& h) {
  for (std::size_t k = 0; k < 4; ++k) {
    const GQ& x = g.matrix().a[k];
    const GQ& y = h.matrix().a[k];
    if (x == y) continue;
    return format_gq(x) < format_gq(y);
  }
  return g.antiholo() < h.antiholo();
}

P1Map compose(const P1Map& g, const P1Map& h) {
  return P1Map(g.matrix() * (g.antiholo() ? conj(h.matrix()) : h.matrix()), g.antiholo() != h.antiholo());
}

P1Config make_p1_config(std::vector<P1Point> points, const Mat3& chart) {
  std::sort(points.begin(), points.end(), p1_less);
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw Error(ErrorCode::DegenerateInput, "duplicate point on the line");
  return {std::move(points), chart};
}

P1Config conj_config(const P1Config& a) {
  std::vector<P1Point> pts;
  for (const auto& p : a.points) pts.push_back(conj(p));
  return make_p1_config(std::move(pts), conj(a.chart));
}

ProjPoint embed(const P1Config& a, const P1Point& p) {
  return ProjPoint(a.chart * Vec3{p.coords()[0], p.coords()[1], GQ(0)});
}

LineReduction reduce_to_line(const PointConfig& s) {
  ConfigClass cls = classify(s);
  if (cls.tag != ConfigTag::Collinear && cls.tag != ConfigTag::LinePlusPoint)
    throw Error(ErrorCode::Misuse, std::string("line reduction applies to collinear or line-plus-point "
                                               "configurations, not ") + to_string(cls.tag));
  const Vec3& l = cls.line->dual();
  Vec3 u, v, w;
  if (!l[2].is_zero()) {
    u = {GQ(1), GQ(0), -l[0] / l[2]};
    v = {GQ(0), GQ(1), -l[1] / l[2]};
    w = {GQ(0), GQ(0), GQ(1)};
  } else if (!l[1].is_zero()) {
    u = {GQ(1), -l[0] / l[1], GQ(0)};
    v = {GQ(0), GQ(0), GQ(1)};
    w = {GQ(0), GQ(1), GQ(0)};
  } else {
    u = {GQ(0), GQ(1), GQ(0)};
    v = {GQ(0), GQ(0), GQ(1)};
    w = {GQ(1), GQ(0), GQ(0)};
  }
  if (cls.apex) w = cls.apex->coords();
  Mat3 chart = Mat3::from_columns(u, v, w);
  Mat3 back = adjugate(chart);
  std::vector<P1Point> pts;
  for (const auto& p : s) {
    if (cls.apex && p == *cls.apex) continue;
    Vec3 y = back * p.coords();
    pts.emplace_back(y[0], y[1]);
  }
  return {make_p1_config(std::move(pts), chart), cls.apex};
}

P1Point cross_ratio(const P1Point& z1, const P1Point& z2, const P1Point& z3, const P1Point& z4) {
  auto d = [](const P1Point& x, const P1Point& y) {
    return x.coords()[0] * y.coords()[1] - x.coords()[1] * y.coords()[0];
  };
  GQ num = d(z1, z3) * d(z2, z4);
  GQ den = d(z1, z4) * d(z2, z3);
  if (num.is_zero() && den.is_zero()) throw Error(ErrorCode::DegenerateInput, "cross-ratio of coincident points");
  return P1Point(num, den);
}

std::vector<P1Map> pgl2_equivalences(const P1Config& a, const P1Config& b, const Limits& limits) {
  check_size(a.points.size(), limits);
  check_size(b.points.size(), limits);
  if (a.points.size() < 3)
    throw Error(ErrorCode::TooSmall, "fewer than three points on a line have an infinite automorphism group");
  if (a.points.size() != b.points.size()) return {};
  const auto& ap = a.points;
  const auto& bp = b.points;
  const std::size_t n = bp.size();
  Mat2 to_standard = adjugate(frame2(ap[0].coords(), ap[1].coords(), ap[2].coords()));
  std::vector<P1Map> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        P1Map g(frame2(bp[i].coords(), bp[j].coords(), bp[k].coords()) * to_standard);
        bool ok = std::all_of(ap.begin() + 3, ap.end(), [&](const P1Point& p) {
          return std::find(bp.begin(), bp.end(), g.apply(p)) != bp.end();
        });
        if (ok) out.push_back(std::move(g));
      }
    }
  std::sort(out.begin(), out.end(), p1_map_less);
  return out;
}

}  // namespace pdescent
