// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include "pdescent/families.hpp"

#include <algorithm>

namespace pdescent {

const char* to_string(Variant v) noexcept { return v == Variant::S ? "S" : "Sprime"; }

Variant parse_variant(std::string_view text) {
  if (text == "S") return Variant::S;
  if (text == "Sprime") return Variant::SPrime;
  throw Error(ErrorCode::InvalidParameter, "variant must be S or Sprime, got \"" + std::string(text) + "\"");
}

PointConfig square_frame() {
  return PointConfig({ProjPoint(1, 0, 1), ProjPoint(-1, 0, 1), ProjPoint(0, 1, 1), ProjPoint(0, -1, 1)});
}

PointConfig family(const FamilyParams& params) {
  if (params.a.empty()) throw Error(ErrorCode::InvalidParameter, "at least one parameter is required");
  std::vector<ProjPoint> pts = square_frame().points();
  for (const auto& a : params.a) {
    if (a.is_zero()) throw Error(ErrorCode::InvalidParameter, "parameter must be nonzero");
    if (norm(a) == 1) throw Error(ErrorCode::InvalidParameter, format_gq(a) + " lies on the unit circle");
    pts.emplace_back(a, GQ(1), GQ(0));
    pts.emplace_back(GQ(1), -conj(a), GQ(0));
  }
  if (params.variant == Variant::SPrime) pts.emplace_back(0, 0, 1);
  const std::size_t expected = pts.size();
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() != expected) throw Error(ErrorCode::InvalidParameter, "parameters produce coinciding points");
  return PointConfig(std::move(pts));
}

SemiProjMap half_turn() { return SemiProjMap(Mat3::diagonal(-1, -1, 1)); }

SemiProjMap quarter_turn_conj() {
  Mat3 j;
  j(0, 1) = GQ(-1);
  j(1, 0) = GQ(1);
  j(2, 2) = GQ(1);
  return SemiProjMap(j, true);
}

GenericityReport certify_generic(const std::vector<GQ>& a, const Limits& limits) {
  std::vector<SemiProjMap> expected = {SemiProjMap::identity(), half_turn()};
  std::sort(expected.begin(), expected.end(), map_less);
  auto s = aut_group(family({a, Variant::S}), limits);
  auto sp = aut_group(family({a, Variant::SPrime}), limits);
  return {s == expected && sp == expected, s.size(), sp.size()};
}

PointConfig canonical_two_lines_set() {
  return PointConfig({ProjPoint(0, 0, 1), ProjPoint(0, 1, 0), ProjPoint(1, 0, 0), ProjPoint(0, 1, 1),
                      ProjPoint(1, 0, 1)});
}

std::optional<SemiProjMap> canonical_two_lines(const PointConfig& s) {
  if (s.size() != 5) return std::nullopt;
  std::vector<std::vector<std::size_t>> rich;  // lines with at least three points
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      Line l = line_through(s[i], s[j]);
      std::vector<std::size_t> on;
      for (std::size_t k = 0; k < 5; ++k)
        if (l.contains(s[k])) on.push_back(k);
      if (on.size() >= 3 && std::find(rich.begin(), rich.end(), on) == rich.end()) rich.push_back(on);
    }
  for (std::size_t x = 0; x < rich.size(); ++x)
    for (std::size_t y = x + 1; y < rich.size(); ++y) {
      const auto& l1 = rich[x];
      const auto& l2 = rich[y];
      if (l1.size() != 3 || l2.size() != 3) continue;
      std::vector<std::size_t> common;
      std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(common));
      if (common.size() != 1) continue;
      std::vector<ProjPoint> first, second;
      for (auto k : l1)
        if (k != common[0]) first.push_back(s[k]);
      for (auto k : l2)
        if (k != common[0]) second.push_back(s[k]);
      Frame from{first[0], first[1], second[0], second[1]};
      Frame to{ProjPoint(0, 1, 0), ProjPoint(0, 1, 1), ProjPoint(1, 0, 0), ProjPoint(1, 0, 1)};
      SemiProjMap g = map_between_frames(from, to);
      if (apply(g, s) != canonical_two_lines_set())
        throw Error(ErrorCode::InternalError, "two-line normal form did not reach the canonical set");
      return g;
    }
  return std::nullopt;
}

std::vector<GQ> default_pool() { return {GQ(2, 1), GQ(3, 2), GQ(5, 1)}; }

namespace {

long draw(Rng& rng, long bound) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound; }

GQ draw_gq(Rng& rng, long bound) { return GQ(draw(rng, bound), draw(rng, bound)); }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 draw_real_vec(Rng& rng) {
  for (;;) {
    Vec3 v{GQ(draw(rng, 3)), GQ(draw(rng, 3)), GQ(draw(rng, 3))};
    if (!is_zero(v)) return v;
  }
}

Vec3 draw_complex_vec(Rng& rng) {
  for (;;) {
    Vec3 v{draw_gq(rng, 3), draw_gq(rng, 3), draw_gq(rng, 3)};
    if (!is_zero(v) && ProjPoint(v) != conj(ProjPoint(v))) return v;
  }
}

// Fills a conjugation-stable set of n points using the given generators for a
// real point and for a non-real point.
template <class RealGen, class PairGen>
std::vector<ProjPoint> stable_set(std::size_t n, Rng& rng, RealGen real, PairGen pair) {
  std::size_t pairs = rng() % (n / 2 + 1);
  std::vector<ProjPoint> pts;
  auto fresh = [&](const ProjPoint& p) { return std::find(pts.begin(), pts.end(), p) == pts.end(); };
  while (pts.size() < 2 * pairs) {
    ProjPoint p = pair();
    if (fresh(p) && fresh(conj(p))) {
      pts.push_back(p);
      pts.push_back(conj(p));
    }
  }
  while (pts.size() < n) {
    ProjPoint p = real();
    if (fresh(p)) pts.push_back(p);
  }
  return pts;
}

}  // namespace

Mat3 random_invertible(Rng& rng, long bound) {
  for (;;) {
    Mat3 m;
    for (auto& x : m.a) x = draw_gq(rng, bound);
    if (!det(m).is_zero()) return m;
  }
}

TwistSample random_twist(std::size_t n, Rng& rng, TwistShape shape) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "configuration must be nonempty");
  std::vector<ProjPoint> pts;
  if (shape == TwistShape::General || (shape == TwistShape::LinePlusPoint && n < 2)) {
    pts = stable_set(
        n, rng, [&] { return ProjPoint(draw_real_vec(rng)); }, [&] { return ProjPoint(draw_complex_vec(rng)); });
  } else {
    // A real line spanned by u and v; points u s + v t for (s:t) in P^1.
    Vec3 u = draw_real_vec(rng), v;
    do {
      v = draw_real_vec(rng);
    } while (ProjPoint(v) == ProjPoint(u));
    auto on_line = [&](const GQ& s, const GQ& t) {
      return ProjPoint(Vec3{u[0] * s + v[0] * t, u[1] * s + v[1] * t, u[2] * s + v[2] * t});
    };
    auto real = [&] {
      for (;;) {
        GQ s(draw(rng, 4)), t(draw(rng, 4));
        if (!s.is_zero() || !t.is_zero()) return on_line(s, t);
      }
    };
    auto pair = [&] {
      for (;;) {
        GQ s = draw_gq(rng, 3), t = draw_gq(rng, 3);
        if (s.is_zero() && t.is_zero()) continue;
        ProjPoint p = on_line(s, t);
        if (p != conj(p)) return p;
      }
    };
    const std::size_t on = shape == TwistShape::Collinear ? n : n - 1;
    pts = stable_set(on, rng, real, pair);
    if (on < n) {
      Line l = line_through(ProjPoint(u), ProjPoint(v));
      for (;;) {
        ProjPoint p(draw_real_vec(rng));
        if (!l.contains(p)) {
          pts.push_back(p);
          break;
        }
      }
    }
  }
  PointConfig real_set(std::move(pts));
  Mat3 a = random_invertible(rng);
  PointConfig twisted = apply(SemiProjMap(a), real_set);
  return {std::move(real_set), a, std::move(twisted)};
}

TwistSample random_twist_with_frame(std::size_t n, Rng& rng) {
  if (n < 4) throw Error(ErrorCode::InvalidParameter, "a frame needs at least four points");
  for (;;) {
    TwistSample t = random_twist(n, rng, TwistShape::General);
    if (classify(t.real_set).tag == ConfigTag::HasFrame) return t;
  }
}

namespace {

void run_family_case(FamilyCase& c, const VerifyOptions& options) {
  auto expect = [&c](bool ok, const std::string& what) {
    if (!ok) c.failures.push_back(what);
  };
  c.config = family({c.a, c.variant});
  FomResult fom = fom_real(c.config, options.limits);
  c.fom_real = fom.real;
  c.witness = fom.witness;
  NormalizerGroup group = normalizer(c.config, options.limits);
  c.structure = group.structure;
  c.order_profile = group.order_profile;
  c.certificate = descends_real(c.config, {options.limits, options.seed});
  if (!c.genericity.generic) {
    c.skipped = true;
    c.passed = true;
    return;
  }
  expect(c.fom_real, "field of moduli is not R");
  expect(c.witness && apply(*c.witness, c.config) == c.config, "witness does not preserve the configuration");
  expect(group.holomorphic_count == 2, "automorphism group is not {I, M}");
  expect(c.structure == "C4", "normalizer is " + c.structure + ", not C4");
  expect(!c.certificate.descends, "configuration descends");
  expect(c.certificate.refutation.size() == 2, "refutation does not have two elements");
  for (const auto& r : c.certificate.refutation) expect(r.square == half_turn(), "an antiholomorphic square is not M");
  expect(refutation_check(c.config, c.certificate, options.limits).ok, "refutation does not re-verify");
  c.passed = c.failures.empty();
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.options = options;
  for (int m = options.m_first; m <= options.m_last; ++m) {
    if (m < 1) throw Error(ErrorCode::InvalidParameter, "m must be at least 1");
    if (static_cast<std::size_t>(m) > options.pool.size())
      throw Error(ErrorCode::InvalidParameter,
                  "m = " + std::to_string(m) + " exceeds the parameter pool size " + std::to_string(options.pool.size()));
    std::vector<GQ> a(options.pool.begin(), options.pool.begin() + m);
    GenericityReport genericity = certify_generic(a, options.limits);
    for (Variant v : {Variant::S, Variant::SPrime}) {
      FamilyCase c;
      c.m = m;
      c.variant = v;
      c.a = a;
      c.genericity = genericity;
      run_family_case(c, options);
      report.passed = report.passed && c.passed;
      report.cases.push_back(std::move(c));
    }
  }

  Rng rng(options.seed);
  for (std::size_t n = 1; n <= 5 && options.samples_per_size > 0; ++n) {
    BatterySize size{n, 0, 0, 0};
    for (std::size_t k = 0; k < options.samples_per_size; ++k) {
      auto shape = static_cast<TwistShape>(rng() % 3);
      TwistSample sample = random_twist(n, rng, shape);
      DescentCertificate cert = descends_real(sample.twisted, {options.limits, options.seed + k});
      ++size.samples;
      if (cert.descends) ++size.descended;
      if (cert.descends && real_model_check(sample.twisted, cert).ok) {
        ++size.verified;
      } else {
        report.passed = false;
        report.battery_failures.push_back(std::move(cert));
      }
    }
    report.battery.push_back(size);
  }
  return report;
}

}  // namespace pdescent
