// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include "pdescent/descent.hpp"

#include <algorithm>
#include <map>

#include "linalg.hpp"

namespace pdescent {

const char* to_string(CheckReason reason) noexcept {
  switch (reason) {
    case CheckReason::Ok: return "ok";
    case CheckReason::NotClaimed: return "not-claimed";
    case CheckReason::MissingModel: return "missing-model";
    case CheckReason::ConjInstability: return "conj-instability";
    case CheckReason::CocycleMismatch: return "cocycle-mismatch";
    case CheckReason::EquivalenceMismatch: return "equivalence-mismatch";
    case CheckReason::WitnessInvalid: return "witness-invalid";
    case CheckReason::RefutationInvalid: return "refutation-invalid";
    case CheckReason::RefutationIncomplete: return "refutation-incomplete";
  }
  return "unknown";
}

std::string identify_structure(const std::vector<std::size_t>& profile) {
  static const std::map<std::vector<std::size_t>, std::string> known = {
      {{1}, "trivial"},
      {{1, 2}, "C2"},
      {{1, 3, 3}, "C3"},
      {{1, 2, 4, 4}, "C4"},
      {{1, 2, 2, 2}, "C2xC2"},
      {{1, 5, 5, 5, 5}, "C5"},
      {{1, 2, 3, 3, 6, 6}, "C6"},
      {{1, 2, 2, 2, 3, 3}, "S3"},
      {{1, 7, 7, 7, 7, 7, 7}, "C7"},
      {{1, 2, 4, 4, 8, 8, 8, 8}, "C8"},
      {{1, 2, 2, 2, 4, 4, 4, 4}, "C4xC2"},
      {{1, 2, 2, 2, 2, 2, 2, 2}, "C2xC2xC2"},
      {{1, 2, 2, 2, 2, 2, 4, 4}, "D4"},
      {{1, 2, 4, 4, 4, 4, 4, 4}, "Q8"},
  };
  auto it = known.find(profile);
  return it == known.end() ? "other" : it->second;
}

NormalizerGroup normalizer(const PointConfig& s, const Limits& limits) {
  NormalizerGroup g;
  g.elements = aut_group(s, limits);
  g.holomorphic_count = g.elements.size();
  for (const auto& m : equivalences(conj_config(s), s, limits)) g.elements.emplace_back(m.matrix(), true);

  const std::size_t n = g.elements.size();
  auto index_of = [&](const SemiProjMap& x) {
    auto it = std::find(g.elements.begin(), g.elements.end(), x);
    if (it == g.elements.end()) throw Error(ErrorCode::InternalError, "normalizer not closed under composition");
    return static_cast<std::size_t>(it - g.elements.begin());
  };
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = index_of(compose(g.elements[i], g.elements[j]));

  const std::size_t id = index_of(SemiProjMap::identity());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t order = 1;
    for (std::size_t cur = i; cur != id; cur = g.table[cur][i]) ++order;
    g.order_profile.push_back(order);
  }
  std::sort(g.order_profile.begin(), g.order_profile.end());
  g.structure = identify_structure(g.order_profile);
  return g;
}

namespace {

Mat3 embed_block(const Mat2& h) {
  Mat3 d;
  d(0, 0) = h(0, 0);
  d(0, 1) = h(0, 1);
  d(1, 0) = h(1, 0);
  d(1, 1) = h(1, 1);
  d(2, 2) = GQ(1);
  return d;
}

// The antiholomorphic plane map acting as h on the reduced line and fixing
// the residue direction: chart * D * conj(chart^-1), up to scale.
Mat3 lift_line_map(const Mat3& chart, const Mat2& h) {
  return chart * embed_block(h) * conj(adjugate(chart));
}

bool mat2_scalar(const Mat2& m) {
  return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1) && !m(0, 0).is_zero();
}

// Holomorphic B with B^-1(S) made of real points; configurations of at most
// three points are always rigidified to standard positions.
Mat3 tiny_splitter(const PointConfig& s) {
  std::vector<Vec3> cols;
  for (const auto& p : s) cols.push_back(p.coords());
  if (s.size() == 3 && collinear(s[0], s[1], s[2])) {
    auto ns = detail::nullspace({{cols[0][0], cols[1][0], cols[2][0]},
                                 {cols[0][1], cols[1][1], cols[2][1]},
                                 {cols[0][2], cols[1][2], cols[2][2]}},
                                3);
    const auto& c = ns.at(0);
    // c0 p + c1 q + c2 r = 0 with c2 = 1 in the free column.
    GQ lambda = -c[0] / c[2], mu = -c[1] / c[2];
    for (auto& x : cols[0]) x *= lambda;
    for (auto& x : cols[1]) x *= mu;
    cols.pop_back();
  }
  const std::array<Vec3, 3> e = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  std::vector<std::vector<Vec3>> completions;
  if (cols.size() == 3) completions.push_back({});
  if (cols.size() == 2)
    for (const auto& x : e) completions.push_back({x});
  if (cols.size() == 1)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) completions.push_back({e[i], e[j]});
  for (const auto& extra : completions) {
    std::vector<Vec3> all = cols;
    all.insert(all.end(), extra.begin(), extra.end());
    Mat3 b = Mat3::from_columns(all[0], all[1], all[2]);
    if (!det(b).is_zero()) return b;
  }
  throw Error(ErrorCode::InternalError, "could not rigidify a configuration of at most three points");
}

Mat3 cocycle_of(const Mat3& b) { return canonical_scaling(b * adjugate(conj(b))); }

PointConfig model_from_splitter(const PointConfig& s, const Mat3& b) {
  PointConfig model = apply(SemiProjMap(adjugate(b)), s);
  if (conj_config(model) != model)
    throw Error(ErrorCode::InternalError, "split model is not conjugation-stable");
  return model;
}

}  // namespace

FomResult fom_real(const PointConfig& s, const Limits& limits) {
  ConfigClass cls = classify(s);
  switch (cls.tag) {
    case ConfigTag::Tiny:
      return {true, SemiProjMap(cocycle_of(tiny_splitter(s)), true)};
    case ConfigTag::HasFrame: {
      auto maps = equivalences(conj_config(s), s, limits);
      if (maps.empty()) return {false, std::nullopt};
      return {true, SemiProjMap(maps.front().matrix(), true)};
    }
    case ConfigTag::Collinear:
    case ConfigTag::LinePlusPoint: {
      LineReduction red = reduce_to_line(s);
      auto maps = pgl2_equivalences(conj_config(red.line_part), red.line_part, limits);
      if (maps.empty()) return {false, std::nullopt};
      return {true, SemiProjMap(lift_line_map(red.line_part.chart, maps.front().matrix()), true)};
    }
  }
  throw Error(ErrorCode::InternalError, "unhandled configuration class");
}

Mat3 hilbert90_split(const Mat3& a, Rng& rng) {
  Mat3 sq = a * conj(a);
  if (!is_scalar(sq)) throw Error(ErrorCode::NotACocycle, "A conj(A) is not a scalar matrix");
  const GQ& mu = sq(0, 0);
  if (!mu.is_real() || sgn(mu.re()) <= 0) throw Error(ErrorCode::NotACocycle, "A conj(A) is not a positive scalar");
  // mu^3 = norm(det A), so t = mu / det A has norm 1/mu and t A conj(t A) = I.
  Mat3 a1 = (GQ(mu.re()) / det(a)) * a;
  auto small = [&rng]() { return static_cast<long>(rng() % 5) - 2; };
  for (int trial = 0; trial <= 100; ++trial) {
    Mat3 c = Mat3::identity();
    if (trial > 0)
      for (auto& x : c.a) x = GQ(small(), small());
    Mat3 b = a1 * conj(c) + c;
    if (det(b).is_zero()) continue;
    if (a1 * conj(b) != b) throw Error(ErrorCode::InternalError, "splitting identity failed");
    return canonical_scaling(b);
  }
  throw Error(ErrorCode::InternalError, "no invertible splitting matrix within 100 trials");
}

DescentCertificate descends_real(const PointConfig& s, const DescentOptions& options) {
  DescentCertificate cert;
  cert.input = s;
  ConfigClass cls = classify(s);
  cert.tag = cls.tag;
  Rng rng(options.seed);

  auto accept = [&](const Mat3& cocycle, const Mat3& splitter) {
    cert.descends = true;
    cert.cocycle = canonical_scaling(cocycle);
    cert.splitter = splitter;
    cert.real_model = model_from_splitter(s, splitter);
  };

  switch (cls.tag) {
    case ConfigTag::Tiny: {
      Mat3 b = tiny_splitter(s);
      Mat3 a = cocycle_of(b);
      cert.fom_real = true;
      cert.witness = SemiProjMap(a, true);
      accept(a, canonical_scaling(b));
      return cert;
    }
    case ConfigTag::HasFrame: {
      std::vector<SemiProjMap> coset;
      for (const auto& m : equivalences(conj_config(s), s, options.limits)) coset.emplace_back(m.matrix(), true);
      cert.fom_real = !coset.empty();
      if (cert.fom_real) cert.witness = coset.front();
      // A conjugation-stable set is its own model.
      if (conj_config(s) == s) {
        cert.witness = SemiProjMap(Mat3::identity(), true);
        accept(Mat3::identity(), Mat3::identity());
        return cert;
      }
      for (const auto& g : coset) {
        SemiProjMap sq = compose(g, g);
        if (sq == SemiProjMap::identity()) {
          accept(g.matrix(), hilbert90_split(g.matrix(), rng));
          cert.refutation.clear();
          return cert;
        }
        cert.refutation.push_back({g, sq});
      }
      return cert;
    }
    case ConfigTag::Collinear:
    case ConfigTag::LinePlusPoint: {
      LineReduction red = reduce_to_line(s);
      const Mat3& chart = red.line_part.chart;
      auto coset = pgl2_equivalences(conj_config(red.line_part), red.line_part, options.limits);
      cert.fom_real = !coset.empty();
      if (cert.fom_real) cert.witness = SemiProjMap(lift_line_map(chart, coset.front().matrix()), true);
      std::optional<Rational> unsplit_mu;
      for (const auto& m : coset) {
        P1Map h(m.matrix(), true);
        Mat2 sq = h.matrix() * conj(h.matrix());
        if (!mat2_scalar(sq)) {
          cert.line_refutation.push_back({h, sq, "square-not-scalar"});
          continue;
        }
        const Rational mu = sq(0, 0).re();
        if (sgn(mu) < 0) {
          cert.line_refutation.push_back({h, sq, "negative-scalar"});
          continue;
        }
        GQ t;
        try {
          t = two_squares(1 / mu);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotANorm) throw;
          if (!unsplit_mu) unsplit_mu = mu;
          continue;
        }
        Mat2 scaled;
        for (std::size_t k = 0; k < 4; ++k) scaled.a[k] = t * h.matrix().a[k];
        Mat3 a = lift_line_map(chart, scaled);
        accept(a, hilbert90_split(a, rng));
        cert.line_refutation.clear();
        return cert;
      }
      if (unsplit_mu) {
        cert.descends = true;
        cert.line_refutation.clear();
        cert.note = "real structure on the line has positive scalar " + format_rational(*unsplit_mu) +
                    ", which is not a sum of two rational squares; a real model exists but needs "
                    "coordinates outside Q(i)";
      }
      return cert;
    }
  }
  throw Error(ErrorCode::InternalError, "unhandled configuration class");
}

CheckResult real_model_check(const PointConfig& s, const DescentCertificate& cert) {
  auto fail = [](CheckReason r) { return CheckResult{false, r}; };
  if (!cert.descends) return fail(CheckReason::NotClaimed);
  if (!cert.real_model || !cert.splitter || !cert.cocycle) return fail(CheckReason::MissingModel);
  const PointConfig& model = *cert.real_model;
  if (conj_config(model) != model) return fail(CheckReason::ConjInstability);
  const Mat3& b = *cert.splitter;
  if (det(b).is_zero() || det(*cert.cocycle).is_zero()) return fail(CheckReason::CocycleMismatch);
  if (canonical_scaling(*cert.cocycle) != cocycle_of(b)) return fail(CheckReason::CocycleMismatch);
  if (model.size() != s.size() || apply(SemiProjMap(b), model) != s) return fail(CheckReason::EquivalenceMismatch);
  if (cert.witness && (!cert.witness->antiholo() || apply(*cert.witness, s) != s))
    return fail(CheckReason::WitnessInvalid);
  return {true, CheckReason::Ok};
}

CheckResult refutation_check(const PointConfig& s, const DescentCertificate& cert, const Limits& limits) {
  auto fail = [](CheckReason r) { return CheckResult{false, r}; };
  if (cert.descends) return fail(CheckReason::NotClaimed);
  if (cert.witness && (!cert.witness->antiholo() || apply(*cert.witness, s) != s))
    return fail(CheckReason::WitnessInvalid);
  ConfigClass cls = classify(s);
  switch (cls.tag) {
    case ConfigTag::Tiny:
      return fail(CheckReason::RefutationInvalid);
    case ConfigTag::HasFrame: {
      if (!cert.line_refutation.empty()) return fail(CheckReason::RefutationInvalid);
      std::vector<SemiProjMap> seen;
      for (const auto& r : cert.refutation) {
        if (!r.element.antiholo() || apply(r.element, s) != s) return fail(CheckReason::RefutationInvalid);
        if (compose(r.element, r.element) != r.square || r.square == SemiProjMap::identity())
          return fail(CheckReason::RefutationInvalid);
        if (std::find(seen.begin(), seen.end(), r.element) != seen.end())
          return fail(CheckReason::RefutationInvalid);
        seen.push_back(r.element);
      }
      std::size_t expected = equivalences(conj_config(s), s, limits).empty() ? 0 : aut_group(s, limits).size();
      if (seen.size() != expected || cert.fom_real != (expected > 0)) return fail(CheckReason::RefutationIncomplete);
      return {true, CheckReason::Ok};
    }
    case ConfigTag::Collinear:
    case ConfigTag::LinePlusPoint: {
      if (!cert.refutation.empty()) return fail(CheckReason::RefutationInvalid);
      LineReduction red = reduce_to_line(s);
      const auto& pts = red.line_part.points;
      std::vector<P1Map> seen;
      for (const auto& r : cert.line_refutation) {
        const P1Map& h = r.element;
        if (!h.antiholo()) return fail(CheckReason::RefutationInvalid);
        for (const auto& p : pts)
          if (std::find(pts.begin(), pts.end(), h.apply(p)) == pts.end()) return fail(CheckReason::RefutationInvalid);
        Mat2 sq = h.matrix() * conj(h.matrix());
        if (sq != r.square) return fail(CheckReason::RefutationInvalid);
        bool scalar = mat2_scalar(sq);
        if (scalar && sgn(sq(0, 0).re()) > 0) return fail(CheckReason::RefutationInvalid);
        if (r.reason != (scalar ? "negative-scalar" : "square-not-scalar")) return fail(CheckReason::RefutationInvalid);
        if (std::find(seen.begin(), seen.end(), h) != seen.end()) return fail(CheckReason::RefutationInvalid);
        seen.push_back(h);
      }
      std::size_t expected = pgl2_equivalences(conj_config(red.line_part), red.line_part, limits).size();
      if (seen.size() != expected || cert.fom_real != (expected > 0)) return fail(CheckReason::RefutationIncomplete);
      return {true, CheckReason::Ok};
    }
  }
  return fail(CheckReason::RefutationInvalid);
}

CheckResult check_certificate(const DescentCertificate& cert, const Limits& limits) {
  return cert.descends ? real_model_check(cert.input, cert) : refutation_check(cert.input, cert, limits);
}

}  // namespace pdescent
