// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include <doctest.h>

#include "oracle.hpp"
#include "pdescent/families.hpp"

using namespace pdescent;

namespace {

ProjPoint pt(const char* s) { return ProjPoint::parse(s); }

PointConfig on_z0(const std::vector<GQ>& values) {
  std::vector<ProjPoint> pts;
  for (const auto& v : values) pts.emplace_back(v, GQ(1), GQ(0));
  return PointConfig(pts);
}

bool holds_projectively(const Mat3& a, const Mat3& b) { return oracle::same_projective_map(a, b); }

}  // namespace

TEST_CASE("hilbert90_split examples") {
  Rng rng(0);
  CHECK(hilbert90_split(Mat3::identity(), rng) == Mat3::identity());

  Mat3 m = half_turn().matrix();
  Mat3 b = hilbert90_split(m, rng);
  CHECK(holds_projectively(b * inverse(conj(b)), m));
  // diag(i, i, 1) is another splitting of M.
  Mat3 d = Mat3::diagonal(GQ::i(), GQ::i(), 1);
  CHECK(holds_projectively(d * inverse(conj(d)), m));

  try {
    (void)hilbert90_split(quarter_turn_conj().matrix(), rng);
    FAIL("expected not-a-cocycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACocycle);
  }
}

TEST_CASE("hilbert90_split on random cocycles") {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    Mat3 b0 = random_invertible(rng);
    // An arbitrary scale keeps a conj(a) scalar but not 1.
    Mat3 a = GQ(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3)) * (b0 * inverse(conj(b0)));
    Mat3 b = hilbert90_split(a, rng);
    CHECK(holds_projectively(a, b * inverse(conj(b))));
    // a conj(b) = lambda b for a scalar lambda.
    Mat3 lhs = a * conj(b);
    CHECK(holds_projectively(lhs, b));
  }
}

TEST_CASE("structure identification") {
  CHECK(identify_structure({1}) == "trivial");
  CHECK(identify_structure({1, 2, 4, 4}) == "C4");
  CHECK(identify_structure({1, 2, 2, 2}) == "C2xC2");
  CHECK(identify_structure({1, 2, 2, 2, 2, 2, 4, 4}) == "D4");
  CHECK(identify_structure({1, 2, 2, 2, 3, 3}) == "S3");
  CHECK(identify_structure({1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4}) == "other");
}

TEST_CASE("normalizer of the six-point family member") {
  PointConfig s = family({{GQ(2, 1)}, Variant::S});
  NormalizerGroup g = normalizer(s);
  CHECK(g.order() == 4);
  CHECK(g.holomorphic_count == 2);
  CHECK(g.structure == "C4");
  CHECK(g.order_profile == std::vector<std::size_t>{1, 2, 4, 4});
  SemiProjMap j = quarter_turn_conj();
  SemiProjMap mj = compose(half_turn(), j);
  for (const auto& e : {SemiProjMap::identity(), half_turn(), j, mj})
    CHECK(std::find(g.elements.begin(), g.elements.end(), e) != g.elements.end());
  for (std::size_t k = g.holomorphic_count; k < g.order(); ++k) CHECK(g.elements[k].antiholo());
}

TEST_CASE("normalizer of a conjugation-stable frame contains plain conjugation") {
  PointConfig s = square_frame();
  NormalizerGroup g = normalizer(s);
  CHECK(g.holomorphic_count == 24);
  CHECK(g.order() == 48);
  CHECK(std::find(g.elements.begin(), g.elements.end(), SemiProjMap(Mat3::identity(), true)) != g.elements.end());
  // Closure in the multiplication table.
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      CHECK(g.elements[g.table[i][j]] == compose(g.elements[i], g.elements[j]));
}

TEST_CASE("field of moduli") {
  PointConfig s = family({{GQ(2, 1)}, Variant::S});
  FomResult f = fom_real(s);
  CHECK(f.real);
  REQUIRE(f.witness);
  CHECK(f.witness->antiholo());
  CHECK(apply(*f.witness, s) == s);

  FomResult stable = fom_real(square_frame());
  CHECK(stable.real);

  // Standard frame plus one complex point: decided by exhaustion.
  for (const char* extra : {"(2+1i:1:1)", "(2+1i:3:1)", "(1+1i:2:1)", "(0+1i:2:1)"}) {
    CAPTURE(extra);
    PointConfig t({pt("(1:0:0)"), pt("(0:1:0)"), pt("(0:0:1)"), pt("(1:1:1)"), pt(extra)});
    bool brute = !oracle::brute_equivalences(conj_config(t), t).empty();
    FomResult r = fom_real(t);
    CHECK(r.real == brute);
    if (r.real) CHECK(apply(*r.witness, t) == t);
  }
}

TEST_CASE("a configuration whose field of moduli is not real") {
  // The frame plus (2+1i:3:1): no projective map carries it to its conjugate.
  PointConfig t({pt("(1:0:0)"), pt("(0:1:0)"), pt("(0:0:1)"), pt("(1:1:1)"), pt("(2+1i:3:1)")});
  REQUIRE(oracle::brute_equivalences(conj_config(t), t).empty());
  CHECK_FALSE(fom_real(t).real);
  NormalizerGroup g = normalizer(t);
  CHECK(g.order() == g.holomorphic_count);
  DescentCertificate c = descends_real(t);
  CHECK_FALSE(c.fom_real);
  CHECK_FALSE(c.descends);
  CHECK(c.refutation.empty());
  CHECK(refutation_check(t, c).ok);
}

TEST_CASE("descent fails for the six-point family member") {
  PointConfig s = family({{GQ(2, 1)}, Variant::S});
  DescentCertificate c = descends_real(s);
  CHECK(c.fom_real);
  CHECK_FALSE(c.descends);
  REQUIRE(c.refutation.size() == 2);
  for (const auto& r : c.refutation) {
    CHECK(r.element.antiholo());
    CHECK(r.square == half_turn());
  }
  CHECK(refutation_check(s, c).ok);

  DescentCertificate dropped = c;
  dropped.refutation.pop_back();
  CHECK(refutation_check(s, dropped).reason == CheckReason::RefutationIncomplete);
  DescentCertificate wrong = c;
  wrong.refutation[0].square = SemiProjMap::identity();
  CHECK(refutation_check(s, wrong).reason == CheckReason::RefutationInvalid);
}

TEST_CASE("descent of conjugation-stable and twisted sets") {
  DescentCertificate c = descends_real(square_frame());
  CHECK(c.descends);
  CHECK(*c.splitter == Mat3::identity());
  CHECK(*c.real_model == square_frame());
  CHECK(real_model_check(square_frame(), c).ok);

  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    TwistSample sample = random_twist_with_frame(4 + t % 3, rng);
    DescentCertificate d = descends_real(sample.twisted, {{}, static_cast<std::uint64_t>(t)});
    REQUIRE(d.descends);
    CHECK(real_model_check(sample.twisted, d).ok);
    CHECK_FALSE(equivalences(*d.real_model, sample.real_set).empty());
  }
}

TEST_CASE("real_model_check rejects tampering") {
  Rng rng(6);
  TwistSample sample = random_twist_with_frame(5, rng);
  DescentCertificate c = descends_real(sample.twisted);
  REQUIRE(c.descends);
  CHECK(real_model_check(sample.twisted, c).reason == CheckReason::Ok);

  DescentCertificate model = c;
  std::vector<ProjPoint> pts = model.real_model->points();
  pts[0] = ProjPoint(GQ(1), GQ(0, 1), GQ(7));
  model.real_model = PointConfig(pts);
  CHECK(real_model_check(sample.twisted, model).reason == CheckReason::ConjInstability);

  for (int t = 0; t < 10; ++t) {
    DescentCertificate split = c;
    split.splitter = random_invertible(rng);
    CHECK(real_model_check(sample.twisted, split).reason == CheckReason::CocycleMismatch);
  }

  DescentCertificate not_claimed = c;
  not_claimed.descends = false;
  CHECK(real_model_check(sample.twisted, not_claimed).reason == CheckReason::NotClaimed);
}

TEST_CASE("descent of tiny configurations") {
  Rng rng(12);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int t = 0; t < 20; ++t) {
      PointConfig s = random_twist(n, rng, static_cast<TwistShape>(t % 3)).twisted;
      DescentCertificate c = descends_real(s);
      CHECK(c.tag == ConfigTag::Tiny);
      CHECK(c.descends);
      CHECK(real_model_check(s, c).ok);
    }
  // Three collinear non-real points still rigidify to real ones.
  PointConfig line = on_z0({GQ(0, 1), GQ(2, 1), GQ(5, -3)});
  DescentCertificate c = descends_real(line);
  CHECK(c.descends);
  CHECK(real_model_check(line, c).ok);
}

TEST_CASE("descent of collinear and line-plus-point configurations") {
  Rng rng(14);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 4 + t % 3;
    auto shape = t % 2 ? TwistShape::Collinear : TwistShape::LinePlusPoint;
    PointConfig s = random_twist(n, rng, shape).twisted;
    DescentCertificate c = descends_real(s);
    CHECK(c.tag != ConfigTag::HasFrame);
    CHECK(c.descends);
    CHECK(real_model_check(s, c).ok);
  }
}

TEST_CASE("six collinear points with a pointless real structure do not descend") {
  // Stable under z -> -1/conj(z), whose square is -I on the line.
  PointConfig s = on_z0({GQ(2), GQ(Rational(-1, 2)), GQ(1, 2), GQ(Rational(-1, 5), Rational(-2, 5)), GQ(0, 3),
                         GQ(Rational(0), Rational(-1, 3))});
  DescentCertificate c = descends_real(s);
  CHECK(c.tag == ConfigTag::Collinear);
  CHECK(c.fom_real);
  CHECK_FALSE(c.descends);
  REQUIRE_FALSE(c.line_refutation.empty());
  for (const auto& r : c.line_refutation) CHECK(r.reason == "negative-scalar");
  CHECK(refutation_check(s, c).ok);

  DescentCertificate truncated = c;
  truncated.line_refutation.clear();
  CHECK(refutation_check(s, truncated).reason == CheckReason::RefutationIncomplete);

  // Adding a point off the line does not change the verdict.
  std::vector<ProjPoint> pts = s.points();
  pts.emplace_back(0, 0, 1);
  DescentCertificate lp = descends_real(PointConfig(pts));
  CHECK(lp.tag == ConfigTag::LinePlusPoint);
  CHECK_FALSE(lp.descends);
}

TEST_CASE("a real structure that is not split over Q(i)") {
  // Stable under z -> 3/conj(z); 3 is not a sum of two rational squares.
  PointConfig s = on_z0({GQ(1), GQ(3), GQ(2), GQ(Rational(3, 2)), GQ(0, 1), GQ(0, 3)});
  DescentCertificate c = descends_real(s);
  CHECK(c.fom_real);
  CHECK(c.descends);
  CHECK_FALSE(c.real_model);
  CHECK_FALSE(c.note.empty());
  CHECK(real_model_check(s, c).reason == CheckReason::MissingModel);
}
