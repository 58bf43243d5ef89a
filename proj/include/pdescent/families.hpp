// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdescent/descent.hpp"

namespace pdescent {

enum class Variant { S, SPrime };

const char* to_string(Variant v) noexcept;
/// Accepts "S" and "Sprime"; InvalidParameter otherwise.
Variant parse_variant(std::string_view text);

struct FamilyParams {
  std::vector<GQ> a;
  Variant variant = Variant::S;
};

/// The four points (+-1:0:1), (0:+-1:1).
PointConfig square_frame();

/// square_frame() plus (a:1:0), (1:-conj(a):0) for each parameter, and (0:0:1)
/// for the primed variant. Parameters must be nonzero, off the unit circle,
/// and produce distinct points (InvalidParameter otherwise).
PointConfig family(const FamilyParams& params);

/// diag(-1, -1, 1).
SemiProjMap half_turn();
/// (x:y:z) -> (-conj(y) : conj(x) : conj(z)); squares to half_turn().
SemiProjMap quarter_turn_conj();

struct GenericityReport {
  bool generic = false;
  std::size_t aut_order_s = 0;
  std::size_t aut_order_sprime = 0;
};

/// Generic iff both variants have automorphism group exactly {I, half_turn()}.
GenericityReport certify_generic(const std::vector<GQ>& a, const Limits& limits = {});

/// {(0:0:1), (0:1:0), (1:0:0), (0:1:1), (1:0:1)}.
PointConfig canonical_two_lines_set();

/// For five points lying on two lines with at least three points each, a
/// holomorphic map onto canonical_two_lines_set(); nullopt otherwise.
std::optional<SemiProjMap> canonical_two_lines(const PointConfig& s);

/// 2+1i, 3+2i, 5+1i.
std::vector<GQ> default_pool();

enum class TwistShape { General, Collinear, LinePlusPoint };

struct TwistSample {
  PointConfig real_set;  // conjugation-stable
  Mat3 twist;            // holomorphic, invertible
  PointConfig twisted;   // twist applied to real_set
};

/// A random conjugation-stable configuration of n points with the given
/// shape, moved by a random invertible Q(i) matrix. Entries are small
/// Gaussian integers.
TwistSample random_twist(std::size_t n, Rng& rng, TwistShape shape = TwistShape::General);
/// Like random_twist with TwistShape::General, redrawn until the set has a frame.
TwistSample random_twist_with_frame(std::size_t n, Rng& rng);
Mat3 random_invertible(Rng& rng, long bound = 2);

struct FamilyCase {
  int m = 0;
  Variant variant = Variant::S;
  std::vector<GQ> a;
  PointConfig config;
  GenericityReport genericity;
  bool fom_real = false;
  std::optional<SemiProjMap> witness;
  std::string structure;
  std::vector<std::size_t> order_profile;
  DescentCertificate certificate;
  bool skipped = false;  // non-generic parameters are reported, not asserted
  bool passed = false;
  std::vector<std::string> failures;
};

struct BatterySize {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t descended = 0;
  std::size_t verified = 0;
};

struct VerifyOptions {
  int m_first = 1;
  int m_last = 3;
  std::vector<GQ> pool = default_pool();
  bool pool_is_default = true;
  std::uint64_t seed = 0;
  std::size_t samples_per_size = 200;
  Limits limits;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<FamilyCase> cases;
  std::vector<BatterySize> battery;
  std::vector<DescentCertificate> battery_failures;
  bool passed = true;
};

/// Runs both directions: the families for m in [m_first, m_last] with the
/// first m pool entries (negative descent), and the seeded battery of twisted
/// real configurations of sizes 1 to 5 (positive descent).
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace pdescent
