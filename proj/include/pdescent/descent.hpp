// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pdescent/equivalence.hpp"

namespace pdescent {

using Rng = std::mt19937_64;

struct DescentOptions {
  Limits limits;
  std::uint64_t seed = 0;
};

/// The group of holomorphic and antiholomorphic maps preserving a
/// configuration. Holomorphic elements come first, each part sorted.
struct NormalizerGroup {
  std::vector<SemiProjMap> elements;
  std::size_t holomorphic_count = 0;
  std::vector<std::size_t> order_profile;  // sorted element orders
  std::string structure;                   // "C4", "C2xC2", ... or "other"
  /// table[i][j] is the index of elements[i] after elements[j].
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return elements.size(); }
};

/// Needs a frame; NeedsReduction otherwise.
NormalizerGroup normalizer(const PointConfig& s, const Limits& limits = {});

/// Names a group of order at most 8 from its sorted element orders.
std::string identify_structure(const std::vector<std::size_t>& order_profile);

struct FomResult {
  bool real = false;
  std::optional<SemiProjMap> witness;  // antiholomorphic, maps conj(S) onto S
};

/// Whether S is projectively equivalent to its conjugate. Degenerate
/// configurations are decided on the line.
FomResult fom_real(const PointConfig& s, const Limits& limits = {});

struct Refutation {
  SemiProjMap element;
  SemiProjMap square;
};

/// Failed candidates of the line problem. An antiholomorphic line map h gives
/// a real structure only if h conj(h) = mu I with mu > 0.
struct LineRefutation {
  P1Map element;
  Mat2 square;
  std::string reason;  // "square-not-scalar" or "negative-scalar"
};

struct DescentCertificate {
  PointConfig input;
  ConfigTag tag = ConfigTag::HasFrame;
  bool fom_real = false;
  std::optional<SemiProjMap> witness;
  bool descends = false;
  std::optional<Mat3> cocycle;   // A with (A, anti) an involution preserving S
  std::optional<Mat3> splitter;  // B with A = B conj(B)^-1 up to scale
  std::optional<PointConfig> real_model;
  std::vector<Refutation> refutation;
  std::vector<LineRefutation> line_refutation;
  std::string note;
};

/// Decides whether S is projectively equivalent to a conjugation-stable set,
/// and builds the model or the exhaustive refutation.
DescentCertificate descends_real(const PointConfig& s, const DescentOptions& options = {});

/// Returns B with a = B conj(B)^-1 up to a scalar, provided a conj(a) is a
/// scalar (NotACocycle otherwise). Trial matrices after the identity come
/// from rng; InternalError after 100 singular trials.
Mat3 hilbert90_split(const Mat3& a, Rng& rng);

enum class CheckReason {
  Ok,
  NotClaimed,
  MissingModel,
  ConjInstability,
  CocycleMismatch,
  EquivalenceMismatch,
  WitnessInvalid,
  RefutationInvalid,
  RefutationIncomplete,
};

const char* to_string(CheckReason reason) noexcept;

struct CheckResult {
  bool ok = false;
  CheckReason reason = CheckReason::Ok;
  explicit operator bool() const { return ok; }
};

/// Re-verifies a positive certificate by exact arithmetic only.
CheckResult real_model_check(const PointConfig& s, const DescentCertificate& cert);

/// Re-verifies a negative certificate: every listed element preserves S, its
/// square is as stated and not trivial, and the list covers the whole coset.
CheckResult refutation_check(const PointConfig& s, const DescentCertificate& cert,
                             const Limits& limits = {});

/// Dispatches on cert.descends.
CheckResult check_certificate(const DescentCertificate& cert, const Limits& limits = {});

}  // namespace pdescent
