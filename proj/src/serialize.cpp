// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include "pdescent/serialize.hpp"

namespace pdescent {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j) {
  if (!j.is_string()) bad("expected a string, got " + j.dump());
  return j.get<std::string>();
}

Json opt(const auto& value) {
  if (!value) return nullptr;
  return to_json(*value);
}

ConfigTag parse_tag(const std::string& s) {
  for (ConfigTag t : {ConfigTag::HasFrame, ConfigTag::LinePlusPoint, ConfigTag::Collinear, ConfigTag::Tiny})
    if (s == to_string(t)) return t;
  bad("unknown configuration class \"" + s + "\"");
}

Json matrix_strings(std::span<const GQ> entries) {
  Json arr = Json::array();
  for (const auto& x : entries) arr.push_back(format_gq(x));
  return arr;
}

template <std::size_t N>
std::array<GQ, N> matrix_entries(const Json& j) {
  if (!j.is_array() || j.size() != N) bad("matrix must be an array of " + std::to_string(N) + " strings");
  std::array<GQ, N> a;
  for (std::size_t k = 0; k < N; ++k) a[k] = parse_gq(as_string(j[k]));
  return a;
}

}  // namespace

Json to_json(const PointConfig& s) {
  Json pts = Json::array();
  for (const auto& p : s) pts.push_back(p.to_string());
  return {{"points", pts}};
}

PointConfig config_from_json(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty()) bad("\"points\" must be a nonempty array");
  std::vector<ProjPoint> out;
  for (const auto& p : pts) out.push_back(ProjPoint::parse(as_string(p)));
  return PointConfig(std::move(out));
}

Json to_json(const Mat3& m) { return matrix_strings(m.a); }

Mat3 mat3_from_json(const Json& j) { return Mat3{matrix_entries<9>(j)}; }

Json to_json(const SemiProjMap& g) { return {{"matrix", to_json(g.matrix())}, {"antiholo", g.antiholo()}}; }

SemiProjMap map_from_json(const Json& j) {
  const Json& anti = field(j, "antiholo");
  if (!anti.is_boolean()) bad("\"antiholo\" must be a boolean");
  return SemiProjMap(mat3_from_json(field(j, "matrix")), anti.get<bool>());
}

Json to_json(const P1Map& h) { return {{"matrix", matrix_strings(h.matrix().a)}, {"antiholo", h.antiholo()}}; }

P1Map p1_map_from_json(const Json& j) {
  const Json& anti = field(j, "antiholo");
  if (!anti.is_boolean()) bad("\"antiholo\" must be a boolean");
  return P1Map(Mat2{matrix_entries<4>(field(j, "matrix"))}, anti.get<bool>());
}

Json to_json(const ConfigClass& c, std::size_t n) {
  Json j = {{"n", n}, {"class", to_string(c.tag)}};
  if (c.frame) {
    Json f = Json::array();
    for (const auto& p : *c.frame) f.push_back(p.to_string());
    j["frame"] = f;
  }
  if (c.line) j["line"] = c.line->to_string();
  if (c.apex) j["point"] = c.apex->to_string();
  return j;
}

Json to_json(const NormalizerGroup& g) {
  Json elements = Json::array();
  for (const auto& e : g.elements) elements.push_back(to_json(e));
  Json j = {{"order", g.order()},
            {"holomorphic_order", g.holomorphic_count},
            {"structure", g.structure},
            {"order_profile", g.order_profile},
            {"elements", elements}};
  if (g.order() > 8) j["table"] = g.table;
  return j;
}

Json to_json(const FomResult& f) { return {{"fom_real", f.real}, {"witness", opt(f.witness)}}; }

Json to_json(const DescentCertificate& c) {
  Json refutation = Json::array();
  for (const auto& r : c.refutation) refutation.push_back({{"element", to_json(r.element)}, {"square", to_json(r.square)}});
  Json j = {{"points", to_json(c.input)["points"]},
            {"class", to_string(c.tag)},
            {"fom_real", c.fom_real},
            {"witness", opt(c.witness)},
            {"descends", c.descends},
            {"cocycle", opt(c.cocycle)},
            {"splitter", opt(c.splitter)},
            {"real_model", opt(c.real_model)},
            {"refutation", refutation}};
  if (c.tag == ConfigTag::Collinear || c.tag == ConfigTag::LinePlusPoint) {
    Json lines = Json::array();
    for (const auto& r : c.line_refutation)
      lines.push_back({{"element", to_json(r.element)}, {"square", matrix_strings(r.square.a)}, {"reason", r.reason}});
    j["line_refutation"] = lines;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

DescentCertificate certificate_from_json(const Json& j) {
  try {
    DescentCertificate c;
    c.input = config_from_json(j);
    c.tag = parse_tag(as_string(field(j, "class")));
    auto flag = [&](const char* key) {
      const Json& v = field(j, key);
      if (!v.is_boolean()) bad(std::string("\"") + key + "\" must be a boolean");
      return v.get<bool>();
    };
    c.fom_real = flag("fom_real");
    c.descends = flag("descends");
    if (j.contains("witness") && !j["witness"].is_null()) c.witness = map_from_json(j["witness"]);
    if (j.contains("cocycle") && !j["cocycle"].is_null()) c.cocycle = mat3_from_json(j["cocycle"]);
    if (j.contains("splitter") && !j["splitter"].is_null()) c.splitter = mat3_from_json(j["splitter"]);
    if (j.contains("real_model") && !j["real_model"].is_null()) c.real_model = config_from_json(j["real_model"]);
    if (j.contains("refutation"))
      for (const auto& r : j["refutation"])
        c.refutation.push_back({map_from_json(field(r, "element")), map_from_json(field(r, "square"))});
    if (j.contains("line_refutation"))
      for (const auto& r : j["line_refutation"])
        c.line_refutation.push_back({p1_map_from_json(field(r, "element")), Mat2{matrix_entries<4>(field(r, "square"))},
                                     as_string(field(r, "reason"))});
    if (j.contains("note")) c.note = as_string(j["note"]);
    return c;
  } catch (const Json::exception& e) {
    bad(std::string("malformed certificate: ") + e.what());
  }
}

Json to_json(const VerifyReport& r) {
  const auto& o = r.options;
  Json pool = Json::array();
  for (const auto& a : o.pool) pool.push_back(format_gq(a));
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json a = Json::array();
    for (const auto& x : c.a) a.push_back(format_gq(x));
    cases.push_back({{"m", c.m},
                     {"variant", to_string(c.variant)},
                     {"n", c.config.size()},
                     {"a", a},
                     {"generic", c.genericity.generic},
                     {"aut_order_S", c.genericity.aut_order_s},
                     {"aut_order_Sprime", c.genericity.aut_order_sprime},
                     {"fom_real", c.fom_real},
                     {"witness", opt(c.witness)},
                     {"structure", c.structure},
                     {"order_profile", c.order_profile},
                     {"descends", c.certificate.descends},
                     {"certificate", to_json(c.certificate)},
                     {"skipped", c.skipped},
                     {"passed", c.passed},
                     {"failures", c.failures}});
  }
  Json sizes = Json::array();
  for (const auto& b : r.battery)
    sizes.push_back({{"n", b.n}, {"samples", b.samples}, {"descended", b.descended}, {"verified", b.verified}});
  Json failures = Json::array();
  for (const auto& c : r.battery_failures) failures.push_back(to_json(c));
  return {{"pool", pool},
          {"pool_source", o.pool_is_default ? "repository default pool (small Gaussian integers off the unit circle)"
                                            : "user supplied"},
          {"m_range", {o.m_first, o.m_last}},
          {"seed", o.seed},
          {"cases", cases},
          {"battery", {{"samples_per_size", o.samples_per_size}, {"sizes", sizes}, {"failures", failures}}},
          {"passed", r.passed}};
}

}  // namespace pdescent
