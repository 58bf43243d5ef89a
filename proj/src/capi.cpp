// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include "pdescent/pdescent.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "pdescent/serialize.hpp"

struct pd_context {
  pdescent::Limits limits;
  std::uint64_t seed = 0;
  std::string last_error;
};

struct pd_config {
  pdescent::PointConfig points;
};

namespace {

using namespace pdescent;

pd_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InternalError:
    case ErrorCode::NotACocycle:
      return PD_INTERNAL_ERROR;
    default:
      return PD_INVALID_INPUT;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, which returns a JSON document and a status, translating
// exceptions into status codes and the context's error message.
template <class Body>
pd_status guarded(pd_context* ctx, char** out_json, Body&& body) {
  if (!ctx) return PD_INVALID_INPUT;
  ctx->last_error.clear();
  if (out_json) *out_json = nullptr;
  try {
    auto [doc, status] = body();
    if (out_json) *out_json = dup_string(doc.dump(2) + "\n");
    return status;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const Json::exception& e) {
    ctx->last_error = std::string("parse-error: ") + e.what();
    return PD_INVALID_INPUT;
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal-error: ") + e.what();
    return PD_INTERNAL_ERROR;
  }
}

std::pair<Json, pd_status> ok(Json j) { return {std::move(j), PD_OK}; }

std::vector<GQ> parse_list(const char* text) {
  std::vector<GQ> out;
  std::string s(text ? text : "");
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    out.push_back(parse_gq(item));
    start = end + 1;
  }
  return out;
}

Json line_reduction_json(const LineReduction& red, const Limits& limits) {
  Json pts = Json::array();
  for (const auto& p : red.line_part.points) pts.push_back(p.to_string());
  Json j = {{"chart", to_json(red.line_part.chart)}, {"points", pts}};
  if (red.residue) j["residue"] = red.residue->to_string();
  if (red.line_part.points.size() >= 3) {
    Json maps = Json::array();
    for (const auto& h : pgl2_equivalences(red.line_part, red.line_part, limits)) maps.push_back(to_json(h));
    j["automorphisms"] = maps;
  }
  return j;
}

}  // namespace

extern "C" {

const char* pd_version(void) { return "0.1.0"; }

pd_context* pd_context_create(void) { return new (std::nothrow) pd_context(); }

void pd_context_destroy(pd_context* ctx) { delete ctx; }

void pd_context_set_seed(pd_context* ctx, uint64_t seed) {
  if (ctx) ctx->seed = seed;
}

void pd_context_set_max_points(pd_context* ctx, uint32_t max_points) {
  if (ctx) ctx->limits.max_points = max_points;
}

const char* pd_context_last_error(const pd_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

pd_status pd_config_parse(pd_context* ctx, const char* json, pd_config** out) {
  if (!out || !json) return PD_INVALID_INPUT;
  *out = nullptr;
  return guarded(ctx, nullptr, [&] {
    *out = new pd_config{config_from_json(Json::parse(json))};
    return ok(nullptr);
  });
}

pd_status pd_config_family(pd_context* ctx, const char* variant, const char* a_list, pd_config** out) {
  if (!out || !variant) return PD_INVALID_INPUT;
  *out = nullptr;
  return guarded(ctx, nullptr, [&] {
    *out = new pd_config{family({parse_list(a_list), parse_variant(variant)})};
    return ok(nullptr);
  });
}

void pd_config_destroy(pd_config* cfg) { delete cfg; }

size_t pd_config_size(const pd_config* cfg) { return cfg ? cfg->points.size() : 0; }

pd_status pd_config_to_json(pd_context* ctx, const pd_config* cfg, char** out_json) {
  if (!cfg) return PD_INVALID_INPUT;
  return guarded(ctx, out_json, [&] { return ok(to_json(cfg->points)); });
}

pd_status pd_classify(pd_context* ctx, const pd_config* cfg, char** out_json) {
  if (!cfg) return PD_INVALID_INPUT;
  return guarded(ctx, out_json, [&] { return ok(to_json(classify(cfg->points), cfg->points.size())); });
}

pd_status pd_automorphisms(pd_context* ctx, const pd_config* cfg, char** out_json) {
  if (!cfg) return PD_INVALID_INPUT;
  return guarded(ctx, out_json, [&] {
    const PointConfig& s = cfg->points;
    ConfigClass cls = classify(s);
    Json j = {{"n", s.size()}, {"class", to_string(cls.tag)}};
    if (cls.tag == ConfigTag::HasFrame) {
      Json maps = Json::array();
      for (const auto& g : aut_group(s, ctx->limits)) maps.push_back(to_json(g));
      j["order"] = maps.size();
      j["maps"] = maps;
    } else {
      j["automorphisms"] = "infinite";
      if (cls.tag != ConfigTag::Tiny) j["line_reduction"] = line_reduction_json(reduce_to_line(s), ctx->limits);
    }
    return ok(j);
  });
}

pd_status pd_equivalences(pd_context* ctx, const pd_config* source, const pd_config* target, char** out_json) {
  if (!source || !target) return PD_INVALID_INPUT;
  return guarded(ctx, out_json, [&] {
    Json maps = Json::array();
    for (const auto& g : equivalences(source->points, target->points, ctx->limits)) maps.push_back(to_json(g));
    return ok({{"count", maps.size()}, {"maps", maps}});
  });
}

pd_status pd_field_of_moduli(pd_context* ctx, const pd_config* cfg, char** out_json) {
  if (!cfg) return PD_INVALID_INPUT;
  return guarded(ctx, out_json, [&] { return ok(to_json(fom_real(cfg->points, ctx->limits))); });
}

pd_status pd_normalizer(pd_context* ctx, const pd_config* cfg, char** out_json) {
  if (!cfg) return PD_INVALID_INPUT;
  return guarded(ctx, out_json, [&] { return ok(to_json(normalizer(cfg->points, ctx->limits))); });
}

pd_status pd_descend(pd_context* ctx, const pd_config* cfg, char** out_json) {
  if (!cfg) return PD_INVALID_INPUT;
  return guarded(ctx, out_json, [&] { return ok(to_json(descends_real(cfg->points, {ctx->limits, ctx->seed}))); });
}

pd_status pd_check_certificate(pd_context* ctx, const char* certificate_json, char** out_json) {
  if (!certificate_json) return PD_INVALID_INPUT;
  return guarded(ctx, out_json, [&] {
    DescentCertificate cert = certificate_from_json(Json::parse(certificate_json));
    CheckResult r = check_certificate(cert, ctx->limits);
    Json j = {{"valid", r.ok}, {"reason", to_string(r.reason)}, {"descends", cert.descends}};
    return std::pair<Json, pd_status>{j, r.ok ? PD_OK : PD_NEGATIVE};
  });
}

pd_status pd_run_verification(pd_context* ctx, int m_first, int m_last, const char* a_pool,
                              uint32_t samples_per_size, char** out_json) {
  return guarded(ctx, out_json, [&] {
    VerifyOptions o;
    o.m_first = m_first;
    o.m_last = m_last;
    if (a_pool) {
      o.pool = parse_list(a_pool);
      o.pool_is_default = false;
    }
    o.seed = ctx->seed;
    o.samples_per_size = samples_per_size;
    o.limits = ctx->limits;
    VerifyReport r = run_verification(o);
    return std::pair<Json, pd_status>{to_json(r), r.passed ? PD_OK : PD_NEGATIVE};
  });
}

void pd_string_free(char* s) { std::free(s); }

}  // extern "C"
