// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include <doctest.h>

#include <memory>
#include <string>

#include "pdescent/pdescent.h"
#include "pdescent/serialize.hpp"

using pdescent::Json;

namespace {

struct Ctx {
  pd_context* p = pd_context_create();
  ~Ctx() { pd_context_destroy(p); }
};

struct Cfg {
  pd_config* p = nullptr;
  ~Cfg() { pd_config_destroy(p); }
};

// Calls f(out) and returns the status with the document parsed.
template <class F>
std::pair<pd_status, Json> call(F&& f) {
  char* out = nullptr;
  pd_status st = f(&out);
  Json j = out ? Json::parse(out) : Json();
  pd_string_free(out);
  return {st, j};
}

const char* kFrame = R"j({"points": ["(1:0:0)", "(0:1:0)", "(0:0:1)", "(1:1:1)"]})j";

}  // namespace

TEST_CASE("C API configuration handles") {
  Ctx ctx;
  Cfg cfg;
  REQUIRE(pd_config_parse(ctx.p, kFrame, &cfg.p) == PD_OK);
  CHECK(pd_config_size(cfg.p) == 4);
  auto [st, doc] = call([&](char** o) { return pd_config_to_json(ctx.p, cfg.p, o); });
  CHECK(st == PD_OK);
  CHECK(doc["points"].size() == 4);

  Cfg bad;
  CHECK(pd_config_parse(ctx.p, "{not json", &bad.p) == PD_INVALID_INPUT);
  CHECK(bad.p == nullptr);
  CHECK(std::string(pd_context_last_error(ctx.p)).starts_with("parse-error"));
  CHECK(pd_config_parse(ctx.p, R"j({"points": ["(1:0:0)", "(2:0:0)"]})j", &bad.p) == PD_INVALID_INPUT);
  CHECK(std::string(pd_context_last_error(ctx.p)).starts_with("degenerate-input"));

  Cfg fam;
  REQUIRE(pd_config_family(ctx.p, "Sprime", "2+1i, 3+2i", &fam.p) == PD_OK);
  CHECK(pd_config_size(fam.p) == 9);
  Cfg badfam;
  CHECK(pd_config_family(ctx.p, "T", "2+1i", &badfam.p) == PD_INVALID_INPUT);
  CHECK(pd_config_family(ctx.p, "S", "1", &badfam.p) == PD_INVALID_INPUT);
  CHECK(pd_config_family(ctx.p, "S", "2+i", &badfam.p) == PD_INVALID_INPUT);
  CHECK(pd_config_parse(nullptr, kFrame, &bad.p) == PD_INVALID_INPUT);
}

TEST_CASE("C API queries") {
  Ctx ctx;
  Cfg frame, fam;
  REQUIRE(pd_config_parse(ctx.p, kFrame, &frame.p) == PD_OK);
  REQUIRE(pd_config_family(ctx.p, "S", "2+1i", &fam.p) == PD_OK);

  auto [s1, cls] = call([&](char** o) { return pd_classify(ctx.p, frame.p, o); });
  CHECK(s1 == PD_OK);
  CHECK(cls["class"] == "HasFrame");

  auto [s2, aut] = call([&](char** o) { return pd_automorphisms(ctx.p, frame.p, o); });
  CHECK(s2 == PD_OK);
  CHECK(aut["order"] == 24);

  auto [s3, eq] = call([&](char** o) { return pd_equivalences(ctx.p, fam.p, fam.p, o); });
  CHECK(s3 == PD_OK);
  CHECK(eq["count"] == 2);

  auto [s4, fom] = call([&](char** o) { return pd_field_of_moduli(ctx.p, fam.p, o); });
  CHECK(s4 == PD_OK);
  CHECK(fom["fom_real"] == true);

  auto [s5, nor] = call([&](char** o) { return pd_normalizer(ctx.p, fam.p, o); });
  CHECK(s5 == PD_OK);
  CHECK(nor["structure"] == "C4");

  auto [s6, cert] = call([&](char** o) { return pd_descend(ctx.p, fam.p, o); });
  CHECK(s6 == PD_OK);
  CHECK(cert["descends"] == false);

  std::string text = cert.dump();
  auto [s7, chk] = call([&](char** o) { return pd_check_certificate(ctx.p, text.c_str(), o); });
  CHECK(s7 == PD_OK);
  CHECK(chk["valid"] == true);

  // Claiming descent without a model does not check out.
  Json forged = cert;
  forged["descends"] = true;
  std::string ftext = forged.dump();
  auto [s8, fchk] = call([&](char** o) { return pd_check_certificate(ctx.p, ftext.c_str(), o); });
  CHECK(s8 == PD_NEGATIVE);
  CHECK(fchk["valid"] == false);
  CHECK(fchk["reason"] == "missing-model");
}

TEST_CASE("C API degenerate configurations") {
  Ctx ctx;
  Cfg line;
  REQUIRE(pd_config_parse(ctx.p, R"j({"points": ["(0:1:0)", "(1:0:0)", "(1:1:0)", "(2:1:0)"]})j", &line.p) == PD_OK);
  auto [st, aut] = call([&](char** o) { return pd_automorphisms(ctx.p, line.p, o); });
  CHECK(st == PD_OK);
  CHECK(aut["automorphisms"] == "infinite");
  CHECK(aut["line_reduction"]["points"].size() == 4);
  CHECK(aut["line_reduction"]["automorphisms"].size() >= 1);

  auto [st2, nor] = call([&](char** o) { return pd_normalizer(ctx.p, line.p, o); });
  CHECK(st2 == PD_INVALID_INPUT);
  CHECK(std::string(pd_context_last_error(ctx.p)).starts_with("needs-reduction"));

  auto [st3, cert] = call([&](char** o) { return pd_descend(ctx.p, line.p, o); });
  CHECK(st3 == PD_OK);
  CHECK(cert["descends"] == true);
}

TEST_CASE("C API limits and determinism") {
  Ctx ctx;
  pd_context_set_max_points(ctx.p, 5);
  Cfg fam;
  REQUIRE(pd_config_family(ctx.p, "Sprime", "2+1i", &fam.p) == PD_OK);
  auto [st, doc] = call([&](char** o) { return pd_normalizer(ctx.p, fam.p, o); });
  CHECK(st == PD_INVALID_INPUT);
  CHECK(std::string(pd_context_last_error(ctx.p)).starts_with("too-large"));

  auto run = [](std::uint64_t seed) {
    Ctx c;
    pd_context_set_seed(c.p, seed);
    char* out = nullptr;
    pd_status s = pd_run_verification(c.p, 1, 1, nullptr, 4, &out);
    std::string text = out ? out : "";
    pd_string_free(out);
    return std::make_pair(s, text);
  };
  auto a = run(5), b = run(5);
  CHECK(a.first == PD_OK);
  CHECK(a.second == b.second);

  Ctx c2;
  char* out = nullptr;
  CHECK(pd_run_verification(c2.p, 1, 4, nullptr, 0, &out) == PD_INVALID_INPUT);
  CHECK(out == nullptr);
  CHECK(pd_run_verification(c2.p, 1, 2, "3+2i,5+1i", 0, &out) == PD_OK);
  Json rep = Json::parse(out);
  pd_string_free(out);
  CHECK(rep["cases"].size() == 4);
  CHECK(rep["pool"] == Json::array({"3+2i", "5+1i"}));
}
