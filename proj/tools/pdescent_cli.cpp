// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
//
// Command-line front end. Talks to the library only through the C interface.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "pdescent/pdescent.h"

namespace {

constexpr const char* kDefaultPool = "2+1i,3+2i,5+1i";

struct ContextDeleter {
  void operator()(pd_context* c) const { pd_context_destroy(c); }
};
struct ConfigDeleter {
  void operator()(pd_config* c) const { pd_config_destroy(c); }
};
using ContextPtr = std::unique_ptr<pd_context, ContextDeleter>;
using ConfigPtr = std::unique_ptr<pd_config, ConfigDeleter>;

struct Options {
  std::string in = "-";
  std::string out;
  std::string target;
  std::string variant = "S";
  std::string a;
  int m = 0;
  std::string m_range = "1..3";
  std::uint64_t seed = 0;
  std::uint32_t max_n = 20;
  std::uint32_t samples = 200;
};

bool read_text(const std::string& path, std::string& text) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) return false;
    buf << f.rdbuf();
  }
  text = buf.str();
  return true;
}

int emit(const Options& o, char* json) {
  if (!json) return 0;
  int rc = 0;
  if (o.out.empty() || o.out == "-") {
    std::fputs(json, stdout);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << json;
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      rc = 2;
    }
  }
  pd_string_free(json);
  return rc;
}

int report(pd_context* ctx, pd_status status, const Options& o, char* json) {
  int rc = emit(o, json);
  if (status != PD_OK && *pd_context_last_error(ctx)) std::cerr << "error: " << pd_context_last_error(ctx) << "\n";
  return status != PD_OK ? static_cast<int>(status) : rc;
}

ConfigPtr load_config(pd_context* ctx, const std::string& path, int& rc) {
  std::string text;
  if (!read_text(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    rc = PD_INVALID_INPUT;
    return nullptr;
  }
  pd_config* cfg = nullptr;
  pd_status st = pd_config_parse(ctx, text.c_str(), &cfg);
  if (st != PD_OK) {
    std::cerr << "error: " << pd_context_last_error(ctx) << "\n";
    rc = st;
    return nullptr;
  }
  return ConfigPtr(cfg);
}

bool parse_range(const std::string& s, int& lo, int& hi) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return false;
  try {
    std::size_t used = 0;
    lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots) return false;
    std::string rest = s.substr(dots + 2);
    hi = std::stoi(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

using Query = pd_status (*)(pd_context*, const pd_config*, char**);

int run_query(pd_context* ctx, const Options& o, Query q) {
  int rc = 0;
  ConfigPtr cfg = load_config(ctx, o.in, rc);
  if (!cfg) return rc;
  char* json = nullptr;
  pd_status st = q(ctx, cfg.get(), &json);
  return report(ctx, st, o, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact field-of-moduli and real descent decisions for point sets in the projective plane"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Output path (default stdout)");
  app.add_option("--seed", o.seed, "Seed for randomized steps (overridden by PLANAR_DESCENT_SEED)");
  app.add_option("--max-n", o.max_n, "Largest configuration accepted by exhaustive enumeration");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Input JSON {\"points\": [...]} (default stdin)");
    return sub;
  };
  auto* aut = with_input(app.add_subcommand("aut", "Projective automorphism group"));
  auto* equiv = with_input(app.add_subcommand("equiv", "All projective maps sending --in onto --target"));
  equiv->add_option("--target", o.target, "Target configuration JSON")->required();
  auto* cls = with_input(app.add_subcommand("classify", "Frame / line-plus-point / collinear / tiny"));
  auto* fom = with_input(app.add_subcommand("fom", "Is the configuration equivalent to its conjugate?"));
  auto* descend = with_input(app.add_subcommand("descend", "Real descent certificate"));
  auto* norm = with_input(app.add_subcommand("normalizer", "Holomorphic and antiholomorphic symmetries"));
  auto* check = with_input(app.add_subcommand("check", "Re-verify a certificate produced by descend"));
  auto* fam = app.add_subcommand("family", "Generate a member of the counterexample families");
  fam->add_option("--variant", o.variant, "S or Sprime");
  fam->add_option("--a", o.a, "Comma-separated parameters, e.g. 2+1i,3+2i");
  fam->add_option("--m", o.m, "Number of parameters (defaults to the length of --a)");
  auto* verify = app.add_subcommand("verify-paper", "Certify the families and the small-size battery");
  verify->add_option("--m-range", o.m_range, "Range A..B of family sizes m (default 1..3)");
  verify->add_option("--a", o.a, "Parameter pool (default 2+1i,3+2i,5+1i)");
  verify->add_option("--samples", o.samples, "Battery samples per size 1..5 (default 200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : PD_INVALID_INPUT;
  }

  if (const char* env = std::getenv("PLANAR_DESCENT_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: PLANAR_DESCENT_SEED must be an unsigned integer\n";
      return PD_INVALID_INPUT;
    }
  }

  ContextPtr ctx(pd_context_create());
  if (!ctx) return PD_INTERNAL_ERROR;
  pd_context_set_seed(ctx.get(), o.seed);
  pd_context_set_max_points(ctx.get(), o.max_n);

  if (aut->parsed()) return run_query(ctx.get(), o, pd_automorphisms);
  if (cls->parsed()) return run_query(ctx.get(), o, pd_classify);
  if (fom->parsed()) return run_query(ctx.get(), o, pd_field_of_moduli);
  if (descend->parsed()) return run_query(ctx.get(), o, pd_descend);
  if (norm->parsed()) return run_query(ctx.get(), o, pd_normalizer);

  if (equiv->parsed()) {
    int rc = 0;
    ConfigPtr src = load_config(ctx.get(), o.in, rc);
    if (!src) return rc;
    ConfigPtr dst = load_config(ctx.get(), o.target, rc);
    if (!dst) return rc;
    char* json = nullptr;
    pd_status st = pd_equivalences(ctx.get(), src.get(), dst.get(), &json);
    return report(ctx.get(), st, o, json);
  }

  if (check->parsed()) {
    std::string text;
    if (!read_text(o.in, text)) {
      std::cerr << "error: cannot read " << o.in << "\n";
      return PD_INVALID_INPUT;
    }
    char* json = nullptr;
    pd_status st = pd_check_certificate(ctx.get(), text.c_str(), &json);
    return report(ctx.get(), st, o, json);
  }

  if (fam->parsed()) {
    std::string a = o.a;
    if (a.empty()) {
      if (o.m < 1 || o.m > 3) {
        std::cerr << "error: give --a, or --m between 1 and 3 to use the default pool\n";
        return PD_INVALID_INPUT;
      }
      std::string pool = kDefaultPool;
      std::size_t cut = 0;
      for (int k = 0; k < o.m; ++k) cut = pool.find(',', cut + (k ? 1 : 0));
      a = pool.substr(0, cut);
    } else if (o.m != 0) {
      int count = 1;
      for (char ch : a) count += ch == ',';
      if (count != o.m) {
        std::cerr << "error: --m " << o.m << " does not match " << count << " parameters in --a\n";
        return PD_INVALID_INPUT;
      }
    }
    pd_config* raw = nullptr;
    pd_status st = pd_config_family(ctx.get(), o.variant.c_str(), a.c_str(), &raw);
    if (st != PD_OK) return report(ctx.get(), st, o, nullptr);
    ConfigPtr cfg(raw);
    char* json = nullptr;
    st = pd_config_to_json(ctx.get(), cfg.get(), &json);
    return report(ctx.get(), st, o, json);
  }

  if (verify->parsed()) {
    int lo = 0, hi = 0;
    if (!parse_range(o.m_range, lo, hi)) {
      std::cerr << "error: --m-range must look like A..B\n";
      return PD_INVALID_INPUT;
    }
    char* json = nullptr;
    pd_status st = pd_run_verification(ctx.get(), lo, hi, o.a.empty() ? nullptr : o.a.c_str(), o.samples, &json);
    return report(ctx.get(), st, o, json);
  }
  return PD_INVALID_INPUT;
}
