/* Copyright (c) The pdescent authors. All rights reserved.
 * Licensed under the Apache 2.0 License.
 *
 * C interface to the pdescent library. Configurations are opaque handles;
 * every query returns a pd_status and, on success, a JSON document that the
 * caller releases with pd_string_free. On failure the context keeps a
 * human-readable message retrievable with pd_context_last_error.
 */
#ifndef PDESCENT_H
#define PDESCENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PD_API __declspec(dllexport)
#else
#define PD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_NEGATIVE = 1,       /* a verdict that was asserted positive came out negative */
  PD_INVALID_INPUT = 2,
  PD_INTERNAL_ERROR = 3
} pd_status;

typedef struct pd_context pd_context;
typedef struct pd_config pd_config;

PD_API const char* pd_version(void);

PD_API pd_context* pd_context_create(void);
PD_API void pd_context_destroy(pd_context* ctx);
PD_API void pd_context_set_seed(pd_context* ctx, uint64_t seed);
PD_API void pd_context_set_max_points(pd_context* ctx, uint32_t max_points);
/* Message of the last failed call on this context, "" if none. */
PD_API const char* pd_context_last_error(const pd_context* ctx);

/* {"points": ["(x:y:z)", ...]} */
PD_API pd_status pd_config_parse(pd_context* ctx, const char* json, pd_config** out);
/* variant "S" or "Sprime"; a_list is comma separated, e.g. "2+1i,3+2i". */
PD_API pd_status pd_config_family(pd_context* ctx, const char* variant, const char* a_list, pd_config** out);
PD_API void pd_config_destroy(pd_config* cfg);
PD_API size_t pd_config_size(const pd_config* cfg);
PD_API pd_status pd_config_to_json(pd_context* ctx, const pd_config* cfg, char** out_json);

PD_API pd_status pd_classify(pd_context* ctx, const pd_config* cfg, char** out_json);
PD_API pd_status pd_automorphisms(pd_context* ctx, const pd_config* cfg, char** out_json);
PD_API pd_status pd_equivalences(pd_context* ctx, const pd_config* source, const pd_config* target,
                                 char** out_json);
PD_API pd_status pd_field_of_moduli(pd_context* ctx, const pd_config* cfg, char** out_json);
PD_API pd_status pd_normalizer(pd_context* ctx, const pd_config* cfg, char** out_json);
PD_API pd_status pd_descend(pd_context* ctx, const pd_config* cfg, char** out_json);

/* Re-verifies a certificate produced by pd_descend. PD_NEGATIVE when it does
 * not check out; the output names the reason either way. */
PD_API pd_status pd_check_certificate(pd_context* ctx, const char* certificate_json, char** out_json);

/* Families for m in [m_first, m_last] (empty when m_last < m_first) using the
 * first m entries of a_pool (NULL for the default pool), plus samples_per_size
 * twisted real configurations of each size 1..5. PD_NEGATIVE if any
 * assertion fails; the report is produced either way. */
PD_API pd_status pd_run_verification(pd_context* ctx, int m_first, int m_last, const char* a_pool,
                                     uint32_t samples_per_size, char** out_json);

PD_API void pd_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PDESCENT_H */
