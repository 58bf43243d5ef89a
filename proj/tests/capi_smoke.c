/* Copyright (c) The pdescent authors. All rights reserved.
 * Licensed under the Apache 2.0 License.
 *
 * Compiles the public header as C and exercises one descent round trip.
 */
#include <stdio.h>
#include <string.h>

#include "pdescent/pdescent.h"

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                   \
    }                                                             \
  } while (0)

int main(void) {
  pd_context* ctx = pd_context_create();
  pd_config* cfg = NULL;
  pd_config* bad = NULL;
  char* cert = NULL;
  char* check = NULL;

  EXPECT(ctx != NULL);
  EXPECT(strlen(pd_version()) > 0);
  EXPECT(pd_config_family(ctx, "S", "2+1i", &cfg) == PD_OK);
  EXPECT(pd_config_size(cfg) == 6);
  EXPECT(pd_descend(ctx, cfg, &cert) == PD_OK);
  EXPECT(strstr(cert, "\"descends\": false") != NULL);
  EXPECT(pd_check_certificate(ctx, cert, &check) == PD_OK);
  EXPECT(strstr(check, "\"valid\": true") != NULL);
  EXPECT(pd_config_parse(ctx, "[]", &bad) == PD_INVALID_INPUT);
  EXPECT(strlen(pd_context_last_error(ctx)) > 0);

  pd_string_free(cert);
  pd_string_free(check);
  pd_config_destroy(cfg);
  pd_context_destroy(ctx);
  puts("ok");
  return 0;
}
