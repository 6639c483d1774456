/* Plain-C smoke test for the shared library interface. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gring/gring.h"

static int failures = 0;

#define CHECK(cond)                                                     \
  do {                                                                  \
    if (!(cond)) {                                                      \
      ++failures;                                                       \
      fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);   \
    }                                                                   \
  } while (0)

int main(void) {
  CHECK(gring_version() != NULL);
  CHECK(strcmp(gring_status_name(GRING_OK), "ok") == 0);

  /* Bad group spec surfaces as a parse error with a message. */
  gring_group* bad = NULL;
  CHECK(gring_group_create("freee:2", &bad) == GRING_ERR_PARSE);
  CHECK(bad == NULL);
  CHECK(strlen(gring_last_error()) > 0);

  gring_group* G = NULL;
  CHECK(gring_group_create("free:2", &G) == GRING_OK);
  CHECK(G != NULL);

  char* spec = NULL;
  CHECK(gring_group_spec(G, &spec) == GRING_OK);
  CHECK(strcmp(spec, "free:2") == 0);
  gring_string_free(spec);

  /* Multiplication with cancellation: (x*y) * (y^-1) = x. */
  char* prod = NULL;
  CHECK(gring_mul(G, "x*y", "y^-1", &prod) == GRING_OK);
  CHECK(strcmp(prod, "x") == 0);
  gring_string_free(prod);

  char* inv = NULL;
  CHECK(gring_inv(G, "x*y^2", &inv) == GRING_OK);
  CHECK(strcmp(inv, "y^-2*x^-1") == 0);
  gring_string_free(inv);

  long len = 0;
  CHECK(gring_word_length(G, "x*y^-1*x", &len) == GRING_OK);
  CHECK(len == 3);

  /* Unknown generator is a parse error. */
  CHECK(gring_word_length(G, "q", &len) == GRING_ERR_PARSE);

  int order = -1;
  CHECK(gring_element_order(G, "x", 64, &order) == GRING_OK);
  CHECK(order == 0); /* exceeds the bound: never claimed infinite */
  CHECK(gring_element_order(G, "e", 64, &order) == GRING_OK);
  CHECK(order == 1);

  long size = 0;
  CHECK(gring_enumerate_ball(G, 3, &size) == GRING_OK);
  CHECK(size == 53);

  char* ball = NULL;
  CHECK(gring_ball_json(G, 2, &ball) == GRING_OK);
  CHECK(strstr(ball, "\"schema\"") != NULL);
  CHECK(strstr(ball, "\"kind\": \"ball\"") != NULL);
  gring_string_free(ball);

  /* Ring round trip: delta_x * delta_y = delta_{xy}. */
  gring_ring* rx = NULL;
  gring_ring* ry = NULL;
  gring_ring* rxy = NULL;
  CHECK(gring_ring_basis(G, "x", &rx) == GRING_OK);
  CHECK(gring_ring_basis(G, "y", &ry) == GRING_OK);
  CHECK(gring_ring_convolve(rx, ry, &rxy) == GRING_OK);
  char* rj = NULL;
  CHECK(gring_ring_json(rxy, &rj) == GRING_OK);
  CHECK(strstr(rj, "x*y") != NULL);
  gring_string_free(rj);
  double nv = 0.0;
  CHECK(gring_ring_norm(rxy, "lp:2", &nv) == GRING_OK);
  CHECK(nv > 0.999999 && nv < 1.000001);
  CHECK(gring_ring_norm(rxy, "lp:0.5", &nv) == GRING_ERR_DOMAIN);
  gring_ring_destroy(rx);
  gring_ring_destroy(ry);
  gring_ring_destroy(rxy);

  /* Character + derivation round trip through the classify entry point. */
  gring_character* chi = NULL;
  CHECK(gring_character_create(G, "inner:x", &chi) == GRING_OK);
  double re = 0.0, im = 0.0;
  /* (x, e) is a loop at x, so the inner character vanishes on it. */
  CHECK(gring_character_eval(chi, "x", "e", &re, &im) == GRING_OK);
  CHECK(re == 0.0 && im == 0.0);
  /* (x*y, y) runs from y^-1*x*y to x: value a(s) - a(t) = 0 - 1. */
  CHECK(gring_character_eval(chi, "x*y", "y", &re, &im) == GRING_OK);
  CHECK(re < -0.999999 && re > -1.000001 && im == 0.0);
  gring_character_destroy(chi);

  gring_derivation* d = NULL;
  CHECK(gring_derivation_create(G, "inner:x", 3, 3, &d) == GRING_OK);
  char* cj = NULL;
  int obstructed = -1;
  CHECK(gring_classify_json(d, "sup", 2, 1e-9, 4, 16, &cj, &obstructed) == GRING_OK);
  CHECK(obstructed == 0);
  CHECK(strstr(cj, "\"verdict\"") != NULL);
  gring_string_free(cj);
  gring_derivation_destroy(d);

  /* Null-argument contract. */
  CHECK(gring_group_create(NULL, &bad) == GRING_ERR_INVALID_ARG);
  CHECK(gring_mul(G, "x", "y", NULL) == GRING_ERR_INVALID_ARG);

  gring_group_destroy(G);
  gring_group_destroy(NULL); /* must be a no-op */

  if (failures == 0) {
    printf("capi smoke test: all checks passed\n");
    return 0;
  }
  fprintf(stderr, "capi smoke test: %d failure(s)\n", failures);
  return 1;
}
