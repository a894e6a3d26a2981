/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "zakspace/zakspace.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kD4 = "\"bundled:d4_square\"";

static void handles(void) {
  zs_action* a = NULL;
  zs_dual* d = NULL;
  zs_zak* z = NULL;
  zs_zak* back = NULL;
  char* buf = NULL;
  size_t len = 0;
  int pass = 0;
  double f[18], g[18];
  size_t i;

  EXPECT(zs_action_from_json(kD4, &a) == ZS_OK);
  EXPECT(zs_action_points(a) == 9);
  EXPECT(zs_action_order(a) == 8);
  EXPECT(zs_action_orbits(a) == 3);
  EXPECT(zs_dual_compute(a, "dihedral:4", 0, &d) == ZS_OK);
  EXPECT(zs_dual_size(d) == 5);
  EXPECT(zs_dual_dim(d, 4) == 2 || zs_dual_dim(d, 0) == 2);

  for (i = 0; i < 18; ++i) f[i] = sin(1.0 + 0.7 * (double)i);
  EXPECT(zs_zak_forward(a, d, f, 9, 2, &z) == ZS_OK);
  EXPECT(zs_zak_inverse(z, g, 9) == ZS_OK);
  for (i = 0; i < 18; ++i) EXPECT(fabs(f[i] - g[i]) < 1e-11);
  EXPECT(zs_zak_verify(z, f, 9, 0.0, &buf, &len, &pass) == ZS_OK);
  EXPECT(pass == 1);
  EXPECT(len > 0 && buf[len - 1] == '\n');
  zs_free_buffer(buf);

  EXPECT(zs_zak_to_binary(z, &buf, &len) == ZS_OK);
  EXPECT(len > 24 && memcmp(buf, "ZAK1", 4) == 0);
  EXPECT(zs_zak_from_binary(buf, len, a, d, &back) == ZS_OK);
  EXPECT(zs_zak_from_binary(buf, 10, a, d, &back) == ZS_PARSE_ERROR);
  zs_free_buffer(buf);
  EXPECT(zs_zak_to_json(back, &buf, &len) == ZS_OK);
  zs_zak_free(back);
  back = NULL;
  EXPECT(zs_zak_from_json(buf, &back) == ZS_OK);
  zs_free_buffer(buf);
  EXPECT(zs_zak_inverse(back, g, 9) == ZS_OK);
  for (i = 0; i < 18; ++i) EXPECT(fabs(f[i] - g[i]) < 1e-11);
  EXPECT(zs_zak_inverse(back, g, 8) == ZS_SIZE_MISMATCH);

  zs_zak_free(back);
  zs_zak_free(z);
  zs_dual_free(d);
  zs_action_free(a);
}

static void errors(void) {
  zs_action* a = NULL;
  zs_dual* d = NULL;
  char* buf = NULL;
  size_t len = 0;
  int pass = 0;
  zs_options opts;

  EXPECT(zs_action_from_json("{\"order\": 2,", &a) == ZS_PARSE_ERROR);
  EXPECT(a == NULL);
  EXPECT(strstr(zs_last_error_json(), "\"ParseError\"") != NULL);
  EXPECT(strstr(zs_last_error_json(), "\"line\"") != NULL);
  EXPECT(strcmp(zs_status_name(ZS_NOT_ASSOCIATIVE), "NotAssociative") == 0);
  EXPECT(zs_action_from_json("\"bundled:d3_triangle\"", &a) == ZS_OK);
  EXPECT(zs_dual_compute(a, "cyclic:6", 0, &d) == ZS_DUAL_GROUP_MISMATCH);
  EXPECT(strlen(zs_last_error_message()) > 0);
  zs_action_free(a);
  EXPECT(zs_action_from_json(NULL, &a) == ZS_INVALID_ARGUMENT);

  zs_options_default(&opts);
  EXPECT(opts.jobs == 1);
  EXPECT(zs_group_inspect_json("{\"order\": 2, \"table\": [[0, 1], [1, 1]], \"points\": 1, \"perm\": [[0], [0]]}", &opts, &buf, &len, &pass) ==
         ZS_NO_INVERSE);
  EXPECT(zs_euclid_certify_json("\"bundled:p2\"", &opts, &buf, &len, &pass) == ZS_OK);
  EXPECT(pass == 1);
  EXPECT(strstr(buf, "\"index\": 2") != NULL);
  zs_free_buffer(buf);
}

static void documents(void) {
  zs_options opts;
  char* one = NULL;
  char* many = NULL;
  size_t n1 = 0, n2 = 0;
  int pass = 0;
  zs_options_default(&opts);
  EXPECT(zs_suite_all_json(&opts, &one, &n1, &pass) == ZS_OK);
  EXPECT(pass == 1);
  opts.jobs = 8;
  EXPECT(zs_suite_all_json(&opts, &many, &n2, &pass) == ZS_OK);
  EXPECT(n1 == n2 && memcmp(one, many, n1) == 0);
  zs_free_buffer(one);
  zs_free_buffer(many);
  EXPECT(zs_bands_run_csv("{\"t\": 1, \"M\": 1, \"N\": 4, \"V\": [0]}", &opts, &one, &n1) == ZS_OK);
  EXPECT(strncmp(one, "k_index,k_value,band_index,energy\n", 34) == 0);
  zs_free_buffer(one);
}

int main(void) {
  EXPECT(strlen(zs_version()) > 0);
  handles();
  errors();
  documents();
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
