/* SPDX-License-Identifier: Apache-2.0 */

/* Compiled as plain C: proves the public header is C-clean and the shared
 * library links without any C++ runtime leaking through the interface. */

#include <stdio.h>
#include <string.h>

#include "conifold/conifold.h"

int main(void) {
  int failures = 0;

  if (strlen(conifold_version()) == 0) {
    fprintf(stderr, "empty version\n");
    ++failures;
  }

  char *value = NULL;
  if (conifold_bernoulli(8, &value) != CONIFOLD_OK) {
    fprintf(stderr, "bernoulli failed: %s\n", conifold_last_error());
    ++failures;
  } else {
    if (strcmp(value, "-1/30") != 0) {
      fprintf(stderr, "unexpected B_8: %s\n", value);
      ++failures;
    }
    conifold_string_free(value);
  }

  conifold_report *report = NULL;
  if (conifold_check_theorem(3, 6, &report) != CONIFOLD_OK) {
    fprintf(stderr, "check failed to run: %s\n", conifold_last_error());
    ++failures;
  } else {
    if (!conifold_report_passed(report)) {
      fprintf(stderr, "difference equation check failed\n");
      ++failures;
    }
    conifold_report_free(report);
  }

  if (conifold_genus_coefficient(0, &value) !=
      CONIFOLD_ERROR_INVALID_ARGUMENT) {
    fprintf(stderr, "expected invalid-argument status\n");
    ++failures;
  }

  if (failures == 0) puts("c header smoke: ok");
  return failures == 0 ? 0 : 1;
}
