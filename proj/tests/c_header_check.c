/* Copyright 2026 The cedist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiled as plain C: the public header must work without a C++ compiler,
 * and the round trip below exercises the shared library from C. */

#include <stdio.h>
#include <string.h>

#include "cedist.h"

int main(void) {
    ced_genset* g = NULL;
    ced_genset* aug = NULL;
    char* window = NULL;
    int commuting = -1;
    int rc = 1;

    if (ced_genset_parse("n=2 fmt=paulivec\n1+D^3, 1+D^2 | D^2, D\n", 0, &g) != CED_OK) goto done;
    if (ced_genset_augment(g, CED_AUGMENT_SINGLE, &aug) != CED_OK) goto done;
    if (ced_genset_check_commuting(aug, &commuting) != CED_OK || commuting != 1) goto done;
    if (ced_genset_window(aug, 0, &window) != CED_OK) goto done;
    if (strcmp(window, "ZZX|IXZ|XZZ|ZII") != 0) goto done;
    if (ced_genset_parse("nonsense", 0, &g) != CED_ERR_PARSE) goto done;
    if (strlen(ced_last_error()) == 0) goto done;
    rc = 0;

done:
    ced_string_free(window);
    ced_genset_free(aug);
    ced_genset_free(g);
    if (rc != 0) fprintf(stderr, "c header check failed: %s\n", ced_last_error());
    return rc;
}
