/* Exercises the shared library from plain C. */
#include <stdio.h>
#include <string.h>

#include "cylproj/cylproj.h"

int main(void) {
    const char* text =
        "set e1 = rect{ y:{2/3}, z:[1/2,1) } | rect{ y:{1/3}, z:[0,1/2) }\n";
    cylproj_model* model = NULL;
    if (cylproj_model_parse(text, &model) != CYLPROJ_OK) {
        fprintf(stderr, "parse: %s\n", cylproj_last_error());
        return 1;
    }
    char* out = NULL;
    int verdict = CYLPROJ_VERDICT_NOT_APPLICABLE;
    if (cylproj_converge(model, "e1", "y", 4, CYLPROJ_FORMAT_CSV, &out, &verdict) != CYLPROJ_OK) {
        fprintf(stderr, "converge: %s\n", cylproj_last_error());
        cylproj_model_free(model);
        return 1;
    }
    int ok = (verdict == CYLPROJ_VERDICT_FAILS) && strstr(out, "lambda_C_y=1") != NULL &&
             strstr(out, "sup_limit=0") != NULL;
    fputs(out, stdout);
    cylproj_string_free(out);
    cylproj_model_free(model);
    if (!ok) {
        fprintf(stderr, "unexpected convergence result\n");
        return 1;
    }
    puts("capi smoke ok");
    return 0;
}
