/* Minimal C consumer: computes the local Picard group of the binoid
 * (x, y, z | x + y = 2z) and of the hollow-triangle complex.
 *
 * Build (from the workspace root, after `cargo build --release -p picloc-ffi`):
 *   cc crates/ffi/examples/demo.c -Icrates/ffi/include \
 *      -Ltarget/release -lpicloc_ffi -lm -o picloc_demo
 *   LD_LIBRARY_PATH=target/release ./picloc_demo
 */
#include <stdio.h>
#include <stdlib.h>

#include "picloc.h"

static void bail(const char *where) {
    char *message = picloc_last_error();
    fprintf(stderr, "%s failed: %s\n", where, message ? message : "(no message)");
    picloc_string_free(message);
    exit(1);
}

int main(void) {
    const char *presentation =
        "{\"generators\":[\"x\",\"y\",\"z\"],"
        "\"congruences\":[[[1,1,0],[0,0,2]]],\"infinities\":[]}";
    PiclocReport *report = NULL;
    if (picloc_binoid(presentation, &report) != PICLOC_STATUS_OK) {
        bail("picloc_binoid");
    }
    printf("degrees: %zu\n", picloc_report_degree_count(report));
    printf("rank H^1 = %lld, torsion factors: %lld\n",
           (long long)picloc_report_free_rank(report, 1),
           (long long)picloc_report_torsion_count(report, 1));
    char *factor = picloc_report_torsion_factor(report, 1, 0);
    printf("Pic^loc = Z/%s\n", factor);
    picloc_string_free(factor);
    picloc_report_free(report);

    const char *facets = "x y\ny z\nx z\n";
    if (picloc_simplicial(facets, true, &report) != PICLOC_STATUS_OK) {
        bail("picloc_simplicial");
    }
    char *json = picloc_report_json(report);
    printf("triangle report: %s\n", json);
    picloc_string_free(json);
    picloc_report_free(report);
    return 0;
}
