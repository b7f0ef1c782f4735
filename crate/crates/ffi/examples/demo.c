#include <stdio.h>
#include <string.h>

#include "uncluttered.h"

int main(int argc, char **argv) {
    const char *g6 = argc > 1 ? argv[1] : "Dhc";
    UncGraph *g = NULL;
    if (unc_graph_from_graph6(g6, &g) != UNC_ERROR_CODE_OK) {
        fprintf(stderr, "parse: %s\n", unc_last_error_message());
        return 2;
    }

    char *cert = NULL;
    UncErrorCode rc = unc_classify_json(g, &cert);
    if (rc != UNC_ERROR_CODE_OK) {
        fprintf(stderr, "classify: %s\n", unc_last_error_message());
        unc_graph_free(g);
        return 1;
    }
    printf("%s\n", cert);
    unc_string_free(cert);

    size_t n = unc_graph_order(g);
    size_t colors[64];
    size_t k = 0, omega = 0;
    rc = unc_color(g, colors, 64, &k, &omega);
    if (rc == UNC_ERROR_CODE_OK) {
        printf("%zu colours, omega %zu:", k, omega);
        for (size_t v = 0; v < n; v++)
            printf(" %zu", colors[v]);
        printf("\n");
    } else {
        printf("color: %s\n", unc_last_error_message());
    }
    unc_graph_free(g);
    return 0;
}
