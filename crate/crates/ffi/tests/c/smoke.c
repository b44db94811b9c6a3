#include <stdio.h>
#include <string.h>

#include "trianguloid.h"

int main(void) {
    const char *k22 = "{\"m\":2,\"n\":2,\"neighborhoods\":[[1,2],[1,2]]}";
    TgGraph *g = NULL;
    if (tg_graph_from_json(k22, &g) != TG_STATUS_OK) {
        fprintf(stderr, "graph: %s\n", tg_last_error());
        return 1;
    }
    size_t count = 0;
    if (tg_enumerate_count(g, TG_METHOD_TREES, 0, 1, &count) != TG_STATUS_OK || count != 2) {
        fprintf(stderr, "count %zu\n", count);
        return 1;
    }
    tg_graph_free(g);
    if (tg_graph_from_json("[", &g) != TG_STATUS_PARSE_ERROR || strlen(tg_last_error()) == 0) {
        return 1;
    }
    printf("ok %zu\n", count);
    return 0;
}
