#include <stdio.h>
#include <string.h>

#include "distgraph.h"

int main(void) {
    DgEmbedding *e = NULL;
    bool passed = false;
    char *json = NULL;
    uint64_t sq[3];

    if (dg_embed_k133("2", &e) != DG_STATUS_OK) return 10;
    if (dg_embedding_vertex_count(e) != 7 || dg_embedding_dimension(e) != 5) return 11;
    if (dg_embedding_verify(e, false, &passed) != DG_STATUS_OK || !passed) return 12;
    if (dg_embedding_to_json(e, &json) != DG_STATUS_OK || strstr(json, "\"r\":\"2\"") == NULL) return 13;
    dg_string_free(json);
    dg_embedding_free(e);

    e = NULL;
    if (dg_embed_k23("7", &e) != DG_STATUS_INFEASIBLE || e != NULL) return 20;
    if (dg_last_error() == NULL || strstr(dg_last_error(), "(mod 8)") == NULL) return 21;
    if (dg_three_squares(7, sq) != DG_STATUS_INFEASIBLE) return 22;
    if (dg_three_squares(6, sq) != DG_STATUS_OK || sq[0] * sq[0] + sq[1] * sq[1] + sq[2] * sq[2] != 6) return 23;
    if (dg_embed_book(3, NULL) != DG_STATUS_NULL_POINTER) return 24;

    printf("ok\n");
    return 0;
}
