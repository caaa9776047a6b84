#ifndef DISTGRAPH_H
#define DISTGRAPH_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes shared by every call.
typedef enum DgStatus {
  DG_STATUS_OK = 0,
  DG_STATUS_INFEASIBLE = 1,
  DG_STATUS_INVALID_INPUT = 2,
  DG_STATUS_NULL_POINTER = 3,
  DG_STATUS_INTERNAL = 4,
} DgStatus;

// An exact embedding of a graph in `Q^n`.
typedef struct DgEmbedding DgEmbedding;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. Valid until the
// next call into this library on the same thread.
const char *dg_last_error(void);

// `K_{2,3}` in `Q^3` at squared distance `r` (a string such as "3/2").
enum DgStatus dg_embed_k23(const char *r, struct DgEmbedding **out);

// The book graph in `Q^n` at squared distance 2.
enum DgStatus dg_embed_book(size_t n, struct DgEmbedding **out);

// `K_{1,3,3}` in `Q^5` at squared distance `r`.
enum DgStatus dg_embed_k133(const char *r, struct DgEmbedding **out);

// `K_{4m+1}` in `Q^{4m+3}` at squared distance `r`.
enum DgStatus dg_embed_clique_extension(uint64_t m, const char *r, struct DgEmbedding **out);

// Parses an embedding from its JSON form.
enum DgStatus dg_embedding_from_json(const char *json, struct DgEmbedding **out);

// Checks every edge exactly; with `faithful`, also that no non-edge sits at
// the edge distance. Writes the verdict to `passed`.
enum DgStatus dg_embedding_verify(const struct DgEmbedding *e, bool faithful, bool *passed);

// Number of vertices, or 0 for NULL.
size_t dg_embedding_vertex_count(const struct DgEmbedding *e);

// Ambient dimension `n`, or 0 for NULL.
size_t dg_embedding_dimension(const struct DgEmbedding *e);

// JSON form of the embedding; free the string with `dg_string_free`.
enum DgStatus dg_embedding_to_json(const struct DgEmbedding *e, char **out);

void dg_embedding_free(struct DgEmbedding *e);

void dg_string_free(char *s);

// Whether `sqrt(r)` is a distance between points of `Q^n`.
enum DgStatus dg_is_distance_realized(size_t n, const char *r, bool *out);

// Writes `k = out[0]^2 + out[1]^2 + out[2]^2`, or returns `Infeasible` when
// `k = 4^a (8b + 7)`.
enum DgStatus dg_three_squares(uint64_t k, uint64_t *out);

// Writes four squares summing to `k` into `out[0..4]`.
enum DgStatus dg_four_squares(uint64_t k, uint64_t *out);

enum DgStatus dg_schoenberg_c1(uint64_t n, uint64_t *out);

// Dimension of the complete multipartite graph with `alpha` parts of size
// 1, `beta` of size 2 and `gamma` of size at least 3.
enum DgStatus dg_multipartite_dimension(uint64_t alpha,
                                        uint64_t beta,
                                        uint64_t gamma,
                                        uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DISTGRAPH_H */
