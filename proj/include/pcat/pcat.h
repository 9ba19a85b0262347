#ifndef PCAT_PCAT_H
#define PCAT_PCAT_H

/* C interface to the partition category library.
 *
 * Every fallible call returns a pcat_status; on failure pcat_last_error()
 * describes the problem (per thread, valid until the next failing call).
 * Strings returned through char** are owned by the caller and released with
 * pcat_string_free(). Block ids and matrix/model indices are 1-based. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pcat_partition pcat_partition;
typedef struct pcat_truncation pcat_truncation;
typedef struct pcat_oracle pcat_oracle;
typedef struct pcat_matrix pcat_matrix;
typedef struct pcat_model pcat_model;

typedef enum pcat_status {
  PCAT_OK = 0,
  PCAT_ERR_INTERNAL = 1,
  PCAT_ERR_INPUT = 2,
  PCAT_ERR_RESOURCE = 3,
  PCAT_ERR_PRECONDITION = 4
} pcat_status;

typedef enum pcat_answer { PCAT_NO = 0, PCAT_YES = 1, PCAT_UNKNOWN = 2 } pcat_answer;

typedef enum pcat_side { PCAT_LEFT = 0, PCAT_RIGHT = 1 } pcat_side;
typedef enum pcat_direction { PCAT_UP = 0, PCAT_DOWN = 1 } pcat_direction;
typedef enum pcat_witness_op {
  PCAT_WITNESS_PRODUCT = 0,
  PCAT_WITNESS_INVERSE = 1,
  PCAT_WITNESS_CONJUGATE = 2
} pcat_witness_op;

const char* pcat_last_error(void);
void pcat_string_free(char* s);

/* Partitions */

/* `k;l;b1,...` with arbitrary labels. */
pcat_status pcat_partition_parse(const char* text, pcat_partition** out);
pcat_status pcat_partition_from_labels(size_t k, size_t l, const int64_t* labels,
                                       pcat_partition** out);
/* P(0,l) partition of a word such as "abab" or "a[27]a". */
pcat_status pcat_partition_from_word(const char* word, pcat_partition** out);
/* Mnemonics: singleton, dsingleton, pair, id, fourblock, cross, halflib,
 * h:s=N, k:l=N, primary. */
pcat_status pcat_partition_named(const char* mnemonic, pcat_partition** out);
pcat_partition* pcat_partition_clone(const pcat_partition* p);
void pcat_partition_free(pcat_partition* p);

size_t pcat_partition_upper_count(const pcat_partition* p);
size_t pcat_partition_lower_count(const pcat_partition* p);
size_t pcat_partition_block_count(const pcat_partition* p);
/* Writes k+l canonical 1-based block ids; cap must be at least k+l. */
pcat_status pcat_partition_blocks(const pcat_partition* p, uint32_t* out, size_t cap);
int pcat_partition_equal(const pcat_partition* a, const pcat_partition* b);

pcat_status pcat_partition_to_text(const pcat_partition* p, char** out);
/* Unreduced counterclockwise reading. */
pcat_status pcat_partition_to_word(const pcat_partition* p, char** out);
/* Reduced word in the free product. */
pcat_status pcat_partition_group_word(const pcat_partition* p, char** out);

pcat_status pcat_tensor(const pcat_partition* p, const pcat_partition* q,
                        pcat_partition** out);
/* qp with p on top; loops may be NULL. */
pcat_status pcat_compose(const pcat_partition* p, const pcat_partition* q,
                         pcat_partition** out, size_t* loops);
pcat_status pcat_involute(const pcat_partition* p, pcat_partition** out);
pcat_status pcat_rotate(const pcat_partition* p, pcat_side side, pcat_direction direction,
                        pcat_partition** out);
pcat_status pcat_delta(const pcat_partition* p, const size_t* upper, const size_t* lower,
                       int* out);

pcat_status pcat_connect_blocks(const pcat_partition* p, uint32_t b1, uint32_t b2,
                                pcat_partition** out);
pcat_status pcat_parity_reduce(const pcat_partition* p, pcat_partition** out);
pcat_status pcat_single_leg_version(const pcat_partition* p, pcat_partition** out);
pcat_status pcat_is_single_leg(const pcat_partition* p, int* out);

/* Words */

pcat_status pcat_word_reduce(const char* word, char** out);
pcat_status pcat_word_multiply(const char* a, const char* b, char** out);
pcat_status pcat_word_inverse(const char* word, char** out);

/* Category truncations */

pcat_status pcat_closure(const pcat_partition* const* generators, size_t count,
                         size_t max_points, size_t slack, uint64_t budget,
                         pcat_truncation** out);
pcat_status pcat_truncation_load(const char* path, pcat_truncation** out);
pcat_status pcat_truncation_save(const pcat_truncation* t, const char* path);
void pcat_truncation_free(pcat_truncation* t);

int pcat_truncation_saturated(const pcat_truncation* t);
size_t pcat_truncation_max_points(const pcat_truncation* t);
size_t pcat_truncation_slack(const pcat_truncation* t);
uint64_t pcat_truncation_steps(const pcat_truncation* t);
pcat_status pcat_truncation_header(const pcat_truncation* t, char** out);
/* Members in every P(k,l), sorted. */
size_t pcat_truncation_member_count(const pcat_truncation* t);
pcat_status pcat_truncation_member(const pcat_truncation* t, size_t index,
                                   pcat_partition** out);
/* Single leg members without upper points, sorted. */
size_t pcat_truncation_sl_count(const pcat_truncation* t);
pcat_status pcat_truncation_sl_member(const pcat_truncation* t, size_t index,
                                      pcat_partition** out);
int pcat_truncation_same_members(const pcat_truncation* a, const pcat_truncation* b);
/* PCAT_YES or PCAT_UNKNOWN. */
pcat_status pcat_member(const pcat_truncation* t, const pcat_partition* p,
                        pcat_answer* out);

/* Subgroup oracles: trivial, full, even-count, even-length, dihedral:s=N,
 * bfs:gens=w1,w2;L=N */

pcat_status pcat_oracle_new(const char* spec, pcat_oracle** out);
void pcat_oracle_free(pcat_oracle* o);
pcat_status pcat_oracle_spec(const pcat_oracle* o, char** out);
pcat_status pcat_oracle_contains_word(const pcat_oracle* o, const char* word,
                                      pcat_answer* out);
pcat_status pcat_oracle_contains_partition(const pcat_oracle* o, const pcat_partition* p,
                                           pcat_answer* out);

pcat_status pcat_group_witness(pcat_witness_op op, const pcat_partition* p,
                               const pcat_partition* q, int64_t letter,
                               pcat_partition** out);

typedef struct pcat_bijection_report {
  size_t checked;
  size_t disagreements;
  size_t oracle_unknown;
  int saturated;
} pcat_bijection_report;

/* max_blocks == 0 means no limit. first_disagreement may be NULL; if not,
 * it receives the text of the first disagreeing partition or NULL. */
pcat_status pcat_bijection_test(const pcat_partition* const* generators, size_t count,
                                const pcat_oracle* oracle, size_t max_points,
                                size_t slack, uint64_t budget, size_t max_blocks,
                                pcat_bijection_report* report, char** first_disagreement);

/* Exact matrices and models */

pcat_status pcat_tmap(const pcat_partition* p, size_t n, size_t budget, pcat_matrix** out);
pcat_status pcat_functoriality_check(const pcat_partition* p, const pcat_partition* q,
                                     size_t n, int* out);
pcat_status pcat_matrix_parse(const char* text, pcat_matrix** out);
pcat_status pcat_matrix_to_text(const pcat_matrix* m, char** out);
size_t pcat_matrix_rows(const pcat_matrix* m);
size_t pcat_matrix_cols(const pcat_matrix* m);
void pcat_matrix_free(pcat_matrix* m);

/* sigma holds 1-based images, signs are +1/-1. */
pcat_status pcat_model_signed_permutation(const size_t* sigma, const int* signs, size_t n,
                                          pcat_model** out);
/* Group given by a 0-based multiplication table with identity element
 * `identity`, represented by its regular representation. sigma holds
 * 1-based images (0 = undefined), g holds 0-based group elements. */
pcat_status pcat_model_crossed(size_t order, const size_t* table, size_t identity,
                               const size_t* sigma, const size_t* g, size_t n,
                               pcat_model** out);
/* (n d) x (n d) matrix split into n x n blocks. */
pcat_status pcat_model_from_matrix(const pcat_matrix* m, size_t n, pcat_model** out);
void pcat_model_free(pcat_model* m);
size_t pcat_model_n(const pcat_model* m);
size_t pcat_model_d(const pcat_model* m);
pcat_status pcat_model_to_text(const pcat_model* m, char** out);

pcat_status pcat_intertwines(const pcat_partition* p, const pcat_model* m, size_t budget,
                             int* out);
pcat_status pcat_relations_check(const pcat_model* m, int* out);
/* rows/cols: 1-based generator indices, one per block of p. */
pcat_status pcat_word_projection_check(const pcat_model* m, const pcat_partition* p,
                                       const size_t* rows, const size_t* cols,
                                       size_t count, int* out);
pcat_status pcat_word_projection_check_all(const pcat_model* m, const pcat_partition* p,
                                           int* out);

#ifdef __cplusplus
}
#endif

#endif
