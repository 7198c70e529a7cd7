#ifndef FUKAYA_FUKAYA_H
#define FUKAYA_FUKAYA_H

#include <stddef.h>

#if defined(FUKAYA_BUILDING_LIBRARY)
#define FK_API __attribute__((visibility("default")))
#else
#define FK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fk_status {
  FK_OK = 0,
  FK_ERR_INVALID_INPUT = 1,
  FK_ERR_INVALID_RING = 2,
  FK_ERR_INVALID_COMPLEX = 3,
  FK_ERR_INVALID_GRAPH = 4,
  FK_ERR_LOOP_CONTRACTION = 5,
  FK_ERR_DEGENERATE_RESULT = 6,
  FK_ERR_NOT_CLOSED = 7,
  FK_ERR_IO = 8,
  FK_ERR_INTERNAL = 9,
  FK_ERR_NULL_ARGUMENT = 10
} fk_status;

typedef enum fk_verdict { FK_PASS = 0, FK_FAIL = 1, FK_SKIP_UNSTABLE = 2 } fk_verdict;

typedef struct fk_graph fk_graph;
typedef struct fk_report fk_report;

/* Message of the last failing call on this thread, "" if none. */
FK_API const char* fk_last_error_message(void);
FK_API const char* fk_status_name(fk_status status);

/* Strings returned through char** are owned by the caller. */
FK_API void fk_string_free(char* s);

FK_API fk_status fk_graph_parse_json(const char* text, fk_graph** out);
FK_API fk_status fk_graph_load_file(const char* path, fk_graph** out);
FK_API void fk_graph_free(fk_graph* g);
FK_API fk_status fk_graph_to_json(const fk_graph* g, char** out);
FK_API fk_status fk_graph_name(const fk_graph* g, char** out);

FK_API fk_status fk_info(const fk_graph* g, char** out);

/* coefficients: "z", "q" or "f<p>"; NULL means "z". */
FK_API fk_status fk_homology(const fk_graph* g, const char* coefficients, int periodic, char** out);

FK_API fk_status fk_verify_main(const fk_graph* g, const char* coefficients, fk_report** out);
/* edge: an edge id (e1, e2, ...) or one of its half-edge ids. */
FK_API fk_status fk_verify_contract(const fk_graph* g, const char* edge, const char* coefficients, fk_report** out);
/* vertices: comma-separated vertex ids of the open subgraph. */
FK_API fk_status fk_verify_localize(const fk_graph* g, const char* vertices, const char* coefficients,
                                    fk_report** out);

/* walk: comma-separated half-edge ids of a closed walk. */
FK_API fk_status fk_winding(const fk_graph* g, const char* walk, long long* out);

/* grading: "z" or "z2"; objects "i,j" or "i,j,l|r"; field 0 for Q or a prime. */
FK_API fk_status fk_mf_hom(const char* grading, int n, const char* source, const char* target, long long field,
                           char** out);

FK_API fk_status fk_corpus_verify(const char* directory, int parallel, fk_report** out);

FK_API void fk_report_free(fk_report* r);
FK_API size_t fk_report_rows(const fk_report* r);
/* column 0..3: graph, check, sideA, sideB. NULL when out of range. */
FK_API const char* fk_report_cell(const fk_report* r, size_t row, int column);
FK_API fk_verdict fk_report_verdict(const fk_report* r, size_t row);
/* 0 when every row passed or was skipped, 1 otherwise. */
FK_API int fk_report_exit_code(const fk_report* r);
FK_API fk_status fk_report_tsv(const fk_report* r, char** out);
FK_API fk_status fk_report_text(const fk_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
