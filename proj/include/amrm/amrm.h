#ifndef AMRM_AMRM_H
#define AMRM_AMRM_H

#include <stddef.h>
#include <stdint.h>

#if defined(AMRM_BUILDING_LIBRARY)
#define AMRM_API __attribute__((visibility("default")))
#else
#define AMRM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum amrm_status {
  AMRM_OK = 0,
  AMRM_ERR_INVALID_ARGUMENT = 1,
  AMRM_ERR_PARSE = 2,
  AMRM_ERR_CORPUS = 3,
  AMRM_ERR_LEXICON = 4,
  AMRM_ERR_SIZE_LIMIT = 5,
  AMRM_ERR_SCORING = 6,
  AMRM_ERR_IO = 7,
  AMRM_ERR_OUT_OF_RANGE = 8,
  AMRM_ERR_INTERNAL = 99
} amrm_status;

typedef enum amrm_metric {
  AMRM_METRIC_SMATCH = 0,
  AMRM_METRIC_SMATCH_EXACT = 1,
  AMRM_METRIC_S2MATCH = 2,
  AMRM_METRIC_S2MATCH_EXACT = 3,
  AMRM_METRIC_SEMBLEU = 4
} amrm_metric;

typedef enum amrm_bp_size { AMRM_BP_NODES = 0, AMRM_BP_NODES_AND_EDGES = 1 } amrm_bp_size;

typedef struct amrm_graph amrm_graph;
typedef struct amrm_corpus amrm_corpus;
typedef struct amrm_lexicon amrm_lexicon;
typedef struct amrm_bias_profile amrm_bias_profile;

/* Message of the last failed call on this thread; "" after success. */
AMRM_API const char* amrm_last_error(void);
/* 1-based position of the last parse error on this thread, 0 if none. */
AMRM_API size_t amrm_last_error_line(void);
AMRM_API size_t amrm_last_error_column(void);
/* Block index of the last corpus error, or SIZE_MAX. */
AMRM_API size_t amrm_last_error_block(void);

AMRM_API const char* amrm_version(void);

/* Strings returned through char** are owned by the caller. */
AMRM_API void amrm_string_free(char* s);

/* ---- graphs ---- */
AMRM_API amrm_status amrm_graph_parse(const char* text, int normalize_inverse, amrm_graph** out);
AMRM_API void amrm_graph_free(amrm_graph* g);
AMRM_API amrm_status amrm_graph_serialize(const amrm_graph* g, char** out);
AMRM_API size_t amrm_graph_variable_count(const amrm_graph* g);
AMRM_API size_t amrm_graph_edge_count(const amrm_graph* g);
AMRM_API size_t amrm_graph_attribute_count(const amrm_graph* g);
AMRM_API size_t amrm_graph_triple_count(const amrm_graph* g);
/* Copies the `::id` metadata value; *out is NULL when absent. */
AMRM_API amrm_status amrm_graph_id(const amrm_graph* g, char** out);
/* Complete d-ary tree with `depth` edge levels. */
AMRM_API amrm_status amrm_tree_graph(size_t d, size_t depth, amrm_graph** out);

/* Smatch triple membership of variable `v`. */
typedef struct amrm_triple_membership {
  size_t instance;
  size_t top;
  size_t relation;
  size_t attribute;
} amrm_triple_membership;

AMRM_API amrm_status amrm_triple_membership_of(const amrm_graph* g, size_t v,
                                               amrm_triple_membership* out);

typedef struct amrm_graph_stats {
  size_t nodes;
  size_t edges;
  double mean_degree;
  double density;
} amrm_graph_stats;

AMRM_API amrm_status amrm_graph_stats_of(const amrm_graph* g, amrm_graph_stats* out);

/* ---- corpora ---- */
AMRM_API amrm_status amrm_corpus_load(const char* path, int normalize_inverse, amrm_corpus** out);
AMRM_API amrm_status amrm_corpus_parse(const char* text, int normalize_inverse, amrm_corpus** out);
AMRM_API void amrm_corpus_free(amrm_corpus* c);
AMRM_API size_t amrm_corpus_size(const amrm_corpus* c);
/* Borrowed pointer, valid while the corpus lives. */
AMRM_API const amrm_graph* amrm_corpus_at(const amrm_corpus* c, size_t i);

/* ---- lexicons ---- */
AMRM_API amrm_status amrm_lexicon_load(const char* path, amrm_lexicon** out);
AMRM_API amrm_status amrm_lexicon_parse(const char* text, amrm_lexicon** out);
AMRM_API void amrm_lexicon_free(amrm_lexicon* lex);
AMRM_API size_t amrm_lexicon_size(const amrm_lexicon* lex);
AMRM_API size_t amrm_lexicon_dimension(const amrm_lexicon* lex);
AMRM_API size_t amrm_lexicon_warning_count(const amrm_lexicon* lex);
AMRM_API const char* amrm_lexicon_warning(const amrm_lexicon* lex, size_t i);
AMRM_API amrm_status amrm_concept_distance(const amrm_lexicon* lex, const char* x, const char* y,
                                           double* out);

/* ---- scoring ---- */
typedef struct amrm_match {
  double f1;
  double precision;
  double recall;
  double matched;
  size_t size_a;
  size_t size_b;
} amrm_match;

AMRM_API amrm_status amrm_smatch(const amrm_graph* a, const amrm_graph* b, int restarts,
                                 uint64_t seed, amrm_match* out);
AMRM_API amrm_status amrm_smatch_exact(const amrm_graph* a, const amrm_graph* b, size_t limit,
                                       amrm_match* out);
AMRM_API amrm_status amrm_s2match(const amrm_graph* a, const amrm_graph* b,
                                  const amrm_lexicon* lex, double tau, int restarts,
                                  uint64_t seed, amrm_match* out);
AMRM_API amrm_status amrm_s2match_exact(const amrm_graph* a, const amrm_graph* b,
                                        const amrm_lexicon* lex, double tau, size_t limit,
                                        amrm_match* out);

typedef struct amrm_sembleu_config {
  size_t kmax;
  /* kmax weights, or NULL for uniform. */
  const double* weights;
  int virtual_root;
  amrm_bp_size bp_size;
  int normalize_inverse;
} amrm_sembleu_config;

AMRM_API void amrm_sembleu_config_default(amrm_sembleu_config* config);
/* `cand` is scored against `ref`; config may be NULL. */
AMRM_API amrm_status amrm_sembleu(const amrm_graph* cand, const amrm_graph* ref,
                                  const amrm_sembleu_config* config, double* out);

typedef struct amrm_metric_config {
  amrm_metric metric;
  int restarts;
  uint64_t seed;
  size_t exact_limit;
  /* Canonicalize `:r-of` edges before alignment (default 1). */
  int normalize_inverse;
  double tau;
  const amrm_lexicon* lexicon;
  amrm_sembleu_config sembleu;
} amrm_metric_config;

AMRM_API void amrm_metric_config_default(amrm_metric_config* config);
AMRM_API amrm_status amrm_score(const amrm_graph* a, const amrm_graph* b,
                                const amrm_metric_config* config, amrm_match* out);
/* Scores position-aligned pairs; `out` holds amrm_corpus_size(a) entries.
   `aggregate` (optional) receives the corpus score. */
AMRM_API amrm_status amrm_score_corpus(const amrm_corpus* a, const amrm_corpus* b,
                                       const amrm_metric_config* config, unsigned jobs,
                                       int per_pair_mean, amrm_match* out, double* aggregate);

/* Same as amrm_score_corpus over explicit pairs (a[i], b[i]). */
AMRM_API amrm_status amrm_score_pairs(const amrm_graph* const* a, const amrm_graph* const* b,
                                      size_t n, const amrm_metric_config* config, unsigned jobs,
                                      int per_pair_mean, amrm_match* out, double* aggregate);

/* ---- diagnostics ---- */
AMRM_API amrm_status amrm_svr(const double* ab, const double* ba, size_t n, double delta,
                              double* out);
AMRM_API amrm_status amrm_msv(const double* ab, const double* ba, size_t n, double* out);
AMRM_API amrm_status amrm_determinacy_error(const amrm_corpus* a, const amrm_corpus* b,
                                            const amrm_metric_config* config, size_t runs,
                                            double* corpus_std, double* mean_graph_std);
/* One run per seed config->seed, config->seed + 1, ...; runs >= 2. */
AMRM_API amrm_status amrm_determinacy_pairs(const amrm_graph* const* a, const amrm_graph* const* b,
                                            size_t n, const amrm_metric_config* config,
                                            size_t runs, unsigned jobs, double* corpus_std,
                                            double* mean_graph_std);
AMRM_API amrm_status amrm_ranking_disagreement(const double* fj, const double* fc,
                                               const double* gj, const double* gc, size_t n,
                                               double* out);
AMRM_API amrm_status amrm_paired_t(const double* f, const double* g, size_t n, double* t,
                                   double* p);

AMRM_API amrm_status amrm_bias_profile_create(const amrm_graph* g, size_t kmax,
                                              amrm_bias_profile** out);
AMRM_API void amrm_bias_profile_free(amrm_bias_profile* p);
AMRM_API size_t amrm_bias_profile_node_count(const amrm_bias_profile* p);
AMRM_API const char* amrm_bias_profile_label(const amrm_bias_profile* p, size_t node);
/* k = 0 sums all orders. */
AMRM_API amrm_status amrm_bias_profile_count(const amrm_bias_profile* p, size_t node, size_t k,
                                             size_t* out);

#ifdef __cplusplus
}
#endif

#endif
