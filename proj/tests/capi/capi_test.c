#include <math.h>
#include <stdint.h>
#include <stdio.h>
#include <string.h>

#include "amrm/amrm.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

#define NEAR(x, y, tol) EXPECT(fabs((x) - (y)) <= (tol))

static char path_buf[4096];

static const char* data(const char* name) {
  snprintf(path_buf, sizeof path_buf, "%s/%s", AMRM_TEST_DATA, name);
  return path_buf;
}

static amrm_graph* parse(const char* text) {
  amrm_graph* g = NULL;
  EXPECT(amrm_graph_parse(text, 0, &g) == AMRM_OK);
  return g;
}

static void test_parse(void) {
  amrm_graph* g = parse("# ::id d1\n(c / drink-01 :ARG0 (d / cat) :arg1 (w / water))");
  EXPECT(amrm_graph_variable_count(g) == 3);
  EXPECT(amrm_graph_edge_count(g) == 2);
  EXPECT(amrm_graph_triple_count(g) == 6);
  char* id = NULL;
  EXPECT(amrm_graph_id(g, &id) == AMRM_OK);
  EXPECT(id && strcmp(id, "d1") == 0);
  amrm_string_free(id);
  char* text = NULL;
  EXPECT(amrm_graph_serialize(g, &text) == AMRM_OK);
  EXPECT(text && strstr(text, ":arg0 (d / cat)") != NULL);
  amrm_string_free(text);
  EXPECT(strcmp(amrm_last_error(), "") == 0);

  amrm_graph_stats stats;
  EXPECT(amrm_graph_stats_of(g, &stats) == AMRM_OK);
  NEAR(stats.density, 1.0 / 3, 1e-12);

  amrm_triple_membership m;
  EXPECT(amrm_triple_membership_of(g, 0, &m) == AMRM_OK);
  EXPECT(m.instance == 1 && m.top == 1 && m.relation == 2 && m.attribute == 0);
  EXPECT(amrm_triple_membership_of(g, 9, &m) == AMRM_ERR_OUT_OF_RANGE);
  amrm_graph_free(g);
}

static void test_errors(void) {
  amrm_graph* g = NULL;
  EXPECT(amrm_graph_parse("(c / cat\n  :arg0 (d dog))", 0, &g) == AMRM_ERR_PARSE);
  EXPECT(g == NULL);
  EXPECT(amrm_last_error_line() == 2);
  EXPECT(amrm_last_error_column() > 0);
  EXPECT(strlen(amrm_last_error()) > 0);
  EXPECT(amrm_graph_parse(NULL, 0, &g) == AMRM_ERR_INVALID_ARGUMENT);

  amrm_corpus* c = NULL;
  EXPECT(amrm_corpus_parse("(c / cat)\n\n(d / dog\n", 0, &c) == AMRM_ERR_CORPUS);
  EXPECT(amrm_last_error_block() == 1);
  EXPECT(amrm_corpus_load("/nonexistent/file.amr", 0, &c) == AMRM_ERR_IO);

  amrm_lexicon* lex = NULL;
  EXPECT(amrm_lexicon_parse("a 1 2\nb 1\n", &lex) == AMRM_ERR_LEXICON);

  amrm_graph* big = NULL;
  EXPECT(amrm_tree_graph(3, 2, &big) == AMRM_OK);
  amrm_match out;
  EXPECT(amrm_smatch_exact(big, big, 8, &out) == AMRM_ERR_SIZE_LIMIT);
  EXPECT(amrm_smatch(big, big, 0, 0, &out) == AMRM_ERR_INVALID_ARGUMENT);
  amrm_graph_free(big);

  double v = 0;
  EXPECT(amrm_svr(NULL, NULL, 0, 1e-4, &v) != AMRM_OK);
}

static void test_scores(void) {
  amrm_corpus* f7 = NULL;
  EXPECT(amrm_corpus_load(data("graphs/animals.amr"), 0, &f7) == AMRM_OK);
  EXPECT(amrm_corpus_size(f7) == 3);
  amrm_lexicon* lex = NULL;
  EXPECT(amrm_lexicon_load(data("glove-100d-subset.txt"), &lex) == AMRM_OK);
  EXPECT(amrm_lexicon_dimension(lex) == 100);

  amrm_match m;
  EXPECT(amrm_smatch_exact(amrm_corpus_at(f7, 0), amrm_corpus_at(f7, 1), 8, &m) == AMRM_OK);
  NEAR(m.f1, 0.25, 1e-12);
  EXPECT(amrm_s2match_exact(amrm_corpus_at(f7, 0), amrm_corpus_at(f7, 1), lex, 0.5, 8, &m) == AMRM_OK);
  EXPECT(m.f1 > 0.34 && m.f1 < 0.44);
  EXPECT(amrm_s2match(amrm_corpus_at(f7, 0), amrm_corpus_at(f7, 1), lex, 1.5, 4, 0, &m) ==
         AMRM_ERR_INVALID_ARGUMENT);

  double d = -1;
  EXPECT(amrm_concept_distance(lex, "cat", "cat", &d) == AMRM_OK);
  EXPECT(d == 0.0);

  EXPECT(amrm_corpus_load(data("graphs/heated_a.amr"), 0, NULL) == AMRM_ERR_INVALID_ARGUMENT);
  amrm_corpus* ca = NULL;
  amrm_corpus* cb = NULL;
  EXPECT(amrm_corpus_load(data("graphs/heated_a.amr"), 0, &ca) == AMRM_OK);
  EXPECT(amrm_corpus_load(data("graphs/heated_b.amr"), 0, &cb) == AMRM_OK);
  const amrm_graph* a = amrm_corpus_at(ca, 0);
  const amrm_graph* b = amrm_corpus_at(cb, 0);

  double ab = 0, ba = 0;
  EXPECT(amrm_sembleu(a, b, NULL, &ab) == AMRM_OK);
  EXPECT(amrm_sembleu(b, a, NULL, &ba) == AMRM_OK);
  EXPECT(ab < ba);

  amrm_metric_config cfg;
  amrm_metric_config_default(&cfg);
  EXPECT(cfg.metric == AMRM_METRIC_SMATCH);
  EXPECT(cfg.restarts == 4);
  EXPECT(cfg.normalize_inverse == 1);
  cfg.metric = AMRM_METRIC_SMATCH_EXACT;
  cfg.exact_limit = 12;
  EXPECT(amrm_score(a, b, &cfg, &m) == AMRM_OK);
  NEAR(m.f1, 34.0 / 41, 1e-12);
  cfg.normalize_inverse = 0;
  EXPECT(amrm_score(a, b, &cfg, &m) == AMRM_OK);
  NEAR(m.f1, 30.0 / 41, 1e-12);

  amrm_metric_config_default(&cfg);
  cfg.metric = AMRM_METRIC_S2MATCH;
  EXPECT(amrm_score(a, b, &cfg, &m) == AMRM_ERR_INVALID_ARGUMENT);
  cfg.lexicon = lex;
  EXPECT(amrm_score(a, b, &cfg, &m) == AMRM_OK);

  amrm_match rows[3];
  double agg = -1;
  amrm_metric_config_default(&cfg);
  EXPECT(amrm_score_corpus(f7, f7, &cfg, 2, 0, rows, &agg) == AMRM_OK);
  NEAR(agg, 1.0, 1e-12);
  EXPECT(amrm_score_corpus(f7, ca, &cfg, 1, 0, rows, &agg) == AMRM_ERR_INVALID_ARGUMENT);

  const amrm_graph* left[3] = {amrm_corpus_at(f7, 0), amrm_corpus_at(f7, 1), amrm_corpus_at(f7, 0)};
  const amrm_graph* right[3] = {amrm_corpus_at(f7, 1), amrm_corpus_at(f7, 2), amrm_corpus_at(f7, 2)};
  cfg.metric = AMRM_METRIC_SEMBLEU;
  double cs = -1, gs = -1;
  EXPECT(amrm_determinacy_pairs(left, right, 3, &cfg, 3, 1, &cs, &gs) == AMRM_OK);
  EXPECT(cs == 0.0 && gs == 0.0);

  amrm_corpus_free(ca);
  amrm_corpus_free(cb);
  amrm_corpus_free(f7);
  amrm_lexicon_free(lex);
}

static void test_diagnostics(void) {
  const double ab[2] = {0.5, 0.3};
  const double ba[2] = {0.5, 0.6};
  double v = 0;
  EXPECT(amrm_svr(ab, ba, 2, 1e-4, &v) == AMRM_OK);
  NEAR(v, 0.5, 1e-12);
  EXPECT(amrm_msv(ab, ba, 2, &v) == AMRM_OK);
  NEAR(v, 0.15, 1e-12);

  const double fj[2] = {1, 0}, fc[2] = {0, 1}, gj[2] = {0, 0}, gc[2] = {1, 1};
  EXPECT(amrm_ranking_disagreement(fj, fc, gj, gc, 2, &v) == AMRM_OK);
  NEAR(v, 0.5, 1e-12);

  const double f[8] = {0.61, 0.72, 0.55, 0.80, 0.47, 0.66, 0.59, 0.70};
  const double g[8] = {0.58, 0.69, 0.57, 0.74, 0.45, 0.60, 0.60, 0.65};
  double t = 0, p = 0;
  EXPECT(amrm_paired_t(f, g, 8, &t, &p) == AMRM_OK);
  NEAR(t, 2.5824971129863226, 1e-9);
  NEAR(p, 0.03633983911945595, 1e-9);

  amrm_graph* tree = NULL;
  EXPECT(amrm_tree_graph(3, 2, &tree) == AMRM_OK);
  amrm_bias_profile* prof = NULL;
  EXPECT(amrm_bias_profile_create(tree, 3, &prof) == AMRM_OK);
  EXPECT(amrm_bias_profile_node_count(prof) == 13);
  size_t n = 0;
  EXPECT(amrm_bias_profile_count(prof, 0, 0, &n) == AMRM_OK);
  EXPECT(n == 13);
  EXPECT(amrm_bias_profile_count(prof, 0, 3, &n) == AMRM_OK);
  EXPECT(n == 9);
  EXPECT(amrm_bias_profile_count(prof, 12, 0, &n) == AMRM_OK);
  EXPECT(n == 3);
  EXPECT(amrm_bias_profile_count(prof, 13, 0, &n) == AMRM_ERR_OUT_OF_RANGE);
  EXPECT(amrm_bias_profile_count(prof, 0, 4, &n) == AMRM_ERR_OUT_OF_RANGE);
  EXPECT(amrm_bias_profile_label(prof, 0) != NULL);
  amrm_bias_profile_free(prof);
  amrm_graph_free(tree);
}

int main(void) {
  EXPECT(strcmp(amrm_version(), "0.1.0") == 0);
  test_parse();
  test_errors();
  test_scores();
  test_diagnostics();
  amrm_graph_free(NULL);
  amrm_corpus_free(NULL);
  amrm_lexicon_free(NULL);
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
