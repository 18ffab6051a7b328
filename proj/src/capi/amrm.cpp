#include "amrm/amrm.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "amr/alignment.hpp"
#include "amr/diagnostics.hpp"
#include "amr/error.hpp"
#include "amr/graph.hpp"
#include "amr/lexicon.hpp"
#include "amr/metrics.hpp"
#include "amr/penman.hpp"
#include "amr/sembleu.hpp"
#include "amr/soft_match.hpp"
#include "amr/synthetic.hpp"

struct amrm_graph {
  amr::Graph graph;
};

struct amrm_corpus {
  std::vector<amrm_graph> views;
};

struct amrm_lexicon {
  amr::EmbeddingLexicon lexicon;
};

struct amrm_bias_profile {
  amr::BiasProfile profile;
};

namespace {

struct ErrorState {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t block = std::numeric_limits<std::size_t>::max();
};

thread_local ErrorState last_error;

amrm_status fail(amrm_status status, std::string message) {
  last_error = {};
  last_error.message = std::move(message);
  return status;
}

template <class F>
amrm_status guard(F&& body) {
  try {
    last_error = {};
    body();
    return AMRM_OK;
  } catch (const amr::ParseError& e) {
    amrm_status s = fail(AMRM_ERR_PARSE, e.what());
    last_error.line = e.line();
    last_error.column = e.column();
    return s;
  } catch (const amr::CorpusError& e) {
    amrm_status s = fail(AMRM_ERR_CORPUS, e.what());
    last_error.block = e.block();
    return s;
  } catch (const amr::LexiconError& e) {
    return fail(AMRM_ERR_LEXICON, e.what());
  } catch (const amr::SizeLimitError& e) {
    return fail(AMRM_ERR_SIZE_LIMIT, e.what());
  } catch (const amr::ScoringError& e) {
    return fail(AMRM_ERR_SCORING, e.what());
  } catch (const amr::InvalidArgument& e) {
    return fail(AMRM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(AMRM_ERR_IO, e.what());
  } catch (const std::out_of_range& e) {
    return fail(AMRM_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AMRM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AMRM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AMRM_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw amr::InvalidArgument(std::string(what) + " is NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill(const amr::MatchResult& r, amrm_match* out) {
  *out = {r.f1, r.precision, r.recall, r.matched, r.size_a, r.size_b};
}

void fill(const amr::PairScore& s, amrm_match* out) {
  amr::MatchResult r;
  r.matched = s.matched;
  r.size_a = s.size_a;
  r.size_b = s.size_b;
  amr::finalize_scores(r);
  *out = {s.score, r.precision, r.recall, s.matched, s.size_a, s.size_b};
}

amr::SembleuConfig to_core(const amrm_sembleu_config& c) {
  amr::SembleuConfig out;
  out.kmax = c.kmax;
  if (c.weights != nullptr) out.weights.assign(c.weights, c.weights + c.kmax);
  out.virtual_root = c.virtual_root != 0;
  out.bp_size = c.bp_size == AMRM_BP_NODES_AND_EDGES ? amr::BpSize::nodes_and_edges
                                                      : amr::BpSize::nodes;
  out.normalize_inverse = c.normalize_inverse != 0;
  return out;
}

amr::MetricConfig to_core(const amrm_metric_config& c) {
  amr::MetricConfig out;
  switch (c.metric) {
    case AMRM_METRIC_SMATCH: out.kind = amr::MetricKind::smatch; break;
    case AMRM_METRIC_SMATCH_EXACT: out.kind = amr::MetricKind::smatch_exact; break;
    case AMRM_METRIC_S2MATCH: out.kind = amr::MetricKind::s2match; break;
    case AMRM_METRIC_S2MATCH_EXACT: out.kind = amr::MetricKind::s2match_exact; break;
    case AMRM_METRIC_SEMBLEU: out.kind = amr::MetricKind::sembleu; break;
    default: throw amr::InvalidArgument("unknown metric");
  }
  out.restarts = c.restarts;
  out.seed = c.seed;
  out.exact_limit = c.exact_limit;
  out.normalize_inverse = c.normalize_inverse != 0;
  out.soft.tau = c.tau;
  out.lexicon = c.lexicon != nullptr ? &c.lexicon->lexicon : nullptr;
  out.sembleu = to_core(c.sembleu);
  return out;
}

std::vector<amr::SymmetryPair> series(const double* ab, const double* ba, std::size_t n) {
  require(ab, "ab");
  require(ba, "ba");
  std::vector<amr::SymmetryPair> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = {ab[i], ba[i]};
  return s;
}

std::vector<amr::Graph> gather(const amrm_graph* const* gs, std::size_t n, const char* what) {
  if (n > 0) require(gs, what);
  std::vector<amr::Graph> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    require(gs[i], what);
    out.push_back(gs[i]->graph);
  }
  return out;
}

std::vector<amr::Graph> gather(const amrm_corpus* c) {
  std::vector<amr::Graph> out;
  out.reserve(c->views.size());
  for (const auto& v : c->views) out.push_back(v.graph);
  return out;
}

void score_graphs(const std::vector<amr::Graph>& ga, const std::vector<amr::Graph>& gb,
                  const amrm_metric_config& config, unsigned jobs, int per_pair_mean,
                  amrm_match* out, double* aggregate) {
  const amr::MetricConfig core = to_core(config);
  const auto scores = amr::score_corpus(ga, gb, core, jobs);
  if (out != nullptr) {
    for (std::size_t i = 0; i < scores.size(); ++i) fill(scores[i], &out[i]);
  }
  if (aggregate != nullptr) *aggregate = amr::aggregate(scores, core.kind, per_pair_mean != 0);
}

amrm_corpus* make_corpus(std::vector<amr::Graph> graphs) {
  auto c = std::make_unique<amrm_corpus>();
  c->views.reserve(graphs.size());
  for (amr::Graph& g : graphs) c->views.push_back({std::move(g)});
  return c.release();
}

}  // namespace

extern "C" {

const char* amrm_last_error(void) { return last_error.message.c_str(); }
size_t amrm_last_error_line(void) { return last_error.line; }
size_t amrm_last_error_column(void) { return last_error.column; }
size_t amrm_last_error_block(void) { return last_error.block; }

const char* amrm_version(void) { return "0.1.0"; }

void amrm_string_free(char* s) { std::free(s); }

amrm_status amrm_graph_parse(const char* text, int normalize_inverse, amrm_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    auto g = amr::parse_penman(text, {.normalize_inverse = normalize_inverse != 0});
    *out = new amrm_graph{std::move(g)};
  });
}

void amrm_graph_free(amrm_graph* g) { delete g; }

amrm_status amrm_graph_serialize(const amrm_graph* g, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(amr::serialize_penman(g->graph));
  });
}

size_t amrm_graph_variable_count(const amrm_graph* g) {
  return g ? g->graph.variable_count() : 0;
}
size_t amrm_graph_edge_count(const amrm_graph* g) { return g ? g->graph.edges().size() : 0; }
size_t amrm_graph_attribute_count(const amrm_graph* g) {
  return g ? g->graph.attributes().size() : 0;
}
size_t amrm_graph_triple_count(const amrm_graph* g) {
  return g ? amr::to_triples(g->graph).size() : 0;
}

amrm_status amrm_graph_id(const amrm_graph* g, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    auto id = g->graph.id();
    *out = id ? copy_string(*id) : nullptr;
  });
}

amrm_status amrm_tree_graph(size_t d, size_t depth, amrm_graph** out) {
  return guard([&] {
    require(out, "out");
    *out = new amrm_graph{amr::complete_tree(d, depth)};
  });
}

amrm_status amrm_triple_membership_of(const amrm_graph* g, size_t v,
                                      amrm_triple_membership* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    const auto counts = amr::triple_node_counts(g->graph);
    const auto& m = counts.at(v);
    *out = {m.instance, m.top, m.relation, m.attribute};
  });
}

amrm_status amrm_graph_stats_of(const amrm_graph* g, amrm_graph_stats* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    const auto s = amr::graph_stats(g->graph);
    *out = {s.nodes, s.edges, s.mean_degree, s.density};
  });
}

amrm_status amrm_corpus_load(const char* path, int normalize_inverse, amrm_corpus** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    if (!std::filesystem::exists(path)) {
      throw std::filesystem::filesystem_error("cannot open corpus", path,
                                              std::make_error_code(std::errc::no_such_file_or_directory));
    }
    *out = make_corpus(amr::read_sembank(path, {.normalize_inverse = normalize_inverse != 0}));
  });
}

amrm_status amrm_corpus_parse(const char* text, int normalize_inverse, amrm_corpus** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    *out = make_corpus(amr::parse_sembank(text, {.normalize_inverse = normalize_inverse != 0}));
  });
}

void amrm_corpus_free(amrm_corpus* c) { delete c; }

size_t amrm_corpus_size(const amrm_corpus* c) { return c ? c->views.size() : 0; }

const amrm_graph* amrm_corpus_at(const amrm_corpus* c, size_t i) {
  if (c == nullptr || i >= c->views.size()) return nullptr;
  return &c->views[i];
}

amrm_status amrm_lexicon_load(const char* path, amrm_lexicon** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new amrm_lexicon{amr::EmbeddingLexicon::load(path)};
  });
}

amrm_status amrm_lexicon_parse(const char* text, amrm_lexicon** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    *out = new amrm_lexicon{amr::EmbeddingLexicon::parse(text)};
  });
}

void amrm_lexicon_free(amrm_lexicon* lex) { delete lex; }
size_t amrm_lexicon_size(const amrm_lexicon* lex) { return lex ? lex->lexicon.size() : 0; }
size_t amrm_lexicon_dimension(const amrm_lexicon* lex) {
  return lex ? lex->lexicon.dimension() : 0;
}
size_t amrm_lexicon_warning_count(const amrm_lexicon* lex) {
  return lex ? lex->lexicon.warnings().size() : 0;
}
const char* amrm_lexicon_warning(const amrm_lexicon* lex, size_t i) {
  if (lex == nullptr || i >= lex->lexicon.warnings().size()) return nullptr;
  return lex->lexicon.warnings()[i].c_str();
}

amrm_status amrm_concept_distance(const amrm_lexicon* lex, const char* x, const char* y,
                                  double* out) {
  return guard([&] {
    require(lex, "lexicon");
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = amr::concept_distance(x, y, lex->lexicon);
  });
}

amrm_status amrm_smatch(const amrm_graph* a, const amrm_graph* b, int restarts, uint64_t seed,
                        amrm_match* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (restarts < 1) throw amr::InvalidArgument("restarts must be at least 1");
    fill(amr::smatch_score(a->graph, b->graph, restarts, seed), out);
  });
}

amrm_status amrm_smatch_exact(const amrm_graph* a, const amrm_graph* b, size_t limit,
                              amrm_match* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    fill(amr::exact_align(a->graph, b->graph, limit), out);
  });
}

amrm_status amrm_s2match(const amrm_graph* a, const amrm_graph* b, const amrm_lexicon* lex,
                         double tau, int restarts, uint64_t seed, amrm_match* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(lex, "lexicon");
    require(out, "out");
    if (restarts < 1) throw amr::InvalidArgument("restarts must be at least 1");
    fill(amr::s2match_score(a->graph, b->graph, restarts, seed, lex->lexicon, {.tau = tau}), out);
  });
}

amrm_status amrm_s2match_exact(const amrm_graph* a, const amrm_graph* b, const amrm_lexicon* lex,
                               double tau, size_t limit, amrm_match* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(lex, "lexicon");
    require(out, "out");
    fill(amr::exact_s2match(a->graph, b->graph, lex->lexicon, {.tau = tau}, limit), out);
  });
}

void amrm_sembleu_config_default(amrm_sembleu_config* config) {
  if (config == nullptr) return;
  const amr::SembleuConfig d;
  *config = {d.kmax, nullptr, d.virtual_root ? 1 : 0,
             d.bp_size == amr::BpSize::nodes ? AMRM_BP_NODES : AMRM_BP_NODES_AND_EDGES,
             d.normalize_inverse ? 1 : 0};
}

amrm_status amrm_sembleu(const amrm_graph* cand, const amrm_graph* ref,
                         const amrm_sembleu_config* config, double* out) {
  return guard([&] {
    require(cand, "cand");
    require(ref, "ref");
    require(out, "out");
    amrm_sembleu_config c;
    amrm_sembleu_config_default(&c);
    if (config != nullptr) c = *config;
    *out = amr::sembleu_score(cand->graph, ref->graph, to_core(c));
  });
}

void amrm_metric_config_default(amrm_metric_config* config) {
  if (config == nullptr) return;
  config->metric = AMRM_METRIC_SMATCH;
  config->restarts = amr::kDefaultRestarts;
  config->seed = 0;
  config->exact_limit = amr::kDefaultExactLimit;
  config->normalize_inverse = 1;
  config->tau = amr::kDefaultTau;
  config->lexicon = nullptr;
  amrm_sembleu_config_default(&config->sembleu);
}

amrm_status amrm_score(const amrm_graph* a, const amrm_graph* b, const amrm_metric_config* config,
                       amrm_match* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(config, "config");
    require(out, "out");
    fill(amr::score_pair(a->graph, b->graph, to_core(*config)), out);
  });
}

amrm_status amrm_score_corpus(const amrm_corpus* a, const amrm_corpus* b,
                              const amrm_metric_config* config, unsigned jobs, int per_pair_mean,
                              amrm_match* out, double* aggregate) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(config, "config");
    score_graphs(gather(a), gather(b), *config, jobs, per_pair_mean, out, aggregate);
  });
}

amrm_status amrm_score_pairs(const amrm_graph* const* a, const amrm_graph* const* b, size_t n,
                             const amrm_metric_config* config, unsigned jobs, int per_pair_mean,
                             amrm_match* out, double* aggregate) {
  return guard([&] {
    require(config, "config");
    score_graphs(gather(a, n, "a"), gather(b, n, "b"), *config, jobs, per_pair_mean, out,
                 aggregate);
  });
}

amrm_status amrm_svr(const double* ab, const double* ba, size_t n, double delta, double* out) {
  return guard([&] {
    require(out, "out");
    *out = amr::svr(series(ab, ba, n), delta);
  });
}

amrm_status amrm_msv(const double* ab, const double* ba, size_t n, double* out) {
  return guard([&] {
    require(out, "out");
    *out = amr::msv(series(ab, ba, n));
  });
}

amrm_status amrm_determinacy_error(const amrm_corpus* a, const amrm_corpus* b,
                                   const amrm_metric_config* config, size_t runs,
                                   double* corpus_std, double* mean_graph_std) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(config, "config");
    const auto d = amr::determinacy_error(gather(a), gather(b), to_core(*config), runs,
                                          config->seed);
    if (corpus_std) *corpus_std = d.corpus_std;
    if (mean_graph_std) *mean_graph_std = d.mean_graph_std;
  });
}

amrm_status amrm_determinacy_pairs(const amrm_graph* const* a, const amrm_graph* const* b,
                                   size_t n, const amrm_metric_config* config, size_t runs,
                                   unsigned jobs, double* corpus_std, double* mean_graph_std) {
  return guard([&] {
    require(config, "config");
    const auto d = amr::determinacy_error(gather(a, n, "a"), gather(b, n, "b"), to_core(*config),
                                          runs, config->seed, jobs);
    if (corpus_std) *corpus_std = d.corpus_std;
    if (mean_graph_std) *mean_graph_std = d.mean_graph_std;
  });
}

amrm_status amrm_ranking_disagreement(const double* fj, const double* fc, const double* gj,
                                      const double* gc, size_t n, double* out) {
  return guard([&] {
    require(fj, "fj");
    require(fc, "fc");
    require(gj, "gj");
    require(gc, "gc");
    require(out, "out");
    *out = amr::ranking_disagreement({fj, n}, {fc, n}, {gj, n}, {gc, n});
  });
}

amrm_status amrm_paired_t(const double* f, const double* g, size_t n, double* t, double* p) {
  return guard([&] {
    require(f, "f");
    require(g, "g");
    const auto r = amr::paired_t({f, n}, {g, n});
    if (t) *t = r.t;
    if (p) *p = r.p;
  });
}

amrm_status amrm_bias_profile_create(const amrm_graph* g, size_t kmax, amrm_bias_profile** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = nullptr;
    *out = new amrm_bias_profile{
        amr::kgram_node_counts(amr::variable_free(g->graph, {.normalize_inverse = true}), kmax)};
  });
}

void amrm_bias_profile_free(amrm_bias_profile* p) { delete p; }

size_t amrm_bias_profile_node_count(const amrm_bias_profile* p) {
  return p ? p->profile.labels.size() : 0;
}

const char* amrm_bias_profile_label(const amrm_bias_profile* p, size_t node) {
  if (p == nullptr || node >= p->profile.labels.size()) return nullptr;
  return p->profile.labels[node].c_str();
}

amrm_status amrm_bias_profile_count(const amrm_bias_profile* p, size_t node, size_t k,
                                    size_t* out) {
  return guard([&] {
    require(p, "profile");
    require(out, "out");
    const auto& counts = p->profile.counts.at(node);
    if (k == 0) {
      *out = p->profile.total(node);
    } else {
      *out = counts.at(k - 1);
    }
  });
}

}  // extern "C"
