#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "amrm/amrm.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail_status(amrm_status s, const std::string& context) {
  const int code = (s == AMRM_ERR_INVALID_ARGUMENT) ? kExitUsage : kExitData;
  std::string msg = amrm_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw Failure{code, msg};
}

void check(amrm_status s, const std::string& context = {}) {
  if (s != AMRM_OK) fail_status(s, context);
}

struct GraphDeleter {
  void operator()(amrm_graph* g) const { amrm_graph_free(g); }
};
struct CorpusDeleter {
  void operator()(amrm_corpus* c) const { amrm_corpus_free(c); }
};
struct LexiconDeleter {
  void operator()(amrm_lexicon* l) const { amrm_lexicon_free(l); }
};
struct ProfileDeleter {
  void operator()(amrm_bias_profile* p) const { amrm_bias_profile_free(p); }
};

using CorpusPtr = std::unique_ptr<amrm_corpus, CorpusDeleter>;
using LexiconPtr = std::unique_ptr<amrm_lexicon, LexiconDeleter>;

struct Options {
  std::string metric = "smatch";
  int restarts = 4;
  std::uint64_t seed = 0;
  std::size_t k = 3;
  std::string weights;
  double tau = 0.5;
  std::string vectors;
  std::string virtual_root = "on";
  std::string bp_size = "nodes";
  std::string format = "tsv";
  unsigned jobs = 1;
  std::size_t exact_limit = 8;
  bool id_join = false;
  bool per_pair_mean = false;
  bool literal_inverse = false;
};

struct Scoring {
  amrm_metric_config config{};
  std::vector<double> weights;
  LexiconPtr lexicon;
};

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kExitUsage, "invalid weight '" + item + "'"};
    }
  }
  return out;
}

amrm_metric metric_id(const std::string& name) {
  static const std::map<std::string, amrm_metric> names = {
      {"smatch", AMRM_METRIC_SMATCH},
      {"smatch-exact", AMRM_METRIC_SMATCH_EXACT},
      {"s2match", AMRM_METRIC_S2MATCH},
      {"s2match-exact", AMRM_METRIC_S2MATCH_EXACT},
      {"sembleu", AMRM_METRIC_SEMBLEU},
  };
  auto it = names.find(name);
  if (it == names.end()) throw Failure{kExitUsage, "unknown metric '" + name + "'"};
  return it->second;
}

bool is_alignment(amrm_metric m) { return m != AMRM_METRIC_SEMBLEU; }

void prepare(const Options& o, Scoring& s) {
  amrm_metric_config_default(&s.config);
  s.config.metric = metric_id(o.metric);
  s.config.restarts = o.restarts;
  s.config.seed = o.seed;
  s.config.exact_limit = o.exact_limit;
  s.config.normalize_inverse = o.literal_inverse ? 0 : 1;
  s.config.tau = o.tau;
  s.config.sembleu.kmax = o.k;
  s.config.sembleu.virtual_root = o.virtual_root == "on" ? 1 : 0;
  s.config.sembleu.bp_size = o.bp_size == "nodes" ? AMRM_BP_NODES : AMRM_BP_NODES_AND_EDGES;
  if (!o.weights.empty()) {
    s.weights = parse_weights(o.weights);
    if (s.weights.size() != o.k) {
      throw Failure{kExitUsage, fmt::format("--weights has {} values but --k is {}",
                                            s.weights.size(), o.k)};
    }
    s.config.sembleu.weights = s.weights.data();
  }
  const bool soft = s.config.metric == AMRM_METRIC_S2MATCH ||
                    s.config.metric == AMRM_METRIC_S2MATCH_EXACT;
  if (soft) {
    if (o.vectors.empty()) throw Failure{kExitUsage, o.metric + " requires --vectors"};
    amrm_lexicon* lex = nullptr;
    check(amrm_lexicon_load(o.vectors.c_str(), &lex), o.vectors);
    s.lexicon.reset(lex);
    s.config.lexicon = lex;
    for (std::size_t i = 0; i < amrm_lexicon_warning_count(lex); ++i) {
      fmt::print(stderr, "warning: {}: {}\n", o.vectors, amrm_lexicon_warning(lex, i));
    }
  }
}

CorpusPtr load(const std::string& path) {
  amrm_corpus* c = nullptr;
  check(amrm_corpus_load(path.c_str(), 0, &c), path);
  return CorpusPtr(c);
}

std::string graph_id(const amrm_graph* g, std::size_t index) {
  char* id = nullptr;
  check(amrm_graph_id(g, &id));
  if (id == nullptr) return std::to_string(index);
  std::string out(id);
  amrm_string_free(id);
  return out;
}

struct Pairs {
  std::vector<const amrm_graph*> a;
  std::vector<const amrm_graph*> b;
  std::vector<std::string> ids;
};

Pairs pair_up(const amrm_corpus* a, const amrm_corpus* b, const std::string& path_a,
              const std::string& path_b, bool id_join) {
  const std::size_t na = amrm_corpus_size(a);
  const std::size_t nb = amrm_corpus_size(b);
  Pairs p;
  if (!id_join) {
    if (na != nb) {
      throw Failure{kExitData, fmt::format("block count mismatch: {} has {} graphs, {} has {}",
                                           path_a, na, path_b, nb)};
    }
    for (std::size_t i = 0; i < na; ++i) {
      p.a.push_back(amrm_corpus_at(a, i));
      p.b.push_back(amrm_corpus_at(b, i));
      p.ids.push_back(graph_id(p.a.back(), i));
    }
    return p;
  }
  std::map<std::string, const amrm_graph*> by_id;
  for (std::size_t i = 0; i < nb; ++i) {
    char* id = nullptr;
    check(amrm_graph_id(amrm_corpus_at(b, i), &id));
    if (id == nullptr) {
      throw Failure{kExitData, fmt::format("{}: block {} has no ::id", path_b, i)};
    }
    std::string key(id);
    amrm_string_free(id);
    if (!by_id.emplace(key, amrm_corpus_at(b, i)).second) {
      throw Failure{kExitData, fmt::format("{}: duplicate ::id '{}'", path_b, key)};
    }
  }
  for (std::size_t i = 0; i < na; ++i) {
    const amrm_graph* g = amrm_corpus_at(a, i);
    char* id = nullptr;
    check(amrm_graph_id(g, &id));
    if (id == nullptr) {
      throw Failure{kExitData, fmt::format("{}: block {} has no ::id", path_a, i)};
    }
    std::string key(id);
    amrm_string_free(id);
    if (std::find(p.ids.begin(), p.ids.end(), key) != p.ids.end()) {
      throw Failure{kExitData, fmt::format("{}: duplicate ::id '{}'", path_a, key)};
    }
    auto it = by_id.find(key);
    if (it == by_id.end()) {
      throw Failure{kExitData, fmt::format("{}: no graph with ::id '{}'", path_b, key)};
    }
    p.a.push_back(g);
    p.b.push_back(it->second);
    p.ids.push_back(key);
  }
  if (p.a.size() != nb) {
    throw Failure{kExitData, fmt::format("{} has {} graphs not present in {}", path_b,
                                         nb - p.a.size(), path_a)};
  }
  return p;
}

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.6f}", x);
}

ordered_json json_num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

ordered_json config_json(const Options& o) {
  ordered_json c;
  c["metric"] = o.metric;
  if (o.metric == "sembleu") {
    c["k"] = o.k;
    if (!o.weights.empty()) c["weights"] = parse_weights(o.weights);
    c["virtual_root"] = o.virtual_root == "on";
    c["bp_size"] = o.bp_size;
  } else {
    c["restarts"] = o.restarts;
    c["seed"] = o.seed;
    c["normalize_inverse"] = !o.literal_inverse;
    if (o.metric.starts_with("s2match")) c["tau"] = o.tau;
  }
  return c;
}

int cmd_score(const Options& o, const std::string& path_a, const std::string& path_b) {
  Scoring s;
  prepare(o, s);
  auto a = load(path_a);
  auto b = load(path_b);
  const Pairs p = pair_up(a.get(), b.get(), path_a, path_b, o.id_join);
  std::vector<amrm_match> results(p.a.size());
  double aggregate = 0.0;
  check(amrm_score_pairs(p.a.data(), p.b.data(), p.a.size(), &s.config, o.jobs,
                         o.per_pair_mean ? 1 : 0, results.data(), &aggregate));
  const bool counts = is_alignment(s.config.metric);

  if (o.format == "json") {
    ordered_json out;
    out["config"] = config_json(o);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      ordered_json r;
      r["id"] = p.ids[i];
      r["score"] = results[i].f1;
      if (counts) {
        r["precision"] = results[i].precision;
        r["recall"] = results[i].recall;
        r["matched"] = results[i].matched;
        r["size_a"] = results[i].size_a;
        r["size_b"] = results[i].size_b;
      }
      rows.push_back(std::move(r));
    }
    out["pairs"] = std::move(rows);
    out["aggregate"] = aggregate;
    out["aggregation"] = (counts && !o.per_pair_mean) ? "micro" : "mean";
    fmt::print("{}\n", out.dump(2));
    return 0;
  }
  std::string text = counts ? "id\tmetric\tscore\tprecision\trecall\tmatched\tsize_a\tsize_b\n"
                            : "id\tmetric\tscore\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const amrm_match& m = results[i];
    if (counts) {
      text += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", p.ids[i], o.metric, num(m.f1),
                          num(m.precision), num(m.recall), num(m.matched), m.size_a, m.size_b);
    } else {
      text += fmt::format("{}\t{}\t{}\n", p.ids[i], o.metric, num(m.f1));
    }
  }
  text += fmt::format("# aggregate\t{}\t{}\t{}\n", o.metric, num(aggregate),
                      (counts && !o.per_pair_mean) ? "micro" : "mean");
  fmt::print("{}", text);
  return 0;
}

int cmd_symmetry(const Options& o, const std::string& path_a, const std::string& path_b,
                 double delta) {
  Scoring s;
  prepare(o, s);
  auto a = load(path_a);
  auto b = load(path_b);
  const Pairs p = pair_up(a.get(), b.get(), path_a, path_b, o.id_join);
  std::vector<amrm_match> ab(p.a.size()), ba(p.a.size());
  check(amrm_score_pairs(p.a.data(), p.b.data(), p.a.size(), &s.config, o.jobs, 0, ab.data(),
                         nullptr));
  check(amrm_score_pairs(p.b.data(), p.a.data(), p.a.size(), &s.config, o.jobs, 0, ba.data(),
                         nullptr));
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < ab.size(); ++i) {
    xs.push_back(ab[i].f1);
    ys.push_back(ba[i].f1);
  }
  double svr = 0.0, msv = 0.0;
  check(amrm_svr(xs.data(), ys.data(), xs.size(), delta, &svr));
  check(amrm_msv(xs.data(), ys.data(), xs.size(), &msv));

  if (o.format == "json") {
    ordered_json out;
    out["config"] = config_json(o);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      rows.push_back({{"id", p.ids[i]}, {"metric", o.metric}, {"score_ab", xs[i]},
                      {"score_ba", ys[i]}});
    }
    out["pairs"] = std::move(rows);
    out["summary"] = {{"delta", delta}, {"svr", svr}, {"msv", msv}};
    fmt::print("{}\n", out.dump(2));
    return 0;
  }
  std::string text = "id\tmetric\tscore_ab\tscore_ba\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    text += fmt::format("{}\t{}\t{}\t{}\n", p.ids[i], o.metric, num(xs[i]), num(ys[i]));
  }
  text += fmt::format("# svr\t{}\n# msv\t{}\n# delta\t{}\n", num(svr), num(msv), delta);
  fmt::print("{}", text);
  return 0;
}

int cmd_determinacy(const Options& o, const std::string& path_a, const std::string& path_b,
                    std::size_t runs) {
  Scoring s;
  prepare(o, s);
  auto a = load(path_a);
  auto b = load(path_b);
  const Pairs p = pair_up(a.get(), b.get(), path_a, path_b, o.id_join);
  double corpus_std = 0.0, graph_std = 0.0;
  check(amrm_determinacy_pairs(p.a.data(), p.b.data(), p.a.size(), &s.config, runs, o.jobs,
                               &corpus_std, &graph_std));
  if (o.format == "json") {
    ordered_json out;
    out["config"] = config_json(o);
    out["summary"] = {{"runs", runs}, {"pairs", p.a.size()}, {"corpus_std", corpus_std},
                      {"mean_graph_std", graph_std}};
    fmt::print("{}\n", out.dump(2));
    return 0;
  }
  fmt::print("# runs\t{}\n# pairs\t{}\n# corpus_std\t{}\n# mean_graph_std\t{}\n", runs,
             p.a.size(), fmt::format("{:.8f}", corpus_std), fmt::format("{:.8f}", graph_std));
  return 0;
}

int cmd_bias(const Options& o, std::size_t d, std::size_t depth, const std::string& graph_path) {
  std::unique_ptr<amrm_graph, GraphDeleter> tree;
  CorpusPtr corpus;
  const amrm_graph* g = nullptr;
  if (!graph_path.empty()) {
    corpus = load(graph_path);
    if (amrm_corpus_size(corpus.get()) == 0) throw Failure{kExitData, graph_path + ": no graphs"};
    g = amrm_corpus_at(corpus.get(), 0);
  } else {
    amrm_graph* t = nullptr;
    check(amrm_tree_graph(d, depth, &t));
    tree.reset(t);
    g = t;
  }
  amrm_bias_profile* raw = nullptr;
  check(amrm_bias_profile_create(g, o.k, &raw));
  std::unique_ptr<amrm_bias_profile, ProfileDeleter> profile(raw);

  const std::size_t nodes = amrm_bias_profile_node_count(raw);
  std::vector<std::vector<std::size_t>> counts(nodes, std::vector<std::size_t>(o.k + 1));
  for (std::size_t n = 0; n < nodes; ++n) {
    for (std::size_t k = 0; k <= o.k; ++k) check(amrm_bias_profile_count(raw, n, k, &counts[n][k]));
  }
  std::vector<amrm_triple_membership> triples(amrm_graph_variable_count(g));
  for (std::size_t v = 0; v < triples.size(); ++v) {
    check(amrm_triple_membership_of(g, v, &triples[v]));
  }

  if (o.format == "json") {
    ordered_json out;
    if (graph_path.empty()) {
      out["tree"] = {{"d", d}, {"depth", depth}};
    } else {
      out["graph"] = graph_path;
    }
    out["k"] = o.k;
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 0; n < nodes; ++n) {
      ordered_json r;
      r["node"] = n;
      r["label"] = amrm_bias_profile_label(raw, n);
      r["kgrams"] = counts[n][0];
      ordered_json per = ordered_json::array();
      for (std::size_t k = 1; k <= o.k; ++k) per.push_back(counts[n][k]);
      r["by_order"] = std::move(per);
      if (n < triples.size()) r["smatch_relations"] = triples[n].relation;
      rows.push_back(std::move(r));
    }
    out["nodes"] = std::move(rows);
    fmt::print("{}\n", out.dump(2));
    return 0;
  }
  std::string text = "node\tlabel\tkgrams";
  for (std::size_t k = 1; k <= o.k; ++k) text += fmt::format("\tk{}", k);
  text += "\tsmatch_relations\n";
  for (std::size_t n = 0; n < nodes; ++n) {
    text += fmt::format("{}\t{}\t{}", n, amrm_bias_profile_label(raw, n), counts[n][0]);
    for (std::size_t k = 1; k <= o.k; ++k) text += fmt::format("\t{}", counts[n][k]);
    text += n < triples.size() ? fmt::format("\t{}\n", triples[n].relation) : "\t-\n";
  }
  fmt::print("{}", text);
  return 0;
}

// Two numeric columns per line (score on the first parse, score on the
// second). Lines starting with '#' and a non-numeric header are skipped.
std::pair<std::vector<double>, std::vector<double>> read_columns(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitData, "cannot open '" + path + "'"};
  std::vector<double> first, second;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string x, y;
    fields >> x >> y;
    if (x.empty()) continue;
    try {
      std::size_t ux = 0, uy = 0;
      const double vx = std::stod(x, &ux);
      const double vy = std::stod(y, &uy);
      if (ux != x.size() || uy != y.size()) throw std::invalid_argument(line);
      first.push_back(vx);
      second.push_back(vy);
    } catch (const std::exception&) {
      if (first.empty() && line_no == 1) continue;
      throw Failure{kExitData, fmt::format("{}:{}: expected two numbers", path, line_no)};
    }
  }
  return {first, second};
}

int cmd_rank(const Options& o, const std::string& f_path, const std::string& g_path) {
  auto [fj, fc] = read_columns(f_path);
  auto [gj, gc] = read_columns(g_path);
  if (fj.size() != gj.size()) {
    throw Failure{kExitData, fmt::format("{} has {} rows, {} has {}", f_path, fj.size(), g_path,
                                         gj.size())};
  }
  double ratio = 0.0, t = 0.0, pval = 1.0;
  check(amrm_ranking_disagreement(fj.data(), fc.data(), gj.data(), gc.data(), fj.size(), &ratio));
  std::vector<double> df(fj.size()), dg(fj.size());
  for (std::size_t i = 0; i < fj.size(); ++i) {
    df[i] = fj[i] - fc[i];
    dg[i] = gj[i] - gc[i];
  }
  check(amrm_paired_t(df.data(), dg.data(), df.size(), &t, &pval));
  if (o.format == "json") {
    ordered_json out;
    out["pairs"] = fj.size();
    out["disagreement"] = ratio;
    out["t"] = json_num(t);
    out["p"] = pval;
    fmt::print("{}\n", out.dump(2));
    return 0;
  }
  fmt::print("# pairs\t{}\n# disagreement\t{}\n# t\t{}\n# p\t{}\n", fj.size(), num(ratio), num(t),
             fmt::format("{:.6g}", pval));
  return 0;
}

int cmd_structure(const Options& o, const std::string& gold_path, const std::string& pred_path) {
  auto gold = load(gold_path);
  auto pred = load(pred_path);
  const Pairs p = pair_up(pred.get(), gold.get(), pred_path, gold_path, o.id_join);
  struct Row {
    amrm_graph_stats gold, pred;
  };
  std::vector<Row> rows(p.a.size());
  double degree = 0.0, density = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check(amrm_graph_stats_of(p.b[i], &rows[i].gold));
    check(amrm_graph_stats_of(p.a[i], &rows[i].pred));
    degree += std::abs(rows[i].gold.mean_degree - rows[i].pred.mean_degree);
    density += std::abs(rows[i].gold.density - rows[i].pred.density);
  }
  const double n = rows.empty() ? 1.0 : static_cast<double>(rows.size());
  if (o.format == "json") {
    ordered_json out;
    ordered_json items = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      items.push_back({{"id", p.ids[i]},
                       {"degree_gold", rows[i].gold.mean_degree},
                       {"degree_pred", rows[i].pred.mean_degree},
                       {"density_gold", rows[i].gold.density},
                       {"density_pred", rows[i].pred.density}});
    }
    out["pairs"] = std::move(items);
    out["summary"] = {{"degree_error", degree / n}, {"density_error", density / n}};
    fmt::print("{}\n", out.dump(2));
    return 0;
  }
  std::string text = "id\tdegree_gold\tdegree_pred\tdensity_gold\tdensity_pred\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    text += fmt::format("{}\t{}\t{}\t{}\t{}\n", p.ids[i], num(rows[i].gold.mean_degree),
                        num(rows[i].pred.mean_degree), num(rows[i].gold.density),
                        num(rows[i].pred.density));
  }
  text += fmt::format("# degree_error\t{}\n# density_error\t{}\n", num(degree / n), num(density / n));
  fmt::print("{}", text);
  return 0;
}

void add_metric_options(CLI::App* app, Options& o) {
  app->add_option("--metric", o.metric, "smatch, smatch-exact, s2match, s2match-exact, sembleu")
      ->envname("AMRM_METRIC")
      ->check(CLI::IsMember({"smatch", "smatch-exact", "s2match", "s2match-exact", "sembleu"}));
  app->add_option("--restarts", o.restarts, "hill-climbing restarts")
      ->envname("AMRM_RESTARTS")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "master seed")->envname("AMRM_SEED");
  app->add_option("--tau", o.tau, "S2match similarity threshold")
      ->envname("AMRM_TAU")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--vectors", o.vectors, "GloVe-format vector file")->envname("AMRM_VECTORS");
  app->add_option("--exact-limit", o.exact_limit, "largest graph for exact alignment")
      ->envname("AMRM_EXACT_LIMIT");
  app->add_flag("--literal-inverse", o.literal_inverse,
                "align :r-of edges as written instead of in canonical direction");
  app->add_option("--weights", o.weights, "comma-separated k-gram weights")
      ->envname("AMRM_WEIGHTS");
  app->add_option("--virtual-root", o.virtual_root, "on|off")
      ->envname("AMRM_VIRTUAL_ROOT")
      ->check(CLI::IsMember({"on", "off"}));
  app->add_option("--bp-size", o.bp_size, "nodes|nodes+edges")
      ->envname("AMRM_BP_SIZE")
      ->check(CLI::IsMember({"nodes", "nodes+edges"}));
  app->add_option("--jobs", o.jobs, "worker threads (0 = all cores)")->envname("AMRM_JOBS");
  app->add_flag("--id-join", o.id_join, "pair graphs by ::id instead of position");
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "tsv|json")
      ->envname("AMRM_FORMAT")
      ->check(CLI::IsMember({"tsv", "json"}));
  app->add_option("--k", o.k, "largest k-gram order")->envname("AMRM_K")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AMR graph similarity metrics and diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(amrm_version()));
  Options o;
  std::string file_a, file_b;

  auto* score = app.add_subcommand("score", "score position-aligned graph pairs");
  score->add_option("a", file_a, "candidate sembank")->required();
  score->add_option("b", file_b, "reference sembank")->required();
  add_metric_options(score, o);
  add_common(score, o);
  score->add_flag("--per-pair-mean", o.per_pair_mean, "average pair scores instead of pooling");

  auto* diagnose = app.add_subcommand("diagnose", "metric diagnostics");
  diagnose->require_subcommand(1);

  double delta = 1e-4;
  auto* symmetry = diagnose->add_subcommand("symmetry", "score both directions; svr and msv");
  symmetry->add_option("a", file_a)->required();
  symmetry->add_option("b", file_b)->required();
  symmetry->add_option("--delta", delta, "violation threshold")->check(CLI::NonNegativeNumber);
  add_metric_options(symmetry, o);
  add_common(symmetry, o);

  std::size_t runs = 10;
  auto* determinacy = diagnose->add_subcommand("determinacy", "spread of scores across seeds");
  determinacy->add_option("a", file_a)->required();
  determinacy->add_option("b", file_b)->required();
  determinacy->add_option("--runs", runs, "scoring runs")->check(CLI::Range(2, 100000));
  add_metric_options(determinacy, o);
  add_common(determinacy, o);

  std::size_t d = 3, depth = 2;
  std::string graph_path;
  auto* bias = diagnose->add_subcommand("bias", "k-gram and triple membership per node");
  bias->add_option("--d", d, "tree out-degree")->check(CLI::PositiveNumber);
  bias->add_option("--depth", depth, "tree depth in edges");
  bias->add_option("--graph", graph_path, "profile the first graph of a sembank instead");
  add_common(bias, o);

  auto* rank = diagnose->add_subcommand("rank", "ranking disagreement and paired t-test");
  rank->add_option("f", file_a, "metric F scores: two columns per pair")->required();
  rank->add_option("g", file_b, "metric G scores: two columns per pair")->required();
  add_common(rank, o);

  auto* structure = diagnose->add_subcommand("structure", "degree and density error");
  structure->add_option("gold", file_a)->required();
  structure->add_option("pred", file_b)->required();
  structure->add_flag("--id-join", o.id_join, "pair graphs by ::id instead of position");
  add_common(structure, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (score->parsed()) return cmd_score(o, file_a, file_b);
    if (symmetry->parsed()) return cmd_symmetry(o, file_a, file_b, delta);
    if (determinacy->parsed()) return cmd_determinacy(o, file_a, file_b, runs);
    if (bias->parsed()) return cmd_bias(o, d, depth, graph_path);
    if (rank->parsed()) return cmd_rank(o, file_a, file_b);
    if (structure->parsed()) return cmd_structure(o, file_a, file_b);
  } catch (const Failure& f) {
    fmt::print(stderr, "amr-metrics: {}\n", f.message);
    return f.code;
  }
  return kExitUsage;
}
