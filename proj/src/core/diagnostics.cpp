#include "amr/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "amr/error.hpp"
#include "amr/sembleu.hpp"

namespace amr {
namespace {

double population_std(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  // Shifted by the first value so identical runs give exactly 0.
  const double x0 = xs[0];
  double mean = 0.0;
  for (double x : xs) mean += x - x0;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - x0 - mean) * (x - x0 - mean);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

}  // namespace

double svr(std::span<const SymmetryPair> series, double delta) {
  if (series.empty()) throw InvalidArgument("symmetry series is empty");
  if (!(delta >= 0.0)) throw InvalidArgument("delta must be non-negative");
  std::size_t violations = 0;
  for (const SymmetryPair& p : series) {
    if (std::abs(p.ab - p.ba) > delta) ++violations;
  }
  return static_cast<double>(violations) / static_cast<double>(series.size());
}

double msv(std::span<const SymmetryPair> series) {
  if (series.empty()) throw InvalidArgument("symmetry series is empty");
  double sum = 0.0;
  for (const SymmetryPair& p : series) sum += std::abs(p.ab - p.ba);
  return sum / static_cast<double>(series.size());
}

std::vector<SymmetryPair> symmetry_series(std::span<const Graph> a, std::span<const Graph> b,
                                          const MetricConfig& config, unsigned jobs) {
  const auto forward = score_corpus(a, b, config, jobs);
  const auto backward = score_corpus(b, a, config, jobs);
  std::vector<SymmetryPair> out;
  out.reserve(forward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    out.push_back({forward[i].score, backward[i].score});
  }
  return out;
}

Determinacy determinacy_error(std::span<const Graph> a, std::span<const Graph> b,
                              const MetricConfig& config, std::span<const std::uint64_t> seeds,
                              unsigned jobs) {
  if (seeds.size() < 2) throw InvalidArgument("determinacy needs at least two runs");
  if (a.empty()) throw InvalidArgument("corpus is empty");
  std::vector<double> corpus;
  std::vector<std::vector<double>> per_pair(a.size());
  for (std::uint64_t seed : seeds) {
    MetricConfig c = config;
    c.seed = seed;
    const auto scores = score_corpus(a, b, c, jobs);
    corpus.push_back(aggregate(scores, config.kind));
    for (std::size_t i = 0; i < scores.size(); ++i) per_pair[i].push_back(scores[i].score);
  }
  Determinacy d;
  d.corpus_std = population_std(corpus);
  double sum = 0.0;
  for (const auto& xs : per_pair) sum += population_std(xs);
  d.mean_graph_std = sum / static_cast<double>(per_pair.size());
  return d;
}

Determinacy determinacy_error(std::span<const Graph> a, std::span<const Graph> b,
                              const MetricConfig& config, std::size_t runs,
                              std::uint64_t master_seed, unsigned jobs) {
  std::vector<std::uint64_t> seeds(runs);
  std::iota(seeds.begin(), seeds.end(), master_seed);
  return determinacy_error(a, b, config, seeds, jobs);
}

std::size_t BiasProfile::total(std::size_t node) const {
  const auto& c = counts.at(node);
  return std::accumulate(c.begin(), c.end(), std::size_t{0});
}

BiasProfile kgram_node_counts(const VariableFreeGraph& g, std::size_t kmax) {
  if (kmax == 0) throw InvalidArgument("k must be at least 1");
  BiasProfile profile;
  profile.labels = g.labels;
  profile.counts.assign(g.node_count(), std::vector<std::size_t>(kmax, 0));
  profile.kgrams.assign(kmax, 0);
  std::vector<std::size_t> seen;
  for_each_path(g, kmax, [&](std::span<const std::size_t> nodes, std::span<const std::size_t>) {
    const std::size_t order = nodes.size() - 1;
    ++profile.kgrams[order];
    seen.assign(nodes.begin(), nodes.end());
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (std::size_t n : seen) ++profile.counts[n][order];
  });
  return profile;
}

std::vector<TripleMembership> triple_node_counts(const Graph& g) {
  std::vector<TripleMembership> out(g.variable_count());
  for (auto& m : out) m.instance = 1;
  out[g.root()].top = 1;
  for (const Edge& e : g.edges()) {
    ++out[e.source].relation;
    if (e.target != e.source) ++out[e.target].relation;
  }
  for (const Attribute& a : g.attributes()) ++out[a.source].attribute;
  return out;
}

double ranking_disagreement(std::span<const double> fj, std::span<const double> fc,
                            std::span<const double> gj, std::span<const double> gc) {
  const std::size_t n = fj.size();
  if (fc.size() != n || gj.size() != n || gc.size() != n) {
    throw InvalidArgument("score lists differ in length");
  }
  if (n == 0) throw InvalidArgument("score lists are empty");
  std::size_t disagree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((fj[i] - fc[i]) * (gj[i] - gc[i]) < 0.0) ++disagree;
  }
  return static_cast<double>(disagree) / static_cast<double>(n);
}

TTest paired_t(std::span<const double> f, std::span<const double> g) {
  if (f.size() != g.size()) throw InvalidArgument("paired samples differ in length");
  const std::size_t n = f.size();
  if (n < 2) throw InvalidArgument("paired t-test needs at least two samples");
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = f[i] - g[i];
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double x : d) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  TTest result;
  result.df = n - 1;
  if (sd == 0.0) {
    if (mean == 0.0) return result;
    result.t = mean > 0 ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
    result.p = 0.0;
    return result;
  }
  result.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  boost::math::students_t dist(static_cast<double>(result.df));
  result.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(result.t))));
  return result;
}

GraphStats graph_stats(const Graph& g) {
  const VariableFreeGraph vf = variable_free(g);
  GraphStats s;
  s.nodes = vf.node_count();
  s.edges = vf.edges.size();
  const double v = static_cast<double>(s.nodes);
  const double e = static_cast<double>(s.edges);
  s.mean_degree = v > 0 ? 2.0 * e / v : 0.0;
  s.density = s.nodes > 1 ? e / (v * (v - 1.0)) : 0.0;
  return s;
}

StructureError structure_error(const Graph& gold, const Graph& pred) {
  const GraphStats a = graph_stats(gold);
  const GraphStats b = graph_stats(pred);
  return {std::abs(a.mean_degree - b.mean_degree), std::abs(a.density - b.density)};
}

}  // namespace amr
