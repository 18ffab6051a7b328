#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "amr/graph.hpp"
#include "amr/metrics.hpp"

namespace amr {

// m(A, B) and m(B, A) for one pair.
struct SymmetryPair {
  double ab = 0.0;
  double ba = 0.0;
};

inline constexpr double kDefaultSymmetryDelta = 1e-4;

// Fraction of pairs with |ab - ba| > delta. Throws InvalidArgument on an
// empty series or negative delta.
double svr(std::span<const SymmetryPair> series, double delta = kDefaultSymmetryDelta);
// Mean of |ab - ba|.
double msv(std::span<const SymmetryPair> series);

std::vector<SymmetryPair> symmetry_series(std::span<const Graph> a, std::span<const Graph> b,
                                          const MetricConfig& config, unsigned jobs = 1);

struct Determinacy {
  // Population std of the corpus score across runs.
  double corpus_std = 0.0;
  // Mean over pairs of the population std of the pair score across runs.
  double mean_graph_std = 0.0;
};

// One scoring run per seed (at least two). config.seed is ignored.
Determinacy determinacy_error(std::span<const Graph> a, std::span<const Graph> b,
                              const MetricConfig& config, std::span<const std::uint64_t> seeds,
                              unsigned jobs = 1);
// Seeds master, master + 1, ...
Determinacy determinacy_error(std::span<const Graph> a, std::span<const Graph> b,
                              const MetricConfig& config, std::size_t runs,
                              std::uint64_t master_seed = 0, unsigned jobs = 1);

// Per node: counts[node][k - 1] = number of order-k k-grams whose path
// contains the node.
struct BiasProfile {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> counts;
  // Number of k-grams of each order seen while profiling.
  std::vector<std::size_t> kgrams;

  std::size_t total(std::size_t node) const;
};

BiasProfile kgram_node_counts(const VariableFreeGraph& g, std::size_t kmax = 3);

// Smatch triples a variable takes part in.
struct TripleMembership {
  std::size_t instance = 0;
  std::size_t top = 0;
  std::size_t relation = 0;
  std::size_t attribute = 0;

  std::size_t total() const { return instance + top + relation + attribute; }
};

std::vector<TripleMembership> triple_node_counts(const Graph& g);

// Fraction of indices where (fj - fc) and (gj - gc) have strictly opposite
// signs.
double ranking_disagreement(std::span<const double> fj, std::span<const double> fc,
                            std::span<const double> gj, std::span<const double> gc);

struct TTest {
  double t = 0.0;
  double p = 1.0;
  std::size_t df = 0;
};

// Paired two-sided t-test on f[i] - g[i]. With zero variance the result is
// t = 0, p = 1 for a zero mean and t = +-inf, p = 0 otherwise.
TTest paired_t(std::span<const double> f, std::span<const double> g);

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double mean_degree = 0.0;
  // |E| / (|V| (|V| - 1)) on the directed variable-free graph.
  double density = 0.0;
};

GraphStats graph_stats(const Graph& g);

struct StructureError {
  double degree = 0.0;
  double density = 0.0;
};

StructureError structure_error(const Graph& gold, const Graph& pred);

}  // namespace amr
