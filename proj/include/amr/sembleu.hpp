#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "amr/graph.hpp"

namespace amr {

// Labels of one k-gram are joined with this separator inside a bag key.
inline constexpr char kKgramSeparator = '\x1f';

// Renders a bag key with spaces: "drink-01 arg1 cat".
std::string display_kgram(const std::string& key);

struct KgramBag {
  // orders[k - 1] is the multiset of k-grams of order k.
  std::vector<std::map<std::string, std::size_t>> orders;
  std::size_t nodes = 0;
  std::size_t edges = 0;

  std::size_t kmax() const { return orders.size(); }
  std::size_t total(std::size_t k) const;
};

enum class BpSize { nodes, nodes_and_edges };

struct SembleuConfig {
  std::size_t kmax = 3;
  // Empty means uniform 1/kmax.
  std::vector<double> weights;
  // Adds the bigram `is-root top <root concept>`.
  bool virtual_root = true;
  BpSize bp_size = BpSize::nodes;
  bool normalize_inverse = true;
};

void validate(const SembleuConfig& config);
std::vector<double> effective_weights(const SembleuConfig& config);

// Calls `visit(nodes, edges)` for every directed path of 1..kmax nodes;
// `edges` indexes into g.edges. Paths are bounded by length, so cycles are
// harmless.
void for_each_path(const VariableFreeGraph& g, std::size_t kmax,
                   const std::function<void(std::span<const std::size_t>,
                                            std::span<const std::size_t>)>& visit);

KgramBag extract_kgrams(const VariableFreeGraph& g, std::size_t kmax, bool virtual_root);
KgramBag extract_kgrams(const Graph& g, const SembleuConfig& config = {});

struct Precision {
  std::size_t matched = 0;
  std::size_t total = 0;
};

// Clipped overlap of order k; total is the candidate count.
Precision modified_precision(const KgramBag& cand, const KgramBag& ref, std::size_t k);

// exp(1 - ref/cand) when cand < ref, else 1. Throws ScoringError on cand = 0.
double brevity_penalty(std::size_t cand_size, std::size_t ref_size);

struct SembleuResult {
  double score = 0.0;
  double brevity_penalty = 1.0;
  std::vector<Precision> counts;
  // Smoothed precision per order.
  std::vector<double> precisions;
  std::size_t cand_size = 0;
  std::size_t ref_size = 0;
};

// The first argument is the candidate.
SembleuResult sembleu(const Graph& cand, const Graph& ref, const SembleuConfig& config = {});
double sembleu_score(const Graph& cand, const Graph& ref, const SembleuConfig& config = {});

}  // namespace amr
