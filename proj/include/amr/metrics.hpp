#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amr/alignment.hpp"
#include "amr/graph.hpp"
#include "amr/lexicon.hpp"
#include "amr/sembleu.hpp"
#include "amr/soft_match.hpp"

namespace amr {

enum class MetricKind { smatch, smatch_exact, s2match, s2match_exact, sembleu };

std::string_view metric_name(MetricKind kind);
std::optional<MetricKind> parse_metric(std::string_view name);

bool is_alignment_metric(MetricKind kind);
bool needs_lexicon(MetricKind kind);

struct MetricConfig {
  MetricKind kind = MetricKind::smatch;
  int restarts = kDefaultRestarts;
  std::uint64_t seed = 0;
  std::size_t exact_limit = kDefaultExactLimit;
  // Alignment metrics compare `:r-of` edges in their canonical direction.
  bool normalize_inverse = true;
  SoftConfig soft;
  // Not owned; required by the s2match kinds.
  const EmbeddingLexicon* lexicon = nullptr;
  SembleuConfig sembleu;
};

void validate(const MetricConfig& config);

struct PairScore {
  double score = 0.0;
  // Alignment metrics only.
  double matched = 0.0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  bool has_counts = false;
};

PairScore score_pair(const Graph& a, const Graph& b, const MetricConfig& config);

// Seed used for pair `index` of a corpus run; independent of scheduling.
std::uint64_t pair_seed(std::uint64_t master, std::size_t index);

// Scores position-aligned pairs on up to `jobs` threads (0 = hardware).
std::vector<PairScore> score_corpus(std::span<const Graph> a, std::span<const Graph> b,
                                    const MetricConfig& config, unsigned jobs = 1);

// Pooled-count F1 for alignment metrics, mean score otherwise, or the mean
// in every case when `per_pair_mean` is set. Empty input gives 0.
double aggregate(std::span<const PairScore> pairs, MetricKind kind, bool per_pair_mean = false);

}  // namespace amr
