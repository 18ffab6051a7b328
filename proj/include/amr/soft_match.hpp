#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amr/alignment.hpp"
#include "amr/graph.hpp"
#include "amr/lexicon.hpp"

namespace amr {

enum class DistanceKind { cosine };

struct SoftConfig {
  // Similarities below tau count as no match. tau = 1 admits only identical
  // concept strings, which makes soft matching equal to hard matching.
  double tau = 0.5;
  DistanceKind distance = DistanceKind::cosine;
};

inline constexpr double kDefaultTau = 0.5;

void validate(const SoftConfig& config);

// Lower-cases and strips a trailing sense tag: `Remedy-01` -> `remedy`.
std::string normalize_concept(std::string_view label);

// Vector used for a concept: the normalized token if the lexicon has it,
// otherwise the mean of the available `-`-separated parts. nullopt when
// nothing resolves.
std::optional<std::vector<double>> concept_vector(std::string_view label,
                                                  const EmbeddingLexicon& lexicon);

// d(x, y) = min{1, 1 - cos(v_x, v_y)}, clamped to [0, 1]. Identical strings
// are at distance 0; an out-of-vocabulary concept is at distance 1 from any
// other string.
double concept_distance(std::string_view x, std::string_view y, const EmbeddingLexicon& lexicon,
                        const SoftConfig& config = {});

// 1 - d(x, y) when that reaches tau, else 0.
double soft_similarity(std::string_view x, std::string_view y, const EmbeddingLexicon& lexicon,
                       const SoftConfig& config = {});

// Relation and attribute triples count 0/1 as in hard matching; instance and
// TOP triples contribute their soft similarity.
double count_soft_matches(const Graph& a, const Graph& b, const VariableMapping& mapping,
                          const EmbeddingLexicon& lexicon, const SoftConfig& config = {});

MatchTable soft_match_table(const Graph& a, const Graph& b, const EmbeddingLexicon& lexicon,
                            const SoftConfig& config = {});

MatchResult s2match_score(const Graph& a, const Graph& b, int restarts, std::uint64_t seed,
                          const EmbeddingLexicon& lexicon, const SoftConfig& config = {});

MatchResult exact_s2match(const Graph& a, const Graph& b, const EmbeddingLexicon& lexicon,
                          const SoftConfig& config = {},
                          std::size_t limit = kDefaultExactLimit);

}  // namespace amr
