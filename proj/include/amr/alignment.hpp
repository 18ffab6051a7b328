#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "amr/graph.hpp"

namespace amr {

// Partial injective map vars(A) -> vars(B); unmapped entries are NULL.
class VariableMapping {
 public:
  VariableMapping() = default;
  explicit VariableMapping(std::size_t a_variables) : targets_(a_variables) {}

  std::size_t size() const { return targets_.size(); }
  std::optional<VarIndex> operator[](VarIndex a) const { return targets_.at(a); }
  void assign(VarIndex a, std::optional<VarIndex> b) { targets_.at(a) = b; }

  bool is_injective() const;
  const std::vector<std::optional<VarIndex>>& targets() const { return targets_; }

  bool operator==(const VariableMapping&) const = default;

 private:
  std::vector<std::optional<VarIndex>> targets_;
};

struct MatchResult {
  VariableMapping mapping;
  double matched = 0.0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

// Fills precision = matched/size_a, recall = matched/size_b and their
// harmonic mean (0 when both are 0).
void finalize_scores(MatchResult& result);

// Number of A triples whose image under `mapping` occurs in B, consuming each
// B triple at most once. Works on the triple multisets directly.
std::size_t count_hard_matches(const Graph& a, const Graph& b, const VariableMapping& mapping);

// Scores one concept pair for instance and TOP triples; must return a value
// in [0, 1] and 1 for identical strings.
using ConceptScorer = std::function<double(std::string_view, std::string_view)>;

// Precomputed alignment objective. Unary weights cover instance, TOP and
// attribute triples for every (a, b) variable pair; relation triples are
// grouped by (source, role, target) and scored through a lookup on B.
class MatchTable {
 public:
  // Hard matching: concepts score 1 when equal, 0 otherwise.
  static MatchTable hard(const Graph& a, const Graph& b);
  static MatchTable with_scorer(const Graph& a, const Graph& b, const ConceptScorer& scorer);

  std::size_t a_variables() const { return a_vars_; }
  std::size_t b_variables() const { return b_vars_; }
  std::size_t size_a() const { return size_a_; }
  std::size_t size_b() const { return size_b_; }

  double unary(VarIndex a, VarIndex b) const { return unary_[a * b_vars_ + b]; }
  double score(const VariableMapping& mapping) const;

  // Contribution of everything that touches variable `a` (and `other`, when
  // given) under `mapping`; used for move deltas.
  double local_score(const VariableMapping& mapping, VarIndex a,
                     std::optional<VarIndex> other = std::nullopt) const;

  // Upper bound on what variable `a` can still contribute through unary
  // weights and relation groups not yet fully assigned.
  double unary_max(VarIndex a) const { return unary_max_[a]; }

  // Distinct relation edges, by interned role.
  struct Link {
    VarIndex source;
    VarIndex target;
    std::uint32_t role;
  };
  const std::vector<Link>& a_links() const { return a_links_; }
  const std::vector<Link>& b_links() const { return b_links_; }

  const std::vector<std::string>& a_concepts() const { return a_concepts_; }
  const std::vector<std::string>& b_concepts() const { return b_concepts_; }
  const std::vector<std::string>& a_names() const { return a_names_; }
  const std::vector<std::string>& b_names() const { return b_names_; }

 private:
  struct Group {
    VarIndex source;
    VarIndex target;
    std::uint32_t role;
    std::uint32_t count;
  };

  MatchTable() = default;
  double group_score(const Group& g, const VariableMapping& mapping) const;
  static std::uint64_t key(VarIndex source, std::uint32_t role, VarIndex target);

  std::size_t a_vars_ = 0;
  std::size_t b_vars_ = 0;
  std::size_t size_a_ = 0;
  std::size_t size_b_ = 0;
  std::vector<double> unary_;
  std::vector<double> unary_max_;
  std::vector<Group> groups_;
  std::vector<std::vector<std::size_t>> groups_of_;
  std::unordered_map<std::uint64_t, std::uint32_t> b_groups_;
  std::vector<Link> a_links_, b_links_;
  std::vector<std::string> a_concepts_, b_concepts_, a_names_, b_names_;

  friend class ExactSearch;
};

// Steepest-ascent hill climbing. Restart 0 starts from the concept-equality
// initialization, later restarts from random injections; each restart draws
// from an RNG seeded by (seed, restart index), so adding restarts never lowers
// the result. Ties keep the first mapping found.
MatchResult hill_climb(const MatchTable& table, int restarts, std::uint64_t seed);
MatchResult hill_climb(const Graph& a, const Graph& b, int restarts, std::uint64_t seed);

// Initial mapping of a restart (exposed for tests).
VariableMapping initial_mapping(const MatchTable& table, int restart, std::uint64_t seed);

inline constexpr std::size_t kDefaultExactLimit = 8;
inline constexpr int kDefaultRestarts = 4;

// Branch-and-bound search over all injective partial maps. Throws
// SizeLimitError when A has more than `limit` variables.
MatchResult exact_align(const MatchTable& table, std::size_t limit = kDefaultExactLimit);
MatchResult exact_align(const Graph& a, const Graph& b, std::size_t limit = kDefaultExactLimit);

MatchResult smatch_score(const Graph& a, const Graph& b, int restarts = kDefaultRestarts,
                         std::uint64_t seed = 0);

}  // namespace amr
