#include "amr/soft_match.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <unordered_map>

#include "amr/error.hpp"

namespace amr {
namespace {

std::optional<std::vector<double>> lookup(std::string_view token, const EmbeddingLexicon& lex) {
  auto v = lex.find(token);
  if (!v) return std::nullopt;
  return std::vector<double>(v->begin(), v->end());
}

double cosine(const std::vector<double>& x, const std::vector<double>& y) {
  double dot = 0.0;
  double nx = 0.0;
  double ny = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * y[i];
    nx += x[i] * x[i];
    ny += y[i] * y[i];
  }
  if (nx == 0.0 || ny == 0.0) return 0.0;
  return dot / (std::sqrt(nx) * std::sqrt(ny));
}

double distance_from_vectors(const std::optional<std::vector<double>>& x,
                             const std::optional<std::vector<double>>& y) {
  if (!x || !y) return 1.0;
  return std::clamp(1.0 - cosine(*x, *y), 0.0, 1.0);
}

double similarity_from_distance(double d, const SoftConfig& config) {
  const double s = 1.0 - d;
  if (config.tau >= 1.0) return 0.0;  // only identical strings, handled by callers
  return s >= config.tau ? s : 0.0;
}

// Memoizes concept vectors while one table is built.
class VectorCache {
 public:
  explicit VectorCache(const EmbeddingLexicon& lex) : lex_(lex) {}

  const std::optional<std::vector<double>>& get(std::string_view label) {
    auto it = cache_.find(std::string(label));
    if (it == cache_.end()) {
      it = cache_.emplace(std::string(label), concept_vector(label, lex_)).first;
    }
    return it->second;
  }

 private:
  const EmbeddingLexicon& lex_;
  std::unordered_map<std::string, std::optional<std::vector<double>>> cache_;
};

}  // namespace

void validate(const SoftConfig& config) {
  if (!(config.tau >= 0.0 && config.tau <= 1.0)) {
    throw InvalidArgument("tau must lie in [0, 1]");
  }
}

std::string normalize_concept(std::string_view label) {
  std::string out = lowercase(label);
  const std::size_t dash = out.rfind('-');
  if (dash != std::string::npos && dash + 1 < out.size() && dash > 0 &&
      std::all_of(out.begin() + static_cast<std::ptrdiff_t>(dash) + 1, out.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    out.resize(dash);
  }
  return out;
}

std::optional<std::vector<double>> concept_vector(std::string_view label,
                                                  const EmbeddingLexicon& lexicon) {
  const std::string token = normalize_concept(label);
  if (auto v = lookup(token, lexicon)) return v;
  if (token.find('-') == std::string::npos) return std::nullopt;

  std::vector<double> sum(lexicon.dimension(), 0.0);
  std::size_t found = 0;
  std::size_t start = 0;
  while (start <= token.size()) {
    std::size_t end = token.find('-', start);
    if (end == std::string::npos) end = token.size();
    if (end > start) {
      if (auto part = lexicon.find(std::string_view(token).substr(start, end - start))) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*part)[i];
        ++found;
      }
    }
    start = end + 1;
  }
  if (found == 0) return std::nullopt;
  for (double& x : sum) x /= static_cast<double>(found);
  return sum;
}

double concept_distance(std::string_view x, std::string_view y, const EmbeddingLexicon& lexicon,
                        const SoftConfig& config) {
  validate(config);
  if (x == y) return 0.0;
  return distance_from_vectors(concept_vector(x, lexicon), concept_vector(y, lexicon));
}

double soft_similarity(std::string_view x, std::string_view y, const EmbeddingLexicon& lexicon,
                       const SoftConfig& config) {
  if (x == y) return 1.0;
  return similarity_from_distance(concept_distance(x, y, lexicon, config), config);
}

double count_soft_matches(const Graph& a, const Graph& b, const VariableMapping& mapping,
                          const EmbeddingLexicon& lexicon, const SoftConfig& config) {
  validate(config);
  if (mapping.size() != a.variable_count()) {
    throw InvalidArgument("mapping domain does not match the variables of A");
  }
  // Relation and attribute triples: multiset intersection after mapping.
  std::map<Triple, std::size_t> pool;
  for (Triple& t : to_triples(b)) {
    if (t.kind == TripleKind::instance || t.relation == kTopRelation) continue;
    ++pool[std::move(t)];
  }
  double total = 0.0;
  for (Triple t : to_triples(a)) {
    if (t.kind == TripleKind::instance || t.relation == kTopRelation) continue;
    const auto source = mapping[t.source];
    if (!source) continue;
    t.source = *source;
    if (auto* target = std::get_if<VarIndex>(&t.target)) {
      const auto image = mapping[*target];
      if (!image) continue;
      *target = *image;
    }
    auto it = pool.find(t);
    if (it != pool.end() && it->second > 0) {
      --it->second;
      total += 1.0;
    }
  }
  // Instance and TOP triples: graded concept similarity.
  for (VarIndex i = 0; i < a.variable_count(); ++i) {
    const auto j = mapping[i];
    if (!j) continue;
    total += soft_similarity(a.concept_of(i), b.concept_of(*j), lexicon, config);
  }
  if (mapping[a.root()] == b.root()) {
    total += soft_similarity(a.concept_of(a.root()), b.concept_of(b.root()), lexicon, config);
  }
  return total;
}

MatchTable soft_match_table(const Graph& a, const Graph& b, const EmbeddingLexicon& lexicon,
                            const SoftConfig& config) {
  validate(config);
  VectorCache cache(lexicon);
  std::map<std::pair<std::string, std::string>, double> memo;
  return MatchTable::with_scorer(a, b, [&](std::string_view x, std::string_view y) {
    if (x == y) return 1.0;
    auto key = std::make_pair(std::string(x), std::string(y));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const double d = distance_from_vectors(cache.get(x), cache.get(y));
    const double s = similarity_from_distance(d, config);
    memo.emplace(std::move(key), s);
    return s;
  });
}

MatchResult s2match_score(const Graph& a, const Graph& b, int restarts, std::uint64_t seed,
                          const EmbeddingLexicon& lexicon, const SoftConfig& config) {
  return hill_climb(soft_match_table(a, b, lexicon, config), restarts, seed);
}

MatchResult exact_s2match(const Graph& a, const Graph& b, const EmbeddingLexicon& lexicon,
                          const SoftConfig& config, std::size_t limit) {
  return exact_align(soft_match_table(a, b, lexicon, config), limit);
}

}  // namespace amr
