#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace amr {

// Token -> dense vector store read from the GloVe text layout
// (`token v1 ... vd` per line). Immutable after loading.
class EmbeddingLexicon {
 public:
  // Empty lexicon of the given dimension (must be >= 1).
  explicit EmbeddingLexicon(std::size_t dimension);

  // Throws LexiconError on I/O failure, a non-numeric component or a line
  // whose dimension differs from the first one. A repeated token replaces
  // the earlier vector and records a warning.
  static EmbeddingLexicon load(const std::filesystem::path& path);
  static EmbeddingLexicon parse(std::string_view text);

  // Adds or replaces a vector; throws LexiconError on a dimension mismatch.
  void insert(std::string token, std::span<const float> vector);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }
  bool empty() const { return index_.empty(); }

  std::optional<std::span<const float>> find(std::string_view token) const;

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::size_t dimension_;
  std::vector<float> data_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> warnings_;
};

}  // namespace amr
