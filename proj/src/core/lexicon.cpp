#include "amr/lexicon.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "amr/error.hpp"

namespace amr {

EmbeddingLexicon::EmbeddingLexicon(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw LexiconError("lexicon dimension must be positive");
}

void EmbeddingLexicon::insert(std::string token, std::span<const float> vector) {
  if (vector.size() != dimension_) {
    throw LexiconError("vector for '" + token + "' has dimension " +
                       std::to_string(vector.size()) + ", expected " +
                       std::to_string(dimension_));
  }
  auto [it, inserted] = index_.try_emplace(std::move(token), data_.size() / dimension_);
  if (inserted) {
    data_.insert(data_.end(), vector.begin(), vector.end());
  } else {
    std::copy(vector.begin(), vector.end(), data_.begin() + it->second * dimension_);
  }
}

std::optional<std::span<const float>> EmbeddingLexicon::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return std::span<const float>(data_.data() + it->second * dimension_, dimension_);
}

EmbeddingLexicon EmbeddingLexicon::parse(std::string_view text) {
  std::optional<EmbeddingLexicon> lexicon;
  std::unordered_map<std::string, std::size_t> first_seen;
  std::vector<float> row;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const std::size_t token_end = line.find(' ');
    if (token_end == std::string_view::npos || token_end == 0) {
      throw LexiconError("line " + std::to_string(line_no) + ": expected a token followed by " +
                         "vector components");
    }
    std::string token(line.substr(0, token_end));
    row.clear();
    const char* p = line.data() + token_end;
    const char* stop = line.data() + line.size();
    while (p < stop) {
      while (p < stop && (*p == ' ' || *p == '\t')) ++p;
      if (p == stop) break;
      float value = 0.0f;
      auto [next, ec] = std::from_chars(p, stop, value);
      if (ec != std::errc() || (next < stop && *next != ' ' && *next != '\t')) {
        const char* word_end = p;
        while (word_end < stop && *word_end != ' ' && *word_end != '\t') ++word_end;
        throw LexiconError("line " + std::to_string(line_no) + ": non-numeric component '" +
                           std::string(p, word_end) + "'");
      }
      row.push_back(value);
      p = next;
    }
    if (row.empty()) {
      throw LexiconError("line " + std::to_string(line_no) + ": token '" + token +
                         "' has no vector components");
    }
    if (!lexicon) lexicon.emplace(row.size());
    if (row.size() != lexicon->dimension()) {
      throw LexiconError("line " + std::to_string(line_no) + ": dimension " +
                         std::to_string(row.size()) + ", expected " +
                         std::to_string(lexicon->dimension()) + " as in the first vector");
    }
    if (auto [it, fresh] = first_seen.try_emplace(token, line_no); !fresh) {
      lexicon->warnings_.push_back("line " + std::to_string(line_no) + ": duplicate token '" +
                                   token + "' replaces line " + std::to_string(it->second));
      it->second = line_no;
    }
    lexicon->insert(std::move(token), row);
  }
  if (!lexicon) throw LexiconError("lexicon contains no vectors");
  return std::move(*lexicon);
}

EmbeddingLexicon EmbeddingLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot open lexicon file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

}  // namespace amr
