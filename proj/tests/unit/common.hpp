#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "amr/graph.hpp"
#include "amr/lexicon.hpp"
#include "amr/penman.hpp"

namespace testdata {

inline std::filesystem::path path(const std::string& name) {
  return std::filesystem::path(AMRM_TEST_DATA) / name;
}

inline amr::Graph graph(const std::string& name) {
  return amr::read_sembank(path("graphs/" + name + ".amr")).at(0);
}

inline std::vector<amr::Graph> graphs(const std::string& name) {
  return amr::read_sembank(path("graphs/" + name + ".amr"));
}

inline const amr::EmbeddingLexicon& glove() {
  static const amr::EmbeddingLexicon lex = amr::EmbeddingLexicon::load(path("glove-100d-subset.txt"));
  return lex;
}

inline amr::Graph parse(const std::string& text) { return amr::parse_penman(text); }

}  // namespace testdata
