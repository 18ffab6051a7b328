#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "amr/graph.hpp"

namespace amr {

struct ParseOptions {
  // Rewrite `:r-of` edges into their canonical direction after parsing.
  bool normalize_inverse = false;
};

// Parses one PENMAN block. `#` lines are collected as metadata. A bare symbol
// naming a variable defined anywhere in the block is a re-entrant reference;
// other bare symbols are constants, except that a variable-shaped symbol
// (`x`, `x2`, `ab12`) with no definition is reported as an undefined
// variable. Throws ParseError.
Graph parse_penman(std::string_view text, const ParseOptions& options = {});

// Canonical PENMAN text: attributes before edges, each in stored order, one
// role per line. A variable is defined at its first occurrence in a
// depth-first walk from the root and referenced bare afterwards. An edge
// that can only be reached against its direction is written inverted, so its
// literal role changes on re-parse.
std::string serialize_penman(const Graph& g);

// One graph block of a sembank file before parsing.
struct SembankBlock {
  std::string text;
  std::size_t first_line = 1;
};

// Splits sembank text into blocks separated by blank lines. Blocks made only
// of comments (file headers) are dropped.
std::vector<SembankBlock> split_sembank(std::string_view text);

// Parses every block; a failure raises CorpusError carrying the 0-based block
// index and the line number within the file.
std::vector<Graph> parse_sembank(std::string_view text, const ParseOptions& options = {});
std::vector<Graph> read_sembank(const std::filesystem::path& path,
                                const ParseOptions& options = {});

}  // namespace amr
