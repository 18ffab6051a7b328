#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amr {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed PENMAN input. Line and column are 1-based positions in the
// text handed to the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

// A sembank block failed to parse; wraps the ParseError with the block index.
class CorpusError : public Error {
 public:
  CorpusError(const std::string& message, std::size_t block)
      : Error(message), block_(block) {}

  std::size_t block() const { return block_; }

 private:
  std::size_t block_;
};

class LexiconError : public Error {
 public:
  using Error::Error;
};

// Exhaustive alignment refused because the graph is too large.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ScoringError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace amr
