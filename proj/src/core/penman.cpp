#include "amr/penman.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "amr/error.hpp"

namespace amr {
namespace {

enum class TokenKind { lparen, rparen, slash, role, string, symbol, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' ||
         c == '/';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Comment lines seen so far, in order.
  std::vector<std::string>& comments() { return comments_; }

  Token next() {
    skip_space_and_comments();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (pos_ >= text_.size()) return {TokenKind::end, "", line, column};
    const char c = text_[pos_];
    switch (c) {
      case '(':
        advance();
        return {TokenKind::lparen, "(", line, column};
      case ')':
        advance();
        return {TokenKind::rparen, ")", line, column};
      case '/':
        advance();
        return {TokenKind::slash, "/", line, column};
      case '"':
        return {TokenKind::string, read_string(), line, column};
      case ':': {
        advance();
        std::string role = read_symbol();
        if (role.empty()) throw ParseError("empty role name after ':'", line, column);
        return {TokenKind::role, std::move(role), line, column};
      }
      default:
        return {TokenKind::symbol, read_symbol(), line, column};
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
      at_line_start_ = true;
    } else {
      ++column_;
      if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) at_line_start_ = false;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' && at_line_start_) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        comments_.emplace_back(text_.substr(start, pos_ - start));
      } else {
        break;
      }
    }
  }

  std::string read_symbol() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_string() {
    const std::size_t line = line_;
    const std::size_t column = column_;
    advance();  // opening quote
    std::string out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\\' && pos_ + 1 < text_.size()) {
        advance();
        out.push_back(text_[pos_]);
        advance();
      } else if (c == '"') {
        advance();
        return out;
      } else {
        out.push_back(c);
        advance();
      }
    }
    throw ParseError("unterminated string literal", line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  bool at_line_start_ = true;
  std::vector<std::string> comments_;
};

bool looks_like_variable(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  std::size_t letters = 0;
  while (letters < s.size() && std::islower(static_cast<unsigned char>(s[letters]))) ++letters;
  std::size_t digits = letters;
  while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
  if (digits != s.size()) return false;
  if (letters == s.size()) return letters == 1;
  return letters <= 3;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// `# ::id a1 ::date 2020` -> {id: a1, date: 2020}. `::snt` and `::tok` take
// the rest of the line.
Metadata parse_metadata(std::vector<std::string> lines) {
  Metadata md;
  for (const std::string& line : lines) {
    const std::string_view body = trim(std::string_view(line).substr(1));
    if (!body.starts_with("::")) continue;
    std::size_t pos = 0;
    while (pos != std::string_view::npos) {
      const std::size_t key_start = pos + 2;
      const std::size_t key_end = body.find_first_of(" \t", key_start);
      const std::string key(body.substr(key_start, key_end - key_start));
      std::size_t next = std::string_view::npos;
      if (key_end != std::string_view::npos && key != "snt" && key != "tok") {
        next = body.find(" ::", key_end);
      }
      std::string_view value;
      if (key_end != std::string_view::npos) {
        value = body.substr(key_end + 1, next == std::string_view::npos
                                             ? std::string_view::npos
                                             : next - key_end - 1);
      }
      if (!key.empty()) md.fields[key] = std::string(trim(value));
      pos = next == std::string_view::npos ? next : next + 1;
    }
  }
  md.lines = std::move(lines);
  return md;
}

// Role entry recorded in textual order; resolved once every variable is known.
struct PendingRole {
  VarIndex source = 0;
  std::string role;
  enum class Kind { child, symbol, string } kind = Kind::symbol;
  VarIndex child = 0;
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Graph parse(std::string_view text, const ParseOptions& options) {
    if (current_.kind == TokenKind::end) {
      throw ParseError("no graph in input", current_.line, current_.column);
    }
    const VarIndex root = parse_node();
    if (current_.kind != TokenKind::end) {
      if (current_.kind == TokenKind::rparen) {
        throw ParseError("unbalanced parentheses: unexpected ')'", current_.line,
                         current_.column);
      }
      throw ParseError("unexpected '" + current_.text + "' after the end of the graph",
                       current_.line, current_.column);
    }

    GraphBuilder builder;
    for (std::size_t v = 0; v < names_.size(); ++v) builder.add_variable(names_[v], concepts_[v]);
    for (PendingRole& p : roles_) {
      switch (p.kind) {
        case PendingRole::Kind::child:
          builder.add_edge(p.source, p.role, p.child);
          break;
        case PendingRole::Kind::string:
          builder.add_attribute(p.source, p.role, p.value, true);
          break;
        case PendingRole::Kind::symbol:
          if (auto it = index_.find(p.value); it != index_.end()) {
            builder.add_edge(p.source, p.role, it->second);
          } else if (looks_like_variable(p.value)) {
            throw ParseError("undefined variable '" + p.value + "'", p.line, p.column);
          } else {
            builder.add_attribute(p.source, p.role, p.value, false);
          }
          break;
      }
    }
    builder.set_root(root);
    builder.set_metadata(parse_metadata(std::move(lexer_.comments())));
    builder.set_source_text(std::string(text));
    Graph g = std::move(builder).build();
    if (options.normalize_inverse) return normalize_inverse_roles(g);
    return g;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

  void expect(TokenKind kind, const char* what) {
    if (current_.kind != kind) {
      if (current_.kind == TokenKind::end) {
        fail(std::string("unbalanced parentheses: unexpected end of input, expected ") + what);
      }
      fail(std::string("expected ") + what + ", found '" + current_.text + "'");
    }
  }

  VarIndex parse_node() {
    expect(TokenKind::lparen, "'('");
    advance();
    expect(TokenKind::symbol, "a variable");
    const Token var = current_;
    advance();
    if (current_.kind != TokenKind::slash) {
      fail("missing '/' and concept after variable '" + var.text + "'");
    }
    advance();
    if (current_.kind != TokenKind::symbol && current_.kind != TokenKind::string) {
      if (current_.kind == TokenKind::end) fail("unexpected end of input, expected a concept");
      fail("expected a concept after '/', found '" + current_.text + "'");
    }
    if (index_.contains(var.text)) {
      throw ParseError("duplicate definition of variable '" + var.text + "'", var.line,
                       var.column);
    }
    const VarIndex v = names_.size();
    index_.emplace(var.text, v);
    names_.push_back(var.text);
    concepts_.push_back(current_.text);
    advance();

    while (current_.kind == TokenKind::role) {
      PendingRole entry;
      entry.source = v;
      entry.role = current_.text;
      entry.kind = PendingRole::Kind::symbol;
      advance();
      entry.line = current_.line;
      entry.column = current_.column;
      switch (current_.kind) {
        case TokenKind::lparen:
          entry.kind = PendingRole::Kind::child;
          {
            // Reserve the slot first so textual order is kept for nested roles.
            const std::size_t slot = roles_.size();
            roles_.push_back(std::move(entry));
            const VarIndex child = parse_node();
            roles_[slot].child = child;
          }
          continue;
        case TokenKind::string:
          entry.kind = PendingRole::Kind::string;
          entry.value = current_.text;
          break;
        case TokenKind::symbol:
          entry.value = current_.text;
          break;
        case TokenKind::end:
          fail("unbalanced parentheses: unexpected end of input after role ':" + entry.role +
               "'");
        default:
          fail("missing value for role ':" + entry.role + "'");
      }
      roles_.push_back(std::move(entry));
      advance();
    }
    expect(TokenKind::rparen, "')'");
    advance();
    return v;
  }

  Lexer lexer_;
  Token current_{};
  std::vector<std::string> names_;
  std::vector<std::string> concepts_;
  std::unordered_map<std::string, VarIndex> index_;
  std::vector<PendingRole> roles_;
};

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

class Serializer {
 public:
  explicit Serializer(const Graph& g)
      : g_(g),
        visited_(g.variable_count(), false),
        emitted_(g.edges().size(), false),
        outgoing_(g.variable_count()),
        incoming_(g.variable_count()),
        attributes_(g.variable_count()) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      outgoing_[g.edges()[i].source].push_back(i);
      incoming_[g.edges()[i].target].push_back(i);
    }
    for (std::size_t i = 0; i < g.attributes().size(); ++i) {
      attributes_[g.attributes()[i].source].push_back(i);
    }
    directed_reach_ = reachable_from_root();
  }

  std::string run() {
    write_node(g_.root(), 0);
    return out_.str();
  }

 private:
  std::vector<bool> reachable_from_root() const {
    std::vector<bool> seen(g_.variable_count(), false);
    std::vector<VarIndex> stack{g_.root()};
    seen[g_.root()] = true;
    while (!stack.empty()) {
      const VarIndex v = stack.back();
      stack.pop_back();
      for (std::size_t e : outgoing_[v]) {
        const VarIndex w = g_.edges()[e].target;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  void newline(std::size_t depth) { out_ << '\n' << std::string(4 * depth, ' '); }

  void write_target(VarIndex target, std::size_t depth) {
    if (visited_[target]) {
      out_ << g_.variable(target);
    } else {
      write_node(target, depth);
    }
  }

  void write_node(VarIndex v, std::size_t depth) {
    visited_[v] = true;
    out_ << '(' << g_.variable(v) << " / " << g_.concept_of(v);
    for (std::size_t i : attributes_[v]) {
      const Attribute& a = g_.attributes()[i];
      newline(depth + 1);
      out_ << ':' << a.role << ' ' << (a.quoted ? quote(a.value) : a.value);
    }
    for (std::size_t i : outgoing_[v]) {
      if (emitted_[i]) continue;
      emitted_[i] = true;
      const Edge& e = g_.edges()[i];
      newline(depth + 1);
      out_ << ':' << e.role << ' ';
      write_target(e.target, depth + 1);
    }
    // Variables unreachable along edge direction hang off their target as
    // inverse roles.
    for (std::size_t i : incoming_[v]) {
      const Edge& e = g_.edges()[i];
      if (emitted_[i] || directed_reach_[e.source]) continue;
      emitted_[i] = true;
      newline(depth + 1);
      out_ << ':' << invert_role(e.role) << ' ';
      write_target(e.source, depth + 1);
    }
    out_ << ')';
  }

  const Graph& g_;
  std::vector<bool> visited_;
  std::vector<bool> emitted_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<std::vector<std::size_t>> attributes_;
  std::vector<bool> directed_reach_;
  std::ostringstream out_;
};

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_comment(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return false;
}

}  // namespace

Graph parse_penman(std::string_view text, const ParseOptions& options) {
  Parser parser(text);
  return parser.parse(text, options);
}

std::string serialize_penman(const Graph& g) { return Serializer(g).run(); }

std::vector<SembankBlock> split_sembank(std::string_view text) {
  std::vector<SembankBlock> blocks;
  SembankBlock current;
  bool has_graph = false;
  bool open = false;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (open && has_graph) blocks.push_back(std::move(current));
    current = {};
    open = false;
    has_graph = false;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (is_blank(line)) {
      flush();
    } else {
      if (!open) {
        open = true;
        current.first_line = line_no;
      }
      if (!is_comment(line)) has_graph = true;
      current.text.append(line);
      current.text.push_back('\n');
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  flush();
  return blocks;
}

std::vector<Graph> parse_sembank(std::string_view text, const ParseOptions& options) {
  std::vector<Graph> graphs;
  const auto blocks = split_sembank(text);
  graphs.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    try {
      graphs.push_back(parse_penman(blocks[i].text, options));
    } catch (const ParseError& e) {
      throw CorpusError("block " + std::to_string(i) + " (line " +
                            std::to_string(blocks[i].first_line + e.line() - 1) +
                            ", column " + std::to_string(e.column()) + "): " + e.reason(),
                        i);
    } catch (const InvalidArgument& e) {
      throw CorpusError("block " + std::to_string(i) + " (line " +
                            std::to_string(blocks[i].first_line) + "): " + e.what(),
                        i);
    }
  }
  return graphs;
}

std::vector<Graph> read_sembank(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open sembank file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sembank(buffer.str(), options);
}

}  // namespace amr
