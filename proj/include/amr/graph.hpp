#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace amr {

// Index of a variable inside one graph. Variables are numbered in order of
// definition, so index 0 is the first variable written in the PENMAN text.
using VarIndex = std::size_t;

inline constexpr std::string_view kInstanceRelation = "instance";
inline constexpr std::string_view kTopRelation = "TOP";

struct Edge {
  VarIndex source;
  std::string role;
  VarIndex target;

  bool operator==(const Edge&) const = default;
};

struct Attribute {
  VarIndex source;
  std::string role;
  std::string value;
  bool quoted = false;

  bool operator==(const Attribute&) const = default;
};

// Comment lines attached to a sembank block. `# ::key value` pairs are
// split into fields; every comment line is kept verbatim as well.
struct Metadata {
  std::vector<std::string> lines;
  std::map<std::string, std::string> fields;

  bool empty() const { return lines.empty(); }
};

// Rooted, labeled, directed graph. Immutable once built; use GraphBuilder
// (or parse_penman) to construct one.
class Graph {
 public:
  std::size_t variable_count() const { return variables_.size(); }
  const std::string& variable(VarIndex v) const { return variables_.at(v); }
  const std::string& concept_of(VarIndex v) const { return concepts_.at(v); }
  VarIndex root() const { return root_; }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Attribute> attributes() const { return attributes_; }

  std::optional<VarIndex> find(std::string_view name) const;

  const Metadata& metadata() const { return metadata_; }
  // Value of the `# ::id` metadata field, if present.
  std::optional<std::string> id() const;
  const std::optional<std::string>& source_text() const { return source_text_; }

 private:
  friend class GraphBuilder;

  std::vector<std::string> variables_;
  std::vector<std::string> concepts_;
  std::unordered_map<std::string, VarIndex> index_;
  VarIndex root_ = 0;
  std::vector<Edge> edges_;
  std::vector<Attribute> attributes_;
  Metadata metadata_;
  std::optional<std::string> source_text_;
};

class GraphBuilder {
 public:
  // Throws InvalidArgument on a duplicate variable name.
  VarIndex add_variable(std::string name, std::string label);
  // Relation labels are lower-cased.
  void add_edge(VarIndex source, std::string role, VarIndex target);
  void add_attribute(VarIndex source, std::string role, std::string value,
                     bool quoted = false);
  void set_root(VarIndex root);
  void set_metadata(Metadata metadata);
  void set_source_text(std::string text);

  std::optional<VarIndex> find(std::string_view name) const;
  std::size_t variable_count() const { return graph_.variables_.size(); }

  // Validates the graph invariants (non-empty, root set, every variable
  // connected to the root ignoring direction). Throws InvalidArgument.
  Graph build() &&;

 private:
  Graph graph_;
  bool root_set_ = false;
};

std::string lowercase(std::string_view text);

// True when `role` is written as an inverse (`arg0-of`). A few roles end in
// `-of` without being inverses (`consist-of`, `prep-out-of`, ...).
bool is_inverse_role(std::string_view role);
// `arg0-of` -> `arg0`, `arg0` -> `arg0-of`.
std::string invert_role(std::string_view role);

// Returns a copy where every inverse relation edge `(x :r-of y)` is replaced
// by its canonical direction `(y :r x)`.
Graph normalize_inverse_roles(const Graph& g);

enum class TripleKind { instance, attribute, relation };

// One Smatch triple. The target is a variable for relations and a label
// (concept or constant) otherwise. The TOP triple is an attribute triple on
// the root whose target is the root concept.
struct Triple {
  TripleKind kind;
  std::string relation;
  VarIndex source;
  std::variant<VarIndex, std::string> target;

  bool operator==(const Triple&) const = default;
  auto operator<=>(const Triple&) const = default;
};

// Multiset of triples: instances (in variable order), TOP, relations,
// attributes. |result| = |vars| + |edges| + |attributes| + 1.
std::vector<Triple> to_triples(const Graph& g);

std::string to_string(const Triple& t, const Graph& g);

struct VfEdge {
  std::size_t source;
  std::string role;
  std::size_t target;
};

// Graph with variables replaced by their concept labels. Node identity is
// kept: two variables with the same concept are two nodes, and every
// attribute constant occurrence becomes its own node.
struct VariableFreeGraph {
  std::vector<std::string> labels;
  std::vector<VfEdge> edges;
  std::size_t root = 0;
  // Number of leading nodes that came from variables; the rest are constants.
  std::size_t variable_nodes = 0;

  std::size_t node_count() const { return labels.size(); }
};

struct VariableFreeOptions {
  // Canonicalize inverse roles so `(x :arg1-of y)` and `(y :arg1 x)` reduce
  // to the same labeled structure.
  bool normalize_inverse = true;
};

VariableFreeGraph variable_free(const Graph& g, const VariableFreeOptions& options = {});

}  // namespace amr
