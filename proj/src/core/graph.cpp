#include "amr/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>

#include "amr/error.hpp"

namespace amr {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      reason_(message),
      line_(line),
      column_(column) {}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

namespace {

constexpr std::array<std::string_view, 3> kNonInverseOfRoles = {
    "consist-of", "prep-on-behalf-of", "prep-out-of"};

}  // namespace

bool is_inverse_role(std::string_view role) {
  if (role.size() <= 3 || !role.ends_with("-of")) return false;
  return std::find(kNonInverseOfRoles.begin(), kNonInverseOfRoles.end(), role) ==
         kNonInverseOfRoles.end();
}

std::string invert_role(std::string_view role) {
  if (is_inverse_role(role)) return std::string(role.substr(0, role.size() - 3));
  return std::string(role) + "-of";
}

std::optional<VarIndex> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Graph::id() const {
  auto it = metadata_.fields.find("id");
  if (it == metadata_.fields.end()) return std::nullopt;
  return it->second;
}

VarIndex GraphBuilder::add_variable(std::string name, std::string label) {
  if (graph_.index_.contains(name)) {
    throw InvalidArgument("duplicate variable '" + name + "'");
  }
  const VarIndex v = graph_.variables_.size();
  graph_.index_.emplace(name, v);
  graph_.variables_.push_back(std::move(name));
  graph_.concepts_.push_back(std::move(label));
  return v;
}

void GraphBuilder::add_edge(VarIndex source, std::string role, VarIndex target) {
  if (source >= variable_count() || target >= variable_count()) {
    throw InvalidArgument("edge endpoint out of range");
  }
  graph_.edges_.push_back({source, lowercase(role), target});
}

void GraphBuilder::add_attribute(VarIndex source, std::string role, std::string value,
                                 bool quoted) {
  if (source >= variable_count()) throw InvalidArgument("attribute source out of range");
  graph_.attributes_.push_back({source, lowercase(role), std::move(value), quoted});
}

void GraphBuilder::set_root(VarIndex root) {
  if (root >= variable_count()) throw InvalidArgument("root out of range");
  graph_.root_ = root;
  root_set_ = true;
}

void GraphBuilder::set_metadata(Metadata metadata) { graph_.metadata_ = std::move(metadata); }

void GraphBuilder::set_source_text(std::string text) { graph_.source_text_ = std::move(text); }

std::optional<VarIndex> GraphBuilder::find(std::string_view name) const {
  return graph_.find(name);
}

Graph GraphBuilder::build() && {
  const std::size_t n = graph_.variables_.size();
  if (n == 0) throw InvalidArgument("graph has no variables");
  if (!root_set_) throw InvalidArgument("graph root not set");

  std::vector<std::vector<VarIndex>> adjacent(n);
  for (const Edge& e : graph_.edges_) {
    adjacent[e.source].push_back(e.target);
    adjacent[e.target].push_back(e.source);
  }
  std::vector<bool> seen(n, false);
  std::deque<VarIndex> queue{graph_.root_};
  seen[graph_.root_] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VarIndex v = queue.front();
    queue.pop_front();
    for (VarIndex w : adjacent[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n) {
    for (VarIndex v = 0; v < n; ++v) {
      if (!seen[v]) {
        throw InvalidArgument("variable '" + graph_.variables_[v] +
                              "' is not connected to the root");
      }
    }
  }
  return std::move(graph_);
}

Graph normalize_inverse_roles(const Graph& g) {
  GraphBuilder b;
  for (VarIndex v = 0; v < g.variable_count(); ++v) b.add_variable(g.variable(v), g.concept_of(v));
  for (const Edge& e : g.edges()) {
    if (is_inverse_role(e.role)) {
      b.add_edge(e.target, invert_role(e.role), e.source);
    } else {
      b.add_edge(e.source, e.role, e.target);
    }
  }
  for (const Attribute& a : g.attributes()) b.add_attribute(a.source, a.role, a.value, a.quoted);
  b.set_root(g.root());
  b.set_metadata(g.metadata());
  if (g.source_text()) b.set_source_text(*g.source_text());
  return std::move(b).build();
}

std::vector<Triple> to_triples(const Graph& g) {
  std::vector<Triple> out;
  out.reserve(g.variable_count() + g.edges().size() + g.attributes().size() + 1);
  for (VarIndex v = 0; v < g.variable_count(); ++v) {
    out.push_back({TripleKind::instance, std::string(kInstanceRelation), v, g.concept_of(v)});
  }
  out.push_back(
      {TripleKind::attribute, std::string(kTopRelation), g.root(), g.concept_of(g.root())});
  for (const Edge& e : g.edges()) {
    out.push_back({TripleKind::relation, e.role, e.source, e.target});
  }
  for (const Attribute& a : g.attributes()) {
    out.push_back({TripleKind::attribute, a.role, a.source, a.value});
  }
  return out;
}

std::string to_string(const Triple& t, const Graph& g) {
  std::string target;
  if (const auto* v = std::get_if<VarIndex>(&t.target)) {
    target = g.variable(*v);
  } else {
    target = std::get<std::string>(t.target);
  }
  return t.relation + "(" + g.variable(t.source) + ", " + target + ")";
}

VariableFreeGraph variable_free(const Graph& g, const VariableFreeOptions& options) {
  VariableFreeGraph vf;
  vf.labels.reserve(g.variable_count() + g.attributes().size());
  for (VarIndex v = 0; v < g.variable_count(); ++v) vf.labels.push_back(g.concept_of(v));
  vf.variable_nodes = g.variable_count();
  vf.root = g.root();
  for (const Edge& e : g.edges()) {
    if (options.normalize_inverse && is_inverse_role(e.role)) {
      vf.edges.push_back({e.target, invert_role(e.role), e.source});
    } else {
      vf.edges.push_back({e.source, e.role, e.target});
    }
  }
  for (const Attribute& a : g.attributes()) {
    const std::size_t node = vf.labels.size();
    vf.labels.push_back(a.value);
    vf.edges.push_back({a.source, a.role, node});
  }
  return vf;
}

}  // namespace amr
