#include "amr/synthetic.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "amr/error.hpp"

namespace amr {
namespace {

constexpr std::array<std::string_view, 40> kVocabulary = {
    "cat",     "kitten",    "dog",      "giraffe",  "man",       "woman",   "boy",
    "girl",    "person",    "thing",    "house",    "city",      "water",   "food",
    "law",     "navy",      "military", "poverty",  "government", "country", "big",
    "small",   "poor",      "red",      "run-02",   "sprint-01", "sleep-01", "eat-01",
    "drink-01", "want-01",  "know-01",  "see-01",   "go-02",     "say-01",  "think-01",
    "heat-01", "do-02",     "and",      "possible-01", "fast"};

constexpr std::array<std::string_view, 9> kRoles = {
    "arg0", "arg1", "arg2", "mod", "location", "time", "manner", "op1", "op2"};

struct Parts {
  std::vector<std::string> names;
  std::vector<std::string> concepts;
  std::vector<Edge> edges;
  std::vector<Attribute> attributes;
  VarIndex root = 0;
  Metadata metadata;
};

Parts split(const Graph& g) {
  Parts p;
  for (VarIndex v = 0; v < g.variable_count(); ++v) {
    p.names.push_back(g.variable(v));
    p.concepts.push_back(g.concept_of(v));
  }
  p.edges.assign(g.edges().begin(), g.edges().end());
  p.attributes.assign(g.attributes().begin(), g.attributes().end());
  p.root = g.root();
  p.metadata = g.metadata();
  return p;
}

Graph assemble(const Parts& p) {
  GraphBuilder b;
  for (std::size_t i = 0; i < p.names.size(); ++i) b.add_variable(p.names[i], p.concepts[i]);
  for (const Edge& e : p.edges) b.add_edge(e.source, e.role, e.target);
  for (const Attribute& a : p.attributes) b.add_attribute(a.source, a.role, a.value, a.quoted);
  b.set_root(p.root);
  if (!p.metadata.empty()) b.set_metadata(p.metadata);
  return std::move(b).build();
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::string fresh_name(const Parts& p) {
  for (std::size_t i = p.names.size();; ++i) {
    std::string name = "v" + std::to_string(i);
    if (std::find(p.names.begin(), p.names.end(), name) == p.names.end()) return name;
  }
}

void add_random_attribute(Parts& p, VarIndex v, std::mt19937_64& rng) {
  switch (pick(rng, 3)) {
    case 0:
      p.attributes.push_back({v, "polarity", "-", false});
      break;
    case 1:
      p.attributes.push_back({v, "quant", std::to_string(1 + pick(rng, 9)), false});
      break;
    default:
      p.attributes.push_back({v, "name", std::string(kVocabulary[pick(rng, 14)]), true});
      break;
  }
}

}  // namespace

Graph complete_tree(std::size_t d, std::size_t depth) {
  GraphBuilder b;
  std::vector<VarIndex> level{b.add_variable("v0", "n0")};
  b.set_root(level[0]);
  for (std::size_t l = 0; l < depth; ++l) {
    std::vector<VarIndex> next;
    for (VarIndex parent : level) {
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t i = b.variable_count();
        const VarIndex child = b.add_variable("v" + std::to_string(i), "n" + std::to_string(i));
        b.add_edge(parent, "arg" + std::to_string(j), child);
        next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return std::move(b).build();
}

std::span<const std::string_view> synthetic_vocabulary() { return kVocabulary; }

Graph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  if (options.min_variables == 0 || options.min_variables > options.max_variables) {
    throw InvalidArgument("invalid variable range");
  }
  const std::size_t n =
      options.min_variables + pick(rng, options.max_variables - options.min_variables + 1);
  Parts p;
  for (std::size_t i = 0; i < n; ++i) {
    p.names.push_back("v" + std::to_string(i));
    p.concepts.emplace_back(kVocabulary[pick(rng, kVocabulary.size())]);
  }
  for (VarIndex i = 1; i < n; ++i) {
    const VarIndex parent = pick(rng, i);
    std::string role(kRoles[pick(rng, kRoles.size())]);
    if (chance(rng, options.inverse)) {
      p.edges.push_back({parent, role + "-of", i});
    } else {
      p.edges.push_back({parent, role, i});
    }
  }
  for (VarIndex i = 0; i < n && n > 1; ++i) {
    if (chance(rng, options.reentrancy)) {
      VarIndex t = pick(rng, n - 1);
      if (t >= i) ++t;
      p.edges.push_back({i, std::string(kRoles[pick(rng, kRoles.size())]), t});
    }
    if (chance(rng, options.attribute)) add_random_attribute(p, i, rng);
  }
  return assemble(p);
}

std::vector<Graph> random_corpus(std::size_t n, std::uint64_t seed,
                                 const RandomGraphOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_graph(rng, options));
  return out;
}

std::vector<VarIndex> leaf_variables(const Graph& g) {
  std::vector<std::size_t> degree(g.variable_count(), 0);
  std::vector<bool> has_attribute(g.variable_count(), false);
  for (const Edge& e : g.edges()) {
    ++degree[e.source];
    ++degree[e.target];
  }
  for (const Attribute& a : g.attributes()) has_attribute[a.source] = true;
  std::vector<VarIndex> out;
  for (VarIndex v = 0; v < g.variable_count(); ++v) {
    if (v != g.root() && degree[v] == 1 && !has_attribute[v]) out.push_back(v);
  }
  return out;
}

Graph remove_leaf(const Graph& g, VarIndex v) {
  const auto leaves = leaf_variables(g);
  if (std::find(leaves.begin(), leaves.end(), v) == leaves.end()) {
    throw InvalidArgument("variable '" + g.variable(v) + "' is not a removable leaf");
  }
  Parts p = split(g);
  auto shift = [v](VarIndex x) { return x > v ? x - 1 : x; };
  p.names.erase(p.names.begin() + static_cast<std::ptrdiff_t>(v));
  p.concepts.erase(p.concepts.begin() + static_cast<std::ptrdiff_t>(v));
  std::erase_if(p.edges, [v](const Edge& e) { return e.source == v || e.target == v; });
  for (Edge& e : p.edges) {
    e.source = shift(e.source);
    e.target = shift(e.target);
  }
  for (Attribute& a : p.attributes) a.source = shift(a.source);
  p.root = shift(p.root);
  return assemble(p);
}

Graph remove_attribute(const Graph& g, std::size_t index) {
  if (index >= g.attributes().size()) throw InvalidArgument("attribute index out of range");
  Parts p = split(g);
  p.attributes.erase(p.attributes.begin() + static_cast<std::ptrdiff_t>(index));
  return assemble(p);
}

Graph perturb(const Graph& g, std::mt19937_64& rng) {
  for (;;) {
    switch (pick(rng, 5)) {
      case 0: {
        Parts p = split(g);
        const VarIndex parent = pick(rng, p.names.size());
        p.names.push_back(fresh_name(p));
        p.concepts.emplace_back(kVocabulary[pick(rng, kVocabulary.size())]);
        p.edges.push_back({parent, std::string(kRoles[pick(rng, kRoles.size())]),
                           p.names.size() - 1});
        return assemble(p);
      }
      case 1: {
        const auto leaves = leaf_variables(g);
        if (leaves.empty()) break;
        return remove_leaf(g, leaves[pick(rng, leaves.size())]);
      }
      case 2: {
        if (g.attributes().empty()) break;
        return remove_attribute(g, pick(rng, g.attributes().size()));
      }
      case 3: {
        Parts p = split(g);
        const VarIndex v = pick(rng, p.names.size());
        std::string_view label = kVocabulary[pick(rng, kVocabulary.size())];
        if (label == p.concepts[v]) break;
        p.concepts[v] = label;
        return assemble(p);
      }
      default: {
        if (g.edges().empty()) break;
        Parts p = split(g);
        Edge& e = p.edges[pick(rng, p.edges.size())];
        std::string_view role = kRoles[pick(rng, kRoles.size())];
        if (role == e.role) break;
        e.role = role;
        return assemble(p);
      }
    }
  }
}

}  // namespace amr
