#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "amr/graph.hpp"

namespace amr {

// Complete d-ary tree with `depth` edge levels (depth 0 is a single node).
// Every node has its own concept label `n<i>`; edges use `:arg<j>`.
Graph complete_tree(std::size_t d, std::size_t depth);

// Concepts drawn by the random generators. All are ordinary English words
// (with sense tags on predicates).
std::span<const std::string_view> synthetic_vocabulary();

struct RandomGraphOptions {
  std::size_t min_variables = 2;
  std::size_t max_variables = 8;
  // Probability of adding a re-entrant edge per variable.
  double reentrancy = 0.15;
  double attribute = 0.3;
  // Probability that a tree edge is written in inverse form.
  double inverse = 0.15;
};

Graph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {});
std::vector<Graph> random_corpus(std::size_t n, std::uint64_t seed,
                                 const RandomGraphOptions& options = {});

// Variables other than the root that touch exactly one edge and carry no
// attributes; removing one keeps the graph connected.
std::vector<VarIndex> leaf_variables(const Graph& g);

// Copy without variable `v`; throws InvalidArgument unless `v` is a leaf.
Graph remove_leaf(const Graph& g, VarIndex v);
// Copy without attribute number `index`.
Graph remove_attribute(const Graph& g, std::size_t index);

// One random structural edit: add a leaf, delete a leaf or attribute,
// relabel a concept, or change a role. The result always differs from `g`.
Graph perturb(const Graph& g, std::mt19937_64& rng);

}  // namespace amr
