#include "amr/sembleu.hpp"

#include <cmath>
#include <numeric>

#include "amr/error.hpp"

namespace amr {

std::string display_kgram(const std::string& key) {
  std::string out = key;
  for (char& c : out) {
    if (c == kKgramSeparator) c = ' ';
  }
  return out;
}

std::size_t KgramBag::total(std::size_t k) const {
  if (k == 0 || k > orders.size()) return 0;
  std::size_t n = 0;
  for (const auto& [_, count] : orders[k - 1]) n += count;
  return n;
}

void validate(const SembleuConfig& config) {
  if (config.kmax == 0) throw InvalidArgument("k must be at least 1");
  if (config.weights.empty()) return;
  if (config.weights.size() != config.kmax) {
    throw InvalidArgument("expected " + std::to_string(config.kmax) + " weights, got " +
                          std::to_string(config.weights.size()));
  }
  double sum = 0.0;
  for (double w : config.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidArgument("weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidArgument("weights must sum to 1");
}

std::vector<double> effective_weights(const SembleuConfig& config) {
  validate(config);
  if (!config.weights.empty()) return config.weights;
  return std::vector<double>(config.kmax, 1.0 / static_cast<double>(config.kmax));
}

void for_each_path(const VariableFreeGraph& g, std::size_t kmax,
                   const std::function<void(std::span<const std::size_t>,
                                            std::span<const std::size_t>)>& visit) {
  std::vector<std::vector<std::size_t>> out(g.node_count());
  for (std::size_t e = 0; e < g.edges.size(); ++e) out[g.edges[e].source].push_back(e);

  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
  std::function<void()> extend = [&] {
    visit(nodes, edges);
    if (nodes.size() == kmax) return;
    for (std::size_t e : out[nodes.back()]) {
      nodes.push_back(g.edges[e].target);
      edges.push_back(e);
      extend();
      nodes.pop_back();
      edges.pop_back();
    }
  };
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    nodes.assign(1, n);
    edges.clear();
    extend();
  }
}

KgramBag extract_kgrams(const VariableFreeGraph& g, std::size_t kmax, bool virtual_root) {
  if (kmax == 0) throw InvalidArgument("k must be at least 1");
  KgramBag bag;
  bag.orders.resize(kmax);
  bag.nodes = g.node_count();
  bag.edges = g.edges.size();
  std::string key;
  for_each_path(g, kmax, [&](std::span<const std::size_t> nodes,
                             std::span<const std::size_t> edges) {
    key = g.labels[nodes[0]];
    for (std::size_t i = 0; i < edges.size(); ++i) {
      key += kKgramSeparator;
      key += g.edges[edges[i]].role;
      key += kKgramSeparator;
      key += g.labels[nodes[i + 1]];
    }
    ++bag.orders[nodes.size() - 1][key];
  });
  if (virtual_root && kmax >= 2 && g.node_count() > 0) {
    key = "is-root";
    key += kKgramSeparator;
    key += "top";
    key += kKgramSeparator;
    key += g.labels[g.root];
    ++bag.orders[1][key];
    ++bag.edges;
  }
  return bag;
}

KgramBag extract_kgrams(const Graph& g, const SembleuConfig& config) {
  validate(config);
  return extract_kgrams(variable_free(g, {.normalize_inverse = config.normalize_inverse}),
                        config.kmax, config.virtual_root);
}

Precision modified_precision(const KgramBag& cand, const KgramBag& ref, std::size_t k) {
  if (k == 0 || k > cand.kmax() || k > ref.kmax()) {
    throw InvalidArgument("order " + std::to_string(k) + " exceeds the extracted k");
  }
  Precision p;
  const auto& r = ref.orders[k - 1];
  for (const auto& [gram, count] : cand.orders[k - 1]) {
    p.total += count;
    if (auto it = r.find(gram); it != r.end()) p.matched += std::min(count, it->second);
  }
  return p;
}

double brevity_penalty(std::size_t cand_size, std::size_t ref_size) {
  if (cand_size == 0) throw ScoringError("brevity penalty undefined for an empty candidate");
  if (cand_size >= ref_size) return 1.0;
  return std::exp(1.0 - static_cast<double>(ref_size) / static_cast<double>(cand_size));
}

SembleuResult sembleu(const Graph& cand, const Graph& ref, const SembleuConfig& config) {
  const std::vector<double> weights = effective_weights(config);
  const KgramBag c = extract_kgrams(cand, config);
  const KgramBag r = extract_kgrams(ref, config);

  SembleuResult result;
  auto size = [&](const KgramBag& b) {
    return config.bp_size == BpSize::nodes ? b.nodes : b.nodes + b.edges;
  };
  result.cand_size = size(c);
  result.ref_size = size(r);
  result.brevity_penalty = brevity_penalty(result.cand_size, result.ref_size);

  double log_sum = 0.0;
  int zeros = 0;
  for (std::size_t k = 1; k <= config.kmax; ++k) {
    const Precision p = modified_precision(c, r, k);
    result.counts.push_back(p);
    double value;
    if (p.total == 0 && r.total(k) == 0) {
      value = 1.0;
    } else if (p.matched == 0) {
      ++zeros;
      value = std::ldexp(1.0, -zeros) / static_cast<double>(std::max<std::size_t>(p.total, 1));
    } else {
      value = static_cast<double>(p.matched) / static_cast<double>(p.total);
    }
    result.precisions.push_back(value);
    log_sum += weights[k - 1] * std::log(value);
  }
  if (result.counts[0].matched == 0) {
    result.score = 0.0;
  } else {
    result.score = std::min(1.0, result.brevity_penalty * std::exp(log_sum));
  }
  return result;
}

double sembleu_score(const Graph& cand, const Graph& ref, const SembleuConfig& config) {
  return sembleu(cand, ref, config).score;
}

}  // namespace amr
