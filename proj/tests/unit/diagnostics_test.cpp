#include <cmath>
#include <limits>
#include <random>

#include "amr/diagnostics.hpp"
#include "amr/error.hpp"
#include "amr/metrics.hpp"
#include "amr/penman.hpp"
#include "amr/sembleu.hpp"
#include "amr/synthetic.hpp"
#include "common.hpp"
#include "doctest.h"

using namespace amr;

namespace {

std::vector<std::size_t> depths(const VariableFreeGraph& vf) {
  std::vector<std::size_t> depth(vf.node_count(), 0);
  for (const auto& e : vf.edges) depth[e.target] = depth[e.source] + 1;
  return depth;
}

std::vector<std::size_t> out_degree(const VariableFreeGraph& vf) {
  std::vector<std::size_t> deg(vf.node_count(), 0);
  for (const auto& e : vf.edges) ++deg[e.source];
  return deg;
}

std::pair<std::vector<Graph>, std::vector<Graph>> perturbed_pairs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto gold = random_corpus(n, seed, {.min_variables = 4, .max_variables = 7});
  std::vector<Graph> sys;
  for (const Graph& g : gold) sys.push_back(perturb(g, rng));
  return {std::move(gold), std::move(sys)};
}

}  // namespace

TEST_CASE("svr and msv examples") {
  const std::vector<SymmetryPair> s{{0.5, 0.5}, {0.3, 0.6}};
  CHECK(svr(s) == 0.5);
  const std::vector<SymmetryPair> one{{0.1, 0.9}};
  CHECK(msv(one) == doctest::Approx(0.8));
  const std::vector<SymmetryPair> sym{{0.2, 0.2}, {0.7, 0.7}};
  CHECK(svr(sym) == 0.0);
  CHECK(msv(sym) == 0.0);
  const std::vector<SymmetryPair> tiny{{0.5, 0.50005}};
  CHECK(svr(tiny) == 0.0);
  CHECK(svr(tiny, 0.0) == 1.0);
  CHECK_THROWS_AS(svr(std::vector<SymmetryPair>{}), InvalidArgument);
  CHECK_THROWS_AS(svr(s, -1.0), InvalidArgument);
}

TEST_CASE("heated pair sembleu asymmetry") {
  const std::vector<Graph> a{testdata::graph("heated_a")};
  const std::vector<Graph> b{testdata::graph("heated_b")};
  const auto series = symmetry_series(a, b, {.kind = MetricKind::sembleu});
  CHECK(msv(series) == doctest::Approx(0.38).epsilon(0.1));
  CHECK(svr(series) == 1.0);
}

TEST_CASE("symmetry of oracle smatch and sembleu on perturbed pairs") {
  const auto [gold, sys] = perturbed_pairs(50, 301);
  const auto exact = symmetry_series(gold, sys, {.kind = MetricKind::smatch_exact});
  CHECK(svr(exact) == 0.0);
  CHECK(msv(exact) == 0.0);
  const auto bleu = symmetry_series(gold, sys, {.kind = MetricKind::sembleu});
  CHECK(svr(bleu) > 0.5);
}

TEST_CASE("determinacy") {
  const auto as = random_corpus(60, 311, {.min_variables = 6, .max_variables = 12});
  const auto bs = random_corpus(60, 312, {.min_variables = 6, .max_variables = 12});
  const Determinacy bleu = determinacy_error(as, bs, {.kind = MetricKind::sembleu}, 5);
  CHECK(bleu.corpus_std == 0.0);
  CHECK(bleu.mean_graph_std == 0.0);
  const auto small_a = random_corpus(40, 313, {.max_variables = 6});
  const auto small_b = random_corpus(40, 314, {.max_variables = 6});
  const Determinacy exact = determinacy_error(small_a, small_b, {.kind = MetricKind::smatch_exact}, 3);
  CHECK(exact.corpus_std == 0.0);
  CHECK(exact.mean_graph_std == 0.0);
  const Determinacy r1 = determinacy_error(as, bs, {.kind = MetricKind::smatch, .restarts = 1}, 10);
  const Determinacy r4 = determinacy_error(as, bs, {.kind = MetricKind::smatch, .restarts = 4}, 10);
  CHECK(r4.mean_graph_std <= r1.mean_graph_std);
  CHECK(r4.mean_graph_std < 1e-2);
  CHECK_THROWS_AS(determinacy_error(as, bs, {.kind = MetricKind::smatch}, 1), InvalidArgument);
}

TEST_CASE("determinacy does not depend on thread count") {
  const auto as = random_corpus(30, 321, {.min_variables = 6, .max_variables = 12});
  const auto bs = random_corpus(30, 322, {.min_variables = 6, .max_variables = 12});
  const MetricConfig cfg{.kind = MetricKind::smatch, .restarts = 1};
  const Determinacy one = determinacy_error(as, bs, cfg, 4, 9, 1);
  const Determinacy four = determinacy_error(as, bs, cfg, 4, 9, 4);
  CHECK(one.corpus_std == four.corpus_std);
  CHECK(one.mean_graph_std == four.mean_graph_std);
}

TEST_CASE("bias profile of two-level trees") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto vf = variable_free(complete_tree(d, 2));
    const BiasProfile p = kgram_node_counts(vf);
    const auto depth = depths(vf);
    for (std::size_t n = 0; n < vf.node_count(); ++n) {
      if (depth[n] == 0) CHECK(p.total(n) == d * d + d + 1);
      if (depth[n] == 2) CHECK(p.total(n) == 3);
    }
  }
  const BiasProfile p3 = kgram_node_counts(variable_free(complete_tree(3, 2)));
  CHECK(p3.total(0) == 13);
}

TEST_CASE("bias profile of branching nodes") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto vf = variable_free(complete_tree(d, 4));
    const BiasProfile p = kgram_node_counts(vf);
    const auto depth = depths(vf);
    const auto deg = out_degree(vf);
    for (std::size_t n = 0; n < vf.node_count(); ++n) {
      if (depth[n] == 2) CHECK(p.total(n) == d * d + 2 * d + 3);
      if (depth[n] == 1) CHECK(p.total(n) == d * d + 2 * d + 2);
      if (deg[n] == 0) CHECK(p.total(n) == 3);
    }
    if (d == 3) {
      for (std::size_t n = 0; n < vf.node_count(); ++n) {
        if (depth[n] == 2) CHECK(p.total(n) == 18);
      }
    }
  }
}

TEST_CASE("bias profile totals match bag sizes") {
  for (const Graph& g : random_corpus(100, 331)) {
    const auto vf = variable_free(g);
    const BiasProfile p = kgram_node_counts(vf);
    const KgramBag bag = extract_kgrams(vf, 3, false);
    for (std::size_t k = 1; k <= 3; ++k) {
      std::size_t sum = 0;
      for (std::size_t n = 0; n < vf.node_count(); ++n) sum += p.counts[n][k - 1];
      CHECK(p.kgrams[k - 1] == bag.total(k));
      bool acyclic_paths = true;
      for_each_path(vf, k, [&](std::span<const std::size_t> nodes, std::span<const std::size_t>) {
        std::vector<std::size_t> s(nodes.begin(), nodes.end());
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) acyclic_paths = false;
      });
      if (k == 1) CHECK(sum == bag.total(1));
      if (acyclic_paths) CHECK(sum == k * bag.total(k));
    }
  }
}

TEST_CASE("triple membership is linear in d") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const Graph g = complete_tree(d, 3);
    const auto m = triple_node_counts(g);
    const auto vf = variable_free(g);
    const auto depth = depths(vf);
    for (std::size_t n = 0; n < g.variable_count(); ++n) {
      if (depth[n] == 0) CHECK(m[n].total() == d + 2);
      if (depth[n] == 1) CHECK(m[n].total() == d + 2);
      if (depth[n] == 3) CHECK(m[n].total() == 2);
    }
    CHECK(m[g.root()].top == 1);
    CHECK(m[g.root()].relation == d);
  }
  const auto single = triple_node_counts(parse_penman("(c / cat)"));
  CHECK(single[0].instance == 1);
  CHECK(single[0].top == 1);
  const auto two = triple_node_counts(complete_tree(2, 1));
  CHECK(two[0].relation == 2);
}

TEST_CASE("ranking disagreement") {
  const std::vector<double> fj{1, 0}, fc{0, 1}, gj{0, 0}, gc{1, 1};
  CHECK(ranking_disagreement(fj, fc, gj, gc) == 0.5);
  CHECK(ranking_disagreement(fj, fc, fj, fc) == 0.0);
  const std::vector<double> short_list{1};
  CHECK_THROWS_AS(ranking_disagreement(fj, fc, gj, short_list), InvalidArgument);
}

TEST_CASE("sembleu disagrees with itself when arguments flip") {
  const auto [gold, sys] = perturbed_pairs(80, 341);
  std::mt19937_64 rng(5);
  std::vector<Graph> other;
  for (const Graph& g : gold) other.push_back(perturb(perturb(g, rng), rng));
  std::vector<double> fj, fc, gj, gc;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    fj.push_back(sembleu_score(sys[i], gold[i]));
    fc.push_back(sembleu_score(other[i], gold[i]));
    gj.push_back(sembleu_score(gold[i], sys[i]));
    gc.push_back(sembleu_score(gold[i], other[i]));
  }
  CHECK(ranking_disagreement(fj, fc, gj, gc) > 0.0);
}

TEST_CASE("paired t") {
  const std::vector<double> f{0.61, 0.72, 0.55, 0.80, 0.47, 0.66, 0.59, 0.70};
  const std::vector<double> g{0.58, 0.69, 0.57, 0.74, 0.45, 0.60, 0.60, 0.65};
  const TTest t = paired_t(f, g);
  CHECK(t.t == doctest::Approx(2.5824971129863226).epsilon(1e-9));
  CHECK(t.p == doctest::Approx(0.03633983911945595).epsilon(1e-6));
  CHECK(t.df == 7);

  const TTest same = paired_t(f, f);
  CHECK(same.t == 0.0);
  CHECK(same.p == 1.0);

  std::vector<double> ones(10, 1.0), zeros(10, 0.0);
  const TTest offset = paired_t(ones, zeros);
  CHECK(offset.t == std::numeric_limits<double>::infinity());
  CHECK(offset.p == 0.0);
  CHECK_THROWS_AS(paired_t(std::vector<double>{1.0}, std::vector<double>{0.0}), InvalidArgument);
}

TEST_CASE("graph stats") {
  const GraphStats one = graph_stats(parse_penman("(c / cat)"));
  CHECK(one.nodes == 1);
  CHECK(one.mean_degree == 0.0);
  CHECK(one.density == 0.0);
  const GraphStats drink = graph_stats(parse_penman("(c / drink-01 :arg0 (d / cat) :arg1 (w / water))"));
  CHECK(drink.nodes == 3);
  CHECK(drink.edges == 2);
  CHECK(drink.density == doctest::Approx(1.0 / 3));
  CHECK(drink.mean_degree == doctest::Approx(4.0 / 3));
  const GraphStats star = graph_stats(complete_tree(4, 1));
  CHECK(star.mean_degree == doctest::Approx(8.0 / 5));
  const StructureError e = structure_error(complete_tree(4, 1), parse_penman("(c / cat)"));
  CHECK(e.degree == doctest::Approx(8.0 / 5));
  CHECK(e.density == doctest::Approx(4.0 / 20));
}
