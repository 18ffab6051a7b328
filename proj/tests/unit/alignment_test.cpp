#include <random>

#include "amr/alignment.hpp"
#include "amr/error.hpp"
#include "amr/penman.hpp"
#include "amr/synthetic.hpp"
#include "common.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amr;

namespace {

RandomGraphOptions small() {
  RandomGraphOptions o;
  o.max_variables = 5;
  return o;
}

VariableMapping random_mapping(std::size_t na, std::size_t nb, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(nb);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  VariableMapping m(na);
  std::bernoulli_distribution drop(0.2);
  for (std::size_t i = 0; i < na && i < nb; ++i) {
    if (!drop(rng)) m.assign(i, perm[i]);
  }
  return m;
}

std::vector<int> as_ints(const VariableMapping& m) {
  std::vector<int> out;
  for (const auto& t : m.targets()) out.push_back(t ? static_cast<int>(*t) : -1);
  return out;
}

}  // namespace

TEST_CASE("finalize scores") {
  MatchResult r;
  r.matched = 3;
  r.size_a = 4;
  r.size_b = 6;
  finalize_scores(r);
  CHECK(r.precision == doctest::Approx(0.75));
  CHECK(r.recall == doctest::Approx(0.5));
  CHECK(r.f1 == doctest::Approx(0.6));
  MatchResult z;
  z.size_a = 2;
  z.size_b = 2;
  finalize_scores(z);
  CHECK(z.f1 == 0.0);
}

TEST_CASE("hard match counts agree with the oracle for arbitrary mappings") {
  std::mt19937_64 rng(1);
  const auto as = random_corpus(150, 21, small());
  const auto bs = random_corpus(150, 22, small());
  for (std::size_t i = 0; i < as.size(); ++i) {
    const VariableMapping m = random_mapping(as[i].variable_count(), bs[i].variable_count(), rng);
    const double want = oracle::mapping_value(as[i], bs[i], as_ints(m), oracle::hard_labels);
    CHECK(static_cast<double>(count_hard_matches(as[i], bs[i], m)) == want);
    CHECK(MatchTable::hard(as[i], bs[i]).score(m) == doctest::Approx(want));
  }
}

TEST_CASE("count respects multiset consumption") {
  const Graph a = parse_penman("(p / p :arg0 (x / x) :arg0 x)");
  const Graph b = parse_penman("(p / p :arg0 (x / x))");
  VariableMapping m(2);
  m.assign(0, 0);
  m.assign(1, 1);
  CHECK(count_hard_matches(a, b, m) == 4);
  CHECK(count_hard_matches(b, a, m) == 4);
}

TEST_CASE("exact alignment equals brute force") {
  const auto as = random_corpus(120, 31, small());
  const auto bs = random_corpus(120, 32, small());
  for (std::size_t i = 0; i < as.size(); ++i) {
    const MatchResult r = exact_align(as[i], bs[i]);
    CHECK(r.matched == oracle::best_matches(as[i], bs[i]));
    CHECK(r.mapping.is_injective());
    CHECK(static_cast<double>(count_hard_matches(as[i], bs[i], r.mapping)) == r.matched);
    CHECK(r.size_a == oracle::triple_total(as[i]));
    CHECK(r.size_b == oracle::triple_total(bs[i]));
  }
}

TEST_CASE("hill climbing never exceeds the optimum and is consistent") {
  const auto as = random_corpus(120, 41, small());
  const auto bs = random_corpus(120, 42, small());
  for (std::size_t i = 0; i < as.size(); ++i) {
    const double best = oracle::best_matches(as[i], bs[i]);
    const MatchResult h = hill_climb(as[i], bs[i], 4, i);
    CHECK(h.matched <= best);
    CHECK(h.mapping.is_injective());
    CHECK(static_cast<double>(count_hard_matches(as[i], bs[i], h.mapping)) == h.matched);
    CHECK(h.matched >= 0.0);
    CHECK(h.matched <= static_cast<double>(std::min(h.size_a, h.size_b)));
  }
}

TEST_CASE("exact alignment is symmetric") {
  const auto as = random_corpus(80, 51, small());
  const auto bs = random_corpus(80, 52, small());
  for (std::size_t i = 0; i < as.size(); ++i) {
    CHECK(exact_align(as[i], bs[i]).f1 == doctest::Approx(exact_align(bs[i], as[i]).f1).epsilon(1e-12));
  }
}

TEST_CASE("f1 equals 2J/(1+J)") {
  const auto as = random_corpus(100, 61);
  const auto bs = random_corpus(100, 62);
  for (std::size_t i = 0; i < as.size(); ++i) {
    const MatchResult r = hill_climb(as[i], bs[i], 2, 9);
    const double denom = static_cast<double>(r.size_a + r.size_b) - r.matched;
    const double j = r.matched / denom;
    CHECK(std::abs(r.f1 - 2 * j / (1 + j)) < 1e-12);
  }
}

TEST_CASE("more restarts never lower the score") {
  const auto as = random_corpus(100, 71, {.min_variables = 5, .max_variables = 10});
  const auto bs = random_corpus(100, 72, {.min_variables = 5, .max_variables = 10});
  for (std::size_t i = 0; i < as.size(); ++i) {
    double prev = -1.0;
    for (int r : {1, 2, 3, 5, 8}) {
      const double v = hill_climb(as[i], bs[i], r, 17).matched;
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("fixed seed is deterministic") {
  const auto as = random_corpus(30, 81, {.min_variables = 5, .max_variables = 12});
  const auto bs = random_corpus(30, 82, {.min_variables = 5, .max_variables = 12});
  for (std::size_t i = 0; i < as.size(); ++i) {
    const MatchResult x = hill_climb(as[i], bs[i], 3, 123);
    const MatchResult y = hill_climb(as[i], bs[i], 3, 123);
    CHECK(x.matched == y.matched);
    CHECK(x.mapping == y.mapping);
  }
}

TEST_CASE("restart zero pairs equal concepts") {
  const Graph a = parse_penman("(a / x :arg0 (b / y) :arg1 (c / z))");
  const Graph b = parse_penman("(p / z :arg0 (q / x) :arg1 (r / y))");
  const VariableMapping m = initial_mapping(MatchTable::hard(a, b), 0, 0);
  CHECK(m[0] == std::optional<VarIndex>(1));
  CHECK(m[1] == std::optional<VarIndex>(2));
  CHECK(m[2] == std::optional<VarIndex>(0));
}

TEST_CASE("identical graphs score one") {
  for (const Graph& g : random_corpus(50, 91)) {
    CHECK(hill_climb(g, g, 4, 0).f1 == doctest::Approx(1.0));
  }
}

TEST_CASE("exact search refuses large graphs") {
  const Graph big = complete_tree(3, 2);
  CHECK_THROWS_AS(exact_align(big, big), SizeLimitError);
  CHECK(exact_align(big, big, 13).f1 == doctest::Approx(1.0));
  CHECK_THROWS_AS(hill_climb(big, big, 0, 0), InvalidArgument);
}

TEST_CASE("role swap pair scores below one") {
  const MatchResult r = exact_align(testdata::graph("role_swap_a"), testdata::graph("role_swap_b"));
  CHECK(r.f1 < 1.0);
  CHECK(r.matched == 6.0);
  CHECK(r.size_a == 7);
}

TEST_CASE("remedy hard scores") {
  const Graph gold = testdata::graph("remedy_gold");
  CHECK(exact_align(gold, testdata::graph("remedy_camr")).f1 == doctest::Approx(0.2));
  CHECK(exact_align(gold, testdata::graph("remedy_jamr")).f1 == doctest::Approx(1.0 / 6.0));
}
