#include <cmath>
#include <fstream>
#include <random>

#include "amr/alignment.hpp"
#include "amr/error.hpp"
#include "amr/lexicon.hpp"
#include "amr/penman.hpp"
#include "amr/soft_match.hpp"
#include "amr/synthetic.hpp"
#include "common.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amr;

namespace {

const char* kTiny =
    "cat 1 0 0 0\n"
    "kitten 0.9 0.1 0 0\n"
    "stone -1 0 0 0\n";

oracle::Labels soft_labels(const EmbeddingLexicon& lex, const SoftConfig& cfg) {
  return [&lex, cfg](const std::string& x, const std::string& y) {
    return soft_similarity(x, y, lex, cfg);
  };
}

}  // namespace

TEST_CASE("tiny lexicon loads") {
  const auto lex = EmbeddingLexicon::parse(kTiny);
  CHECK(lex.size() == 3);
  CHECK(lex.dimension() == 4);
  CHECK(lex.warnings().empty());
  REQUIRE(lex.find("kitten"));
  CHECK((*lex.find("kitten"))[1] == doctest::Approx(0.1f));
  CHECK_FALSE(lex.find("dog"));
}

TEST_CASE("lexicon errors") {
  CHECK_THROWS_AS(EmbeddingLexicon::parse("a 1 2\nb 1 2 3\n"), LexiconError);
  CHECK_THROWS_AS(EmbeddingLexicon::parse("a 1 x\n"), LexiconError);
  CHECK_THROWS_AS(EmbeddingLexicon::load(testdata::path("missing.txt")), LexiconError);
  try {
    EmbeddingLexicon::parse("a 1 2\nb 1 2\nc 3\n");
    FAIL("expected dimension error");
  } catch (const LexiconError& e) {
    CHECK(std::string(e.what()).find('3') != std::string::npos);
  }
  CHECK_THROWS_AS(EmbeddingLexicon(0), LexiconError);
}

TEST_CASE("duplicate token keeps the last vector and warns") {
  const auto lex = EmbeddingLexicon::parse("a 1 0\nb 0 1\na 0 2\n");
  CHECK(lex.size() == 2);
  CHECK((*lex.find("a"))[1] == 2.0f);
  CHECK(lex.warnings().size() == 1);
}

TEST_CASE("glove subset") {
  const auto& lex = testdata::glove();
  CHECK(lex.dimension() == 100);
  CHECK(lex.size() >= 40);
}

TEST_CASE("concept normalization") {
  CHECK(normalize_concept("Remedy-01") == "remedy");
  CHECK(normalize_concept("criminal-organization") == "criminal-organization");
  CHECK(normalize_concept("cat") == "cat");
  CHECK(normalize_concept("-01") == "-01");
}

TEST_CASE("distance basics") {
  const auto lex = EmbeddingLexicon::parse(kTiny);
  CHECK(concept_distance("cat", "cat", lex) == 0.0);
  CHECK(concept_distance("dog", "dog", lex) == 0.0);
  CHECK(concept_distance("cat", "dog", lex) == 1.0);
  CHECK(concept_distance("cat", "stone", lex) == 1.0);
  const double cos = 0.9 / std::sqrt(0.82);
  CHECK(concept_distance("cat", "kitten", lex) == doctest::Approx(1 - cos));
  CHECK(concept_distance("cat-01", "kitten", lex) == doctest::Approx(1 - cos));
  CHECK(soft_similarity("cat", "kitten", lex) == doctest::Approx(cos));
  CHECK(soft_similarity("cat", "kitten", lex, {.tau = 0.999}) == 0.0);
  CHECK(soft_similarity("cat", "kitten", lex, {.tau = 1.0}) == 0.0);
  CHECK(soft_similarity("cat", "cat", lex, {.tau = 1.0}) == 1.0);
}

TEST_CASE("hyphenated concepts average their parts") {
  const auto lex = EmbeddingLexicon::parse("big 1 0\ncat 0 1\n");
  const auto v = concept_vector("big-cat", lex);
  REQUIRE(v);
  CHECK((*v)[0] == doctest::Approx(0.5));
  CHECK((*v)[1] == doctest::Approx(0.5));
  CHECK(concept_vector("big-dog", lex));
  CHECK_FALSE(concept_vector("red-dog", lex));
}

TEST_CASE("distance is symmetric") {
  const auto& lex = testdata::glove();
  const auto vocab = synthetic_vocabulary();
  for (auto x : vocab) {
    for (auto y : vocab) {
      CHECK(concept_distance(x, y, lex) == concept_distance(y, x, lex));
      const double d = concept_distance(x, y, lex);
      CHECK(d >= 0.0);
      CHECK(d <= 1.0);
    }
  }
}

TEST_CASE("legally and law are close") {
  const double d = concept_distance("legally", "law", testdata::glove());
  CHECK(d > 0.3);
  CHECK(d < 0.6);
}

TEST_CASE("tau validation") {
  const auto lex = EmbeddingLexicon::parse(kTiny);
  CHECK_THROWS_AS(validate(SoftConfig{.tau = 1.5}), InvalidArgument);
  CHECK_THROWS_AS(validate(SoftConfig{.tau = -0.1}), InvalidArgument);
  CHECK_THROWS_AS(validate(SoftConfig{.tau = std::nan("")}), InvalidArgument);
}

TEST_CASE("soft counts agree with the oracle") {
  const auto& lex = testdata::glove();
  std::mt19937_64 rng(5);
  const auto as = random_corpus(100, 101, {.max_variables = 5});
  const auto bs = random_corpus(100, 102, {.max_variables = 5});
  const SoftConfig cfg;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const MatchResult r = exact_s2match(as[i], bs[i], lex, cfg);
    CHECK(r.matched == doctest::Approx(oracle::best_matches(as[i], bs[i], soft_labels(lex, cfg))));
    CHECK(count_soft_matches(as[i], bs[i], r.mapping, lex, cfg) == doctest::Approx(r.matched));
    CHECK(soft_match_table(as[i], bs[i], lex, cfg).score(r.mapping) == doctest::Approx(r.matched));
  }
}

TEST_CASE("tau one equals hard matching") {
  const auto& lex = testdata::glove();
  const auto as = random_corpus(100, 111, {.max_variables = 5});
  const auto bs = random_corpus(100, 112, {.max_variables = 5});
  for (std::size_t i = 0; i < as.size(); ++i) {
    const MatchResult soft = exact_s2match(as[i], bs[i], lex, {.tau = 1.0});
    CHECK(soft.matched == exact_align(as[i], bs[i]).matched);
    CHECK(count_soft_matches(as[i], bs[i], soft.mapping, lex, {.tau = 1.0}) ==
          static_cast<double>(count_hard_matches(as[i], bs[i], soft.mapping)));
  }
}

TEST_CASE("soft score dominates hard score") {
  const auto& lex = testdata::glove();
  const auto as = random_corpus(100, 121, {.max_variables = 5});
  const auto bs = random_corpus(100, 122, {.max_variables = 5});
  for (std::size_t i = 0; i < as.size(); ++i) {
    CHECK(exact_s2match(as[i], bs[i], lex).f1 >= exact_align(as[i], bs[i]).f1 - 1e-12);
  }
}

TEST_CASE("soft mass falls as tau rises") {
  const auto& lex = testdata::glove();
  std::mt19937_64 rng(8);
  const auto as = random_corpus(60, 131, {.max_variables = 5});
  const auto bs = random_corpus(60, 132, {.max_variables = 5});
  for (std::size_t i = 0; i < as.size(); ++i) {
    const VariableMapping m = exact_s2match(as[i], bs[i], lex, {.tau = 0.0}).mapping;
    double prev = 1e9;
    for (double tau : {0.0, 0.2, 0.4, 0.5, 0.6, 0.8, 1.0}) {
      const double v = count_soft_matches(as[i], bs[i], m, lex, {.tau = tau});
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("empty lexicon equals hard matching") {
  const EmbeddingLexicon empty(100);
  const auto as = random_corpus(100, 141, {.max_variables = 5});
  const auto bs = random_corpus(100, 142, {.max_variables = 5});
  for (std::size_t i = 0; i < as.size(); ++i) {
    CHECK(exact_s2match(as[i], bs[i], empty).matched == exact_align(as[i], bs[i]).matched);
    CHECK(s2match_score(as[i], bs[i], 4, i, empty).matched == smatch_score(as[i], bs[i], 4, i).matched);
  }
}

TEST_CASE("self score is one") {
  const auto& lex = testdata::glove();
  for (const Graph& g : random_corpus(40, 151)) {
    CHECK(s2match_score(g, g, 4, 0, lex).f1 == doctest::Approx(1.0));
  }
}

TEST_CASE("animals soft scores") {
  const auto gs = testdata::graphs("animals");
  const auto& lex = testdata::glove();
  const double ab = exact_s2match(gs[0], gs[1], lex).f1;
  CHECK(ab > 0.34);
  CHECK(ab < 0.44);
  CHECK(exact_s2match(gs[1], gs[2], lex).f1 == doctest::Approx(0.25));
  CHECK(exact_s2match(gs[0], gs[2], lex).f1 == doctest::Approx(0.25));
  CHECK(exact_s2match(gs[0], gs[1], lex).matched > exact_align(gs[0], gs[1]).matched);
}

TEST_CASE("remedy soft scores") {
  const auto& lex = testdata::glove();
  const Graph gold = testdata::graph("remedy_gold");
  CHECK(std::abs(exact_s2match(gold, testdata::graph("remedy_camr"), lex).f1 - 0.2) <= 0.005);
  const double jamr = exact_s2match(gold, testdata::graph("remedy_jamr"), lex).f1;
  CHECK(std::abs(jamr - 0.252) <= 0.02);
}
