#include "amr/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "amr/error.hpp"

namespace amr {
namespace {

constexpr std::pair<MetricKind, std::string_view> kNames[] = {
    {MetricKind::smatch, "smatch"},
    {MetricKind::smatch_exact, "smatch-exact"},
    {MetricKind::s2match, "s2match"},
    {MetricKind::s2match_exact, "s2match-exact"},
    {MetricKind::sembleu, "sembleu"},
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

PairScore from_match(const MatchResult& r) {
  return {r.f1, r.matched, r.size_a, r.size_b, true};
}

}  // namespace

std::string_view metric_name(MetricKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<MetricKind> parse_metric(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_alignment_metric(MetricKind kind) { return kind != MetricKind::sembleu; }

bool needs_lexicon(MetricKind kind) {
  return kind == MetricKind::s2match || kind == MetricKind::s2match_exact;
}

void validate(const MetricConfig& config) {
  if (config.restarts < 1) throw InvalidArgument("restarts must be at least 1");
  if (needs_lexicon(config.kind) && config.lexicon == nullptr) {
    throw InvalidArgument(std::string(metric_name(config.kind)) + " requires a vector lexicon");
  }
  validate(config.soft);
  validate(config.sembleu);
}

PairScore score_pair(const Graph& a_in, const Graph& b_in, const MetricConfig& config) {
  validate(config);
  if (config.kind == MetricKind::sembleu) {
    return {sembleu_score(a_in, b_in, config.sembleu), 0.0, 0, 0, false};
  }
  std::optional<Graph> na, nb;
  if (config.normalize_inverse) {
    na = normalize_inverse_roles(a_in);
    nb = normalize_inverse_roles(b_in);
  }
  const Graph& a = na ? *na : a_in;
  const Graph& b = nb ? *nb : b_in;
  switch (config.kind) {
    case MetricKind::smatch:
      return from_match(smatch_score(a, b, config.restarts, config.seed));
    case MetricKind::smatch_exact:
      return from_match(exact_align(a, b, config.exact_limit));
    case MetricKind::s2match:
      return from_match(
          s2match_score(a, b, config.restarts, config.seed, *config.lexicon, config.soft));
    case MetricKind::s2match_exact:
      return from_match(exact_s2match(a, b, *config.lexicon, config.soft, config.exact_limit));
    case MetricKind::sembleu:
      break;
  }
  throw InvalidArgument("unknown metric");
}

std::uint64_t pair_seed(std::uint64_t master, std::size_t index) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(index)));
}

std::vector<PairScore> score_corpus(std::span<const Graph> a, std::span<const Graph> b,
                                    const MetricConfig& config, unsigned jobs) {
  if (a.size() != b.size()) {
    throw InvalidArgument("corpus sizes differ: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  validate(config);
  std::vector<PairScore> out(a.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(a.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= a.size()) return;
      try {
        MetricConfig c = config;
        c.seed = pair_seed(config.seed, i);
        out[i] = score_pair(a[i], b[i], c);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = a.size();
      }
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

double aggregate(std::span<const PairScore> pairs, MetricKind kind, bool per_pair_mean) {
  if (pairs.empty()) return 0.0;
  if (per_pair_mean || !is_alignment_metric(kind)) {
    double sum = 0.0;
    for (const PairScore& p : pairs) sum += p.score;
    return sum / static_cast<double>(pairs.size());
  }
  MatchResult pooled;
  for (const PairScore& p : pairs) {
    pooled.matched += p.matched;
    pooled.size_a += p.size_a;
    pooled.size_b += p.size_b;
  }
  finalize_scores(pooled);
  return pooled.f1;
}

}  // namespace amr
