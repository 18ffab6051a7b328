#include "amr/alignment.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <limits>
#include <random>

#include "amr/error.hpp"

namespace amr {
namespace {

constexpr double kEpsilon = 1e-12;

std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

// Uniform draw in [0, n) that does not depend on the standard library's
// distribution implementation.
std::size_t draw(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % n);
}

using AttributeBag = std::map<std::pair<std::string, std::string>, std::uint32_t>;

std::vector<AttributeBag> attribute_bags(const Graph& g) {
  std::vector<AttributeBag> bags(g.variable_count());
  for (const Attribute& a : g.attributes()) ++bags[a.source][{a.role, a.value}];
  return bags;
}

double attribute_overlap(const AttributeBag& x, const AttributeBag& y) {
  double total = 0.0;
  for (const auto& [k, count] : x) {
    auto it = y.find(k);
    if (it != y.end()) total += std::min(count, it->second);
  }
  return total;
}

std::vector<std::size_t> order_by_name(const std::vector<std::string>& names) {
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return names[l] < names[r]; });
  return order;
}

}  // namespace

bool VariableMapping::is_injective() const {
  std::vector<VarIndex> images;
  for (const auto& t : targets_) {
    if (t) images.push_back(*t);
  }
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

void finalize_scores(MatchResult& r) {
  r.precision = r.size_a == 0 ? 0.0 : r.matched / static_cast<double>(r.size_a);
  r.recall = r.size_b == 0 ? 0.0 : r.matched / static_cast<double>(r.size_b);
  const double sum = r.precision + r.recall;
  r.f1 = sum == 0.0 ? 0.0 : 2.0 * r.precision * r.recall / sum;
}

std::size_t count_hard_matches(const Graph& a, const Graph& b, const VariableMapping& mapping) {
  if (mapping.size() != a.variable_count()) {
    throw InvalidArgument("mapping domain does not match the variables of A");
  }
  std::map<Triple, std::size_t> pool;
  for (Triple& t : to_triples(b)) ++pool[std::move(t)];

  std::size_t matched = 0;
  for (Triple t : to_triples(a)) {
    const auto source = mapping[t.source];
    if (!source) continue;
    t.source = *source;
    if (auto* target = std::get_if<VarIndex>(&t.target)) {
      const auto image = mapping[*target];
      if (!image) continue;
      *target = *image;
    }
    auto it = pool.find(t);
    if (it != pool.end() && it->second > 0) {
      --it->second;
      ++matched;
    }
  }
  return matched;
}

MatchTable MatchTable::hard(const Graph& a, const Graph& b) {
  return with_scorer(a, b, [](std::string_view x, std::string_view y) {
    return x == y ? 1.0 : 0.0;
  });
}

std::uint64_t MatchTable::key(VarIndex source, std::uint32_t role, VarIndex target) {
  return (static_cast<std::uint64_t>(source) << 40) ^ (static_cast<std::uint64_t>(role) << 20) ^
         static_cast<std::uint64_t>(target);
}

MatchTable MatchTable::with_scorer(const Graph& a, const Graph& b, const ConceptScorer& scorer) {
  MatchTable t;
  t.a_vars_ = a.variable_count();
  t.b_vars_ = b.variable_count();
  t.size_a_ = a.variable_count() + a.edges().size() + a.attributes().size() + 1;
  t.size_b_ = b.variable_count() + b.edges().size() + b.attributes().size() + 1;
  for (VarIndex v = 0; v < t.a_vars_; ++v) {
    t.a_concepts_.push_back(a.concept_of(v));
    t.a_names_.push_back(a.variable(v));
  }
  for (VarIndex v = 0; v < t.b_vars_; ++v) {
    t.b_concepts_.push_back(b.concept_of(v));
    t.b_names_.push_back(b.variable(v));
  }

  const auto a_attrs = attribute_bags(a);
  const auto b_attrs = attribute_bags(b);
  t.unary_.assign(t.a_vars_ * t.b_vars_, 0.0);
  t.unary_max_.assign(t.a_vars_, 0.0);
  for (VarIndex i = 0; i < t.a_vars_; ++i) {
    for (VarIndex j = 0; j < t.b_vars_; ++j) {
      double w = scorer(t.a_concepts_[i], t.b_concepts_[j]);
      if (i == a.root() && j == b.root()) w += scorer(t.a_concepts_[i], t.b_concepts_[j]);
      w += attribute_overlap(a_attrs[i], b_attrs[j]);
      t.unary_[i * t.b_vars_ + j] = w;
      t.unary_max_[i] = std::max(t.unary_max_[i], w);
    }
  }

  std::unordered_map<std::string, std::uint32_t> roles;
  auto role_id = [&](const std::string& r) {
    return roles.try_emplace(r, static_cast<std::uint32_t>(roles.size())).first->second;
  };
  for (const Edge& e : b.edges()) {
    const std::uint32_t r = role_id(e.role);
    if (t.b_groups_[key(e.source, r, e.target)]++ == 0) t.b_links_.push_back({e.source, e.target, r});
  }

  std::map<std::tuple<VarIndex, std::uint32_t, VarIndex>, std::uint32_t> a_groups;
  for (const Edge& e : a.edges()) ++a_groups[{e.source, role_id(e.role), e.target}];
  t.groups_of_.resize(t.a_vars_);
  for (const auto& [k, count] : a_groups) {
    const auto [source, role, target] = k;
    const std::size_t index = t.groups_.size();
    t.groups_.push_back({source, target, role, count});
    t.a_links_.push_back({source, target, role});
    t.groups_of_[source].push_back(index);
    if (target != source) t.groups_of_[target].push_back(index);
  }
  return t;
}

double MatchTable::group_score(const Group& g, const VariableMapping& m) const {
  const auto s = m[g.source];
  const auto o = m[g.target];
  if (!s || !o) return 0.0;
  auto it = b_groups_.find(key(*s, g.role, *o));
  if (it == b_groups_.end()) return 0.0;
  return std::min(g.count, it->second);
}

double MatchTable::score(const VariableMapping& m) const {
  double total = 0.0;
  for (VarIndex i = 0; i < a_vars_; ++i) {
    if (auto j = m[i]) total += unary(i, *j);
  }
  for (const Group& g : groups_) total += group_score(g, m);
  return total;
}

double MatchTable::local_score(const VariableMapping& m, VarIndex a,
                               std::optional<VarIndex> other) const {
  double total = 0.0;
  if (auto j = m[a]) total += unary(a, *j);
  for (std::size_t g : groups_of_[a]) total += group_score(groups_[g], m);
  if (other && *other != a) {
    if (auto j = m[*other]) total += unary(*other, *j);
    for (std::size_t g : groups_of_[*other]) {
      const Group& grp = groups_[g];
      if (grp.source == a || grp.target == a) continue;
      total += group_score(grp, m);
    }
  }
  return total;
}

VariableMapping initial_mapping(const MatchTable& table, int restart, std::uint64_t seed) {
  auto rng = restart_rng(seed, restart);
  const std::size_t na = table.a_variables();
  const std::size_t nb = table.b_variables();
  VariableMapping m(na);
  std::vector<bool> used(nb, false);

  if (restart == 0) {
    const auto a_order = order_by_name(table.a_names());
    const auto b_order = order_by_name(table.b_names());
    std::vector<VarIndex> leftovers;
    for (VarIndex i : a_order) {
      bool paired = false;
      for (VarIndex j : b_order) {
        if (!used[j] && table.a_concepts()[i] == table.b_concepts()[j]) {
          m.assign(i, j);
          used[j] = true;
          paired = true;
          break;
        }
      }
      if (!paired) leftovers.push_back(i);
    }
    for (VarIndex i : leftovers) {
      std::vector<VarIndex> free;
      for (VarIndex j : b_order) {
        if (!used[j]) free.push_back(j);
      }
      if (free.empty()) break;
      const VarIndex j = free[draw(rng, free.size())];
      m.assign(i, j);
      used[j] = true;
    }
    return m;
  }

  std::vector<VarIndex> perm(nb);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t k = nb; k > 1; --k) std::swap(perm[k - 1], perm[draw(rng, k)]);
  for (VarIndex i = 0; i < na && i < nb; ++i) m.assign(i, perm[i]);
  return m;
}

namespace {

// Maps `i` to `j`, handing `i`'s old image to the previous owner of `j`.
void reassign(VariableMapping& m, std::vector<std::optional<VarIndex>>& owner, VarIndex i,
              VarIndex j) {
  const auto cur = m[i];
  if (cur == j) return;
  const auto k = owner[j];
  m.assign(i, j);
  owner[j] = i;
  if (k) {
    m.assign(*k, cur);
    if (cur) owner[*cur] = *k;
  } else if (cur) {
    owner[*cur] = std::nullopt;
  }
}

void fill_owner(const VariableMapping& m, std::vector<std::optional<VarIndex>>& owner) {
  std::fill(owner.begin(), owner.end(), std::nullopt);
  for (VarIndex i = 0; i < m.size(); ++i) {
    if (auto j = m[i]) owner[*j] = i;
  }
}

// Best move that places both endpoints of an A edge onto a same-role B edge.
// Escapes plateaus where no single reassignment can complete a relation.
bool edge_move(const MatchTable& t, VariableMapping& m) {
  std::vector<std::optional<VarIndex>> owner(t.b_variables());
  const double base = t.score(m);
  double best = base + kEpsilon;
  std::optional<VariableMapping> chosen;
  for (const auto& la : t.a_links()) {
    for (const auto& lb : t.b_links()) {
      if (la.role != lb.role) continue;
      if ((la.source == la.target) != (lb.source == lb.target)) continue;
      if (m[la.source] == lb.source && m[la.target] == lb.target) continue;
      VariableMapping trial = m;
      fill_owner(trial, owner);
      reassign(trial, owner, la.source, lb.source);
      reassign(trial, owner, la.target, lb.target);
      const double value = t.score(trial);
      if (value > best) {
        best = value;
        chosen = std::move(trial);
      }
    }
  }
  if (!chosen) return false;
  m = std::move(*chosen);
  return true;
}

// Runs steepest ascent from `m` in place; returns the final objective.
double climb(const MatchTable& t, VariableMapping& m) {
  const std::size_t na = t.a_variables();
  const std::size_t nb = t.b_variables();
  std::vector<std::optional<VarIndex>> owner(nb);

  while (true) {
    fill_owner(m, owner);

    double best_gain = kEpsilon;
    VarIndex best_i = 0;
    std::optional<VarIndex> best_j;
    bool found = false;

    for (VarIndex i = 0; i < na; ++i) {
      const auto cur = m[i];
      for (std::size_t jj = 0; jj <= nb; ++jj) {
        const std::optional<VarIndex> j =
            jj == nb ? std::nullopt : std::optional<VarIndex>(jj);
        if (j == cur) continue;
        const std::optional<VarIndex> k = j ? owner[*j] : std::nullopt;
        const double before = t.local_score(m, i, k);
        m.assign(i, j);
        if (k) m.assign(*k, cur);
        const double after = t.local_score(m, i, k);
        m.assign(i, cur);
        if (k) m.assign(*k, j);
        const double gain = after - before;
        if (gain > best_gain) {
          best_gain = gain;
          best_i = i;
          best_j = j;
          found = true;
        }
      }
    }
    if (!found) {
      if (edge_move(t, m)) continue;
      break;
    }

    const auto cur = m[best_i];
    const std::optional<VarIndex> k = best_j ? owner[*best_j] : std::nullopt;
    m.assign(best_i, best_j);
    if (k) m.assign(*k, cur);
  }
  return t.score(m);
}

}  // namespace

MatchResult hill_climb(const MatchTable& table, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw InvalidArgument("restarts must be at least 1");
  MatchResult result;
  result.size_a = table.size_a();
  result.size_b = table.size_b();
  result.seed = seed;
  const double ceiling = static_cast<double>(std::min(table.size_a(), table.size_b()));

  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    VariableMapping m = initial_mapping(table, r, seed);
    const double value = climb(table, m);
    ++result.restarts_used;
    if (!have || value > result.matched + kEpsilon) {
      result.mapping = std::move(m);
      result.matched = value;
      have = true;
    }
    if (result.matched >= ceiling - kEpsilon) break;
  }
  finalize_scores(result);
  return result;
}

MatchResult hill_climb(const Graph& a, const Graph& b, int restarts, std::uint64_t seed) {
  return hill_climb(MatchTable::hard(a, b), restarts, seed);
}

class ExactSearch {
 public:
  explicit ExactSearch(const MatchTable& t)
      : t_(t), mapping_(t.a_variables()), used_(t.b_variables(), false) {
    const std::size_t na = t.a_variables();
    order_.resize(na);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](VarIndex l, VarIndex r) {
      return t.groups_of_[l].size() + t.unary_max_[l] > t.groups_of_[r].size() + t.unary_max_[r];
    });
    // Candidate targets per variable, strongest unary weight first.
    candidates_.resize(na);
    for (VarIndex i = 0; i < na; ++i) {
      auto& c = candidates_[i];
      c.resize(t.b_variables());
      std::iota(c.begin(), c.end(), 0);
      std::stable_sort(c.begin(), c.end(),
                       [&](VarIndex l, VarIndex r) { return t.unary(i, l) > t.unary(i, r); });
    }
    assigned_.assign(na, false);
    for (double u : t.unary_max_) remaining_unary_ += u;
    for (const auto& g : t.groups_) remaining_groups_ += g.count;
  }

  MatchResult run() {
    best_ = VariableMapping(t_.a_variables());
    best_score_ = 0.0;
    search(0, 0.0);
    MatchResult r;
    r.mapping = best_;
    r.matched = t_.score(best_);
    r.size_a = t_.size_a();
    r.size_b = t_.size_b();
    r.restarts_used = 1;
    finalize_scores(r);
    return r;
  }

 private:
  // Relation contribution closed by assigning `i`: groups whose other
  // endpoint is already decided.
  double closed_groups(VarIndex i, double& bound_released) const {
    double total = 0.0;
    for (std::size_t gi : t_.groups_of_[i]) {
      const auto& g = t_.groups_[gi];
      const VarIndex other = g.source == i ? g.target : g.source;
      if (other != i && !assigned_[other]) continue;
      bound_released += g.count;
      total += t_.group_score(g, mapping_);
    }
    return total;
  }

  void search(std::size_t depth, double partial) {
    if (depth == order_.size()) {
      if (partial > best_score_ + kEpsilon) {
        best_score_ = partial;
        best_ = mapping_;
      }
      return;
    }
    if (partial + remaining_unary_ + remaining_groups_ <= best_score_ + kEpsilon) return;

    const VarIndex i = order_[depth];
    assigned_[i] = true;
    remaining_unary_ -= t_.unary_max_[i];

    auto try_target = [&](std::optional<VarIndex> j) {
      mapping_.assign(i, j);
      double released = 0.0;
      const double gain = (j ? t_.unary(i, *j) : 0.0) + closed_groups(i, released);
      remaining_groups_ -= released;
      search(depth + 1, partial + gain);
      remaining_groups_ += released;
    };

    for (VarIndex j : candidates_[i]) {
      if (used_[j]) continue;
      used_[j] = true;
      try_target(j);
      used_[j] = false;
    }
    try_target(std::nullopt);

    mapping_.assign(i, std::nullopt);
    remaining_unary_ += t_.unary_max_[i];
    assigned_[i] = false;
  }

  const MatchTable& t_;
  VariableMapping mapping_;
  std::vector<bool> used_;
  std::vector<bool> assigned_;
  std::vector<VarIndex> order_;
  std::vector<std::vector<VarIndex>> candidates_;
  double remaining_unary_ = 0.0;
  double remaining_groups_ = 0.0;
  VariableMapping best_;
  double best_score_ = 0.0;
};

MatchResult exact_align(const MatchTable& table, std::size_t limit) {
  if (table.a_variables() > limit) {
    throw SizeLimitError("exact alignment limited to " + std::to_string(limit) +
                         " variables, graph A has " + std::to_string(table.a_variables()));
  }
  return ExactSearch(table).run();
}

MatchResult exact_align(const Graph& a, const Graph& b, std::size_t limit) {
  return exact_align(MatchTable::hard(a, b), limit);
}

MatchResult smatch_score(const Graph& a, const Graph& b, int restarts, std::uint64_t seed) {
  return hill_climb(a, b, restarts, seed);
}

}  // namespace amr
