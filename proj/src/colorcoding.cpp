#include "swapbribery/colorcoding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "swapbribery/errors.hpp"

namespace swapbribery {

bool is_successful(const ElectionPattern& pattern, WinnerMode mode) {
  std::vector<int> count;
  for (const auto& vote : pattern)
    for (int color : vote) {
      if (color >= static_cast<int>(count.size())) count.resize(color + 1, 0);
      ++count[color];
    }
  int ones = count.size() > 1 ? count[1] : 0;
  for (std::size_t color = 2; color < count.size(); ++color) {
    if (count[color] > ones) return false;
    if (mode == WinnerMode::unique && count[color] == ones) return false;
  }
  return true;
}

double candidate_pattern_count(int n, int k) {
  double log_c = std::lgamma(n * k + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n * k - k + 1.0);
  return std::round(std::exp(n * log_c));
}

long long for_each_successful_pattern(int n, int k, WinnerMode mode,
                                      const std::function<bool(const ElectionPattern&)>& visit, int cap) {
  if (n < 1 || k < 1) throw DomainError("pattern sizes must be positive");
  if (n * k > cap) throw ResourceError("n*k = " + std::to_string(n * k) + " exceeds the pattern cap " + std::to_string(cap));
  const int colors = n * k;

  std::vector<VotePattern> subsets;
  VotePattern current;
  auto gen = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      subsets.push_back(current);
      return;
    }
    for (int c = next; c <= colors - (k - static_cast<int>(current.size())) + 1; ++c) {
      current.push_back(c);
      self(self, c + 1);
      current.pop_back();
    }
  };
  gen(gen, 1);

  ElectionPattern pattern(n);
  long long visited = 0;
  bool stop = false;
  auto walk = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i == n) {
      if (!is_successful(pattern, mode)) return;
      ++visited;
      if (!visit(pattern)) stop = true;
      return;
    }
    for (const auto& s : subsets) {
      pattern[i] = s;
      self(self, i + 1);
      if (stop) return;
    }
  };
  walk(walk, 0);
  return visited;
}

namespace {

/// Cheapest top set of one vote matching `colors`, or nullopt.
std::optional<std::pair<std::vector<Candidate>, Rational>> cheapest_vote(const Ranking& v, const VotePattern& colors,
                                                                         const Coloring& coloring, int k,
                                                                         const PairCosts& costs) {
  std::vector<std::vector<Candidate>> pools(colors.size());
  for (Candidate c = 0; c < v.size(); ++c) {
    auto it = std::find(colors.begin(), colors.end(), coloring[c]);
    if (it != colors.end()) pools[it - colors.begin()].push_back(c);
  }
  for (const auto& pool : pools)
    if (pool.empty()) return std::nullopt;

  std::optional<std::pair<std::vector<Candidate>, Rational>> best;
  std::vector<Candidate> chosen(colors.size());
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == colors.size()) {
      Rational cost = move_to_top_cost(v, chosen, k, costs);
      if (!best || cost < best->second) best = {chosen, cost};
      return;
    }
    for (Candidate c : pools[i]) {
      chosen[i] = c;
      self(self, i + 1);
    }
  };
  walk(walk, 0);
  return best;
}

}  // namespace

std::optional<Bribery> cheapest_for_pattern(const BriberyInstance& instance, const ElectionPattern& pattern,
                                            const Coloring& coloring) {
  const int n = instance.vote_count();
  const int m = instance.candidate_count();
  const int k = instance.rule.k();
  if (static_cast<int>(pattern.size()) != n) throw DomainError("pattern length differs from the vote count");
  if (static_cast<int>(coloring.size()) != m) throw DomainError("coloring must cover every candidate");
  if (coloring[instance.preferred] != 1) throw DomainError("the preferred candidate must have color 1");

  Bribery b;
  b.targets.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(pattern[i].size()) != k) throw DomainError("vote pattern size differs from k");
    const Ranking& v = instance.election.expanded_ranking(i);
    auto pick = cheapest_vote(v, pattern[i], coloring, k, instance.costs_of(i));
    if (!pick) return std::nullopt;
    b.targets.push_back(move_to_top(v, pick->first));
  }
  return b;
}

long long default_trials(int n, int k) {
  int base = n * k - 1;
  if (base <= 1) return 1;
  double t = std::pow(static_cast<double>(base), base);
  if (t > 9e18) return std::numeric_limits<long long>::max();
  return static_cast<long long>(std::llround(t));
}

SolveResult solve_colorcoding(const BriberyInstance& instance, const ColorOptions& options) {
  instance.validate();
  if (!instance.rule.is_approval()) throw PreconditionError("color coding requires k-approval");
  const int n = instance.vote_count();
  const int m = instance.candidate_count();
  const int k = instance.rule.k();
  const Candidate p = instance.preferred;
  const long long trials = options.trials > 0 ? options.trials : default_trials(n, k);

  std::mt19937_64 rng(options.seed);
  SolveResult result;
  std::optional<Rational> best;
  Coloring coloring(m, 0);
  coloring[p] = 1;
  std::vector<Candidate> others;
  for (Candidate c = 0; c < m; ++c)
    if (c != p) others.push_back(c);

  // Returns false once the search may stop.
  auto consider = [&](const ElectionPattern& pattern) {
    auto b = cheapest_for_pattern(instance, pattern, coloring);
    if (!b) return true;
    auto report = verify_bribery(instance, *b);
    if (!report.preferred_wins) throw std::logic_error("color coding produced a losing bribery");
    if (!best || report.cost < *best) {
      best = report.cost;
      result.witness = std::move(b);
    }
    return options.optimize || !report.within_budget;
  };

  for_each_successful_pattern(
      n, k, instance.mode,
      [&](const ElectionPattern& pattern) {
        std::set<int> palette;
        for (const auto& vote : pattern)
          for (int c : vote)
            if (c != 1) palette.insert(c);
        std::vector<int> colors(palette.begin(), palette.end());
        // With no colors besides 1, every other candidate gets color 0 and
        // can never be chosen.
        if (colors.empty()) colors.push_back(0);
        const int a = static_cast<int>(colors.size());

        if (options.mode == ColorMode::random) {
          std::uniform_int_distribution<int> pick(0, a - 1);
          for (long long t = 0; t < trials; ++t) {
            for (Candidate c : others) coloring[c] = colors[pick(rng)];
            if (!consider(pattern)) return false;
          }
          return true;
        }

        if (static_cast<double>(others.size()) * std::log(static_cast<double>(a)) > std::log(options.coloring_cap) + 1e-9)
          throw ResourceError("exhaustive coloring count exceeds the configured cap");
        std::vector<int> digit(others.size(), 0);
        while (true) {
          for (std::size_t i = 0; i < others.size(); ++i) coloring[others[i]] = colors[digit[i]];
          if (!consider(pattern)) return false;
          std::size_t i = 0;
          while (i < digit.size() && ++digit[i] == a) digit[i++] = 0;
          if (i == digit.size()) break;
        }
        return true;
      },
      options.pattern_cap);

  if (!best) return result;
  result.cost = *best;
  result.decision = *best <= instance.budget;
  return result;
}

}  // namespace swapbribery
