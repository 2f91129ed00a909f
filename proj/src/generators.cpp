#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "swapbribery/errors.hpp"
#include "swapbribery/reductions.hpp"

namespace swapbribery {

namespace {

std::string join(const char* prefix, long long first, long long second) {
  return std::string(prefix) + "_" + std::to_string(first) + "_" + std::to_string(second);
}

constexpr Candidate kFreshDummy = -1;

// Vote prefix before truncation; kFreshDummy marks the slot of a new dummy.
struct Template {
  std::vector<Candidate> prefix;
  int multiplicity = 1;
  bool cheap_pairs = true;  // false: the first/second and third/fourth swaps cost 1+epsilon
};

class GadgetBuilder {
 public:
  Candidate add(std::string name, GadgetRole role) {
    Candidate c = static_cast<Candidate>(names_.size());
    if (!index_.emplace(name, c).second) throw std::logic_error("duplicate gadget candidate " + name);
    names_.push_back(std::move(name));
    roles_.push_back(role);
    return c;
  }
  Candidate at(const std::string& name) const { return index_.at(name); }

  // q1 -> q2 at cost `length`, through length-1 fresh transporters.
  std::vector<int> chain(Candidate q1, Candidate q2, int length, std::vector<Template>& out) {
    std::vector<Candidate> hops{q1};
    for (int h = 1; h < length; ++h) hops.push_back(add("t" + std::to_string(++transporters_), GadgetRole::transporter));
    hops.push_back(q2);
    std::vector<int> lines;
    for (std::size_t h = 0; h + 1 < hops.size(); ++h) {
      lines.push_back(static_cast<int>(out.size()));
      out.push_back({{kFreshDummy, hops[h], hops[h + 1]}});
    }
    return lines;
  }

  std::vector<std::string> names_;
  std::vector<GadgetRole> roles_;

 private:
  std::map<std::string, Candidate> index_;
  int transporters_ = 0;
};

}  // namespace

CliqueGadgetInstance build_clique_gadget(const ColoredGraph& graph, const Rational& epsilon) {
  const int k = graph.class_count();
  if (k < 2) throw DomainError("clique construction needs at least two classes");
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (graph.color(v) < 0) throw DomainError("vertex " + std::to_string(v) + " has no color");
  for (auto [u, v] : graph.edges())
    if (graph.color(u) == graph.color(v))
      throw DomainError("edge " + std::to_string(u) + " " + std::to_string(v) + " lies inside a color class");

  const int N = graph.vertex_count();
  std::vector<std::vector<int>> cls(k + 1);  // 1-based classes
  for (int i = 1; i <= k; ++i) cls[i] = graph.members(i - 1);
  auto class_of = [&](int x) { return graph.color(x) + 1; };
  // neighbours[x][j] = |E_x^j|
  std::vector<std::vector<long long>> neighbours(N, std::vector<long long>(k + 1, 0));
  for (auto [u, v] : graph.edges()) {
    ++neighbours[u][class_of(v)];
    ++neighbours[v][class_of(u)];
  }

  const long long beta = static_cast<long long>(k) * k * k + 10LL * k * k;
  long long K = static_cast<long long>(k) * k;
  for (int i = 1; i <= k; ++i) K = std::max<long long>(K, cls[i].size());
  for (int x = 0; x < N; ++x)
    for (int j = 1; j <= k; ++j)
      if (j != class_of(x)) K = std::max(K, neighbours[x][j]);
  K = std::max<long long>(2, K + (K % 2));

  GadgetBuilder g;
  const Candidate p = g.add("p", GadgetRole::preferred);
  const Candidate r = g.add("r", GadgetRole::sink);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) g.add(join("a", i, j), GadgetRole::a);
  const std::pair<const char*, GadgetRole> per_vertex[] = {
      {"b", GadgetRole::b}, {"c", GadgetRole::c}, {"ct", GadgetRole::c_tilde}, {"f", GadgetRole::f}, {"h", GadgetRole::h}};
  for (auto [prefix, role] : per_vertex)
    for (int x = 0; x < N; ++x)
      for (int i = 1; i <= k; ++i) g.add(join(prefix, x, i), role);
  for (int x = 0; x < N; ++x)
    for (int i = class_of(x) + 1; i <= k; ++i) g.add(join("ht", x, i), GadgetRole::h_tilde);
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) g.add(join("m", i, j), GadgetRole::m);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) g.add(join("mt", i, j), GadgetRole::m_tilde);
  auto at = [&](const char* prefix, long long a, long long b) { return g.at(join(prefix, a, b)); };

  CliqueGadgetInstance out;
  out.k = k;
  out.K = K;
  out.epsilon = epsilon;

  // Selection and incidence votes; line numbers are relative to `gadget`
  // until the final layout is known.
  std::vector<Template> gadget;
  std::map<std::pair<Candidate, Candidate>, std::vector<std::vector<int>>> chains;
  auto chain = [&](Candidate q1, Candidate q2, int length) {
    chains[{q1, q2}].push_back(g.chain(q1, q2, length, gadget));
  };
  std::map<std::pair<int, int>, int> selection;
  std::map<std::tuple<int, int, int, int>, int> incidence;

  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (int x : cls[j]) chain(at("a", i, j), at("b", x, i), 1);
  for (int x = 0; x < N; ++x) chain(at("b", x, 1), at("ct", x, 1), 2);
  for (int i = 2; i <= k; ++i)
    for (int x = 0; x < N; ++x) {
      selection[{i, x}] = static_cast<int>(gadget.size());
      gadget.push_back({{at("b", x, i), at("c", x, i - 1), at("ct", x, i), at("f", x, i - 1)}, 1, false});
    }
  for (int x = 0; x < N; ++x) chain(at("c", x, k), at("f", x, k), 2);
  for (int i = 1; i <= k; ++i)
    for (int x = 0; x < N; ++x) chain(at("ct", x, i), at("c", x, i), 1);
  for (int i = 1; i <= k; ++i)
    for (int x = 0; x < N; ++x) chain(at("f", x, i), at("h", x, i), 2 * (k - i) + 1);

  for (int i = 1; i <= k; ++i)
    for (int x = 0; x < N; ++x)
      if (class_of(x) < i) chain(at("h", x, i), at("ht", x, i), 1);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int x : cls[j])
        for (int y : cls[i]) {
          if (!graph.adjacent(x, y)) continue;
          incidence[{i, j, y, x}] = static_cast<int>(gadget.size());
          gadget.push_back({{at("h", x, i), at("ht", y, j), at("mt", i, j), at("m", i, j)}, 1, false});
        }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) chain(at("mt", i, j), at("m", i, j), 1);
  for (int i = 1; i <= k; ++i)
    for (int x : cls[i]) chain(at("h", x, i), at("m", i, i), 3);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      chain(at("m", i, j), r, 1);
      chain(at("m", i, j), r, 1);
    }
  for (int i = 1; i <= k; ++i) chain(at("m", i, i), r, 1);

  // Score-setting votes, for every candidate created so far except r.
  std::vector<Template> initial;
  const int non_guards = static_cast<int>(g.names_.size());
  for (Candidate q = 0; q < non_guards; ++q) {
    long long copies = K - 1;
    const std::string& name = g.names_[q];
    switch (g.roles_[q]) {
      case GadgetRole::sink:
        continue;
      case GadgetRole::preferred:
        copies = K;
        break;
      case GadgetRole::a:
        copies = K + 1 - static_cast<long long>(cls[std::stoi(name.substr(name.rfind('_') + 1))].size());
        break;
      case GadgetRole::h:
      case GadgetRole::h_tilde: {
        int x = std::stoi(name.substr(name.find('_') + 1));
        int i = std::stoi(name.substr(name.rfind('_') + 1));
        bool fixed_by_incidence = g.roles_[q] == GadgetRole::h ? class_of(x) > i : class_of(x) < i;
        if (fixed_by_incidence) copies = K - neighbours[x][i];
        break;
      }
      case GadgetRole::m: {
        auto first = name.find('_'), second = name.rfind('_');
        if (name.substr(first + 1, second - first - 1) != name.substr(second + 1)) copies = K - 2;
        break;
      }
      default:
        break;
    }
    for (long long c = 0; c < copies; ++c) initial.push_back({{q, kFreshDummy}});
  }

  const long long guard_count = beta + 2;
  std::vector<Candidate> guards;
  for (long long h = 1; h <= guard_count; ++h) guards.push_back(g.add("g" + std::to_string(h), GadgetRole::guard));
  std::vector<Template> guard_votes;
  for (long long h = 0; h < guard_count; ++h) {
    Template t;
    for (long long s = 0; s < guard_count; ++s) t.prefix.push_back(guards[(h + s) % guard_count]);
    t.multiplicity = static_cast<int>(K / 2);
    guard_votes.push_back(std::move(t));
  }

  // Layout: guard votes, score-setting votes, then selection/incidence votes.
  std::vector<const Template*> layout;
  for (const auto& t : guard_votes) layout.push_back(&t);
  for (const auto& t : initial) layout.push_back(&t);
  const int gadget_offset = static_cast<int>(layout.size());
  for (const auto& t : gadget) layout.push_back(&t);

  int dummies = 0;
  for (const auto* t : layout)
    for (Candidate c : t->prefix)
      if (c == kFreshDummy) g.add("d" + std::to_string(++dummies), GadgetRole::dummy);
  const int m = static_cast<int>(g.names_.size());
  const Candidate first_dummy = m - dummies;

  std::vector<Vote> votes;
  votes.reserve(layout.size());
  SwapCostFunction costs(static_cast<int>(layout.size()));
  long long next_guard = 0;
  Candidate next_dummy = first_dummy;
  std::vector<char> used(m, 0);
  for (std::size_t line = 0; line < layout.size(); ++line) {
    const Template& t = *layout[line];
    std::vector<Candidate> order;
    order.reserve(m);
    for (Candidate c : t.prefix) order.push_back(c == kFreshDummy ? next_dummy++ : c);
    while (static_cast<long long>(order.size()) < guard_count) {
      order.push_back(guards[next_guard]);
      next_guard = (next_guard + 1) % guard_count;
    }
    for (Candidate c : order) used[c] = 1;
    for (Candidate c = 0; c < m; ++c)
      if (!used[c]) order.push_back(c);
    for (Candidate c : order) used[c] = 0;
    if (!t.cheap_pairs) {
      costs.line(static_cast<int>(line)).set_symmetric(order[0], order[1], 1 + epsilon);
      costs.line(static_cast<int>(line)).set_symmetric(order[2], order[3], 1 + epsilon);
    }
    votes.push_back({Ranking(std::move(order)), t.multiplicity});
  }

  out.instance.election = Election(g.names_, std::move(votes));
  out.instance.rule = VotingRule::approval(2);
  out.instance.preferred = p;
  out.instance.costs = std::move(costs);
  out.instance.budget = to_rational(beta);
  out.instance.mode = WinnerMode::co_winner;
  out.roles = g.roles_;
  for (auto& [key, copies] : chains)
    for (auto& lines : copies) {
      for (int& l : lines) l += gadget_offset;
      out.chains[key].push_back(lines);
    }
  for (auto [key, l] : selection) out.selection_votes[key] = l + gadget_offset;
  for (auto [key, l] : incidence) out.incidence_votes[key] = l + gadget_offset;

  auto problems = clique_gadget_audit(out);
  if (!problems.empty()) throw std::logic_error("clique gadget audit failed: " + problems.front());
  return out;
}

std::vector<std::string> clique_gadget_audit(const CliqueGadgetInstance& gadget) {
  std::vector<std::string> problems;
  const auto& e = gadget.instance.election;
  auto s = scores(e, gadget.instance.rule);
  const long long K = gadget.K;
  for (Candidate c = 0; c < e.candidate_count(); ++c) {
    long long want = K;
    bool at_most = false;
    switch (gadget.roles.at(c)) {
      case GadgetRole::sink: want = 0; break;
      case GadgetRole::a: want = K + 1; break;
      case GadgetRole::dummy: want = 1; at_most = true; break;
      default: break;
    }
    bool ok = at_most ? s[c] <= want : s[c] == want;
    if (!ok)
      problems.push_back("score(" + e.name(c) + ") = " + std::to_string(s[c]) + ", expected " +
                         (at_most ? "at most " : "") + std::to_string(want));
  }
  return problems;
}

Bribery clique_witness_bribery(const ColoredGraph& graph, const std::vector<int>& clique,
                               const CliqueGadgetInstance& gadget) {
  const int k = gadget.k;
  if (graph.class_count() != k || !graph.is_multicolored_clique(clique))
    throw DomainError("vertices do not form a multicolored clique");
  const auto& e = gadget.instance.election;
  auto id = [&](const char* prefix, long long a, long long b) {
    auto c = e.find(join(prefix, a, b));
    if (!c) throw DomainError("graph does not match the gadget instance");
    return *c;
  };
  const Candidate r = *e.find("r");

  Bribery out = gadget.instance.identity_bribery();
  auto reorder = [&](int line, std::initializer_list<int> front) {
    auto& target = out.targets[e.expanded_offset(line)];
    std::vector<Candidate> order = target.order();
    std::vector<Candidate> head;
    for (int pos : front) head.push_back(order[pos]);
    std::copy(head.begin(), head.end(), order.begin());
    target = Ranking(std::move(order));
  };
  std::map<std::pair<Candidate, Candidate>, int> used_copies;
  auto transfer = [&](Candidate q1, Candidate q2) {
    auto it = gadget.chains.find({q1, q2});
    int copy = used_copies[{q1, q2}]++;
    if (it == gadget.chains.end() || copy >= static_cast<int>(it->second.size()))
      throw DomainError("graph does not match the gadget instance");
    for (int line : it->second[copy]) reorder(line, {0, 2, 1});
  };

  std::vector<int> x(k + 1);  // x[i]: chosen vertex of class i, 1-based
  for (int i = 1; i <= k; ++i) x[i] = clique[i - 1];

  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) transfer(id("a", i, j), id("b", x[j], i));
  for (int j = 1; j <= k; ++j) {
    const int v = x[j];
    transfer(id("b", v, 1), id("ct", v, 1));
    for (int i = 2; i <= k; ++i) reorder(gadget.selection_votes.at({i, v}), {2, 3, 0, 1});
    for (int i = 1; i <= k; ++i) transfer(id("ct", v, i), id("c", v, i));
    transfer(id("c", v, k), id("f", v, k));
    for (int i = 1; i <= k; ++i) transfer(id("f", v, i), id("h", v, i));
  }

  for (int i = 1; i <= k; ++i)
    for (int j = 1; j < i; ++j) transfer(id("h", x[j], i), id("ht", x[j], i));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      reorder(gadget.incidence_votes.at({i, j, x[i], x[j]}), {2, 3, 0, 1});
      transfer(id("mt", i, j), id("m", i, j));
      transfer(id("m", i, j), r);
      transfer(id("m", i, j), r);
    }
  for (int i = 1; i <= k; ++i) {
    transfer(id("h", x[i], i), id("m", i, i));
    transfer(id("m", i, i), r);
  }
  return out;
}

BriberyInstance build_single_vote_clique(const ColoredGraph& graph, int k) {
  const int N = graph.vertex_count();
  if (k < 1 || k > N) throw DomainError("clique size must lie in 1..N");
  std::vector<std::string> names;
  for (int i = 1; i <= k + 1; ++i) names.push_back("d" + std::to_string(i));
  for (int i = 1; i <= N; ++i) names.push_back("c" + std::to_string(i));
  names.push_back("p");
  const int m = static_cast<int>(names.size());
  const Candidate d1 = 0, p = m - 1;
  auto c = [&](int v) { return k + 1 + v; };

  BriberyInstance out;
  out.election = Election(names, {{Ranking::identity(m), 1}});
  out.rule = VotingRule::approval(k + 1);
  out.preferred = p;
  out.mode = WinnerMode::co_winner;
  out.costs = SwapCostFunction(1, 0);
  VoteCosts& line = out.costs.line(0);
  const Rational big = to_rational(static_cast<long long>(N) * N);
  for (int v = 0; v < N; ++v) {
    long long earlier = 0;
    for (int u = 0; u < v; ++u) earlier += graph.adjacent(u, v);
    line.set_symmetric(d1, c(v), to_rational(N - earlier));
    line.set_symmetric(c(v), p, big);
  }
  for (auto [u, v] : graph.edges()) line.set_symmetric(c(u), c(v), 1);
  const long long NN = static_cast<long long>(N) * N;
  out.budget = to_rational((N - k) * NN + static_cast<long long>(k) * N - static_cast<long long>(k) * (k - 1) / 2);
  out.validate();
  return out;
}

CostModel CostModel::two_valued(Rational low, Rational high, double density) {
  CostModel out;
  out.kind = CostModelKind::two_valued;
  out.low = std::move(low);
  out.high = std::move(high);
  out.density = density;
  return out;
}

CostModel CostModel::uniform_range(long long lo, long long hi) {
  CostModel out;
  out.kind = CostModelKind::uniform_range;
  out.lo = lo;
  out.hi = hi;
  return out;
}

BriberyInstance generate_random(const RandomSpec& spec) {
  if (spec.m < 1 || spec.n < 1) throw DomainError("need at least one candidate and one vote");
  if (spec.k < 1 || spec.k > spec.m) throw DomainError("k must lie in 1..m");
  const CostModel& model = spec.costs;
  if (model.kind == CostModelKind::two_valued && (model.low < 0 || model.high < 0))
    throw DomainError("negative cost in two-valued model");
  if (model.kind == CostModelKind::uniform_range && (model.lo < 0 || model.lo > model.hi))
    throw DomainError("cost range must satisfy 0 <= lo <= hi");
  if (spec.budget < 0) throw DomainError("negative budget");

  std::mt19937_64 rng(spec.seed);
  std::vector<std::string> names{"p"};
  for (int i = 1; i < spec.m; ++i) names.push_back("c" + std::to_string(i));
  std::vector<Vote> votes;
  for (int v = 0; v < spec.n; ++v) {
    std::vector<Candidate> order(spec.m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    votes.push_back({Ranking(std::move(order)), 1});
  }

  BriberyInstance out;
  out.election = Election(std::move(names), std::move(votes));
  out.rule = VotingRule::approval(spec.k);
  out.preferred = 0;
  out.budget = spec.budget;
  out.mode = spec.mode;
  out.costs = SwapCostFunction(spec.n);
  if (model.kind != CostModelKind::unit) {
    std::bernoulli_distribution high(std::clamp(model.density, 0.0, 1.0));
    std::uniform_int_distribution<long long> range(model.lo, model.hi);
    for (int v = 0; v < spec.n; ++v)
      for (Candidate a = 0; a < spec.m; ++a)
        for (Candidate b = a + 1; b < spec.m; ++b) {
          Rational c = model.kind == CostModelKind::two_valued ? (high(rng) ? model.high : model.low)
                                                               : to_rational(range(rng));
          out.costs.line(v).set_symmetric(a, b, c);
        }
  }
  return out;
}

}  // namespace swapbribery
