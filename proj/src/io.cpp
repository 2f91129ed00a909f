#include "swapbribery/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "swapbribery/errors.hpp"

namespace swapbribery {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string t; in >> t;) line.tokens.push_back(std::move(t));
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

long long to_integer(const Line& line, const std::string& token, long long lo, long long hi) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line.number, "expected an integer, got '" + token + "'");
  if (value < lo || value > hi) throw ParseError(line.number, "value " + token + " out of range");
  return value;
}

Rational to_cost(const Line& line, const std::string& token) {
  Rational r;
  try {
    r = parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line.number, e.what());
  }
  if (r < 0) throw ParseError(line.number, "negative value " + token);
  return r;
}

void expect_size(const Line& line, std::size_t lo, std::size_t hi = 0) {
  std::size_t n = line.tokens.size();
  if (n < lo || (hi ? n > hi : n != lo)) throw ParseError(line.number, "wrong number of fields for '" + line.tokens[0] + "'");
}

void check_name(const std::string& name) {
  if (name.empty() || name.find_first_of(" \t\r\n#") != std::string::npos)
    throw DomainError("candidate name '" + name + "' cannot be written to a text file");
}

std::string rule_text(const VotingRule& rule) {
  switch (rule.kind()) {
    case RuleKind::approval:
      return "k-approval " + std::to_string(rule.k());
    case RuleKind::bucklin:
      return "bucklin";
    case RuleKind::scoring: {
      std::string s = "scoring ";
      for (std::size_t i = 0; i < rule.scoring_vector().size(); ++i)
        s += (i ? "," : "") + std::to_string(rule.scoring_vector()[i]);
      return s;
    }
  }
  return {};
}

const char* mode_text(WinnerMode mode) { return mode == WinnerMode::unique ? "unique-winner" : "co-winner"; }

// Keys shared by the election and partial-vote formats.
struct Preamble {
  std::optional<int> m;
  std::vector<std::optional<std::string>> names;
  std::optional<VotingRule> rule;
  int rule_line = 0;
  std::optional<std::string> preferred;
  int preferred_line = 0;
  std::optional<WinnerMode> mode;
  std::map<std::string, Candidate> index;

  // Returns false if the key is not a preamble key.
  bool accept(const Line& line) {
    const auto& t = line.tokens;
    const std::string& key = t[0];
    if (key == "candidates") {
      expect_size(line, 2);
      if (m) throw ParseError(line.number, "duplicate 'candidates'");
      m = static_cast<int>(to_integer(line, t[1], 1, 1'000'000));
      names.assign(*m, std::nullopt);
    } else if (key == "candidate") {
      expect_size(line, 3);
      if (!m) throw ParseError(line.number, "'candidate' before 'candidates'");
      auto idx = to_integer(line, t[1], 0, *m - 1);
      if (names[idx]) throw ParseError(line.number, "candidate index " + t[1] + " declared twice");
      if (!index.emplace(t[2], static_cast<Candidate>(idx)).second)
        throw ParseError(line.number, "duplicate candidate '" + t[2] + "'");
      names[idx] = t[2];
    } else if (key == "rule") {
      if (rule) throw ParseError(line.number, "duplicate 'rule'");
      rule_line = line.number;
      expect_size(line, 2, 3);
      if (t[1] == "k-approval" && t.size() == 3) {
        rule = VotingRule::approval(static_cast<int>(to_integer(line, t[2], 1, 1'000'000)));
      } else if (t[1] == "bucklin" && t.size() == 2) {
        rule = VotingRule::bucklin();
      } else if (t[1] == "scoring" && t.size() == 3) {
        std::vector<long long> vec;
        std::stringstream in(t[2]);
        for (std::string item; std::getline(in, item, ',');) vec.push_back(to_integer(line, item, 0, 1LL << 40));
        try {
          rule = VotingRule::scoring(vec);
        } catch (const DomainError& e) {
          throw ParseError(line.number, e.what());
        }
      } else {
        throw ParseError(line.number, "unknown rule");
      }
    } else if (key == "preferred") {
      expect_size(line, 2);
      if (preferred) throw ParseError(line.number, "duplicate 'preferred'");
      preferred = t[1];
      preferred_line = line.number;
    } else if (key == "mode") {
      expect_size(line, 2);
      if (mode) throw ParseError(line.number, "duplicate 'mode'");
      if (t[1] == "co-winner")
        mode = WinnerMode::co_winner;
      else if (t[1] == "unique-winner")
        mode = WinnerMode::unique;
      else
        throw ParseError(line.number, "unknown mode '" + t[1] + "'");
    } else {
      return false;
    }
    return true;
  }

  Candidate lookup(const Line& line, const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line.number, "unknown candidate '" + name + "'");
    return it->second;
  }

  void finish(int last_line) {
    if (!m) throw ParseError(last_line, "missing 'candidates'");
    for (int i = 0; i < *m; ++i)
      if (!names[i]) throw ParseError(last_line, "candidate " + std::to_string(i) + " is not declared");
    if (!rule) throw ParseError(last_line, "missing 'rule'");
    try {
      rule->validate(*m);
    } catch (const DomainError& e) {
      throw ParseError(rule_line, e.what());
    }
    if (!preferred) throw ParseError(last_line, "missing 'preferred'");
    if (!index.count(*preferred)) throw ParseError(preferred_line, "unknown candidate '" + *preferred + "'");
  }

  std::vector<std::string> roster() const {
    std::vector<std::string> out;
    for (const auto& n : names) out.push_back(*n);
    return out;
  }
};

void expect_header(const std::vector<Line>& lines, const char* magic) {
  if (lines.empty()) throw ParseError(1, "empty file");
  const Line& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0] != magic || first.tokens[1] != "1")
    throw ParseError(first.number, std::string("expected header '") + magic + " 1'");
}

int last_line(std::string_view text) {
  return 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

void write_roster(std::ostringstream& os, const std::vector<std::string>& names, const VotingRule& rule,
                  Candidate preferred, WinnerMode mode) {
  os << "candidates " << names.size() << "\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    check_name(names[i]);
    os << "candidate " << i << " " << names[i] << "\n";
  }
  os << "rule " << rule_text(rule) << "\n";
  os << "preferred " << names.at(preferred) << "\n";
  os << "mode " << mode_text(mode) << "\n";
}

}  // namespace

BriberyInstance parse_election(std::string_view text) {
  auto lines = tokenize(text);
  expect_header(lines, "sbe");
  Preamble pre;
  std::optional<Rational> budget;
  std::vector<const Line*> votes, costs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.tokens[0];
    if (pre.accept(line)) continue;
    if (key == "budget") {
      expect_size(line, 2);
      if (budget) throw ParseError(line.number, "duplicate 'budget'");
      budget = to_cost(line, line.tokens[1]);
    } else if (key == "vote") {
      votes.push_back(&line);
    } else if (key == "costs") {
      costs.push_back(&line);
    } else {
      throw ParseError(line.number, "unknown key '" + key + "'");
    }
  }
  const int end = last_line(text);
  pre.finish(end);
  const int m = *pre.m;

  std::vector<Vote> parsed;
  for (const Line* line : votes) {
    const auto& t = line->tokens;
    if (t.size() < 5 || t[2] != "multiplicity" || t[4] != "order")
      throw ParseError(line->number, "expected 'vote <i> multiplicity <w> order <names...>'");
    if (to_integer(*line, t[1], 0, 1'000'000'000) != static_cast<long long>(parsed.size()))
      throw ParseError(line->number, "votes must be numbered 0, 1, ... in order");
    int w = static_cast<int>(to_integer(*line, t[3], 1, 1'000'000'000));
    if (static_cast<int>(t.size()) - 5 != m) throw ParseError(line->number, "vote does not rank every candidate");
    std::vector<Candidate> order;
    std::vector<char> seen(m, 0);
    for (std::size_t j = 5; j < t.size(); ++j) {
      Candidate c = pre.lookup(*line, t[j]);
      if (seen[c]) throw ParseError(line->number, "candidate '" + t[j] + "' listed twice");
      seen[c] = 1;
      order.push_back(c);
    }
    parsed.push_back({Ranking(std::move(order)), w});
  }
  if (parsed.empty()) throw ParseError(end, "no votes");

  BriberyInstance out;
  out.election = Election(pre.roster(), std::move(parsed));
  out.rule = *pre.rule;
  out.preferred = pre.index.at(*pre.preferred);
  out.budget = budget.value_or(0);
  out.mode = pre.mode.value_or(WinnerMode::co_winner);
  out.costs = SwapCostFunction(out.election.line_count());
  for (const Line* line : costs) {
    const auto& t = line->tokens;
    if (t.size() < 3) throw ParseError(line->number, "incomplete 'costs' line");
    int v = static_cast<int>(to_integer(*line, t[1], 0, out.election.line_count() - 1));
    if (t[2] == "default" && t.size() == 4) {
      out.costs.line(v).set_default(to_cost(*line, t[3]));
    } else if (t[2] == "pair" && t.size() == 6) {
      Candidate a = pre.lookup(*line, t[3]), b = pre.lookup(*line, t[4]);
      if (a == b) throw ParseError(line->number, "pair of identical candidates");
      out.costs.line(v).set(a, b, to_cost(*line, t[5]));
    } else {
      throw ParseError(line->number, "expected 'costs <i> default <c>' or 'costs <i> pair <a> <b> <c>'");
    }
  }
  return out;
}

std::string serialize_election(const BriberyInstance& instance) {
  instance.validate();
  const auto& e = instance.election;
  std::ostringstream os;
  os << "sbe 1\n";
  write_roster(os, e.names(), instance.rule, instance.preferred, instance.mode);
  os << "budget " << to_string(instance.budget) << "\n";
  for (int i = 0; i < e.line_count(); ++i) {
    const Vote& v = e.vote(i);
    os << "vote " << i << " multiplicity " << v.multiplicity << " order";
    for (Candidate c : v.ranking) os << " " << e.name(c);
    os << "\n";
  }
  for (int i = 0; i < e.line_count(); ++i) {
    const VoteCosts& table = instance.costs.line(i);
    if (table.default_cost())
      os << "costs " << i << " default " << to_string(*table.default_cost()) << "\n";
    else if (instance.costs.global_default() != 1)
      os << "costs " << i << " default " << to_string(instance.costs.global_default()) << "\n";
    for (const auto& [pair, cost] : table.overrides())
      os << "costs " << i << " pair " << e.name(pair.first) << " " << e.name(pair.second) << " " << to_string(cost)
         << "\n";
  }
  return os.str();
}

std::string serialize_solution(const SolutionFile& solution, const Election& election) {
  std::ostringstream os;
  os << "sbe-solution 1\n";
  if (!solution.solver.empty()) os << "solver " << solution.solver << "\n";
  os << "decision " << (solution.decision ? "yes" : "no") << "\n";
  if (solution.cost) os << "cost " << to_string(*solution.cost) << "\n";
  if (solution.seed) os << "seed " << *solution.seed << "\n";
  for (const auto& [key, value] : solution.config) os << "config " << key << " " << value << "\n";
  if (solution.bribery) {
    if (static_cast<int>(solution.bribery->targets.size()) != election.vote_count())
      throw DomainError("solution does not cover every vote");
    for (std::size_t i = 0; i < solution.bribery->targets.size(); ++i) {
      os << "target " << i;
      for (Candidate c : solution.bribery->targets[i]) os << " " << election.name(c);
      os << "\n";
    }
  }
  return os.str();
}

SolutionFile parse_solution(std::string_view text, const Election& election) {
  auto lines = tokenize(text);
  expect_header(lines, "sbe-solution");
  SolutionFile out;
  bool decided = false;
  std::vector<Ranking> targets;
  const int m = election.candidate_count();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    if (t[0] == "solver") {
      expect_size(line, 2);
      out.solver = t[1];
    } else if (t[0] == "decision") {
      expect_size(line, 2);
      if (t[1] != "yes" && t[1] != "no") throw ParseError(line.number, "decision must be yes or no");
      out.decision = t[1] == "yes";
      decided = true;
    } else if (t[0] == "cost") {
      expect_size(line, 2);
      out.cost = to_cost(line, t[1]);
    } else if (t[0] == "seed") {
      expect_size(line, 2);
      std::uint64_t seed = 0;
      auto [ptr, ec] = std::from_chars(t[1].data(), t[1].data() + t[1].size(), seed);
      if (ec != std::errc() || ptr != t[1].data() + t[1].size()) throw ParseError(line.number, "malformed seed");
      out.seed = seed;
    } else if (t[0] == "config") {
      expect_size(line, 3);
      out.config.emplace_back(t[1], t[2]);
    } else if (t[0] == "target") {
      if (to_integer(line, t.size() > 1 ? t[1] : "", 0, 1'000'000'000) != static_cast<long long>(targets.size()))
        throw ParseError(line.number, "targets must be numbered 0, 1, ... in order");
      if (static_cast<int>(t.size()) - 2 != m) throw ParseError(line.number, "target does not rank every candidate");
      std::vector<Candidate> order;
      std::vector<char> seen(m, 0);
      for (std::size_t j = 2; j < t.size(); ++j) {
        auto c = election.find(t[j]);
        if (!c) throw ParseError(line.number, "unknown candidate '" + t[j] + "'");
        if (seen[*c]) throw ParseError(line.number, "candidate '" + t[j] + "' listed twice");
        seen[*c] = 1;
        order.push_back(*c);
      }
      targets.emplace_back(std::move(order));
    } else {
      throw ParseError(line.number, "unknown key '" + t[0] + "'");
    }
  }
  if (!decided) throw ParseError(last_line(text), "missing 'decision'");
  if (!targets.empty()) {
    if (static_cast<int>(targets.size()) != election.vote_count())
      throw ParseError(last_line(text), "solution does not cover every vote");
    out.bribery = Bribery{std::move(targets)};
  }
  return out;
}

PossibleWinnerInstance parse_possible_winner(std::string_view text) {
  auto lines = tokenize(text);
  expect_header(lines, "sbe-pw");
  Preamble pre;
  std::vector<const Line*> partial, before;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (pre.accept(line)) continue;
    if (line.tokens[0] == "partial")
      partial.push_back(&line);
    else if (line.tokens[0] == "before")
      before.push_back(&line);
    else
      throw ParseError(line.number, "unknown key '" + line.tokens[0] + "'");
  }
  const int end = last_line(text);
  pre.finish(end);
  for (std::size_t i = 0; i < partial.size(); ++i) {
    expect_size(*partial[i], 2);
    if (to_integer(*partial[i], partial[i]->tokens[1], 0, 1'000'000'000) != static_cast<long long>(i))
      throw ParseError(partial[i]->number, "partial votes must be numbered 0, 1, ... in order");
  }
  if (partial.empty()) throw ParseError(end, "no votes");
  std::vector<std::vector<std::pair<Candidate, Candidate>>> pairs(partial.size());
  std::vector<int> last_pair_line(partial.size(), 0);
  for (const Line* line : before) {
    expect_size(*line, 4);
    auto v = to_integer(*line, line->tokens[1], 0, static_cast<long long>(partial.size()) - 1);
    Candidate a = pre.lookup(*line, line->tokens[2]), b = pre.lookup(*line, line->tokens[3]);
    pairs[v].emplace_back(a, b);
    last_pair_line[v] = line->number;
  }
  PossibleWinnerInstance out;
  out.names = pre.roster();
  out.rule = *pre.rule;
  out.preferred = pre.index.at(*pre.preferred);
  out.mode = pre.mode.value_or(WinnerMode::co_winner);
  for (std::size_t v = 0; v < partial.size(); ++v) {
    try {
      out.votes.emplace_back(*pre.m, pairs[v]);
    } catch (const DomainError& e) {
      throw ParseError(last_pair_line[v], e.what());
    }
  }
  return out;
}

std::string serialize_possible_winner(const PossibleWinnerInstance& instance) {
  instance.validate();
  std::ostringstream os;
  os << "sbe-pw 1\n";
  write_roster(os, instance.names, instance.rule, instance.preferred, instance.mode);
  for (std::size_t v = 0; v < instance.votes.size(); ++v) os << "partial " << v << "\n";
  for (std::size_t v = 0; v < instance.votes.size(); ++v)
    for (auto [a, b] : instance.votes[v].pairs())
      os << "before " << v << " " << instance.names[a] << " " << instance.names[b] << "\n";
  return os.str();
}

ColoredGraph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty file");
  const Line& head = lines.front();
  if (head.tokens[0] != "graph" || head.tokens.size() < 3 || head.tokens.size() > 4)
    throw ParseError(head.number, "expected 'graph N M [k]'");
  const int n = static_cast<int>(to_integer(head, head.tokens[1], 0, 100'000));
  const long long edges = to_integer(head, head.tokens[2], 0, static_cast<long long>(n) * n);
  ColoredGraph g(n);
  long long seen = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    try {
      if (t[0] == "color") {
        expect_size(line, 3);
        g.set_color(static_cast<int>(to_integer(line, t[1], 0, n - 1)),
                    static_cast<int>(to_integer(line, t[2], 0, 100'000)));
      } else {
        expect_size(line, 2);
        g.add_edge(static_cast<int>(to_integer(line, t[0], 0, n - 1)), static_cast<int>(to_integer(line, t[1], 0, n - 1)));
        ++seen;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(line.number, e.what());
    }
  }
  if (seen != edges)
    throw ParseError(head.number, "header announces " + std::to_string(edges) + " edges, found " + std::to_string(seen));
  if (head.tokens.size() == 4) {
    try {
      g.set_class_count(static_cast<int>(to_integer(head, head.tokens[3], 0, 100'000)));
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(head.number, e.what());
    }
  }
  return g;
}

std::string serialize_graph(const ColoredGraph& graph) {
  std::ostringstream os;
  os << "graph " << graph.vertex_count() << " " << graph.edge_count();
  if (graph.class_count() > 0) os << " " << graph.class_count();
  os << "\n";
  for (auto [u, v] : graph.edges()) os << u << " " << v << "\n";
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (graph.color(v) >= 0) os << "color " << v << " " << graph.color(v) << "\n";
  return os.str();
}

}  // namespace swapbribery
