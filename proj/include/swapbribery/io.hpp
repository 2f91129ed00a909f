#pragma once

// Line-oriented text formats for elections, solutions, partial-vote
// instances and graphs. Blank lines and '#' comments are ignored everywhere.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swapbribery/graph.hpp"
#include "swapbribery/reductions.hpp"
#include "swapbribery/swap.hpp"

namespace swapbribery {

/// Election file:
///
///   sbe 1
///   candidates <m>
///   candidate <idx> <name>                 (idx 0-based, once per candidate)
///   rule k-approval <k> | rule bucklin | rule scoring s1,...,sm
///   budget <p[/q]>                         (default 0)
///   preferred <name>
///   mode co-winner | unique-winner         (default co-winner)
///   vote <i> multiplicity <w> order <names...>   (i = 0, 1, ... in order)
///   costs <i> default <p[/q]>
///   costs <i> pair <a> <b> <p[/q]>         (ordered pair: a directly before b)
///
/// Unspecified costs are 1. Throws ParseError with the offending line.
BriberyInstance parse_election(std::string_view text);
/// Inverse of parse_election. A global default other than 1 is written as a
/// default on every line lacking its own.
std::string serialize_election(const BriberyInstance& instance);

struct SolutionFile {
  std::string solver;
  bool decision = false;
  std::optional<Rational> cost;
  std::optional<std::uint64_t> seed;
  /// Free-form echo of the solver configuration.
  std::vector<std::pair<std::string, std::string>> config;
  /// One target ranking per expanded vote.
  std::optional<Bribery> bribery;
};

/// Solution file:
///
///   sbe-solution 1
///   solver <name>
///   decision yes | no
///   cost <p[/q]>
///   seed <n>
///   config <key> <value>
///   target <i> <names...>                  (i = expanded vote index)
std::string serialize_solution(const SolutionFile& solution, const Election& election);
SolutionFile parse_solution(std::string_view text, const Election& election);

/// Partial-vote file: the election header keys (candidates, candidate,
/// rule, preferred, mode) after "sbe-pw 1", then "partial <i>" per vote and
/// "before <i> <a> <b>" per required pair.
PossibleWinnerInstance parse_possible_winner(std::string_view text);
std::string serialize_possible_winner(const PossibleWinnerInstance& instance);

/// Graph file: "graph N M [k]", then M lines "u v", then optional lines
/// "color u c". Vertices and colors are 0-based.
ColoredGraph parse_graph(std::string_view text);
std::string serialize_graph(const ColoredGraph& graph);

}  // namespace swapbribery
