#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "support.hpp"
#include "swapbribery/io.hpp"

using namespace swapbribery;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "sbe_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST_CASE("solve reports yes and no through the exit status") {
  auto yes = scratch("fig1.sbe", serialize_election(fixtures::figure_one(3)));
  auto no = scratch("fig1_tight.sbe", serialize_election(fixtures::figure_one(2)));
  for (std::string algorithm : {"auto", "brute", "flow", "ilp", "color"}) {
    CHECK(run({"solve", yes, "--algorithm", algorithm}).status == 0);
    CHECK(run({"solve", no, "--algorithm", algorithm}).status == 1);
  }
}

TEST_CASE("solution files written by solve pass verify") {
  auto inst = scratch("fig1.sbe", serialize_election(fixtures::figure_one(3)));
  auto sol = (std::filesystem::temp_directory_path() / "sbe_cli_test" / "fig1.sol").string();
  CHECK(run({"solve", inst, "--solution", sol}).status == 0);
  auto checked = run({"verify", inst, sol});
  CHECK(checked.status == 0);
  CHECK(checked.out.find("consistent") != std::string::npos);

  auto forged = scratch("forged.sol", "sbe-solution 1\ndecision yes\ncost 1\ntarget 0 c1 c2 p c4 c3\ntarget 1 c1 c2 c3 p c4\n");
  CHECK(run({"verify", inst, forged}).status == 1);
}

TEST_CASE("errors exit with status 2") {
  auto inst = scratch("fig1.sbe", serialize_election(fixtures::figure_one(3)));
  CHECK(run({"solve", "/nonexistent/file.sbe"}).status == 2);
  CHECK(run({"solve", inst, "--algorithm", "magic"}).status == 2);
  CHECK(run({"solve", inst, "--trials", "4"}).status == 2);
  CHECK(run({"solve", inst, "--algorithm", "color", "--color-mode", "random", "--optimize"}).status == 2);
  CHECK(run({}).status == 2);
  auto broken = scratch("broken.sbe", "sbe 1\ncandidates 2\nfoo\n");
  auto r = run({"solve", broken});
  CHECK(r.status == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  auto priced = fixtures::figure_one(3);
  priced.costs.line(0).set(0, 1, 2);
  CHECK(run({"solve", scratch("priced.sbe", serialize_election(priced)), "--algorithm", "flow"}).status == 2);
}

TEST_CASE("export-network on the two-vote example") {
  auto inst = scratch("fig1.sbe", serialize_election(fixtures::figure_one(3)));
  auto r = run({"export-network", inst, "--s-star", "2"});
  REQUIRE(r.status == 0);
  // 4 one-position nodes, 10 slot nodes, 5 candidate nodes, s, t and the junction
  CHECK(count_lines_with(r.out, "[label=\"") - count_lines_with(r.out, "->") == 22);
  CHECK(r.out.find("a(v2,c2)") != std::string::npos);
}

TEST_CASE("bench emits the CSV schema") {
  auto inst = scratch("fig1.sbe", serialize_election(fixtures::figure_one(3)));
  auto r = run({"bench", inst, "--solvers", "brute,flow", "--seeds", "1,7"});
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "instance,solver,decision,cost,wall_ms,seed");
  CHECK(count_lines_with(r.out, ",yes,3,") == 4);
}

TEST_CASE("generate, kernelize and reduce write parseable files") {
  auto r = run({"generate", "random", "--m", "5", "--n", "2", "--k", "2", "--costs", "range", "--lo", "1", "--hi", "3",
                "--budget", "2", "--seed", "9"});
  REQUIRE(r.status == 0);
  auto path = scratch("random.sbe", r.out);
  CHECK(parse_election(r.out).candidate_count() == 5);
  auto k = run({"kernelize", path});
  REQUIRE(k.status == 0);
  CHECK_NOTHROW(parse_election(k.out));
  CHECK(run({"kernelize", path, "--method", "simple"}).status == 0);

  auto zero = run({"generate", "random", "--m", "4", "--n", "2", "--costs", "two-valued", "--low", "0", "--high", "1",
                   "--budget", "0"});
  auto zpath = scratch("zero.sbe", zero.out);
  auto pw = run({"reduce", zpath, "--to", "pw"});
  REQUIRE(pw.status == 0);
  auto pwpath = scratch("zero.pw", pw.out);
  int decided = run({"reduce", pwpath, "--decide"}).status;
  auto back = scratch("back.sbe", run({"reduce", pwpath, "--to", "sb"}).out);
  CHECK(run({"solve", back, "--algorithm", "brute"}).status == decided);
  CHECK(run({"solve", zpath, "--algorithm", "brute"}).status == decided);
  CHECK(run({"reduce", pwpath, "--to", "sb", "--decide"}).status == 2);
}

TEST_CASE("generate clique writes a verifying witness") {
  auto graph = scratch("g.txt", "graph 4 3 2\n0 1\n2 3\n0 3\ncolor 0 0\ncolor 1 1\ncolor 2 0\ncolor 3 1\n");
  auto sol = (std::filesystem::temp_directory_path() / "sbe_cli_test" / "w.sol").string();
  auto out = (std::filesystem::temp_directory_path() / "sbe_cli_test" / "gadget.sbe").string();
  CHECK(run({"generate", "clique", "--graph", graph, "--clique", "0,3", "--witness", sol, "-o", out}).status == 0);
  CHECK(run({"verify", out, sol}).status == 0);
  CHECK(run({"generate", "clique", "--graph", graph, "--clique", "2,1"}).status == 2);
  auto single = run({"generate", "single-vote", "--graph", graph, "--k", "2"});
  REQUIRE(single.status == 0);
  CHECK(parse_election(single.out).budget == 2 * 16 + 8 - 1);
}
