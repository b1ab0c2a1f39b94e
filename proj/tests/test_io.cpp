#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lsalg/errors.hpp"
#include "lsalg/io.hpp"

using namespace lsalg;

namespace {

const char* kC3Text = R"(# three-state rotation
states: 3
base: 0
alphabet: s
trans s: 1 2 0
)";

}  // namespace

TEST_CASE("parse_algebra on the canonical grammar") {
  Algebra alg = parse_algebra(kC3Text);
  CHECK(alg == fixtures::c3());

  SUBCASE("line order after states is free") {
    Algebra other = parse_algebra(
        "states: 3\n"
        "trans s: 1 2 0\n"
        "base: 0\n"
        "alphabet: s\n");
    CHECK(other == fixtures::c3());
  }
  SUBCASE("comments and blank lines are ignored") {
    Algebra other = parse_algebra(
        "\n# header\nstates: 3\n\nbase: 0 # the origin\nalphabet: s\n"
        "trans s: 1 2 0\n");
    CHECK(other == fixtures::c3());
  }
  SUBCASE("multi-symbol algebras") {
    Algebra alg2 = parse_algebra(
        "states: 4\nbase: 0\nalphabet: a b\ntrans a: 0 0 1 1\ntrans b: 2 2 3 3\n");
    CHECK(alg2 == fixtures::shift2());
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_algebra(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK(line_of("base: 0\nstates: 1\nalphabet: s\ntrans s: 0\n") == 1);
  CHECK(line_of("states: 3\nbase: 0\nbase: 1\nalphabet: s\ntrans s: 1 2 0\n") == 3);
  CHECK(line_of("states: 3\nbase: 0\nalphabet: s\ntrans s: 1 2\n") == 4);
  CHECK(line_of("states: 3\nbase: 0\nalphabet: s\ntrans s: 1 2 9\n") == 4);
  CHECK(line_of("states: 3\nbase: 0\nalphabet: s\ntrans t: 1 2 0\n") == 4);
  CHECK(line_of("states: 3\nbase: 0\nalphabet: s s\ntrans s: 1 2 0\n") == 3);
  CHECK(line_of("states: 3\nbase: 9\nalphabet: s\ntrans s: 1 2 0\n") == 2);
  CHECK(line_of("states: 3\nbase: 0\nalphabet: s\nwibble: 1\ntrans s: 1 2 0\n") == 4);
  CHECK(line_of("states: 3\nbase: 0\nalphabet: s\ntrans s: 1 2 0\ntrans s: 1 2 0\n") == 5);
  // Missing required directive reports at the end of input.
  CHECK(line_of("states: 3\nbase: 0\nalphabet: s\n") == 3);
}

TEST_CASE("format_algebra round-trips") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> n_dist(1, 6), k_dist(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = n_dist(rng);
    int k = k_dist(rng);
    std::uniform_int_distribution<State> state(0, n - 1);
    std::vector<std::string> alphabet;
    for (int s = 0; s < k; ++s) alphabet.push_back(std::string(1, static_cast<char>('a' + s)));
    std::vector<std::vector<State>> tables(static_cast<std::size_t>(k),
                                           std::vector<State>(static_cast<std::size_t>(n)));
    for (auto& row : tables)
      for (State& x : row) x = state(rng);
    Algebra alg(n, state(rng), alphabet, tables);

    std::string text = format_algebra(alg);
    CHECK(parse_algebra(text) == alg);
    // Canonical form is a fixed point of the round trip.
    CHECK(format_algebra(parse_algebra(text)) == text);
  }
}

TEST_CASE("partitions parse standalone or appended") {
  Partition part = parse_partition("classes: 0 1 2 0 1 2\n", 6);
  CHECK(part.classes == std::vector<int>{0, 1, 2, 0, 1, 2});

  ParsedFile parsed = parse_algebra_file(
      "states: 3\nbase: 0\nalphabet: s\ntrans s: 1 2 0\nclasses: 0 0 0\n");
  CHECK(parsed.algebra == fixtures::c3());
  REQUIRE(parsed.partition.has_value());
  CHECK(parsed.partition->classes == std::vector<int>{0, 0, 0});

  CHECK_THROWS_AS(parse_partition("classes: 0 1\n", 3), ParseError);
  CHECK_THROWS_AS(parse_partition("klasses: 0 1 2\n", 3), ParseError);
}

TEST_CASE("boundary set files") {
  BoundarySet A = parse_boundary_set("-\nb\na b\n");
  CHECK(A.words == std::vector<Word>{{}, {"b"}, {"a", "b"}});
  CHECK(A.alphabet == std::vector<std::string>{"a", "b"});

  BoundarySet widened = parse_boundary_set("-\n", {"a", "b"});
  CHECK(widened.words == std::vector<Word>{{}});
  CHECK(widened.alphabet == std::vector<std::string>{"a", "b"});

  CHECK_THROWS_AS(parse_boundary_set("a\n-\n"), ParseError);
  CHECK_THROWS_AS(parse_boundary_set(""), ParseError);
}

TEST_CASE("word syntax") {
  CHECK(parse_word("-") == Word{});
  CHECK(parse_word("a b a") == Word{"a", "b", "a"});
  CHECK(format_word(Word{}) == "-");
  CHECK(format_word(Word{"a", "b"}) == "a b");
}

TEST_CASE("dot export") {
  std::string dot = export_dot(fixtures::c3());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 -> 1 [label=\"s\"]") != std::string::npos);
  CHECK(dot.find("2 -> 0 [label=\"s\"]") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);

  // One edge per (symbol, state).
  std::string dot2 = export_dot(fixtures::shift2());
  std::size_t edges = 0, pos = 0;
  while ((pos = dot2.find("->", pos)) != std::string::npos) {
    ++edges;
    pos += 2;
  }
  CHECK(edges == 8);

  std::string labeled = export_dot(fixtures::c3(), {"x", "y", "z"});
  CHECK(labeled.find("label=\"y\"") != std::string::npos);
}
