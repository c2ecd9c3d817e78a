#include <doctest.h>

#include "dlknot/catalog.hpp"
#include "dlknot/json.hpp"
#include "dlknot/trace.hpp"
#include "support/random_diagrams.hpp"

using namespace dlknot;

TEST_CASE("empty trace replays to the start") {
  const DlDiagram d = parse("U1+ D- O1+ D+");
  CHECK(replay({d, {}}) == d);
}

TEST_CASE("add then cancel is the identity") {
  const DlDiagram d = parse("U1+ D- O1+ D+");
  CHECK(replay({d, {pair_add(2, Sign::Plus), pair_cancel(2)}}) == d);
}

TEST_CASE("crossing change trace from (2,-2)+ to (-3,3)-") {
  const MoveTrace t = parse_trace(
      "start U1+ D+ D+ O1+ D- D-\n"
      "CrossingChange 1\n");
  CHECK(canonically_equal(replay(t), one_crossing(-3, 3, Sign::Minus)));
}

TEST_CASE("replay names the failing step") {
  const MoveTrace t{parse("U1+ O1+"), {pair_add(0, Sign::Plus), parse_move("DlPairCancel5 1")}};
  try {
    replay(t);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.step() == 1);
  }
}

TEST_CASE("text format round trip") {
  const std::vector<std::string> lines = {
      "R1Add 0 OU +", "R1Add 3 UO -",          "R1Remove 4",        "R2Add 1 3 O par -",
      "R2Add 0 0 U anti +", "R2Remove 2 7",   "R3 0 4 9",          "DlSlide4 5",
      "DlPairAdd5 2 -",  "DlPairCancel5 0",    "CrossingChange 3",  "CrossingSliding 2 -",
  };
  for (const auto& l : lines) {
    CHECK(format_move(parse_move(l)) == l);
    CHECK(move_from_json(move_json(parse_move(l))) == parse_move(l));
  }
  const MoveTrace t{parse("U1+ D- O1+ D+"), {parse_move("CrossingChange 1"), parse_move("DlPairCancel5 4")}};
  const std::string text = format_trace(t);
  CHECK(text == "start U1+ D- O1+ D+\nCrossingChange 1\nDlPairCancel5 4\n");
  const MoveTrace back = parse_trace("# comment\n\n" + text);
  CHECK(back.start == t.start);
  CHECK(back.steps == t.steps);
  const MoveTrace from_json = trace_from_json(trace_json(t));
  CHECK(from_json.start == t.start);
  CHECK(from_json.steps == t.steps);
  CHECK(parse_trace("start\n").start.empty());
}

TEST_CASE("malformed traces") {
  CHECK_THROWS_AS(parse_move("R1Add 0 XX +"), ParseError);
  CHECK_THROWS_AS(parse_move("R1Add -1 OU +"), ParseError);
  CHECK_THROWS_AS(parse_move("R1Remove"), ParseError);
  CHECK_THROWS_AS(parse_move("Twist 1"), ParseError);
  CHECK_THROWS_AS(parse_move("CrossingChange 0"), ParseError);
  CHECK_THROWS_AS(parse_trace("R1Add 0 OU +\n"), ParseError);
  CHECK_THROWS_AS(parse_trace(""), ParseError);
  CHECK_THROWS_AS(trace_from_json(nlohmann::json::parse(R"({"start": "U1+ O1+"})")), ParseError);
}

TEST_CASE("property: random traces replay deterministically and round trip") {
  testing::Rng rng;
  for (int trial = 0; trial < 100; ++trial) {
    MoveTrace t{testing::random_diagram(rng, {4, 6, false}), {}};
    DlDiagram cur = t.start;
    for (int k = 0; k < 6; ++k) {
      const auto m = testing::random_move(rng, cur);
      if (!m) break;
      t.steps.push_back(*m);
      cur = apply(cur, *m);
    }
    CHECK(replay(t) == cur);
    CHECK(replay(parse_trace(format_trace(t))) == cur);
    CHECK(replay(trace_from_json(trace_json(t))) == cur);
  }
}
