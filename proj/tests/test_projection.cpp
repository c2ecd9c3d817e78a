#include <doctest.h>

#include "dlknot/catalog.hpp"
#include "dlknot/projection.hpp"
#include "support/oracles.hpp"
#include "support/random_diagrams.hpp"

using namespace dlknot;

namespace {

bool all_zero(const DlDiagram& d) {
  for (int c = 1; c <= d.crossing_count(); ++c) {
    if (raw_parity(d, c) != 0) return false;
  }
  return degree(d) == 0;
}

bool only_elimination_moves(const MoveTrace& t) {
  for (const MoveInstance& m : t.steps) {
    if (m.kind != MoveKind::CrossingChange && m.kind != MoveKind::CrossingSliding &&
        m.kind != MoveKind::DlPairCancel5) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("pr_wp examples") {
  const DlDiagram zero = parse("U1+ D+ D- O1+ U2- O2-");
  REQUIRE(all_zero(zero));
  CHECK(project_winding_parity(zero) == zero);
  CHECK(project_winding_parity(parse("")).empty());
  const DlDiagram p = project_winding_parity(parse("U1+ D- O1+ D+"));
  CHECK(all_zero(p));
  CHECK(p.crossing_count() == 1);
  CHECK(p[p.passages(1).under].sign == Sign::Minus);
  CHECK_THROWS_AS(project_winding_parity(parse("D+")), PreconditionError);
}

TEST_CASE("pr_wp inserts i double lines on each side of the Under passage") {
  const DlDiagram d = parse("U1+ D+ D+ O1+ D- D-");
  CHECK(serialize(project_winding_parity(d)) == "D+ D+ U1+ D- D- D+ D+ O1+ D- D-");
}

TEST_CASE("proj examples") {
  CHECK(strip_double_lines(parse("D+ D-")).empty());
  CHECK(strip_double_lines(one_crossing(2, 1, Sign::Plus)) == parse("U1+ O1+"));
}

TEST_CASE("remove_double_lines examples") {
  const DlDiagram plain = parse("U1+ U2- O1+ O2-");
  const auto none = remove_double_lines(plain);
  CHECK(none.trace.steps.empty());
  CHECK(none.result == plain);

  const auto cert = remove_double_lines(parse("U1+ D- O1+ D+"));
  CHECK(cert.result.double_line_count() == 0);
  CHECK(cert.result.crossing_count() == 1);
  CHECK(replay(cert.trace) == cert.result);
  CHECK(only_elimination_moves(cert.trace));

  const auto loops = remove_double_lines(parse("D+ D+ D- D- D+ D-"));
  CHECK(loops.result.empty());

  try {
    remove_double_lines(one_crossing(2, -2, Sign::Plus));
    FAIL("expected a precondition error");
  } catch (const ParityPreconditionError& e) {
    CHECK(e.crossing() == 1);
    CHECK(e.parity() == 2);
  }
  try {
    remove_double_lines(parse("D+"));
    FAIL("expected a precondition error");
  } catch (const ParityPreconditionError& e) {
    CHECK(e.crossing() == 0);
    CHECK(e.parity() == 1);
  }
}

TEST_CASE("important subsets") {
  const DlDiagram d = one_crossing(-3, 3, Sign::Plus);
  const auto reports = important_subsets(d, 3);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.cardinality == 4);
    CHECK(r.essential);
    CHECK(testing::is_important(d, r.subset));
  }
  CHECK(reports[0].subset < reports[1].subset);

  // The full set is always important.
  const auto all = important_subsets(one_crossing(2, 1, Sign::Plus));
  REQUIRE_FALSE(all.empty());
  CHECK(all.back().subset == std::vector<std::size_t>{1, 2, 4});

  const auto empty = important_subsets(parse("U1+ D+ D- O1+ U2- O2-"), 1);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].subset.empty());
  CHECK(empty[0].essential);
  CHECK(important_subsets(d, 0).empty());
}

TEST_CASE("essential counts") {
  CHECK(essential_count(one_crossing(2, 3, Sign::Plus)) == 5);
  CHECK(essential_count(one_crossing(-3, -1, Sign::Plus)) == 4);
  CHECK(essential_count(parse("")) == 0);
}

TEST_CASE("essential diagram examples") {
  const DlDiagram plain = parse("U1+ U2- O1+ O2-");
  const auto e0 = essential_diagram(plain);
  CHECK(e0.diagram == plain);
  CHECK(e0.trace.steps.empty());

  for (long m = 0; m <= 3; ++m) {
    for (long n = -3; n <= 3; ++n) {
      const DlDiagram d = one_crossing(m, n, Sign::Minus);
      const auto e = essential_diagram(d);
      CHECK(e.diagram == d);
      CHECK(e.trace.steps.empty());
    }
  }

  const DlDiagram d = parse("U1+ D- O1+ D+");
  const auto e = essential_diagram(d);
  CHECK(e.kept.cardinality == 0);
  CHECK(e.changed_crossings == std::vector<int>{1});
  CHECK(canonically_equal(e.diagram, d));
  CHECK(replay(e.trace) == e.diagram);
}

TEST_CASE("essential diagram keeps the subset and the base diagram") {
  const DlDiagram d = one_crossing(-3, 3, Sign::Plus);
  const auto e = essential_diagram(d);
  CHECK(e.kept.cardinality == 4);
  CHECK(replay(e.trace) == e.diagram);
  CHECK(e.diagram.double_line_count() == 4 + 2 * static_cast<int>(e.changed_crossings.size()));
  CHECK(canonically_equal(strip_double_lines(e.diagram), strip_double_lines(d)));
  CHECK(essential_count(e.diagram) == 4);
}

TEST_CASE("property: pr_wp zeroes parities and is idempotent") {
  testing::Rng rng;
  for (int trial = 0; trial < 300; ++trial) {
    const DlDiagram d = testing::random_diagram(rng, {6, 10, true});
    const DlDiagram p = project_winding_parity(d);
    CHECK(all_zero(p));
    CHECK(canonically_equal(project_winding_parity(p), p));
  }
}

TEST_CASE("property: pr_wp then proj is the identity on diagrams without double lines") {
  testing::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    const DlDiagram d = testing::random_diagram(rng, {6, 0, true});
    CHECK(strip_double_lines(project_winding_parity(d)) == d);
    CHECK(essential_count(project_winding_parity(d)) == 0);
  }
}

TEST_CASE("property: elimination certificates replay to proj of the changed diagram") {
  testing::Rng rng;
  for (int trial = 0; trial < 300; ++trial) {
    DlDiagram d = project_winding_parity(testing::random_diagram(rng, {6, 10, true}));
    std::vector<int> changed;
    for (int c = 1; c <= d.crossing_count(); ++c) {
      if (rng.coin()) changed.push_back(c);
    }
    for (int c : changed) d = apply(d, crossing_change(c));
    DlDiagram expected = d;
    for (int c = 1; c <= d.crossing_count(); ++c) {
      if (raw_parity(d, c) == -1) expected = apply(expected, crossing_change(c));
    }
    const auto cert = remove_double_lines(d);
    CHECK(cert.trace.start == d);
    CHECK(replay(cert.trace) == cert.result);
    CHECK(cert.result.double_line_count() == 0);
    CHECK(only_elimination_moves(cert.trace));
    CHECK(canonically_equal(cert.result, strip_double_lines(expected)));
  }
}

TEST_CASE("property: essential search matches brute force") {
  testing::Rng rng;
  for (int trial = 0; trial < 150; ++trial) {
    const DlDiagram d = testing::random_diagram(rng, {4, 10, rng.coin()});
    const std::size_t k = essential_count(d);
    CHECK(k == testing::brute_force_essential_count(d));
    const auto first = first_essential_subset(d);
    CHECK(first.cardinality == k);
    CHECK(testing::is_important(d, first.subset));
    const auto reports = important_subsets(d, 20);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      CHECK(testing::is_important(d, reports[i].subset));
      CHECK(reports[i].essential == (reports[i].cardinality == k));
      if (i > 0) {
        const auto& a = reports[i - 1];
        const auto& b = reports[i];
        CHECK((a.cardinality < b.cardinality || (a.cardinality == b.cardinality && a.subset < b.subset)));
      }
    }
    REQUIRE_FALSE(reports.empty());
    CHECK(reports[0].subset == first.subset);
  }
}

TEST_CASE("property: essential diagrams") {
  testing::Rng rng;
  for (int trial = 0; trial < 150; ++trial) {
    const DlDiagram d = testing::random_diagram(rng, {4, 10, true});
    const auto e = essential_diagram(d);
    CHECK(replay(e.trace) == e.diagram);
    for (const MoveInstance& m : e.trace.steps) {
      // passing a kept line of the other sign re-adds a pair
      CHECK((m.kind == MoveKind::DlPairAdd5 || only_elimination_moves({DlDiagram{}, {m}})));
    }
    CHECK(canonically_equal(strip_double_lines(e.diagram), strip_double_lines(d)));
    CHECK(e.diagram.double_line_count() ==
          static_cast<int>(e.kept.cardinality + 2 * e.changed_crossings.size()));
    CHECK(degree(e.diagram) == degree(d));
  }
}
