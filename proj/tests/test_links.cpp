#include <doctest.h>

#include "dlknot/catalog.hpp"
#include "dlknot/links.hpp"
#include "support/random_diagrams.hpp"

using namespace dlknot;

TEST_CASE("parse_sewed") {
  const SewedLink l = parse_sewed("U1+ C+ O1+ C-");
  CHECK(l.body().crossing_count() == 1);
  CHECK(l.clasp_count() == 2);
  CHECK(linking_number(l) == 0);
  CHECK(serialize(l) == "U1+ C+ O1+ C-");
  CHECK(linking_number(parse_sewed("")) == 0);
  CHECK(linking_number(parse_sewed("C+ C+")) == 2);
  CHECK_THROWS_AS(parse_sewed("U1+ C+ U1+"), ParseError);
  CHECK_THROWS_AS(parse_sewed("U1+ D+ O1+"), ParseError);
  CHECK_THROWS_AS(parse_sewed("C*"), ParseError);
}

TEST_CASE("conversion to double lines") {
  const DlDiagram d = to_dl_diagram(parse_sewed("U1+ C+ C+ O1+ C-"));
  CHECK(serialize(d) == "U1+ D+ D+ O1+ D-");
  CHECK(degree(d) == 1);
  CHECK(to_dl_diagram(parse_sewed("U1+ U2- O1+ O2-")).double_line_count() == 0);
}

TEST_CASE("make_L") {
  CHECK(serialize(make_L(1, -1, Sign::Plus)) == "U1+ C+ O1+ C-");
  CHECK(serialize(make_L(0, 0, Sign::Plus)) == "U1+ O1+");
  for (long m = -5; m <= 5; ++m) {
    for (long n = -5; n <= 5; ++n) {
      for (Sign eps : {Sign::Plus, Sign::Minus}) {
        CHECK(canonically_equal(to_dl_diagram(make_L(m, n, eps)), one_crossing(m, n, eps)));
      }
    }
  }
  CHECK(essential_count(to_dl_diagram(make_L(2, -2, Sign::Plus))) == 4);
}

TEST_CASE("separability verdicts") {
  const auto trivial = separability_check(make_L(0, 0, Sign::Plus));
  CHECK(trivial.separable);
  REQUIRE(trivial.certificate.has_value());
  CHECK(trivial.certificate->trace.steps.empty());

  const auto sep = separability_check(make_L(-1, 1, Sign::Plus));
  CHECK(sep.separable);
  REQUIRE(sep.certificate.has_value());
  CHECK(replay(sep.certificate->trace).double_line_count() == 0);

  // gamma_c of (m,-m)+ carries m positive double lines.
  for (long m = 1; m <= 5; ++m) {
    const auto v = separability_check(make_L(m, -m, Sign::Plus));
    CHECK_FALSE(v.separable);
    REQUIRE(v.obstruction.has_value());
    CHECK(v.obstruction->reason == "winding_parity");
    CHECK(v.obstruction->crossing == 1);
    CHECK(v.obstruction->parity == m);
  }

  const auto linked = separability_check(parse_sewed("U1+ C+ O1+ C+"));
  CHECK_FALSE(linked.separable);
  REQUIRE(linked.obstruction.has_value());
  CHECK(linked.obstruction->reason == "linking_number");
  CHECK_FALSE(linked.obstruction->crossing.has_value());
  CHECK(linked.obstruction->parity == 2);
}

TEST_CASE("L family records") {
  const auto rows = distinguish_L_family(5);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].record.essential == 2 * (i + 1));
    for (std::size_t j = 0; j < i; ++j) CHECK(rows[i].record != rows[j].record);
  }
  CHECK_THROWS_AS(distinguish_L_family(0), PreconditionError);
}

TEST_CASE("property: degree of the conversion is the linking number") {
  testing::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    const DlDiagram d = testing::random_diagram(rng, {5, 8, false});
    const SewedLink l = parse_sewed(serialize(SewedLink(d)));
    CHECK(degree(to_dl_diagram(l)) == linking_number(l));
    const auto v = separability_check(l);
    if (v.separable) {
      REQUIRE(v.certificate.has_value());
      CHECK(replay(v.certificate->trace).double_line_count() == 0);
      for (const MoveInstance& m : v.certificate->trace.steps) {
        CHECK((m.kind == MoveKind::CrossingChange || m.kind == MoveKind::CrossingSliding ||
               m.kind == MoveKind::DlPairCancel5));
      }
    } else {
      CHECK(v.obstruction.has_value());
    }
  }
}
