#include <doctest.h>

#include <cstdlib>

#include "dlknot/catalog.hpp"
#include "dlknot/projection.hpp"
#include "support/oracles.hpp"

using namespace dlknot;

TEST_CASE("one_crossing token patterns") {
  CHECK(serialize(one_crossing(2, 1, Sign::Plus)) == "U1+ D+ D+ O1+ D+");
  CHECK(serialize(one_crossing(0, 0, Sign::Plus)) == "U1+ O1+");
  CHECK(serialize(one_crossing(-1, 1, Sign::Minus)) == "U1- D- O1- D+");
  for (long m = -4; m <= 4; ++m) {
    for (long n = -4; n <= 4; ++n) CHECK(degree(one_crossing(m, n, Sign::Plus)) == m + n);
  }
}

TEST_CASE("partner formula") {
  CHECK(partner({2, -2, Sign::Plus}) == OneCrossing{-3, 3, Sign::Minus});
  CHECK(partner({0, 0, Sign::Plus}) == OneCrossing{-1, 1, Sign::Minus});
  CHECK(partner({1, 2, Sign::Plus}) == OneCrossing{1, 2, Sign::Minus});
}

TEST_CASE("closed form examples") {
  CHECK(essential_count_closed_form(2, 3) == 5);
  CHECK(essential_count_closed_form(-3, -1) == 4);
  CHECK(essential_count_closed_form(-3, 3) == 4);
  CHECK(essential_count(one_crossing(2, -2, Sign::Plus)) == 4);
  CHECK(essential_count(one_crossing(-3, 3, Sign::Minus)) == 4);
}

TEST_CASE("closed form agrees with the search and with brute force") {
  for (long m = -4; m <= 4; ++m) {
    for (long n = -4; n <= 4; ++n) {
      for (Sign eps : {Sign::Plus, Sign::Minus}) {
        const DlDiagram d = one_crossing(m, n, eps);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(essential_count(d) == essential_count_closed_form(m, n));
        CHECK(testing::brute_force_essential_count(d) == essential_count_closed_form(m, n));
      }
    }
  }
}

TEST_CASE("partners: same degree and essential count, parity i -> -i-1") {
  for (long m = -4; m <= 4; ++m) {
    for (long n = -4; n <= 4; ++n) {
      for (Sign eps : {Sign::Plus, Sign::Minus}) {
        const OneCrossing k{m, n, eps};
        const InvariantRecord a = invariant_record(one_crossing(k));
        const InvariantRecord b = invariant_record(one_crossing(partner(k)));
        CAPTURE(to_string(k));
        CHECK(a.degree == b.degree);
        CHECK(a.essential == b.essential);
        // gamma_c carries the first block: m on one side, n-1 on the other
        const long mod = std::labs(m + n);
        REQUIRE(a.parities.size() == 1);
        REQUIRE(b.parities.size() == 1);
        CHECK(a.parities[0].value == normalize_residue(m, mod));
        CHECK(b.parities[0].value == normalize_residue(-m - 1, mod));
      }
    }
  }
}

TEST_CASE("degree k families") {
  const std::vector<std::size_t> lower = {1, 1, 2, 2, 3};
  for (long k = 3; k <= 7; ++k) {
    const auto fam = degree_k_family(k);
    CAPTURE(k);
    CHECK(fam.size() >= lower[static_cast<std::size_t>(k - 3)]);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      CHECK(fam[i].record.degree == k);
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        CHECK_FALSE((fam[i].record == fam[j].record && fam[i].partner_record == fam[j].partner_record));
      }
    }
  }
  CHECK_THROWS_AS(degree_k_family(2), PreconditionError);
}

TEST_CASE("(2,k-2)+ and (2+mk,k-mk-2)+ share a parity profile") {
  for (long k = 3; k <= 6; ++k) {
    for (long m = 1; m <= 2; ++m) {
      const auto a = parity_profile(one_crossing(2, k - 2, Sign::Plus));
      const auto b = parity_profile(one_crossing(2 + m * k, k - m * k - 2, Sign::Plus));
      CHECK(a == b);
    }
  }
}

TEST_CASE("stretch family") {
  const auto rows = stretch_family(1, 3, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].knot == OneCrossing{1, 2, Sign::Plus});
  CHECK(rows[0].essential == 3);
  CHECK(rows[1].knot == OneCrossing{4, -1, Sign::Plus});
  CHECK(rows[1].essential == 5);
  const auto rows2 = stretch_family(2, 3, 1);
  CHECK(rows2[0].essential == 3);
  CHECK(rows2[1].essential == 7);
  for (long k = 3; k <= 5; ++k) {
    for (long m = 1; m < k; ++m) {
      const auto r = stretch_family(m, k, 3);
      for (const auto& row : r) CHECK(row.essential == essential_count_closed_form(row.knot.m, row.knot.n));
    }
  }
  CHECK_THROWS_AS(stretch_family(3, 3, 1), PreconditionError);
  CHECK_THROWS_AS(stretch_family(1, 2, 1), PreconditionError);
  CHECK_THROWS_AS(stretch_family(1, 3, 0), PreconditionError);
}
