#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kleinian/errors.hpp"
#include "kleinian/table.hpp"
#include "kleinian/taxonomy.hpp"

using namespace kleinian;

namespace {

const double kS5 = std::sqrt(5.0);

bool has_row(const std::vector<RowMatch>& ms, int row) {
  return std::any_of(ms.begin(), ms.end(), [&](const RowMatch& m) { return m.row == row; });
}

}  // namespace

TEST_CASE("sporadic rows") {
  auto m34 = match_table({-3, kS5, (kS5 + 1) / 2});
  CHECK(has_row(m34, 34));

  // corrected row 41 value (7 sqrt5 + 9)/2, evaluated independently
  ParamTriple r41{(kS5 - 5) / 2, 12.326237921249264, kS5 + 2};
  CHECK(has_row(match_table(r41), 41));
  ParamTriple printed41{(kS5 - 5) / 2, (5 * kS5 + 9) / 2, kS5 + 2};
  CHECK_FALSE(has_row(match_table(printed41), 41));
  CHECK(has_row(match_table(printed41, {}, {}, TableEdition::as_printed), 41));

  CHECK(match_table({-3, -3, 0}).empty());
}

TEST_CASE("row 27 and row 31 parameters are solved") {
  ParamTriple r27{-0.75302039628253294, 21.491566301328994, 0.80193773580483825};
  auto m = match_row(27, r27);
  REQUIRE(m.size() == 1);
  CHECK(*m[0].params.n == 7);
  CHECK(*m[0].params.p == 3);

  ParamTriple r31{-3, 28.787463244568766, 0.24697960371746706};
  auto m31 = match_row(31, r31);
  REQUIRE(m31.size() == 1);
  CHECK(*m31[0].params.m == 7);
  CHECK(match_row(31, r31, {}, {}, TableEdition::as_printed).empty());
}

TEST_CASE("enumeration") {
  auto r34 = enumerate_row(34);
  CHECK(r34.size() == 1);

  EnumCaps small;
  small.max_n = small.max_m = small.max_p = 11;
  auto r29 = enumerate_row(29, small);
  std::vector<int> ns;
  for (const RowSample& s : r29) {
    ns.push_back(*s.params.n);
    CHECK(s.triple.gamma == doctest::Approx(s.triple.beta + 3));
  }
  CHECK(ns == std::vector<int>{5, 7, 11});

  EnumCaps caps21;
  caps21.max_n = 5;
  caps21.max_m = 6;
  caps21.max_p = 4;
  auto r21 = enumerate_row(21, caps21);
  CHECK_FALSE(r21.empty());
  for (const RowSample& s : r21) {
    CHECK(s.triple.gamma > 0);
    CHECK(s.triple.gamma < -s.triple.beta * s.triple.beta_prime / 4);
  }

  CHECK_THROWS_AS(enumerate_row(0), Error);
  CHECK_THROWS_AS(enumerate_row(42), Error);
}

TEST_CASE("every enumerated triple matches its own row") {
  EnumCaps caps;
  caps.max_n = caps.max_m = caps.max_p = 12;
  for (TableEdition ed : {TableEdition::corrected, TableEdition::as_printed}) {
    for (int row = 1; row <= kRowCount; ++row) {
      for (const RowSample& s : enumerate_row(row, caps, ed)) {
        auto ms = match_row(row, s.triple, caps, {}, ed);
        CHECK_MESSAGE(!ms.empty(), "row " << row);
        if (row >= kFirstWitnessRow && ed == TableEdition::corrected)
          CHECK_MESSAGE(classify_pair(s.triple).kind == SpaceKind::truly_spatial, "row " << row);
      }
    }
  }
}

TEST_CASE("raising caps keeps matches") {
  EnumCaps lo, hi;
  lo.max_n = lo.max_m = lo.max_p = 9;
  hi.max_n = hi.max_m = hi.max_p = 30;
  for (int row = kFirstWitnessRow; row <= kRowCount; ++row) {
    for (const RowSample& s : enumerate_row(row, lo)) {
      auto a = match_table(s.triple, lo);
      auto b = match_table(s.triple, hi);
      for (const RowMatch& m : a) {
        bool kept = std::any_of(b.begin(), b.end(), [&](const RowMatch& x) {
          return x.row == m.row && x.params == m.params;
        });
        CHECK(kept);
      }
    }
  }
}

TEST_CASE("row descriptions") {
  RowInfo info = row_info(34);
  CHECK(info.row == 34);
  REQUIRE(info.clause);
  CHECK(*info.clause == Clause::iii);
  CHECK(row_info(31, TableEdition::as_printed).beta_prime != row_info(31).beta_prime);
  CHECK(edition_from_string("printed") == TableEdition::as_printed);
  CHECK_FALSE(edition_from_string("other"));
}
