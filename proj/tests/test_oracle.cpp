#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "kleinian/errors.hpp"
#include "kleinian/oracle.hpp"

using namespace kleinian;

namespace {

constexpr double kPi = std::numbers::pi;

double elliptic_beta(int n) { return -4 * std::pow(std::sin(kPi / n), 2); }

bool has_row(const Verdict& v, int row) {
  return std::any_of(v.matched_rows.begin(), v.matched_rows.end(),
                     [&](const RowMatch& m) { return m.row == row; });
}

bool satisfied(const ClauseReport& r, Clause c) {
  return std::find(r.satisfied.begin(), r.satisfied.end(), c) != r.satisfied.end();
}

}  // namespace

TEST_CASE("row 33 with n = 7 is decided by clause iii") {
  const double g = 2 * std::cos(2 * kPi / 7);
  Verdict v = decide(ParamTriple{-3, 2 * g, g});
  CHECK(v.status == VerdictStatus::discrete);
  CHECK(has_row(v, 33));
  REQUIRE(v.clauses);
  REQUIRE(v.clauses->first);
  CHECK(*v.clauses->first == Clause::iii);
  REQUIRE(v.agreement);
  CHECK(*v.agreement);
}

TEST_CASE("rejections and out-of-scope inputs") {
  Verdict none = decide(ParamTriple{-3, 1, 0.7});
  CHECK(none.status == VerdictStatus::not_discrete);
  CHECK(none.matched_rows.empty());
  CHECK(*none.agreement);

  // beta = -1 is the order-6 elliptic; 0.5 > -beta beta'/4 so the pair keeps a plane.
  CHECK(decide(ParamTriple{-1, 1, 0.5}).status == VerdictStatus::out_of_scope);
  CHECK(decide(ParamTriple{-3, 1, 0}).space.kind == SpaceKind::elementary);
  CHECK(decide(ParamTriple{-4, 1, 0.5}).space.kind == SpaceKind::degenerate);
  CHECK(decide(ParamTriple{-5, 1, 2}).status == VerdictStatus::out_of_scope);

  Verdict irrational = decide(ParamTriple{-2.5, 1, 0.3});
  CHECK(irrational.status == VerdictStatus::not_discrete);
  CHECK(irrational.reason.find("infinite order") != std::string::npos);

  CHECK_THROWS_AS(decide(ParamTriple{NAN, 1, 1}), Error);
}

TEST_CASE("non-primitive generator is replaced by its primitive power") {
  const double b0 = elliptic_beta(5);
  const double bp = 2 * ((b0 - 3) * std::cos(kPi / 5) - 2 * b0 - 3) / b0;  // row 29, n = 5
  const double b2 = -4 * std::pow(std::sin(2 * kPi / 5), 2);
  ParamTriple t{b2, bp, (b0 + 3) * b2 / b0};
  Verdict v = decide(t);
  CHECK(v.normalized.beta == doctest::Approx(b0));
  CHECK(v.normalized.gamma == doctest::Approx(b0 + 3));
  CHECK(v.status == VerdictStatus::discrete);
  CHECK(has_row(v, 29));
  CHECK_FALSE(v.notes.empty());

  GeneratorPair gens = construct_generators(t);
  Verdict vm = decide(gens.f, gens.g);
  CHECK(vm.status == VerdictStatus::discrete);
  CHECK(has_row(vm, 29));
}

TEST_CASE("generator order does not matter") {
  const double s5 = std::sqrt(5.0);
  Verdict v = decide(ParamTriple{s5, -3, (s5 + 1) / 2});
  CHECK(v.status == VerdictStatus::discrete);
  REQUIRE(v.matched_rows.size() >= 1);
  CHECK(v.matched_rows[0].row == 34);
  CHECK(v.matched_rows[0].swapped);
  CHECK(v.witnesses_swapped);
  CHECK(*v.agreement);
}

TEST_CASE("each witness row satisfies its clause") {
  EnumCaps caps;
  caps.max_n = 11;
  caps.max_m = caps.max_p = 12;
  for (int row = kFirstWitnessRow; row <= kRowCount; ++row) {
    auto samples = enumerate_row(row, caps);
    REQUIRE_MESSAGE(!samples.empty(), "row " << row);
    const Clause expected = *row_info(row).clause;
    for (const RowSample& s : samples) {
      Verdict v = decide(s.triple);
      CHECK_MESSAGE(v.status == VerdictStatus::discrete, "row " << row);
      REQUIRE_MESSAGE(v.clauses, "row " << row);
      CHECK_MESSAGE(satisfied(*v.clauses, expected), "row " << row << " clause " << to_string(expected));
      CHECK_MESSAGE(v.agreement.value_or(false), "row " << row);
    }
  }
}

TEST_CASE("clause examples") {
  // (i): n = 3, h1 of order 8 (m = 4), h2 hyperbolic.  gamma - beta = 4 cos^2(pi/8).
  {
    const double beta = -3, gamma = 4 * std::pow(std::cos(kPi / 8), 2) + beta;
    GeneratorPair gens = construct_generators({beta, 40.0, gamma});
    WitnessSet w = build_witnesses(gens.f, gens.g);
    CHECK(*w.h1.cls.order == 8);
    ClauseReport r = check_witness_clauses(gens.f, gens.g, w);
    REQUIRE(w.h2.cls.kind == ElementKind::hyperbolic);
    CHECK(*r.first == Clause::i);
  }
  // (ii): the sporadic n = 5 group with h1 of angle pi/2 and h2 of angle 2pi/3.
  {
    const double s5 = std::sqrt(5.0);
    GeneratorPair gens = construct_generators({(s5 - 5) / 2, s5, (s5 - 1) / 2});
    ClauseReport r = check_witness_clauses(gens.f, gens.g);
    REQUIRE(r.first);
    CHECK(*r.first == Clause::ii);
  }
  CHECK(std::string(clause_summary(Clause::vi)).find("m >= 7") != std::string::npos);
}

TEST_CASE("matrix input is conjugation invariant") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n(0.0, 1.0);
  const double g = 2 * std::cos(2 * kPi / 7);
  for (ParamTriple t : {ParamTriple{-3, 2 * g, g}, ParamTriple{-3, 1, 0.7}}) {
    GeneratorPair gens = construct_generators(t);
    Verdict base = decide(gens.f, gens.g);
    for (int i = 0; i < 20; ++i) {
      MoebiusMap w = MoebiusMap::from_gl({n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)},
                                         {n(rng), n(rng)});
      Verdict v = decide(conjugate(gens.f, w), conjugate(gens.g, w));
      CHECK(v.status == base.status);
      CHECK(v.matched_rows.size() == base.matched_rows.size());
      CHECK(v.clauses.has_value() == base.clauses.has_value());
      if (v.clauses && base.clauses) CHECK(v.clauses->first == base.clauses->first);
    }
  }
}
