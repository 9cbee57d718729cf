#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kleinian/clauses.hpp"
#include "kleinian/moebius.hpp"
#include "kleinian/rational.hpp"
#include "kleinian/table.hpp"
#include "kleinian/taxonomy.hpp"
#include "kleinian/tolerances.hpp"
#include "kleinian/witnesses.hpp"

namespace kleinian {

struct ClauseReport {
  std::optional<Clause> first;
  std::vector<Clause> satisfied;
  std::vector<std::string> notes;  // one line per failed clause

  bool discrete() const { return first.has_value(); }
};

// Terse statement of a clause's conditions.
const char* clause_summary(Clause c);

// theta / pi as a reduced fraction, for elliptic classes with a recognized angle.
std::optional<Fraction> angle_over_pi(const ElementClass& c);

// Evaluates the seven clauses against the witnesses of (f, g); first match wins.
ClauseReport check_witness_clauses(const MoebiusMap& f, const MoebiusMap& g, const WitnessSet& w,
                                   const Tolerances& tol = {});

// Builds witnesses (checking the hypothesis) and evaluates the clauses.
ClauseReport check_witness_clauses(const MoebiusMap& f, const MoebiusMap& g,
                                   const Tolerances& tol = {});

enum class VerdictStatus { discrete, not_discrete, out_of_scope };

const char* to_string(VerdictStatus s);

struct DecideConfig {
  Tolerances tol;
  EnumCaps caps;
  TableEdition edition = TableEdition::corrected;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::not_discrete;
  ParamTriple input;
  ParamTriple normalized;  // after replacing non-primitive elliptic generators
  std::vector<std::string> notes;
  GroupSpaceClass space;
  std::vector<RowMatch> matched_rows;
  bool witness_path_ran = false;
  bool witnesses_swapped = false;
  std::optional<ClauseReport> clauses;
  std::optional<WitnessSet> witnesses;
  std::optional<bool> agreement;  // set when both paths ran
  std::string reason;
};

Verdict decide(const ParamTriple& triple, const DecideConfig& cfg = {});
Verdict decide(const MoebiusMap& f, const MoebiusMap& g, const DecideConfig& cfg = {});

}  // namespace kleinian
