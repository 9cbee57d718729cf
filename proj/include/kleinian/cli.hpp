#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kleinian/table.hpp"
#include "kleinian/tolerances.hpp"

namespace kleinian::cli {

enum class OutputMode { human, json, jsonl };

struct CliConfig {
  Tolerances tol;
  EnumCaps caps;
  TableEdition edition = TableEdition::corrected;
  OutputMode output = OutputMode::human;

  // Throws Error(invalid_config); caps must be >= 2.
  void validate() const;
};

// Overlays keys of a JSON config document onto cfg; unknown keys are rejected.
void apply_config_text(CliConfig& cfg, const std::string& text);
void apply_config_file(CliConfig& cfg, const std::string& path);

// Decimal places of a numeric literal; values with no fractional digits or an
// exponent count as exact and return a large number.
int literal_decimals(const std::string& text);

// Loosens eps, eps_axis and eps_match to 10^(2-d) when d < 11 and caps the
// rational denominator to match. The CLI passes the fewest decimals among
// inputs with at least 5 decimals; shorter literals are read as exact.
void widen_for_decimals(Tolerances& tol, int decimals);

// Exit codes: 0 decided or success, 2 out of scope, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kleinian::cli
