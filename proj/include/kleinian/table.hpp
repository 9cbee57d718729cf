#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kleinian/clauses.hpp"
#include "kleinian/moebius.hpp"
#include "kleinian/tolerances.hpp"

namespace kleinian {

inline constexpr int kRowCount = 41;
inline constexpr int kFirstWitnessRow = 21;

// corrected: rows 27/28 (V), 31 and 41 as reconciled with the witness classes.
// as_printed: the published closed forms verbatim.
enum class TableEdition { corrected, as_printed };

const char* to_string(TableEdition e);
std::optional<TableEdition> edition_from_string(std::string_view s);

struct EnumCaps {
  int max_n = 200;
  int max_m = 200;
  int max_p = 200;
  // Offsets past the closed endpoint used to sample interval components.
  std::vector<double> interval_offsets{0.0, 0.5, 2.0};

  void validate() const;
};

struct RowParams {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> p;

  friend auto operator<=>(const RowParams&, const RowParams&) = default;
};

struct RowMatch {
  int row = 0;
  RowParams params;
  bool swapped = false;  // matched with beta and beta' exchanged
};

struct RowSample {
  int row = 0;
  RowParams params;
  ParamTriple triple;
  std::vector<double> offsets;  // one per interval component, in beta, gamma, beta' order
  bool sampled() const { return !offsets.empty(); }
};

struct RowInfo {
  int row = 0;
  std::string configuration;
  std::string beta;
  std::string gamma;
  std::string beta_prime;
  std::optional<Clause> clause;
};

RowInfo row_info(int row, TableEdition edition = TableEdition::corrected);

double u_term(double beta, double gamma, int n);
double v_term(double beta, int n, TableEdition edition = TableEdition::corrected);

std::vector<RowMatch> match_table(const ParamTriple& triple, const EnumCaps& caps = {},
                                  const Tolerances& tol = {},
                                  TableEdition edition = TableEdition::corrected);

std::vector<RowMatch> match_row(int row, const ParamTriple& triple, const EnumCaps& caps = {},
                                const Tolerances& tol = {},
                                TableEdition edition = TableEdition::corrected);

// Sorted by parameters, then sample offsets. Interval samples outside the
// truly spatial region are skipped; integer instantiations never are.
std::vector<RowSample> enumerate_row(int row, const EnumCaps& caps = {},
                                     TableEdition edition = TableEdition::corrected);

}  // namespace kleinian
