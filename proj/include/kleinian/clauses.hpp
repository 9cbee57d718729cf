#pragma once

#include <optional>
#include <string_view>

namespace kleinian {

// Discreteness clauses for an odd-order elliptic f and hyperbolic g with
// non-orthogonally intersecting axes, in evaluation order.
enum class Clause { i, ii, iii, iv, v, vi, vii };

inline constexpr Clause kAllClauses[] = {Clause::i,  Clause::ii, Clause::iii, Clause::iv,
                                         Clause::v,  Clause::vi, Clause::vii};

const char* to_string(Clause c);
std::optional<Clause> clause_from_string(std::string_view s);

}  // namespace kleinian
