#include "kleinian/orbifold353.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kleinian/errors.hpp"
#include "kleinian/geometry.hpp"
#include "kleinian/witnesses.hpp"
#include "kleinian/words.hpp"

namespace kleinian {

namespace {

constexpr double kPi = std::numbers::pi;

// Triple for f of order n, h1 of angle pi/m, h2 of angle pi/l (finite m).
ParamTriple section_triple(int n, double m, double l) {
  const double beta = -4 * std::pow(std::sin(kPi / n), 2);
  const double gamma = 2 * (std::cos(kPi / m) + std::cos(2 * kPi / n));
  const double d = gamma - beta;
  const double beta_prime = 2 * std::cos(kPi / l) / gamma -
                            std::sqrt(beta + 4) * (beta + d * d) / (gamma * beta) -
                            2 * gamma / beta - 2;
  return {beta, beta_prime, gamma};
}

double right_angle_residual(const Geodesic& a, const Geodesic& b) {
  AxisRelation rel = axes_relation(a, b, 1e-7);
  if (rel.kind != AxisRelationKind::intersecting) return std::numeric_limits<double>::infinity();
  return std::abs(*rel.angle - kPi / 2);
}

}  // namespace

Gamma353Report verify_353(const Gamma353Config& cfg) {
  const Tolerances& tol = cfg.tol;
  Gamma353Report r;
  r.triple = section_triple(5, 2.0, 1.5);
  r.matched_rows = match_table(r.triple, EnumCaps{}, tol);
  if (r.matched_rows.empty())
    throw Error(ErrorCode::construction_failure, "(5, 2, 3/2) triple matches no table row");

  GeneratorPair gens = construct_generators(r.triple, tol);
  const MoebiusMap& f = gens.f;
  const MoebiusMap& g = gens.g;
  ComplexTriple ct = complex_params_of(f, g);
  r.max_imag_part = std::max({std::abs(ct.beta.imag()), std::abs(ct.beta_prime.imag()),
                              std::abs(ct.gamma.imag())});

  const Word word = parse_word(kHalfTurnWord);
  const Alphabet alphabet{{'f', f}, {'g', g}};
  MoebiusMap e = evaluate(word, alphabet, tol.renormalize_every);
  r.e_trace = e.trace();
  r.e_square_residual = projective_distance(e * e, MoebiusMap::identity());
  r.e_order2 = std::abs(r.e_trace) <= cfg.trace_tol && r.e_square_residual <= cfg.square_tol;

  r.trace_residual_k4 = std::abs(evaluate(word, alphabet, 4).trace());
  r.trace_residual_k16 = std::abs(evaluate(word, alphabet, 16).trace());

  const Geodesic axis_e = axis_of(e, tol);
  const Geodesic axis_f = axis_of(f, tol);
  const Geodesic axis_g = axis_of(g, tol);
  r.orth_residual_f = right_angle_residual(axis_e, axis_f);
  r.orth_residual_g = right_angle_residual(axis_e, axis_g);
  r.common_point_residual = feet_separation(axis_e, axis_f, axis_g);

  WitnessSet w = build_witnesses(f, g, tol);
  r.h1_order4_residual = projective_distance(power(w.h1.element, 4), MoebiusMap::identity());
  r.h2_order3_residual = projective_distance(power(w.h2.element, 3), MoebiusMap::identity());

  r.skipped.push_back(
      "order of eae: the order-3 element of the tetrahedral subgroup is not expressible from the "
      "available words");

  const bool row_ok = std::any_of(r.matched_rows.begin(), r.matched_rows.end(),
                                  [](const RowMatch& m) { return m.row >= 35 && m.row <= 41; });
  r.passed = row_ok && r.max_imag_part <= cfg.imag_tol && r.e_order2 &&
             r.orth_residual_f <= cfg.axis_tol && r.orth_residual_g <= cfg.axis_tol &&
             r.common_point_residual <= cfg.axis_tol && r.h1_order4_residual <= cfg.relation_tol &&
             r.h2_order3_residual <= cfg.relation_tol &&
             r.trace_residual_k4 <= r.trace_residual_k16 + 1e-10;
  return r;
}

}  // namespace kleinian
