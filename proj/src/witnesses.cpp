#include "kleinian/witnesses.hpp"

#include <cmath>
#include <numbers>

#include "kleinian/errors.hpp"
#include "kleinian/geometry.hpp"

namespace kleinian {

namespace {

constexpr double kPi = std::numbers::pi;

// Distance from axis(p) to axis(f) when p is elliptic, else nullopt.
std::optional<double> elliptic_axis_gap(const MoebiusMap& p, const MoebiusMap& f,
                                        const Tolerances& tol) {
  MoebiusMap q = p.renormalized();
  if (classify_element(q, tol).kind != ElementKind::elliptic) return std::nullopt;
  AxisRelation rel = axes_relation(axis_of(q, tol), axis_of(f, tol), tol.eps_axis);
  switch (rel.kind) {
    case AxisRelationKind::coincident: return 0.0;
    case AxisRelationKind::intersecting: return rel.delta;
    case AxisRelationKind::parallel: return std::nullopt;
    case AxisRelationKind::disjoint: return rel.delta;
  }
  return std::nullopt;
}

Witness make_witness(const MoebiusMap& h, const MoebiusMap& square_target, double side,
                     const Tolerances& tol) {
  Witness w;
  w.element = h.renormalized();
  w.cls = classify_element(w.element, tol);
  w.relation_residual = projective_distance(w.element * w.element, square_target);
  w.side_residual = side;
  return w;
}

// Square root of `square` whose product with `companion` is elliptic with axis meeting axis(f).
Witness root_meeting_axis(const MoebiusMap& square, const MoebiusMap& companion,
                          const MoebiusMap& f, const char* name, const Tolerances& tol) {
  int passing = 0;
  MoebiusMap chosen;
  double gap_chosen = 0.0;
  for (const MoebiusMap& s : psl_square_roots(square, tol)) {
    auto gap = elliptic_axis_gap(s * companion, f, tol);
    if (gap && *gap <= tol.eps_axis) {
      ++passing;
      chosen = s;
      gap_chosen = *gap;
    }
  }
  if (passing != 1)
    throw Error(ErrorCode::branch_ambiguity,
                std::string(name) + ": " + std::to_string(passing) + " branches pass the axis test");
  return make_witness(chosen, square, gap_chosen, tol);
}

Alphabet base_alphabet(const MoebiusMap& f, const MoebiusMap& g) { return {{'f', f}, {'g', g}}; }

}  // namespace

Word h1_square_word() { return {{'g', 1}, {'f', 1}, {'g', -1}, {'f', 1}}; }

Word h2_square_word(int n) {
  return {{'f', (n - 1) / 2}, {'g', -1}, {'f', -1}, {'g', 1},
          {'f', -(n + 1) / 2}, {'g', 1},  {'f', -1}, {'g', -1}};
}

Word h3_square_word(int n) {
  return {{'f', (n - 1) / 2}, {'g', -1}, {'h', -1}, {'g', 1}, {'f', -(n - 3) / 2}, {'h', -1}};
}

Word h4_square_word(int n) {
  return {{'f', (n - 3) / 2}, {'g', -1}, {'t', 1}, {'g', 1},
          {'f', -(n + 1) / 2}, {'t', 1},  {'f', -1}};
}

int witness_order(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol) {
  ElementClass cf = classify_element(f, tol);
  if (cf.kind != ElementKind::elliptic || !cf.order || !cf.primitive.value_or(false) ||
      *cf.order < 3 || *cf.order % 2 == 0)
    throw Error(ErrorCode::precondition_violated, "f must be primitive elliptic of odd order >= 3");
  ElementClass cg = classify_element(g, tol);
  if (cg.kind != ElementKind::hyperbolic)
    throw Error(ErrorCode::precondition_violated, "g must be hyperbolic");
  AxisRelation rel = axes_relation(axis_of(f, tol), axis_of(g, tol), tol.eps_axis);
  if (rel.kind != AxisRelationKind::intersecting)
    throw Error(ErrorCode::precondition_violated,
                std::string("axes of f and g are ") + to_string(rel.kind));
  if (std::abs(*rel.angle - kPi / 2) <= tol.eps_axis)
    throw Error(ErrorCode::precondition_violated, "axes of f and g are orthogonal");
  return *cf.order;
}

Witness build_h1(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol) {
  witness_order(f, g, tol);
  MoebiusMap square = evaluate(h1_square_word(), base_alphabet(f, g), tol.renormalize_every);
  MoebiusMap f_inv = f.inverse();
  int passing = 0;
  MoebiusMap chosen;
  double residual = 0.0;
  for (const MoebiusMap& s : psl_square_roots(square, tol)) {
    double tr = std::abs((s * f_inv).trace());
    if (tr <= tol.eps_axis) {
      ++passing;
      chosen = s;
      residual = tr;
    }
  }
  if (passing != 1)
    throw Error(ErrorCode::branch_ambiguity,
                "h1: " + std::to_string(passing) + " branches with tr(h1 f^-1) = 0");
  return make_witness(chosen, square, residual, tol);
}

Witness build_h2(const MoebiusMap& f, const MoebiusMap& g, int n, const Tolerances& tol) {
  Alphabet alphabet = base_alphabet(f, g);
  MoebiusMap square = evaluate(h2_square_word(n), alphabet, tol.renormalize_every);
  MoebiusMap companion = g * f * g.inverse();
  return root_meeting_axis(square, companion, f, "h2", tol);
}

Witness build_h3(const MoebiusMap& f, const MoebiusMap& g, const MoebiusMap& h1, int n,
                 const Tolerances& tol) {
  if (classify_element(h1, tol).kind != ElementKind::elliptic)
    throw Error(ErrorCode::not_applicable, "h3 needs an elliptic h1");
  Alphabet alphabet = base_alphabet(f, g);
  alphabet['h'] = h1;
  MoebiusMap square = evaluate(h3_square_word(n), alphabet, tol.renormalize_every);
  return root_meeting_axis(square, h1, f, "h3", tol);
}

H4Result build_h4(const MoebiusMap& f, const MoebiusMap& g, const MoebiusMap& h1, int n,
                  const Tolerances& tol) {
  if (n < 7) throw Error(ErrorCode::not_applicable, "h4 needs n >= 7");
  ElementClass c1 = classify_element(h1, tol);
  if (c1.kind != ElementKind::elliptic || std::abs(*c1.rotation_angle - 4 * kPi / n) > tol.eps)
    throw Error(ErrorCode::not_applicable, "h1 is not a rotation through 4pi/n");
  MoebiusMap tilde = elliptic_root_with_angle(h1, 2, 2 * kPi / n, tol);
  Witness tilde_w = make_witness(tilde, h1, 0.0, tol);
  Alphabet alphabet = base_alphabet(f, g);
  alphabet['t'] = tilde;
  MoebiusMap square = evaluate(h4_square_word(n), alphabet, tol.renormalize_every);
  Witness h4 = root_meeting_axis(square, f * tilde.inverse(), f, "h4", tol);
  return {tilde_w, h4};
}

Witness build_tilde_h2(const MoebiusMap& h2, int n, const Tolerances& tol) {
  if (n < 5) throw Error(ErrorCode::not_applicable, "cube root witness needs n >= 5");
  ElementClass c2 = classify_element(h2, tol);
  if (c2.kind != ElementKind::elliptic || std::abs(*c2.rotation_angle - 3 * kPi / n) > tol.eps)
    throw Error(ErrorCode::not_applicable, "h2 is not a rotation through 3pi/n");
  MoebiusMap root = elliptic_root_with_angle(h2, 3, kPi / n, tol);
  Witness w;
  w.element = root;
  w.cls = classify_element(root, tol);
  w.relation_residual = projective_distance(root * root * root, h2);
  return w;
}

WitnessSet build_witnesses(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol) {
  WitnessSet out;
  out.n = witness_order(f, g, tol);
  const int n = out.n;
  out.h1 = build_h1(f, g, tol);
  out.h2 = build_h2(f, g, n, tol);

  const ElementClass& c1 = out.h1.cls;
  if (c1.kind == ElementKind::elliptic) {
    out.h3 = build_h3(f, g, out.h1.element, n, tol);
    if (n >= 7 && std::abs(*c1.rotation_angle - 4 * kPi / n) <= tol.eps) {
      H4Result r = build_h4(f, g, out.h1.element, n, tol);
      out.tilde_h1 = r.tilde_h1;
      out.h4 = r.h4;
    } else {
      out.notes.push_back("h4 undefined: h1 is not a rotation through 4pi/n with n >= 7");
    }
  } else {
    out.notes.push_back("h3, h4 undefined: h1 is not elliptic");
  }

  const ElementClass& c2 = out.h2.cls;
  if (n >= 5 && c2.kind == ElementKind::elliptic &&
      std::abs(*c2.rotation_angle - 3 * kPi / n) <= tol.eps) {
    out.tilde_h2 = build_tilde_h2(out.h2.element, n, tol);
  }
  return out;
}

}  // namespace kleinian
