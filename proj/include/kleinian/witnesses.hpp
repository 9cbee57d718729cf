#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kleinian/moebius.hpp"
#include "kleinian/tolerances.hpp"
#include "kleinian/words.hpp"

namespace kleinian {

struct Witness {
  MoebiusMap element;
  ElementClass cls;
  double relation_residual = 0.0;  // projective distance between h^2 and its word
  double side_residual = 0.0;      // branch condition: |tr(h1 f^-1)| or axis distance
};

struct WitnessSet {
  int n = 0;
  Witness h1;
  Witness h2;
  std::optional<Witness> h3;
  std::optional<Witness> tilde_h1;
  std::optional<Witness> h4;
  std::optional<Witness> tilde_h2;
  std::vector<std::string> notes;
};

// Words for the squares, over f, g, h (= h1) and t (= tilde h1).
Word h1_square_word();
Word h2_square_word(int n);
Word h3_square_word(int n);
Word h4_square_word(int n);

// Checks: f primitive elliptic of odd order n >= 3, g hyperbolic, axes meet at a
// non-right angle. Returns n; throws precondition_violated otherwise.
int witness_order(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol = {});

Witness build_h1(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol = {});
Witness build_h2(const MoebiusMap& f, const MoebiusMap& g, int n, const Tolerances& tol = {});
Witness build_h3(const MoebiusMap& f, const MoebiusMap& g, const MoebiusMap& h1, int n,
                 const Tolerances& tol = {});

struct H4Result {
  Witness tilde_h1;
  Witness h4;
};
H4Result build_h4(const MoebiusMap& f, const MoebiusMap& g, const MoebiusMap& h1, int n,
                  const Tolerances& tol = {});

// Cube root of h2 with angle pi/n, defined when h2 has angle 3pi/n and n >= 5.
Witness build_tilde_h2(const MoebiusMap& h2, int n, const Tolerances& tol = {});

WitnessSet build_witnesses(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol = {});

}  // namespace kleinian
