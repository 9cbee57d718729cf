#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kleinian/errors.hpp"
#include "kleinian/moebius.hpp"
#include "kleinian/rational.hpp"
#include "kleinian/words.hpp"

using namespace kleinian;

namespace {

constexpr double kPi = std::numbers::pi;

MoebiusMap rotation(double theta) {
  return MoebiusMap::diagonal(std::polar(1.0, theta / 2));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::parse_error;
}

}  // namespace

TEST_CASE("determinant is enforced") {
  CHECK(code_of([] { MoebiusMap::from_entries(2, 0, 0, 1); }) == ErrorCode::non_unit_determinant);
  MoebiusMap m = MoebiusMap::from_gl(2, 0, 0, 2);
  CHECK(std::abs(m.det() - Complex{1}) < 1e-15);
  CHECK(code_of([] { MoebiusMap::from_gl(1, 2, 2, 4); }) == ErrorCode::non_unit_determinant);
}

TEST_CASE("classification by beta") {
  CHECK(classify_beta(-3.0).kind == ElementKind::elliptic);
  CHECK(classify_beta(0.0).kind == ElementKind::parabolic);
  CHECK(classify_beta(1.5).kind == ElementKind::hyperbolic);
  CHECK(classify_beta(-5.0).kind == ElementKind::pi_loxodromic);
  CHECK(classify_beta(Complex{1, 1}).kind == ElementKind::strictly_loxodromic);
  CHECK(classify_beta(-4.0).kind == ElementKind::elliptic);

  ElementClass c = classify_beta(-3.0);
  REQUIRE(c.order);
  CHECK(*c.order == 3);
  CHECK(*c.angle_numerator == 1);
  CHECK(*c.primitive);
  CHECK(*c.rotation_angle == doctest::Approx(2 * kPi / 3));

  // beta = -4 sin^2(2 pi / 5): order 5, not primitive
  ElementClass c5 = classify_beta(-4 * std::pow(std::sin(2 * kPi / 5), 2));
  CHECK(*c5.order == 5);
  CHECK(*c5.angle_numerator == 2);
  CHECK_FALSE(*c5.primitive);

  ElementClass half = classify_beta(-4.0);
  CHECK(*half.order == 2);
  CHECK(*half.rotation_angle == doctest::Approx(kPi));

  ElementClass irr = classify_beta(-1.0 / std::sqrt(2.0) * 1.234567);
  CHECK_FALSE(irr.order);
}

TEST_CASE("classify_element") {
  CHECK(classify_element(MoebiusMap::identity()).kind == ElementKind::identity);
  CHECK(classify_element(-MoebiusMap::identity()).kind == ElementKind::identity);
  CHECK(classify_element(MoebiusMap::from_entries(1, 1, 0, 1)).kind == ElementKind::parabolic);
  CHECK(classify_element(MoebiusMap::diagonal(2.0)).kind == ElementKind::hyperbolic);
  CHECK(classify_element(MoebiusMap::diagonal(Complex{0, 2})).kind == ElementKind::pi_loxodromic);
  CHECK(classify_element(MoebiusMap::diagonal(std::polar(2.0, 0.3))).kind ==
        ElementKind::strictly_loxodromic);
  ElementClass r = classify_element(rotation(2 * kPi / 7));
  CHECK(*r.order == 7);
  CHECK(*r.primitive);
}

TEST_CASE("rational recognition") {
  auto f = recognize_rational(3.0 / 7.0, 1000, 1e-12);
  REQUIRE(f);
  CHECK(*f == Fraction{3, 7});
  CHECK_FALSE(recognize_rational(std::numbers::sqrt2, 1000, 1e-12));
  CHECK(gcd(12, 18) == 6);
}

TEST_CASE("parameters of a pair and the construction round trip") {
  for (ParamTriple t : {ParamTriple{-3, 1, 0.5}, ParamTriple{-1.38196601125010515, 2.2360679774997897, 0.61803398874989485},
                        ParamTriple{2.5, 3, -1.2}, ParamTriple{-2, -1, 0.3}, ParamTriple{-5, 1, 2}}) {
    GeneratorPair gens = construct_generators(t);
    for (const MoebiusMap& g : {gens.g, gens.g_alternate}) {
      ComplexTriple c = complex_params_of(gens.f, g);
      CHECK(c.beta.real() == doctest::Approx(t.beta).epsilon(1e-12));
      CHECK(c.beta_prime.real() == doctest::Approx(t.beta_prime).epsilon(1e-12));
      CHECK(c.gamma.real() == doctest::Approx(t.gamma).epsilon(1e-10));
      CHECK(std::abs(c.gamma.imag()) < 1e-10);
    }
  }
  CHECK(code_of([] { construct_generators({-3, 1, 0}); }) == ErrorCode::zero_gamma);
}

TEST_CASE("gamma of a non-real pair is rejected") {
  MoebiusMap f = MoebiusMap::from_entries(1, 1, 0, 1);
  MoebiusMap g = MoebiusMap::from_entries(1, 0, Complex{0.3, 0.7}, 1);
  CHECK(code_of([&] { params_of(f, g); }) == ErrorCode::not_real_parameters);
}

TEST_CASE("square roots") {
  auto [s, minus_s] = sqrt_in_psl(MoebiusMap::diagonal(4.0));
  CHECK(std::abs(s.a() - Complex{2}) < 1e-14);
  CHECK(std::abs(s.d() - Complex{0.5}) < 1e-14);
  CHECK(projective_distance(s, minus_s) < 1e-15);

  CHECK(code_of([] { sqrt_in_psl(MoebiusMap::from_entries(-1, 1, 0, -1)); }) ==
        ErrorCode::degenerate_square_root);

  MoebiusMap m = MoebiusMap::from_gl(2, 1, 1, 1);
  auto roots = psl_square_roots(m);
  CHECK(roots.size() == 2);
  for (const MoebiusMap& r : roots) CHECK(projective_distance(r * r, m) < 1e-14);
  CHECK(projective_distance(roots[0], roots[1]) > 0.1);

  auto parabolic = psl_square_roots(MoebiusMap::from_entries(1, 2, 0, 1));
  REQUIRE(parabolic.size() == 1);
  CHECK(std::abs(parabolic[0].b() - Complex{1}) < 1e-14);
}

TEST_CASE("elliptic k-th roots") {
  MoebiusMap m = rotation(2 * kPi / 3);
  auto roots = elliptic_kth_roots(m, 3);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].oriented_angle == doctest::Approx(2 * kPi / 9));
  CHECK(roots[1].oriented_angle == doctest::Approx(8 * kPi / 9));
  CHECK(roots[2].oriented_angle == doctest::Approx(14 * kPi / 9));
  for (const KthRoot& r : roots) CHECK(projective_distance(r.root * r.root * r.root, m) < 1e-14);

  MoebiusMap w = MoebiusMap::from_gl(1, 2, Complex{0, 1}, 3);
  MoebiusMap conj = conjugate(m, w);
  MoebiusMap r = elliptic_root_with_angle(conj, 3, 4 * kPi / 9);
  CHECK(*classify_element(r).rotation_angle == doctest::Approx(4 * kPi / 9));
  CHECK(projective_distance(power(r, 3), conj) < 1e-12);
  CHECK(code_of([&] { elliptic_root_with_angle(conj, 3, 0.5); }) == ErrorCode::branch_ambiguity);
  CHECK(code_of([] { elliptic_kth_roots(MoebiusMap::diagonal(2.0), 2); }) == ErrorCode::not_elliptic);
}

TEST_CASE("primitive normalization") {
  const double beta = -3.6180339887498948;  // -4 sin^2(2pi/5)
  auto pw = recognize_elliptic_beta(beta);
  REQUIRE(pw);
  CHECK(pw->q == 2);
  CHECK(pw->n == 5);
  ParamTriple t = normalize_primitive({beta, 2.0, 1.0}, 2, 5);
  CHECK(t.beta == doctest::Approx(-1.3819660112501052).epsilon(1e-14));
  CHECK(t.gamma == doctest::Approx(0.38196601125010515).epsilon(1e-14));
  CHECK(t.beta_prime == 2.0);
  CHECK(primitive_exponent(2, 5) == 2);  // 2*2 = -1 mod 5
  CHECK(code_of([] { normalize_primitive({-3, 1, 1}, 2, 4); }) ==
        ErrorCode::not_non_primitive_elliptic);

  // The normalized gamma is the one of the actual power f^j.
  GeneratorPair gens = construct_generators({beta, 2.0, 1.0});
  ParamTriple direct = params_of(power(gens.f, 2), gens.g);
  CHECK(direct.beta == doctest::Approx(t.beta).epsilon(1e-12));
  CHECK(direct.gamma == doctest::Approx(t.gamma).epsilon(1e-12));
}

TEST_CASE("fixed points") {
  auto [p, q] = fixed_points(MoebiusMap::from_gl(2, 1, 1, 1));
  // z = (1 +- sqrt 5)/2
  double lo = std::min(p.z.real(), q.z.real()), hi = std::max(p.z.real(), q.z.real());
  CHECK(lo == doctest::Approx((1 - std::sqrt(5.0)) / 2));
  CHECK(hi == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  auto [a, b] = fixed_points(MoebiusMap::diagonal(3.0));
  CHECK((a.infinite != b.infinite));
}

TEST_CASE("words") {
  Word w = parse_word("f^3 g f g^-1");
  REQUIRE(w.size() == 4);
  CHECK(w[0].exponent == 3);
  CHECK(w[3].exponent == -1);
  CHECK(format_word(w) == "f^3 g f g^-1");
  CHECK(word_length(w) == 6);
  CHECK(code_of([] { parse_word("f^ g"); }) == ErrorCode::parse_error);

  MoebiusMap f = rotation(2 * kPi / 5);
  MoebiusMap g = MoebiusMap::from_gl(2, 1, 1, 1);
  Alphabet a{{'f', f}, {'g', g}};
  MoebiusMap direct = f * f * f * g * f * g.inverse();
  CHECK(projective_distance(evaluate(w, a, 1), direct) < 1e-13);
  CHECK(projective_distance(evaluate(parse_word("f^5"), a), MoebiusMap::identity()) < 1e-14);
}

TEST_CASE("conjugation leaves the parameters unchanged") {
  GeneratorPair gens = construct_generators({-3, 1, 0.5});
  MoebiusMap w = MoebiusMap::from_gl(Complex{0.3, 1}, 2, Complex{-1, 0.5}, 1);
  ParamTriple t = params_of(conjugate(gens.f, w), conjugate(gens.g, w));
  CHECK(t.beta == doctest::Approx(-3));
  CHECK(t.beta_prime == doctest::Approx(1));
  CHECK(t.gamma == doctest::Approx(0.5));
}
