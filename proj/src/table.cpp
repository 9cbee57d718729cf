#include "kleinian/table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

#include "kleinian/errors.hpp"
#include "kleinian/rational.hpp"
#include "kleinian/taxonomy.hpp"

namespace kleinian {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt5 = std::sqrt(5.0);

struct Ctx {
  double beta = 0.0;
  double gamma = 0.0;
  RowParams params;
};

using Fn = std::function<double(const Ctx&)>;
using IntCond = std::function<bool(int)>;

enum class Basis { cos_pi, cos_2pi, cos_sq_pi };
enum class Param { n, m, p };

double basis_value(Basis b, int k) {
  switch (b) {
    case Basis::cos_pi: return std::cos(kPi / k);
    case Basis::cos_2pi: return std::cos(2 * kPi / k);
    case Basis::cos_sq_pi: return std::pow(std::cos(kPi / k), 2);
  }
  return 0.0;
}

// Real k with basis_value(k) = y, or nullopt when y is out of range.
std::optional<double> basis_inverse(Basis b, double y) {
  auto angle = [](double c) -> std::optional<double> {
    if (c > 1.0 + 1e-9 || c < -1.0 - 1e-9) return std::nullopt;
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  std::optional<double> a;
  double numer = kPi;
  switch (b) {
    case Basis::cos_pi: a = angle(y); break;
    case Basis::cos_2pi: a = angle(y); numer = 2 * kPi; break;
    case Basis::cos_sq_pi:
      if (y < -1e-9) return std::nullopt;
      a = angle(std::sqrt(std::max(0.0, y)));
      break;
  }
  if (!a) return std::nullopt;
  if (*a <= 0.0) return std::numeric_limits<double>::infinity();
  return numer / *a;
}

std::optional<int>& slot(RowParams& p, Param which) {
  switch (which) {
    case Param::n: return p.n;
    case Param::m: return p.m;
    case Param::p: return p.p;
  }
  return p.n;
}

int cap_for(const EnumCaps& caps, Param which) {
  switch (which) {
    case Param::n: return caps.max_n;
    case Param::m: return caps.max_m;
    case Param::p: return caps.max_p;
  }
  return caps.max_n;
}

struct Exact {
  Fn value;
  std::optional<int> implied_n;
};

struct Family {
  Fn offset;
  Fn slope;
  Basis basis;
  Param param;
  int min;
  IntCond cond;
};

// [lo, +oo) when upward, else (-oo, lo].
struct Interval {
  Fn lo;
  bool closed = true;
  bool upward = true;
};

using Form = std::variant<Exact, Family, Interval>;

struct RowSpec {
  int index = 0;
  Form beta;
  Form gamma;
  Form beta_prime;
  std::function<bool(const Ctx&)> joint;
  RowInfo info;
};

bool close(double x, double target, double eps) {
  return std::abs(x - target) <= eps * std::max(1.0, std::abs(target));
}

bool odd(int k) { return k % 2 != 0; }
bool even(int k) { return k % 2 == 0; }
bool coprime3(int k) { return k % 3 != 0; }
double cos_pi_over(int k) { return std::cos(kPi / k); }

// -4 sin^2(pi/n) written as 4 cos^2(pi/n) - 4.
Form elliptic_beta(int min_n, IntCond cond) {
  return Family{[](const Ctx&) { return -4.0; }, [](const Ctx&) { return 4.0; }, Basis::cos_sq_pi,
                Param::n, min_n, std::move(cond)};
}

Form constant(double v, std::optional<int> implied_n = std::nullopt) {
  return Exact{[v](const Ctx&) { return v; }, implied_n};
}

Form exact(Fn f) { return Exact{std::move(f), std::nullopt}; }

Form upward_from(Fn lo, bool closed = true) { return Interval{std::move(lo), closed, true}; }

// 2(cos(2pi/m) + cos(2pi/n)) with a parity condition on m.
Form gamma_m_n(bool m_even) {
  return Family{[](const Ctx& c) { return 2.0 * std::cos(2 * kPi / *c.params.n); },
                [](const Ctx&) { return 2.0; }, Basis::cos_2pi, Param::m, 1,
                m_even ? IntCond(even) : IntCond(odd)};
}

// -4 cos^2(pi/p), p >= min.
Form gamma_neg_cos_sq(int min_p) {
  return Family{[](const Ctx&) { return 0.0; }, [](const Ctx&) { return -4.0; }, Basis::cos_sq_pi,
                Param::p, min_p, [](int) { return true; }};
}

Form minus_four_or_less() {
  return Interval{[](const Ctx&) { return -4.0; }, true, false};
}

bool small_angle_sum(const Ctx& c) { return 1.0 / *c.params.n + 1.0 / *c.params.m < 0.5; }

double n_of(const Ctx& c) { return static_cast<double>(*c.params.n); }

int implied_n_of_beta(double beta) {
  if (beta == -3.0) return 3;
  if (beta == -2.0) return 4;
  return 5;
}

RowSpec make_row(int index, Form beta, Form gamma, Form beta_prime,
                 std::function<bool(const Ctx&)> joint, RowInfo info) {
  info.row = index;
  return {index, std::move(beta), std::move(gamma), std::move(beta_prime), std::move(joint),
          std::move(info)};
}

std::vector<RowSpec> build_rows(TableEdition edition) {
  const auto any = [](int) { return true; };
  const auto none = [](const Ctx&) { return true; };
  const std::string both_elliptic = "both elliptic, mutually orthogonal skew axes";
  const std::string ell_par = "f elliptic, g parabolic, axis of f in an invariant plane of g";
  const std::string par_hyp = "f, g parabolic or hyperbolic with mutually orthogonal invariant planes";
  const std::string ell_hyp_disjoint = "f elliptic, g hyperbolic, disjoint axes";
  const std::string even_n = "f elliptic of even order n, g hyperbolic, axes meet non-orthogonally";
  const std::string odd_n = "f elliptic of odd order n, g hyperbolic, axes meet non-orthogonally";
  const std::string ell_n = "-4sin^2(pi/n)";

  auto U = [](const Ctx& c) { return u_term(c.beta, c.gamma, *c.params.n); };
  auto V = [edition](const Ctx& c) { return v_term(c.beta, *c.params.n, edition); };

  std::vector<RowSpec> rows;
  rows.push_back(make_row(
      1, elliptic_beta(3, any), gamma_neg_cos_sq(2),
      Family{[](const Ctx&) { return -4.0; }, [](const Ctx&) { return 4.0; }, Basis::cos_sq_pi,
             Param::m, 3, any},
      [](const Ctx& c) {
        return cos_pi_over(*c.params.p) >
               std::sin(kPi / *c.params.n) * std::sin(kPi / *c.params.m);
      },
      {0, both_elliptic, ell_n + ", n>=3", "-4cos^2(pi/p), cos(pi/p) > sin(pi/n)sin(pi/m)",
       "-4sin^2(pi/m), m>=3", std::nullopt}));
  rows.push_back(make_row(
      2, elliptic_beta(3, any), minus_four_or_less(),
      Family{[](const Ctx&) { return -4.0; }, [](const Ctx&) { return 4.0; }, Basis::cos_sq_pi,
             Param::m, 3, any},
      none, {0, both_elliptic, ell_n + ", n>=3", "(-inf, -4]", "-4sin^2(pi/m), m>=3", {}}));
  rows.push_back(make_row(
      3, elliptic_beta(7, odd), exact([](const Ctx& c) { return -std::pow(c.beta + 2, 2); }),
      exact([](const Ctx& c) { return c.beta; }), none,
      {0, both_elliptic, ell_n + ", n>=7 odd", "-(beta+2)^2", "beta", {}}));
  rows.push_back(make_row(4, elliptic_beta(3, any), gamma_neg_cos_sq(3), constant(0.0), none,
                          {0, ell_par, ell_n + ", n>=3", "-4cos^2(pi/p), p>=3", "0", {}}));
  rows.push_back(make_row(5, elliptic_beta(3, any), minus_four_or_less(), constant(0.0), none,
                          {0, ell_par, ell_n + ", n>=3", "(-inf, -4]", "0", {}}));
  rows.push_back(make_row(6, upward_from([](const Ctx&) { return 0.0; }), gamma_neg_cos_sq(3),
                          upward_from([](const Ctx&) { return 0.0; }), none,
                          {0, par_hyp, "[0, +inf)", "-4cos^2(pi/p), p>=3", "[0, +inf)", {}}));
  rows.push_back(make_row(7, upward_from([](const Ctx&) { return 0.0; }), minus_four_or_less(),
                          upward_from([](const Ctx&) { return 0.0; }), none,
                          {0, par_hyp, "[0, +inf)", "(-inf, -4]", "[0, +inf)", {}}));
  rows.push_back(make_row(8, elliptic_beta(3, any), gamma_neg_cos_sq(3),
                          upward_from([](const Ctx&) { return 0.0; }, false), none,
                          {0, ell_hyp_disjoint, ell_n + ", n>=3", "-4cos^2(pi/p), p>=3",
                           "(0, +inf)", {}}));
  rows.push_back(make_row(9, elliptic_beta(3, any), minus_four_or_less(),
                          upward_from([](const Ctx&) { return 0.0; }, false), none,
                          {0, ell_hyp_disjoint, ell_n + ", n>=3", "(-inf, -4]", "(0, +inf)", {}}));
  rows.push_back(make_row(
      10, elliptic_beta(5, odd), exact([](const Ctx& c) { return -std::pow(c.beta + 2, 2); }),
      Family{[](const Ctx&) { return -4.0; }, [](const Ctx& c) { return 4 * (c.beta + 4); },
             Basis::cos_sq_pi, Param::p, 4, any},
      none,
      {0, ell_hyp_disjoint, ell_n + ", n>=5 odd", "-(beta+2)^2", "4(beta+4)cos^2(pi/p)-4, p>=4",
       {}}));
  rows.push_back(make_row(
      11, elliptic_beta(5, odd), exact([](const Ctx& c) { return -std::pow(c.beta + 2, 2); }),
      upward_from([](const Ctx& c) { return 4 * (c.beta + 3); }), none,
      {0, ell_hyp_disjoint, ell_n + ", n>=5 odd", "-(beta+2)^2", "[4(beta+3), +inf)", {}}));
  rows.push_back(make_row(
      12, constant(-3.0, 3), constant((kSqrt5 - 3) / 2),
      Family{[](const Ctx&) { return -4.0; }, [](const Ctx&) { return 2 * (7 + 3 * kSqrt5); },
             Basis::cos_sq_pi, Param::p, 3, any},
      none,
      {0, ell_hyp_disjoint, "-3", "(sqrt5-3)/2", "2cos^2(pi/p)(7+3sqrt5)-4, p>=3", {}}));
  rows.push_back(make_row(13, constant(-3.0, 3), constant((kSqrt5 - 3) / 2),
                          upward_from([](const Ctx&) { return 2 * (5 + 3 * kSqrt5); }), none,
                          {0, ell_hyp_disjoint, "-3", "(sqrt5-3)/2", "[2(5+3sqrt5), +inf)", {}}));

  Family p_over_gamma{[](const Ctx& c) { return -4 * c.gamma / c.beta; },
                      [](const Ctx& c) { return 4 / c.gamma; }, Basis::cos_sq_pi, Param::p, 3, any};
  auto p_over_gamma_floor = [](const Ctx& c) { return 4 / c.gamma - 4 * c.gamma / c.beta; };
  Form gamma_above = upward_from([](const Ctx& c) { return c.beta + 4; });
  const std::string bp14 = "4cos^2(pi/p)/gamma - 4gamma/beta, p>=3";
  const std::string bp15 = "[4/gamma - 4gamma/beta, +inf)";
  rows.push_back(make_row(14, elliptic_beta(4, even), gamma_m_n(true), p_over_gamma,
                          small_angle_sum,
                          {0, even_n, ell_n + ", n>=4", "2(cos(2pi/m)+cos(2pi/n)), m even", bp14, {}}));
  rows.push_back(make_row(15, elliptic_beta(4, even), gamma_m_n(true),
                          upward_from(p_over_gamma_floor), small_angle_sum,
                          {0, even_n, ell_n + ", n>=4", "2(cos(2pi/m)+cos(2pi/n)), m even", bp15, {}}));
  rows.push_back(make_row(16, elliptic_beta(4, even), gamma_above, p_over_gamma, none,
                          {0, even_n, ell_n + ", n>=4", "[beta+4, +inf)", bp14, {}}));
  rows.push_back(make_row(17, elliptic_beta(4, even), gamma_above, upward_from(p_over_gamma_floor),
                          none, {0, even_n, ell_n + ", n>=4", "[beta+4, +inf)", bp15, {}}));
  rows.push_back(make_row(
      18, elliptic_beta(4, even), gamma_m_n(false),
      Family{[](const Ctx& c) { return -4 * c.gamma / c.beta; },
             [](const Ctx& c) { return 4 * (c.gamma - c.beta) / c.gamma; }, Basis::cos_sq_pi,
             Param::p, 3, any},
      small_angle_sum,
      {0, even_n, ell_n + ", n>=4", "2(cos(2pi/m)+cos(2pi/n)), m odd",
       "4(gamma-beta)/gamma cos^2(pi/p) - 4gamma/beta, p>=3", {}}));
  rows.push_back(make_row(
      19, elliptic_beta(4, even), gamma_m_n(false),
      upward_from([](const Ctx& c) {
        return 4 * (c.gamma - c.beta) / c.gamma - 4 * c.gamma / c.beta;
      }),
      small_angle_sum,
      {0, even_n, ell_n + ", n>=4", "2(cos(2pi/m)+cos(2pi/n)), m odd",
       "[4(gamma-beta)/gamma - 4gamma/beta, +inf)", {}}));
  rows.push_back(make_row(
      20, constant(-2.0, 4),
      Family{[](const Ctx&) { return 0.0; }, [](const Ctx&) { return 2.0; }, Basis::cos_2pi,
             Param::m, 5, odd},
      exact([](const Ctx& c) { return c.gamma * c.gamma + 4 * c.gamma; }), none,
      {0, even_n, "-2", "2cos(2pi/m), m>=5 odd", "gamma^2+4gamma", {}}));

  Family p_family{[U](const Ctx& c) { return U(c) - 2 * std::cos(kPi / n_of(c)) / c.gamma; },
                  [](const Ctx& c) { return 2 / c.gamma; }, Basis::cos_pi, Param::p, 2, any};
  auto p_floor = [U](const Ctx& c) { return 2 * (1 - std::cos(kPi / n_of(c))) / c.gamma + U(c); };
  const std::string bp21 = "(2/gamma)(cos(pi/p)-cos(pi/n)) + U, p>=2";
  const std::string bp22 = "[2(1-cos(pi/n))/gamma + U, +inf)";
  const std::string g21 = "2(cos(2pi/m)+cos(2pi/n)), m even";
  const std::string g25 = "2(cos(2pi/m)+cos(2pi/n)), m odd";
  rows.push_back(make_row(21, elliptic_beta(3, odd), gamma_m_n(true), p_family, small_angle_sum,
                          {0, odd_n, ell_n + ", n>=3", g21, bp21, Clause::i}));
  rows.push_back(make_row(22, elliptic_beta(3, odd), gamma_m_n(true), upward_from(p_floor),
                          small_angle_sum, {0, odd_n, ell_n + ", n>=3", g21, bp22, Clause::i}));
  rows.push_back(make_row(23, elliptic_beta(3, odd), gamma_above, p_family, none,
                          {0, odd_n, ell_n + ", n>=3", "[beta+4, +inf)", bp21, Clause::i}));
  rows.push_back(make_row(24, elliptic_beta(3, odd), gamma_above, upward_from(p_floor), none,
                          {0, odd_n, ell_n + ", n>=3", "[beta+4, +inf)", bp22, Clause::i}));
  rows.push_back(make_row(
      25, elliptic_beta(3, odd), gamma_m_n(false),
      Family{U, [](const Ctx& c) { return 2 * (c.gamma - c.beta) / c.gamma; }, Basis::cos_pi,
             Param::p, 2, any},
      small_angle_sum,
      {0, odd_n, ell_n + ", n>=3", g25, "2(gamma-beta)/gamma cos(pi/p) + U, p>=2", Clause::v}));
  rows.push_back(make_row(
      26, elliptic_beta(3, odd), gamma_m_n(false),
      upward_from([U](const Ctx& c) { return 2 * (c.gamma - c.beta) / c.gamma + U(c); }),
      small_angle_sum,
      {0, odd_n, ell_n + ", n>=3", g25, "[2(gamma-beta)/gamma + U, +inf)", Clause::v}));

  Form gamma27 = exact([](const Ctx& c) { return (c.beta + 4) * (c.beta + 1); });
  rows.push_back(make_row(
      27, elliptic_beta(7, odd), gamma27,
      Family{V, [](const Ctx& c) { return 2 * std::pow(c.beta + 2, 2) / (c.beta + 1); },
             Basis::cos_pi, Param::p, 2, any},
      none,
      {0, odd_n, ell_n + ", n>=7", "(beta+4)(beta+1)",
       "2(beta+2)^2 cos(pi/p)/(beta+1) + V, p>=2", Clause::vii}));
  rows.push_back(make_row(
      28, elliptic_beta(7, odd), gamma27,
      upward_from([V](const Ctx& c) { return 2 * std::pow(c.beta + 2, 2) / (c.beta + 1) + V(c); }),
      none,
      {0, odd_n, ell_n + ", n>=7", "(beta+4)(beta+1)", "[2(beta+2)^2/(beta+1) + V, +inf)",
       Clause::vii}));
  auto odd_coprime3 = [](int k) { return odd(k) && coprime3(k); };
  rows.push_back(make_row(
      29, elliptic_beta(5, odd_coprime3), exact([](const Ctx& c) { return c.beta + 3; }),
      exact([](const Ctx& c) {
        return 2 * ((c.beta - 3) * std::cos(kPi / n_of(c)) - 2 * c.beta - 3) / c.beta;
      }),
      none,
      {0, odd_n, ell_n + ", n>=5, (n,3)=1", "beta+3", "2((beta-3)cos(pi/n) - 2beta - 3)/beta",
       Clause::ii}));
  rows.push_back(make_row(
      30, elliptic_beta(5, odd_coprime3), exact([](const Ctx& c) { return 2 * (c.beta + 3); }),
      exact([](const Ctx& c) { return -6 * (2 * std::cos(kPi / n_of(c)) + c.beta + 2) / c.beta; }),
      none,
      {0, odd_n, ell_n + ", n>=5, (n,3)=1", "2(beta+3)", "-6(2cos(pi/n) + beta + 2)/beta",
       Clause::iv}));
  const double row31_constant = edition == TableEdition::corrected ? 3.0 : 2.0;
  rows.push_back(make_row(
      31, constant(-3.0, 3),
      Family{[](const Ctx&) { return -1.0; }, [](const Ctx&) { return 2.0; }, Basis::cos_2pi,
             Param::m, 7, odd},
      exact([row31_constant](const Ctx& c) {
        return 2 * (c.gamma * c.gamma + 2 * c.gamma + row31_constant) / c.gamma;
      }),
      none,
      {0, odd_n, "-3", "2cos(2pi/m)-1, m>=7 odd",
       edition == TableEdition::corrected ? "2(gamma^2+2gamma+3)/gamma" : "2(gamma^2+2gamma+2)/gamma",
       Clause::vi}));
  rows.push_back(make_row(
      32, constant(-3.0, 3),
      Family{[](const Ctx&) { return -1.0; }, [](const Ctx&) { return 2.0; }, Basis::cos_pi,
             Param::m, 4, coprime3},
      exact([](const Ctx& c) { return c.gamma * c.gamma + 4 * c.gamma; }), none,
      {0, odd_n, "-3", "2cos(pi/m)-1, m>=4, (m,3)=1", "gamma^2+4gamma", Clause::ii}));
  rows.push_back(make_row(
      33, constant(-3.0, 3),
      Family{[](const Ctx&) { return 0.0; }, [](const Ctx&) { return 2.0; }, Basis::cos_2pi,
             Param::m, 7, [](int m) { return gcd(m, 4) <= 2; }},
      exact([](const Ctx& c) { return 2 * c.gamma; }), none,
      {0, odd_n, "-3", "2cos(2pi/m), m>=7, (m,4)<=2", "2gamma", Clause::iii}));

  struct Sporadic {
    int row;
    double beta;
    double gamma;
    double beta_prime;
    const char* beta_text;
    const char* gamma_text;
    const char* beta_prime_text;
    Clause clause;
  };
  const double b5 = (kSqrt5 - 5) / 2;
  const bool corrected = edition == TableEdition::corrected;
  const Sporadic sporadic[] = {
      {34, -3, (kSqrt5 + 1) / 2, kSqrt5, "-3", "(sqrt5+1)/2", "sqrt5", Clause::iii},
      {35, -3, (kSqrt5 - 1) / 2, kSqrt5, "-3", "(sqrt5-1)/2", "sqrt5", Clause::ii},
      {36, -3, (kSqrt5 - 1) / 2, kSqrt5 - 1, "-3", "(sqrt5-1)/2", "sqrt5-1", Clause::ii},
      {37, b5, (kSqrt5 - 1) / 2, kSqrt5, "(sqrt5-5)/2", "(sqrt5-1)/2", "sqrt5", Clause::ii},
      {38, b5, (kSqrt5 - 1) / 2, (3 * kSqrt5 - 1) / 2, "(sqrt5-5)/2", "(sqrt5-1)/2",
       "(3sqrt5-1)/2", Clause::ii},
      {39, b5, (kSqrt5 - 1) / 2, 3 * (kSqrt5 + 1) / 2, "(sqrt5-5)/2", "(sqrt5-1)/2",
       "3(sqrt5+1)/2", Clause::ii},
      {40, b5, (kSqrt5 + 1) / 2, 3 * (kSqrt5 + 1) / 2, "(sqrt5-5)/2", "(sqrt5+1)/2",
       "3(sqrt5+1)/2", Clause::ii},
      {41, b5, kSqrt5 + 2, corrected ? (7 * kSqrt5 + 9) / 2 : (5 * kSqrt5 + 9) / 2, "(sqrt5-5)/2",
       "sqrt5+2", corrected ? "(7sqrt5+9)/2" : "(5sqrt5+9)/2", Clause::iv},
  };
  for (const Sporadic& s : sporadic) {
    rows.push_back(make_row(s.row, constant(s.beta, implied_n_of_beta(s.beta)), constant(s.gamma),
                            constant(s.beta_prime), none,
                            {0, odd_n, s.beta_text, s.gamma_text, s.beta_prime_text, s.clause}));
  }
  return rows;
}

const std::vector<RowSpec>& rows_for(TableEdition edition) {
  static const std::vector<RowSpec> corrected = build_rows(TableEdition::corrected);
  static const std::vector<RowSpec> printed = build_rows(TableEdition::as_printed);
  return edition == TableEdition::corrected ? corrected : printed;
}

const RowSpec& spec_for(int row, TableEdition edition) {
  if (row < 1 || row > kRowCount) throw Error(ErrorCode::invalid_row, std::to_string(row));
  return rows_for(edition)[row - 1];
}

// Solutions of form == x, extending ctx.
std::vector<Ctx> solve(const Form& form, double x, const Ctx& ctx, const EnumCaps& caps,
                       const Tolerances& tol) {
  std::vector<Ctx> out;
  if (const auto* e = std::get_if<Exact>(&form)) {
    if (close(x, e->value(ctx), tol.eps_match)) {
      Ctx next = ctx;
      if (e->implied_n) next.params.n = e->implied_n;
      out.push_back(next);
    }
  } else if (const auto* f = std::get_if<Family>(&form)) {
    const double slope = f->slope(ctx);
    const double offset = f->offset(ctx);
    if (slope == 0.0 || !std::isfinite(slope) || !std::isfinite(offset)) return out;
    auto k_real = basis_inverse(f->basis, (x - offset) / slope);
    const int cap = cap_for(caps, f->param);
    if (!k_real || !(*k_real < cap + 2.0)) return out;
    const int center = static_cast<int>(std::lround(*k_real));
    for (int k = std::max(f->min, center - 1); k <= std::min(cap, center + 1); ++k) {
      if (!f->cond(k)) continue;
      if (!close(x, offset + slope * basis_value(f->basis, k), tol.eps_match)) continue;
      Ctx next = ctx;
      slot(next.params, f->param) = k;
      out.push_back(next);
    }
  } else {
    const auto& iv = std::get<Interval>(form);
    const double lo = iv.lo(ctx);
    const double slack = tol.eps_match * std::max(1.0, std::abs(lo));
    bool inside;
    if (iv.upward) inside = iv.closed ? x >= lo - slack : x > lo + slack;
    else inside = iv.closed ? x <= lo + slack : x < lo - slack;
    if (inside) out.push_back(ctx);
  }
  return out;
}

struct Emitted {
  double value;
  Ctx ctx;
  std::optional<double> offset;
};

std::vector<Emitted> expand(const Form& form, const Ctx& ctx, const EnumCaps& caps) {
  std::vector<Emitted> out;
  if (const auto* e = std::get_if<Exact>(&form)) {
    Ctx next = ctx;
    if (e->implied_n) next.params.n = e->implied_n;
    out.push_back({e->value(ctx), next, std::nullopt});
  } else if (const auto* f = std::get_if<Family>(&form)) {
    for (int k = f->min; k <= cap_for(caps, f->param); ++k) {
      if (!f->cond(k)) continue;
      Ctx next = ctx;
      slot(next.params, f->param) = k;
      out.push_back({f->offset(ctx) + f->slope(ctx) * basis_value(f->basis, k), next, std::nullopt});
    }
  } else {
    const auto& iv = std::get<Interval>(form);
    const double lo = iv.lo(ctx);
    for (double off : caps.interval_offsets) {
      if (off == 0.0 && !iv.closed) continue;
      out.push_back({iv.upward ? lo + off : lo - off, ctx, off});
    }
  }
  return out;
}

}  // namespace

const char* to_string(Clause c) {
  switch (c) {
    case Clause::i: return "i";
    case Clause::ii: return "ii";
    case Clause::iii: return "iii";
    case Clause::iv: return "iv";
    case Clause::v: return "v";
    case Clause::vi: return "vi";
    case Clause::vii: return "vii";
  }
  return "?";
}

std::optional<Clause> clause_from_string(std::string_view s) {
  for (Clause c : kAllClauses)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

const char* to_string(TableEdition e) {
  return e == TableEdition::corrected ? "corrected" : "printed";
}

std::optional<TableEdition> edition_from_string(std::string_view s) {
  if (s == "corrected") return TableEdition::corrected;
  if (s == "printed" || s == "as_printed") return TableEdition::as_printed;
  return std::nullopt;
}

void EnumCaps::validate() const {
  if (max_n < 2 || max_m < 2 || max_p < 2)
    throw Error(ErrorCode::invalid_config, "caps must be at least 2");
  for (double o : interval_offsets)
    if (!(o >= 0) || !std::isfinite(o))
      throw Error(ErrorCode::invalid_config, "interval offsets must be finite and non-negative");
}

double u_term(double beta, double gamma, int n) {
  const double c = std::cos(kPi / n);
  return -2 * ((gamma - beta) * (gamma - beta) * c + gamma * (gamma + beta)) / (gamma * beta);
}

double v_term(double beta, int n, TableEdition edition) {
  const double c = std::cos(kPi / n);
  const double lead = (beta + 2) * (beta + 2) * c / (beta + 1);
  const double tail = beta * beta + 6 * beta + 4;
  if (edition == TableEdition::as_printed) return -2 * lead - 2 * tail / beta;
  return -2 * (lead + tail) / beta;
}

RowInfo row_info(int row, TableEdition edition) { return spec_for(row, edition).info; }

std::vector<RowMatch> match_row(int row, const ParamTriple& t, const EnumCaps& caps,
                                const Tolerances& tol, TableEdition edition) {
  const RowSpec& spec = spec_for(row, edition);
  std::vector<RowMatch> out;
  Ctx start;
  for (Ctx c1 : solve(spec.beta, t.beta, start, caps, tol)) {
    c1.beta = t.beta;
    for (Ctx c2 : solve(spec.gamma, t.gamma, c1, caps, tol)) {
      c2.gamma = t.gamma;
      for (const Ctx& c3 : solve(spec.beta_prime, t.beta_prime, c2, caps, tol)) {
        if (!spec.joint(c3)) continue;
        out.push_back({row, c3.params, false});
      }
    }
  }
  return out;
}

std::vector<RowMatch> match_table(const ParamTriple& t, const EnumCaps& caps, const Tolerances& tol,
                                  TableEdition edition) {
  std::vector<RowMatch> out;
  if (!std::isfinite(t.beta) || !std::isfinite(t.beta_prime) || !std::isfinite(t.gamma)) return out;
  for (int row = 1; row <= kRowCount; ++row) {
    auto hits = match_row(row, t, caps, tol, edition);
    out.insert(out.end(), hits.begin(), hits.end());
  }
  return out;
}

std::vector<RowSample> enumerate_row(int row, const EnumCaps& caps, TableEdition edition) {
  const RowSpec& spec = spec_for(row, edition);
  std::vector<RowSample> out;
  Ctx start;
  for (const Emitted& b : expand(spec.beta, start, caps)) {
    Ctx c1 = b.ctx;
    c1.beta = b.value;
    for (const Emitted& g : expand(spec.gamma, c1, caps)) {
      Ctx c2 = g.ctx;
      c2.gamma = g.value;
      for (const Emitted& bp : expand(spec.beta_prime, c2, caps)) {
        if (!spec.joint(bp.ctx)) continue;
        RowSample s;
        s.row = row;
        s.params = bp.ctx.params;
        s.triple = {b.value, bp.value, g.value};
        for (const Emitted* e : {&b, &g, &bp})
          if (e->offset) s.offsets.push_back(*e->offset);
        if (!std::isfinite(s.triple.beta) || !std::isfinite(s.triple.beta_prime) ||
            !std::isfinite(s.triple.gamma))
          continue;
        if (s.sampled() && classify_pair(s.triple).kind != SpaceKind::truly_spatial) continue;
        out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RowSample& a, const RowSample& b) {
    if (a.params != b.params) return a.params < b.params;
    return a.offsets < b.offsets;
  });
  return out;
}

}  // namespace kleinian
