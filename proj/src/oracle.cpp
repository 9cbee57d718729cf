#include "kleinian/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kleinian/errors.hpp"

namespace kleinian {

namespace {


bool hyp_or_par(const ElementClass& c) {
  return c.kind == ElementKind::hyperbolic || c.kind == ElementKind::parabolic;
}

// Order of a primitive elliptic class, else nullopt.
std::optional<int> primitive_order(const ElementClass& c) {
  if (c.kind != ElementKind::elliptic || !c.order || !c.primitive.value_or(false)) return std::nullopt;
  return *c.order;
}

// x with rotation angle pi/x.
std::optional<Fraction> pi_over(const ElementClass& c) {
  auto r = angle_over_pi(c);
  if (!r) return std::nullopt;
  return Fraction{r->den, r->num};
}

// Integer k with rotation angle 4 pi / k.
std::optional<int> four_pi_over(const ElementClass& c) {
  auto r = angle_over_pi(c);
  if (!r || (4 * r->den) % r->num != 0) return std::nullopt;
  return static_cast<int>(4 * r->den / r->num);
}

std::string describe(const ElementClass& c) {
  std::ostringstream os;
  os << to_string(c.kind);
  if (c.kind == ElementKind::elliptic) {
    if (auto r = angle_over_pi(c)) os << " angle " << r->num << "pi/" << r->den;
    else os << " angle " << c.rotation_angle.value_or(0.0) << " (not rational)";
  }
  return os.str();
}

bool same(const Fraction& x, long long num, long long den) {
  long long g = gcd(num, den);
  return x.num == num / g && x.den == den / g;
}

bool clause_ii_triple(int n, const Fraction& m, const Fraction& l) {
  struct Fixed {
    int n;
    long long m_num, m_den, l_num, l_den;
  };
  constexpr Fixed fixed[] = {{5, 2, 1, 5, 2}, {3, 5, 1, 3, 2}, {5, 2, 1, 5, 3},
                             {3, 5, 1, 5, 4}, {5, 3, 1, 5, 4}, {5, 2, 1, 3, 2}};
  for (const Fixed& t : fixed)
    if (n == t.n && same(m, t.m_num, t.m_den) && same(l, t.l_num, t.l_den)) return true;
  // {3, m, m/3}, m >= 4, (m,3) = 1
  if (n == 3 && m.is_integer() && m.num >= 4 && m.num % 3 != 0 && same(l, m.num, 3)) return true;
  // {n, 3, n/3}, n >= 5, (n,3) = 1
  if (n >= 5 && n % 3 != 0 && same(m, 3, 1) && same(l, n, 3)) return true;
  return false;
}

ParamTriple swapped(const ParamTriple& t) { return {t.beta_prime, t.beta, t.gamma}; }

}  // namespace

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::discrete: return "discrete";
    case VerdictStatus::not_discrete: return "not_discrete";
    case VerdictStatus::out_of_scope: return "out_of_scope";
  }
  return "unknown";
}

const char* clause_summary(Clause c) {
  switch (c) {
    case Clause::i:
      return "h1 hyperbolic, parabolic or primitive of order 2m with 2/n + 1/m < 1; "
             "h2 hyperbolic, parabolic or primitive of order 2l with l >= 2";
    case Clause::ii:
      return "h1, h2 rotate by pi/m, pi/l with (n, m, l) among {5,2,5/2}, {3,m,m/3} (m >= 4, "
             "(m,3)=1), {n,3,n/3} (n >= 5, (n,3)=1), {3,5,3/2}, {5,2,5/3}, {3,5,5/4}, {5,3,5/4}, "
             "{5,2,3/2}";
    case Clause::iii:
      return "n = 3, h1 hyperbolic, h2 rotates by 4pi/k, h2 gfg^-1 primitive of order p; "
             "(k, p) = (6, 5) or (k, 3) with k >= 7, gcd(k, 4) <= 2";
    case Clause::iv:
      return "h1 hyperbolic, h2 = t^3 with t primitive of order 2n, t^2 gfg^-1 rotates by 4pi/k; "
             "(n, k) = (5, 5) or (n, 4) with n >= 5, (n,3)=1";
    case Clause::v:
      return "h1 primitive of odd order m with 1/n + 1/m < 1/2; "
             "h3 hyperbolic, parabolic or primitive of order 2k with k >= 2";
    case Clause::vi:
      return "n = 3, h1 and h3 primitive of the same odd order m >= 7";
    case Clause::vii:
      return "h1 = t^2 with t primitive of order n >= 7; "
             "h4 hyperbolic, parabolic or primitive of even order >= 4";
  }
  return "";
}

std::optional<Fraction> angle_over_pi(const ElementClass& c) {
  if (c.kind != ElementKind::elliptic || !c.order || !c.angle_numerator) return std::nullopt;
  long long num = 2LL * *c.angle_numerator, den = *c.order;
  long long g = gcd(num, den);
  return Fraction{num / g, den / g};
}

ClauseReport check_witness_clauses(const MoebiusMap& f, const MoebiusMap& g, const WitnessSet& w,
                                   const Tolerances& tol) {
  ClauseReport out;
  const int n = w.n;
  const ElementClass& c1 = w.h1.cls;
  const ElementClass& c2 = w.h2.cls;
  const MoebiusMap gfg = g * f * g.inverse();
  auto record = [&](Clause c, bool ok, const std::string& why) {
    if (ok) {
      out.satisfied.push_back(c);
      if (!out.first) out.first = c;
    } else {
      out.notes.push_back(std::string(to_string(c)) + ": " + why);
    }
  };

  {  // (i)
    auto o1 = primitive_order(c1);
    bool h1_ok = hyp_or_par(c1) ||
                 (o1 && *o1 % 2 == 0 && 2.0 / n + 2.0 / *o1 < 1.0 - 1e-12);
    auto o2 = primitive_order(c2);
    bool h2_ok = hyp_or_par(c2) || (o2 && *o2 % 2 == 0 && *o2 >= 4);
    record(Clause::i, h1_ok && h2_ok, "h1 " + describe(c1) + ", h2 " + describe(c2));
  }
  {  // (ii)
    auto m = pi_over(c1), l = pi_over(c2);
    record(Clause::ii, m && l && clause_ii_triple(n, *m, *l),
           "h1 " + describe(c1) + ", h2 " + describe(c2));
  }
  {  // (iii)
    bool ok = false;
    std::string why = "needs n = 3 and hyperbolic h1";
    if (n == 3 && c1.kind == ElementKind::hyperbolic) {
      auto k = four_pi_over(c2);
      ElementClass cp = classify_element((w.h2.element * gfg).renormalized(), tol);
      auto p = primitive_order(cp);
      why = "h2 " + describe(c2) + ", h2*gfg^-1 " + describe(cp);
      if (k && p) ok = (*k == 6 && *p == 5) || (*k >= 7 && *p == 3 && gcd(*k, 4) <= 2);
    }
    record(Clause::iii, ok, why);
  }
  {  // (iv)
    bool ok = false;
    std::string why = "needs hyperbolic h1 and h2 of angle 3pi/n";
    if (c1.kind == ElementKind::hyperbolic && w.tilde_h2) {
      const MoebiusMap& t2 = w.tilde_h2->element;
      ElementClass cq = classify_element((t2 * t2 * gfg).renormalized(), tol);
      auto k = four_pi_over(cq);
      auto order_t2 = primitive_order(w.tilde_h2->cls);
      why = "cube-root companion " + describe(cq);
      if (k && order_t2 && *order_t2 == 2 * n)
        ok = (n == 5 && *k == 5) || (n >= 5 && n % 3 != 0 && *k == 4);
    }
    record(Clause::iv, ok, why);
  }
  {  // (v)
    bool ok = false;
    std::string why = "h1 " + describe(c1);
    auto o1 = primitive_order(c1);
    if (o1 && *o1 % 2 == 1 && 1.0 / n + 1.0 / *o1 < 0.5 - 1e-12 && w.h3) {
      const ElementClass& c3 = w.h3->cls;
      auto o3 = primitive_order(c3);
      ok = hyp_or_par(c3) || (o3 && *o3 % 2 == 0 && *o3 >= 4);
      why += ", h3 " + describe(c3);
    }
    record(Clause::v, ok, why);
  }
  {  // (vi)
    bool ok = false;
    std::string why = "needs n = 3 and elliptic h1, h3";
    auto o1 = primitive_order(c1);
    if (n == 3 && o1 && w.h3) {
      auto o3 = primitive_order(w.h3->cls);
      ok = o3 && *o3 == *o1 && *o1 >= 7 && *o1 % 2 == 1;
      why = "h1 " + describe(c1) + ", h3 " + describe(w.h3->cls);
    }
    record(Clause::vi, ok, why);
  }
  {  // (vii)
    bool ok = false;
    std::string why = "needs n >= 7 and h1 of angle 4pi/n";
    if (n >= 7 && w.tilde_h1 && w.h4) {
      auto ot = primitive_order(w.tilde_h1->cls);
      const ElementClass& c4 = w.h4->cls;
      auto o4 = primitive_order(c4);
      ok = ot && *ot == n && (hyp_or_par(c4) || (o4 && *o4 % 2 == 0 && *o4 >= 4));
      why = "h4 " + describe(c4);
    }
    record(Clause::vii, ok, why);
  }
  return out;
}

ClauseReport check_witness_clauses(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol) {
  return check_witness_clauses(f, g, build_witnesses(f, g, tol), tol);
}

namespace {

struct Pair {
  MoebiusMap f;
  MoebiusMap g;
};

// Shared tail of both decide overloads; `gens` is set for matrix input.
Verdict decide_impl(Verdict v, std::optional<Pair> gens, const DecideConfig& cfg) {
  const Tolerances& tol = cfg.tol;
  const ParamTriple& t = v.normalized;
  v.space = classify_pair(t, tol);
  if (v.space.kind != SpaceKind::truly_spatial) {
    v.status = VerdictStatus::out_of_scope;
    switch (v.space.kind) {
      case SpaceKind::elementary:
        v.reason = "elementary group; discreteness of elementary groups is not decided here";
        break;
      case SpaceKind::degenerate:
        v.reason = "order-two generator; such groups are elementary or keep a plane invariant";
        break;
      default:
        v.reason = "invariant hyperbolic plane; Fuchsian-type criteria apply";
        break;
    }
    return v;
  }
  if (v.space.pi_lox_count > 0) {
    v.status = VerdictStatus::out_of_scope;
    v.reason = "pi-loxodromic generator; the classification table assumes none";
    return v;
  }
  for (double b : {t.beta, t.beta_prime}) {
    if (b < 0 && b >= -4.0 && !recognize_elliptic_beta(b, tol)) {
      v.status = VerdictStatus::not_discrete;
      v.reason = "elliptic generator of infinite order";
      return v;
    }
  }

  v.matched_rows = match_table(t, cfg.caps, tol, cfg.edition);
  if (t.beta != t.beta_prime) {
    for (RowMatch m : match_table(swapped(t), cfg.caps, tol, cfg.edition)) {
      m.swapped = true;
      v.matched_rows.push_back(m);
    }
  }

  std::optional<ParamTriple> oriented;
  if (in_witness_region(t, tol)) {
    oriented = t;
  } else if (in_witness_region(swapped(t), tol)) {
    oriented = swapped(t);
    v.witnesses_swapped = true;
  }
  if (oriented) {
    try {
      Pair p;
      if (gens) {
        p = v.witnesses_swapped ? Pair{gens->g, gens->f} : *gens;
      } else {
        GeneratorPair built = construct_generators(*oriented, tol);
        p = {built.f, built.g};
      }
      WitnessSet w = build_witnesses(p.f, p.g, tol);
      v.clauses = check_witness_clauses(p.f, p.g, w, tol);
      v.witnesses = std::move(w);
      v.witness_path_ran = true;
      v.agreement = v.clauses->discrete() == !v.matched_rows.empty();
    } catch (const Error& e) {
      v.notes.push_back(std::string("witness path failed: ") + e.what());
    }
  }

  const bool discrete = !v.matched_rows.empty() || (v.clauses && v.clauses->discrete());
  v.status = discrete ? VerdictStatus::discrete : VerdictStatus::not_discrete;
  if (v.agreement && !*v.agreement) v.notes.push_back("witness clauses and table disagree");
  if (discrete) v.reason = v.matched_rows.empty() ? "witness clause satisfied" : "table row matched";
  else v.reason = "no table row and no witness clause";
  return v;
}

}  // namespace

Verdict decide(const ParamTriple& triple, const DecideConfig& cfg) {
  if (!std::isfinite(triple.beta) || !std::isfinite(triple.beta_prime) ||
      !std::isfinite(triple.gamma))
    throw Error(ErrorCode::not_real_parameters, "non-finite parameter");
  Verdict v;
  v.input = triple;
  ParamTriple t = triple;
  if (auto pw = recognize_elliptic_beta(t.beta, cfg.tol); pw && pw->q > 1) {
    t = normalize_primitive(t, pw->q, pw->n, cfg.tol);
    v.notes.push_back("f replaced by its primitive power (q = " + std::to_string(pw->q) + ")");
  }
  if (auto pw = recognize_elliptic_beta(t.beta_prime, cfg.tol); pw && pw->q > 1) {
    t = swapped(normalize_primitive(swapped(t), pw->q, pw->n, cfg.tol));
    v.notes.push_back("g replaced by its primitive power (q = " + std::to_string(pw->q) + ")");
  }
  v.normalized = t;
  return decide_impl(std::move(v), std::nullopt, cfg);
}

Verdict decide(const MoebiusMap& f_in, const MoebiusMap& g_in, const DecideConfig& cfg) {
  Verdict v;
  v.input = params_of(f_in, g_in, cfg.tol);
  MoebiusMap f = f_in, g = g_in;
  auto to_primitive = [&](MoebiusMap& m, const char* name) {
    ElementClass c = classify_element(m, cfg.tol);
    if (c.kind == ElementKind::elliptic && c.angle_numerator && *c.angle_numerator > 1) {
      m = power(m, primitive_exponent(*c.angle_numerator, *c.order), cfg.tol.renormalize_every)
              .renormalized();
      v.notes.push_back(std::string(name) + " replaced by its primitive power (q = " +
                        std::to_string(*c.angle_numerator) + ")");
    }
  };
  to_primitive(f, "f");
  to_primitive(g, "g");
  v.normalized = params_of(f, g, cfg.tol);
  return decide_impl(std::move(v), Pair{f, g}, cfg);
}

}  // namespace kleinian
