#include "kleinian/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "kleinian/errors.hpp"

namespace kleinian::json_io {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json complex_value(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json to_json(const MoebiusMap& m) {
  return Json::array({complex_value(m.a()), complex_value(m.b()), complex_value(m.c()),
                      complex_value(m.d())});
}

Json to_json(const ParamTriple& t) {
  return {{"beta", number(t.beta)}, {"beta_prime", number(t.beta_prime)}, {"gamma", number(t.gamma)}};
}

Json to_json(const ElementClass& c) {
  Json j{{"kind", to_string(c.kind)}, {"beta", complex_value(c.beta)}};
  if (c.rotation_angle) j["rotation_angle"] = number(*c.rotation_angle);
  if (c.order) j["order"] = *c.order;
  if (c.angle_numerator) j["angle_numerator"] = *c.angle_numerator;
  if (c.primitive) j["primitive"] = *c.primitive;
  return j;
}

Json to_json(const Witness& w) {
  return {{"class", to_json(w.cls)},
          {"matrix", to_json(w.element)},
          {"relation_residual", number(w.relation_residual)},
          {"side_residual", number(w.side_residual)}};
}

Json to_json(const WitnessSet& w) {
  Json j{{"n", w.n}, {"h1", to_json(w.h1)}, {"h2", to_json(w.h2)}};
  j["h3"] = w.h3 ? to_json(*w.h3) : Json(nullptr);
  j["tilde_h1"] = w.tilde_h1 ? to_json(*w.tilde_h1) : Json(nullptr);
  j["h4"] = w.h4 ? to_json(*w.h4) : Json(nullptr);
  j["tilde_h2"] = w.tilde_h2 ? to_json(*w.tilde_h2) : Json(nullptr);
  j["notes"] = w.notes;
  return j;
}

Json to_json(const RowParams& p) {
  Json j = Json::object();
  if (p.n) j["n"] = *p.n;
  if (p.m) j["m"] = *p.m;
  if (p.p) j["p"] = *p.p;
  return j;
}

Json to_json(const RowMatch& m) {
  return {{"row", m.row}, {"params", to_json(m.params)}, {"swapped", m.swapped}};
}

Json to_json(const RowSample& s) {
  Json j{{"row", s.row}, {"params", to_json(s.params)}, {"triple", to_json(s.triple)}};
  if (s.sampled()) {
    Json offs = Json::array();
    for (double o : s.offsets) offs.push_back(number(o));
    j["interval_offsets"] = offs;
  }
  return j;
}

Json to_json(const ClauseReport& r) {
  Json sat = Json::array();
  for (Clause c : r.satisfied) sat.push_back(to_string(c));
  return {{"first", r.first ? Json(to_string(*r.first)) : Json(nullptr)},
          {"satisfied", sat},
          {"notes", r.notes}};
}

Json to_json(const GroupSpaceClass& s) {
  return {{"kind", to_string(s.kind)},
          {"pi_loxodromic_count", s.pi_lox_count},
          {"reason", s.reason},
          {"indicative", s.indicative}};
}

Json to_json(const Verdict& v) {
  Json rows = Json::array();
  for (const RowMatch& m : v.matched_rows) rows.push_back(to_json(m));
  Json j{{"status", to_string(v.status)},
         {"input", to_json(v.input)},
         {"normalized", to_json(v.normalized)},
         {"space", to_json(v.space)},
         {"matched_rows", rows}};
  j["clause"] = v.clauses && v.clauses->first ? Json(to_string(*v.clauses->first)) : Json(nullptr);
  j["clauses"] = v.clauses ? to_json(*v.clauses) : Json(nullptr);
  j["witnesses_swapped"] = v.witnesses_swapped;
  j["witnesses"] = v.witnesses ? to_json(*v.witnesses) : Json(nullptr);
  j["agreement"] = v.agreement ? Json(*v.agreement) : Json(nullptr);
  j["reason"] = v.reason;
  j["notes"] = v.notes;
  return j;
}

Json to_json(const Gamma353Report& r) {
  Json rows = Json::array();
  for (const RowMatch& m : r.matched_rows) rows.push_back(to_json(m));
  return {{"triple", to_json(r.triple)},
          {"matched_rows", rows},
          {"word", kHalfTurnWord},
          {"max_imag_part", number(r.max_imag_part)},
          {"e_trace", complex_value(r.e_trace)},
          {"e_square_residual", number(r.e_square_residual)},
          {"e_order2", r.e_order2},
          {"orthogonality_residual_f", number(r.orth_residual_f)},
          {"orthogonality_residual_g", number(r.orth_residual_g)},
          {"common_point_residual", number(r.common_point_residual)},
          {"h1_order4_residual", number(r.h1_order4_residual)},
          {"h2_order3_residual", number(r.h2_order3_residual)},
          {"trace_residual_k4", number(r.trace_residual_k4)},
          {"trace_residual_k16", number(r.trace_residual_k16)},
          {"skipped", r.skipped},
          {"passed", r.passed}};
}

namespace {

Complex entry(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw Error(ErrorCode::parse_error, "matrix entry must be a number or [re, im]");
}

}  // namespace

MoebiusMap matrix_from_json(const Json& j) {
  std::vector<Complex> v;
  if (j.is_array() && j.size() == 4) {
    for (const Json& e : j) v.push_back(entry(e));
  } else if (j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 &&
             j[1].is_array() && j[1].size() == 2) {
    // [[a, b], [c, d]]
    for (const Json& row : j)
      for (const Json& e : row) v.push_back(entry(e));
  } else {
    throw Error(ErrorCode::parse_error, "matrix must hold four entries");
  }
  return MoebiusMap::from_gl(v[0], v[1], v[2], v[3]);
}

ParamTriple triple_from_json(const Json& j) {
  const Json& t = j.contains("input") ? j.at("input") : j;
  try {
    return {t.at("beta").get<double>(), t.at("beta_prime").get<double>(),
            t.at("gamma").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("triple: ") + e.what());
  }
}

}  // namespace kleinian::json_io
