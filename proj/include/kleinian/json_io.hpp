#pragma once

#include <json.hpp>

#include "kleinian/geometry.hpp"
#include "kleinian/moebius.hpp"
#include "kleinian/oracle.hpp"
#include "kleinian/orbifold353.hpp"
#include "kleinian/table.hpp"
#include "kleinian/witnesses.hpp"

namespace kleinian::json_io {

using Json = nlohmann::ordered_json;

// Rounded to 12 significant digits; non-finite values become null.
Json number(double x);
Json complex_value(Complex z);

Json to_json(const MoebiusMap& m);  // four [re, im] pairs: a, b, c, d
Json to_json(const ParamTriple& t);
Json to_json(const ElementClass& c);
Json to_json(const Witness& w);
Json to_json(const WitnessSet& w);
Json to_json(const RowParams& p);
Json to_json(const RowMatch& m);
Json to_json(const RowSample& s);
Json to_json(const ClauseReport& r);
Json to_json(const GroupSpaceClass& s);
Json to_json(const Verdict& v);
Json to_json(const Gamma353Report& r);

// Accepts [re, im] pairs or plain numbers; determinant is normalized to 1.
MoebiusMap matrix_from_json(const Json& j);
// Accepts {"beta", "beta_prime", "gamma"} or an object holding such a triple under "input".
ParamTriple triple_from_json(const Json& j);

}  // namespace kleinian::json_io
