#include "kleinian/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "kleinian/errors.hpp"
#include "kleinian/geometry.hpp"
#include "kleinian/json_io.hpp"
#include "kleinian/oracle.hpp"
#include "kleinian/orbifold353.hpp"
#include "kleinian/table.hpp"
#include "kleinian/witnesses.hpp"

namespace kleinian::cli {

using json_io::Json;

namespace {

constexpr int kExact = 99;
// Literals with fewer decimals are taken as exact values.
constexpr int kTruncatedFrom = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_config, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, what + ": " + e.what());
  }
}

double parse_number(const std::string& text, const char* name) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw Error(ErrorCode::parse_error, std::string(name) + ": not a number: " + text);
  return v;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string fmt(Complex z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::string describe(const ElementClass& c) {
  std::string s = to_string(c.kind);
  if (c.order) {
    s += ", order " + std::to_string(*c.order);
    if (c.primitive && !*c.primitive) s += " (angle 2pi*" + std::to_string(*c.angle_numerator) + "/" +
                                          std::to_string(*c.order) + ")";
    else s += " (primitive)";
  } else if (c.rotation_angle) {
    s += ", angle " + fmt(*c.rotation_angle) + " (no rational match)";
  }
  return s;
}

std::string describe(const RowParams& p) {
  std::string s;
  auto add = [&](const char* name, const std::optional<int>& v) {
    if (!v) return;
    if (!s.empty()) s += ", ";
    s += std::string(name) + " = " + std::to_string(*v);
  };
  add("n", p.n);
  add("m", p.m);
  add("p", p.p);
  return s.empty() ? "no parameters" : s;
}

void print_matrix(std::ostream& out, const char* name, const MoebiusMap& m) {
  out << name << " = [[" << fmt(m.a()) << ", " << fmt(m.b()) << "], [" << fmt(m.c()) << ", "
      << fmt(m.d()) << "]]\n";
}

void print_witness(std::ostream& out, const char* name, const Witness& w) {
  out << "  " << name << ": " << describe(w.cls) << "; relation residual "
      << fmt(w.relation_residual) << "\n";
}

void print_witness_set(std::ostream& out, const WitnessSet& w) {
  out << "witnesses (n = " << w.n << "):\n";
  print_witness(out, "h1", w.h1);
  print_witness(out, "h2", w.h2);
  if (w.h3) print_witness(out, "h3", *w.h3);
  if (w.tilde_h1) print_witness(out, "h1 root", *w.tilde_h1);
  if (w.h4) print_witness(out, "h4", *w.h4);
  if (w.tilde_h2) print_witness(out, "h2 cube root", *w.tilde_h2);
  for (const std::string& n : w.notes) out << "  note: " << n << "\n";
}

void print_clauses(std::ostream& out, const ClauseReport& r) {
  if (r.first) {
    out << "clause (" << to_string(*r.first) << "): " << clause_summary(*r.first) << "\n";
    if (r.satisfied.size() > 1) {
      out << "also satisfied:";
      for (std::size_t i = 1; i < r.satisfied.size(); ++i) out << " (" << to_string(r.satisfied[i]) << ")";
      out << "\n";
    }
  } else {
    out << "no clause satisfied\n";
    for (const std::string& n : r.notes) out << "  " << n << "\n";
  }
}

void print_verdict(std::ostream& out, const Verdict& v, TableEdition edition) {
  out << "status: " << to_string(v.status) << "\n";
  out << "input: beta = " << fmt(v.input.beta) << ", beta' = " << fmt(v.input.beta_prime)
      << ", gamma = " << fmt(v.input.gamma) << "\n";
  if (v.normalized.beta != v.input.beta || v.normalized.beta_prime != v.input.beta_prime ||
      v.normalized.gamma != v.input.gamma)
    out << "normalized: beta = " << fmt(v.normalized.beta) << ", beta' = "
        << fmt(v.normalized.beta_prime) << ", gamma = " << fmt(v.normalized.gamma) << "\n";
  out << "space: " << to_string(v.space.kind) << " (" << v.space.reason << ")\n";
  for (const RowMatch& m : v.matched_rows) {
    RowInfo info = row_info(m.row, edition);
    out << "row " << m.row << (m.swapped ? " (generators swapped)" : "") << ", "
        << describe(m.params) << "\n";
    out << "  " << info.configuration << ": beta " << info.beta << "; gamma " << info.gamma
        << "; beta' " << info.beta_prime << "\n";
  }
  if (v.witnesses) print_witness_set(out, *v.witnesses);
  if (v.clauses) print_clauses(out, *v.clauses);
  if (v.agreement) out << "agreement: " << (*v.agreement ? "yes" : "NO") << "\n";
  out << "reason: " << v.reason << "\n";
  for (const std::string& n : v.notes) out << "note: " << n << "\n";
}

int verdict_exit(const Verdict& v) { return v.status == VerdictStatus::out_of_scope ? 2 : 0; }

struct TripleArgs {
  std::string beta, beta_prime, gamma;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* beta_prime_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;

  void add_to(CLI::App* app) {
    beta_opt = app->add_option("--beta", beta, "tr^2 f - 4");
    beta_prime_opt = app->add_option("--beta-prime", beta_prime, "tr^2 g - 4");
    gamma_opt = app->add_option("--gamma", gamma, "tr[f,g] - 2");
  }
  bool given() const { return beta_opt->count() || beta_prime_opt->count() || gamma_opt->count(); }
  bool complete() const { return beta_opt->count() && beta_prime_opt->count() && gamma_opt->count(); }
  ParamTriple triple() const {
    if (!complete()) throw Error(ErrorCode::parse_error, "--beta, --beta-prime and --gamma are all required");
    return {parse_number(beta, "--beta"), parse_number(beta_prime, "--beta-prime"),
            parse_number(gamma, "--gamma")};
  }
  // Fewest decimals among inputs that look truncated.
  int decimals() const {
    int d = kExact;
    for (const std::string* s : {&beta, &beta_prime, &gamma}) {
      int k = literal_decimals(*s);
      if (k >= kTruncatedFrom) d = std::min(d, k);
    }
    return d;
  }
};

struct MatrixPair {
  MoebiusMap f, g;
};

MatrixPair read_matrix_file(const std::string& path) {
  Json j = parse_json(read_file(path), path);
  if (!j.is_object() || !j.contains("f") || !j.contains("g"))
    throw Error(ErrorCode::parse_error, path + ": expected an object with \"f\" and \"g\"");
  return {json_io::matrix_from_json(j.at("f")), json_io::matrix_from_json(j.at("g"))};
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

Json tolerances_json(const Tolerances& t) {
  return {{"eps", t.eps},
          {"eps_det", t.eps_det},
          {"eps_axis", t.eps_axis},
          {"eps_match", t.eps_match},
          {"max_denominator", t.max_denominator},
          {"renormalize_every", t.renormalize_every}};
}

void tolerances_from_json(Tolerances& t, const Json& j) {
  try {
    t.eps = j.value("eps", t.eps);
    t.eps_det = j.value("eps_det", t.eps_det);
    t.eps_axis = j.value("eps_axis", t.eps_axis);
    t.eps_match = j.value("eps_match", t.eps_match);
    t.max_denominator = j.value("max_denominator", t.max_denominator);
    t.renormalize_every = j.value("renormalize_every", t.renormalize_every);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("tolerances: ") + e.what());
  }
  t.validate();
}

}  // namespace

void CliConfig::validate() const {
  tol.validate();
  caps.validate();
  if (caps.max_n < 2 || caps.max_m < 2 || caps.max_p < 2)
    throw Error(ErrorCode::invalid_config, "caps must be at least 2");
}

void apply_config_text(CliConfig& cfg, const std::string& text) {
  Json j = parse_json(text, "config");
  if (!j.is_object()) throw Error(ErrorCode::invalid_config, "config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "eps") cfg.tol.eps = value.get<double>();
      else if (key == "eps_det") cfg.tol.eps_det = value.get<double>();
      else if (key == "eps_axis") cfg.tol.eps_axis = value.get<double>();
      else if (key == "eps_match") cfg.tol.eps_match = value.get<double>();
      else if (key == "max_denominator") cfg.tol.max_denominator = value.get<int>();
      else if (key == "renormalize_every") cfg.tol.renormalize_every = value.get<int>();
      else if (key == "max_n") cfg.caps.max_n = value.get<int>();
      else if (key == "max_m") cfg.caps.max_m = value.get<int>();
      else if (key == "max_p") cfg.caps.max_p = value.get<int>();
      else if (key == "cap") cfg.caps.max_n = cfg.caps.max_m = cfg.caps.max_p = value.get<int>();
      else if (key == "interval_offsets") cfg.caps.interval_offsets = value.get<std::vector<double>>();
      else if (key == "table_edition") {
        auto e = edition_from_string(value.get<std::string>());
        if (!e) throw Error(ErrorCode::invalid_config, "unknown table_edition");
        cfg.edition = *e;
      } else if (key == "output") {
        const std::string o = value.get<std::string>();
        if (o == "human") cfg.output = OutputMode::human;
        else if (o == "json") cfg.output = OutputMode::json;
        else if (o == "jsonl") cfg.output = OutputMode::jsonl;
        else throw Error(ErrorCode::invalid_config, "unknown output mode " + o);
      } else {
        throw Error(ErrorCode::invalid_config, "unknown config key " + key);
      }
    }
  } catch (const nlohmann::json::type_error& e) {
    throw Error(ErrorCode::invalid_config, e.what());
  }
}

void apply_config_file(CliConfig& cfg, const std::string& path) {
  apply_config_text(cfg, read_file(path));
}

int literal_decimals(const std::string& text) {
  if (text.find_first_of("eE") != std::string::npos) return kExact;
  auto dot = text.find('.');
  if (dot == std::string::npos) return kExact;
  std::string frac = text.substr(dot + 1);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? kExact : static_cast<int>(frac.size());
}

void widen_for_decimals(Tolerances& tol, int decimals) {
  if (decimals >= 11) return;
  const double w = std::pow(10.0, 2 - decimals);
  tol.eps = std::max(tol.eps, w);
  tol.eps_axis = std::max(tol.eps_axis, w);
  tol.eps_match = std::max(tol.eps_match, w);
  const int q = static_cast<int>(std::floor(1.0 / (10.0 * std::sqrt(tol.eps))));
  tol.max_denominator = std::max(10, std::min(tol.max_denominator, q));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discreteness of two-generator groups with real trace parameters", "kleinian_rp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, edition_name, output_name;
  bool json_flag = false, exact_tol = false;
  double eps = 0, eps_det = 0, eps_axis = 0, eps_match = 0;
  int max_den = 0, renorm = 0, cap = 0;
  app.add_option("--config", config_path, "JSON config file");
  auto* o_eps = app.add_option("--eps", eps, "classification tolerance");
  auto* o_eps_det = app.add_option("--eps-det", eps_det, "determinant tolerance");
  auto* o_eps_axis = app.add_option("--eps-axis", eps_axis, "axis meeting tolerance");
  auto* o_eps_match = app.add_option("--eps-match", eps_match, "row matching tolerance");
  auto* o_max_den = app.add_option("--max-denominator", max_den, "rational angle denominator cap");
  auto* o_renorm = app.add_option("--renormalize-every", renorm, "products between renormalizations");
  auto* o_cap = app.add_option("--cap", cap, "cap on integer row parameters");
  auto* o_edition = app.add_option("--table-edition", edition_name, "corrected | printed");
  auto* o_output = app.add_option("--output", output_name, "human | json | jsonl");
  app.add_flag("--json", json_flag, "JSON output");
  app.add_flag("--exact-tolerances", exact_tol, "do not loosen tolerances for short decimal inputs");

  TripleArgs classify_args, decide_args, construct_args, witness_args;
  std::string decide_matrix, witness_matrix, input_json;

  CLI::App* classify = app.add_subcommand("classify", "decide a parameter triple");
  classify_args.add_to(classify);
  classify->add_option("--from-json", input_json, "read the triple from a JSON file (verdict or triple)");

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide a triple or a matrix pair");
  decide_args.add_to(decide_cmd);
  decide_cmd->add_option("--matrix-file", decide_matrix, "JSON file with matrices f and g");

  CLI::App* construct = app.add_subcommand("construct", "build f and g from a triple");
  construct_args.add_to(construct);

  CLI::App* witnesses = app.add_subcommand("witnesses", "witness elements and clause report");
  witness_args.add_to(witnesses);
  witnesses->add_option("--matrix-file", witness_matrix, "JSON file with matrices f and g");

  std::string row_arg = "all", out_path;
  int threads = 0;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list admissible triples of table rows");
  enumerate->add_option("--row", row_arg, "row index 1..41 or 'all'");
  enumerate->add_option("--out", out_path, "write JSON lines to this file");
  enumerate->add_option("--threads", threads, "worker threads (0 = one per row)");

  int p = 0, q = 0;
  CLI::App* mindist = app.add_subcommand("mindist", "minimal distance between elliptic axes");
  mindist->add_option("p", p)->required();
  mindist->add_option("q", q)->required();

  CLI::App* verify = app.add_subcommand("verify-353", "check the half-turn word of the 3-5-3 group");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    CliConfig cfg;
    if (const char* env = std::getenv("KLEINIAN_RP_CONFIG"); env && *env)
      apply_config_file(cfg, env);
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (o_eps->count()) cfg.tol.eps = eps;
    if (o_eps_det->count()) cfg.tol.eps_det = eps_det;
    if (o_eps_axis->count()) cfg.tol.eps_axis = eps_axis;
    if (o_eps_match->count()) cfg.tol.eps_match = eps_match;
    if (o_max_den->count()) cfg.tol.max_denominator = max_den;
    if (o_renorm->count()) cfg.tol.renormalize_every = renorm;
    if (o_cap->count()) cfg.caps.max_n = cfg.caps.max_m = cfg.caps.max_p = cap;
    if (o_edition->count()) {
      auto e = edition_from_string(edition_name);
      if (!e) throw Error(ErrorCode::invalid_config, "unknown table edition " + edition_name);
      cfg.edition = *e;
    }
    if (o_output->count()) {
      if (output_name == "human") cfg.output = OutputMode::human;
      else if (output_name == "json") cfg.output = OutputMode::json;
      else if (output_name == "jsonl") cfg.output = OutputMode::jsonl;
      else throw Error(ErrorCode::invalid_config, "unknown output mode " + output_name);
    }
    if (json_flag) cfg.output = OutputMode::json;
    cfg.validate();
    const bool as_json = cfg.output != OutputMode::human;

    auto decide_cfg = [&](const Tolerances& tol) {
      DecideConfig d;
      d.tol = tol;
      d.caps = cfg.caps;
      d.edition = cfg.edition;
      return d;
    };
    auto widened = [&](const TripleArgs& t) {
      Tolerances tol = cfg.tol;
      if (!exact_tol) widen_for_decimals(tol, t.decimals());
      return tol;
    };
    auto report = [&](const Verdict& v, const Tolerances& tol) {
      if (as_json) {
        Json j = json_io::to_json(v);
        j["tolerances"] = tolerances_json(tol);
        j["table_edition"] = to_string(cfg.edition);
        emit(out, j);
      }
      else print_verdict(out, v, cfg.edition);
      return verdict_exit(v);
    };

    if (*classify) {
      if (!input_json.empty()) {
        Json doc = parse_json(read_file(input_json), input_json);
        ParamTriple t = json_io::triple_from_json(doc);
        Tolerances tol = cfg.tol;
        if (doc.contains("tolerances")) tolerances_from_json(tol, doc.at("tolerances"));
        return report(decide(t, decide_cfg(tol)), tol);
      }
      Tolerances tol = widened(classify_args);
      return report(decide(classify_args.triple(), decide_cfg(tol)), tol);
    }

    if (*decide_cmd) {
      if (!decide_matrix.empty()) {
        if (decide_args.given())
          throw Error(ErrorCode::parse_error, "give either --matrix-file or a triple, not both");
        MatrixPair m = read_matrix_file(decide_matrix);
        return report(decide(m.f, m.g, decide_cfg(cfg.tol)), cfg.tol);
      }
      Tolerances tol = widened(decide_args);
      return report(decide(decide_args.triple(), decide_cfg(tol)), tol);
    }

    if (*construct) {
      Tolerances tol = widened(construct_args);
      ParamTriple t = construct_args.triple();
      GeneratorPair gens = construct_generators(t, tol);
      ComplexTriple back = complex_params_of(gens.f, gens.g);
      if (as_json) {
        emit(out, {{"triple", json_io::to_json(t)},
                   {"f", json_io::to_json(gens.f)},
                   {"g", json_io::to_json(gens.g)},
                   {"g_alternate", json_io::to_json(gens.g_alternate)},
                   {"recovered",
                    {{"beta", json_io::complex_value(back.beta)},
                     {"beta_prime", json_io::complex_value(back.beta_prime)},
                     {"gamma", json_io::complex_value(back.gamma)}}}});
      } else {
        print_matrix(out, "f", gens.f);
        print_matrix(out, "g", gens.g);
        print_matrix(out, "g (other root)", gens.g_alternate);
        out << "recovered: beta = " << fmt(back.beta) << ", beta' = " << fmt(back.beta_prime)
            << ", gamma = " << fmt(back.gamma) << "\n";
      }
      return 0;
    }

    if (*witnesses) {
      MoebiusMap f, g;
      Tolerances tol = cfg.tol;
      bool swapped = false;
      if (!witness_matrix.empty()) {
        MatrixPair m = read_matrix_file(witness_matrix);
        f = m.f;
        g = m.g;
      } else {
        tol = widened(witness_args);
        ParamTriple t = witness_args.triple();
        if (!in_witness_region(t, tol) && in_witness_region({t.beta_prime, t.beta, t.gamma}, tol)) {
          t = {t.beta_prime, t.beta, t.gamma};
          swapped = true;
        }
        GeneratorPair gens = construct_generators(t, tol);
        f = gens.f;
        g = gens.g;
      }
      WitnessSet w = build_witnesses(f, g, tol);
      ClauseReport r = check_witness_clauses(f, g, w, tol);
      if (as_json) {
        emit(out, {{"swapped", swapped},
                   {"witnesses", json_io::to_json(w)},
                   {"clauses", json_io::to_json(r)}});
      } else {
        if (swapped) out << "generators swapped to meet the hypothesis\n";
        print_witness_set(out, w);
        print_clauses(out, r);
      }
      return 0;
    }

    if (*enumerate) {
      std::vector<int> rows;
      if (row_arg == "all") {
        for (int r = 1; r <= kRowCount; ++r) rows.push_back(r);
      } else {
        int r = static_cast<int>(parse_number(row_arg, "--row"));
        if (std::to_string(r) != row_arg) throw Error(ErrorCode::invalid_row, "row must be an integer");
        rows.push_back(r);
      }
      // One shard per row; output is merged in row order.
      std::vector<std::vector<RowSample>> shards(rows.size());
      const std::size_t width = threads > 0 ? static_cast<std::size_t>(threads) : rows.size();
      for (std::size_t start = 0; start < rows.size(); start += width) {
        std::vector<std::future<std::vector<RowSample>>> jobs;
        for (std::size_t i = start; i < std::min(rows.size(), start + width); ++i)
          jobs.push_back(std::async(std::launch::async, [&, i] {
            return enumerate_row(rows[i], cfg.caps, cfg.edition);
          }));
        for (std::size_t i = 0; i < jobs.size(); ++i) shards[start + i] = jobs[i].get();
      }
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error(ErrorCode::invalid_config, "cannot write " + out_path);
      }
      std::ostream& sink = out_path.empty() ? out : file;
      std::size_t count = 0;
      for (const auto& shard : shards) {
        for (const RowSample& s : shard) {
          Json j = json_io::to_json(s);
          j["edition"] = to_string(cfg.edition);
          sink << j.dump() << "\n";
          ++count;
        }
      }
      if (!out_path.empty()) err << count << " triples written to " << out_path << "\n";
      return 0;
    }

    if (*mindist) {
      Json j{{"p", p}, {"q", q}};
      const double c = min_distance(p, q);
      j["cosh_rho_min"] = json_io::number(c);
      j["rho_min"] = json_io::number(std::acosh(c));
      j["source"] = std::max(p, q) >= 7 ? "closed_form" : "stored";
      if (p <= 7 && q <= 7 && std::max(p, q) == 7)
        j["stored_value"] = json_io::number(min_distance_table_entry(p, q));
      emit(out, j);
      return 0;
    }

    if (*verify) {
      Gamma353Config vc;
      vc.tol = cfg.tol;
      Gamma353Report r = verify_353(vc);
      if (as_json) {
        emit(out, json_io::to_json(r));
      } else {
        out << "triple: beta = " << fmt(r.triple.beta) << ", beta' = " << fmt(r.triple.beta_prime)
            << ", gamma = " << fmt(r.triple.gamma) << "\n";
        for (const RowMatch& m : r.matched_rows) out << "row " << m.row << "\n";
        out << "max imaginary part of parameters: " << fmt(r.max_imag_part) << "\n";
        out << "e = " << kHalfTurnWord << "\n";
        out << "tr e = " << fmt(r.e_trace) << "\n";
        out << "e^2 vs identity: " << fmt(r.e_square_residual) << "\n";
        out << "axis(e) right angle residual: f " << fmt(r.orth_residual_f) << ", g "
            << fmt(r.orth_residual_g) << "\n";
        out << "common point residual: " << fmt(r.common_point_residual) << "\n";
        out << "h1^4 vs identity: " << fmt(r.h1_order4_residual) << "\n";
        out << "h2^3 vs identity: " << fmt(r.h2_order3_residual) << "\n";
        out << "|tr e| with renormalization every 4 / 16: " << fmt(r.trace_residual_k4) << " / "
            << fmt(r.trace_residual_k16) << "\n";
        for (const std::string& s : r.skipped) out << "skipped: " << s << "\n";
        out << (r.passed ? "PASS" : "FAIL") << "\n";
      }
      return r.passed ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace kleinian::cli
