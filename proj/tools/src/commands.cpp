#include "hecke_cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <complex>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hecke/biro.hpp"
#include "hecke/error.hpp"
#include "hecke/parallel.hpp"
#include "hecke/serialize.hpp"
#include "hecke/shintani.hpp"
#include "hecke_cli/acceptance.hpp"
#include "hecke_cli/family_config.hpp"

#ifndef HECKE_ZERO_VERSION
#define HECKE_ZERO_VERSION "0.0.0"
#endif

namespace hecke::cli {

namespace {

constexpr const char* kToolName = "hecke-zero";

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json inputs = Json::object();
  Json payload = Json::object();
  std::optional<Table> table;
  int exit_code = kExitOk;
};

// Raw option values; parsed and validated before any computation.
struct Options {
  std::string format = "json";
  std::string out_path;
  unsigned threads = 0;
  bool threads_set = false;

  std::string d, delta, chi, family, plus, minus, x, k_list, kind = "both", expect_fail;
  std::int64_t q = 0, r = -1, n = 0, q_max = 7, p_max = 13;
  bool cells = false;
};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::ValidationError, msg); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_i64(const std::string& text, const std::string& what) {
  try {
    return to_int64(parse_integer(text));
  } catch (const Error&) {
    invalid(what + ": '" + text + "' is not an integer");
  }
}

/// Comma list; an item "a..b" expands to the closed range.
std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  if (text.empty()) invalid(what + " is empty");
  for (const auto& item : split(text, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_i64(item, what));
      continue;
    }
    std::int64_t lo = parse_i64(item.substr(0, dots), what);
    std::int64_t hi = parse_i64(item.substr(dots + 2), what);
    if (hi < lo || hi - lo > 100000) invalid(what + ": bad range '" + item + "'");
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

Digits parse_word(const std::string& text, const std::string& what) {
  Digits w = parse_int_list(text, what);
  if (w.empty()) invalid(what + " is empty");
  return w;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string cyclo_cell(const CycloElement& x) { return to_json(x).dump(); }

Json value_json(const CycloElement& v) {
  if (v.is_rational()) return to_json(v.constant_term());
  return to_json(v);
}

Json display_json(const CycloElement& v) {
  Json j = Json::object();
  j["note"] = "non-authoritative decimal approximation";
  if (v.is_rational()) {
    j["decimal"] = decimal_display(v.constant_term());
  } else {
    std::complex<double> z = v.to_complex();
    std::ostringstream os;
    os << std::setprecision(17) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    j["decimal"] = os.str();
  }
  return j;
}

std::int64_t require_q(std::int64_t q) {
  if (q < 1) invalid("--q must be a positive integer");
  return q;
}

DirichletCharacter require_character(const std::string& id, std::int64_t q) {
  DirichletCharacter chi = parse_character(id);
  if (chi.modulus() != q) invalid("character modulus " + std::to_string(chi.modulus()) + " differs from --q");
  return chi;
}

std::int64_t require_r(std::int64_t r, std::int64_t q) {
  if (r < 0 || r >= q) invalid("--r must lie in [0, q)");
  return r;
}

// ---- subcommands -------------------------------------------------------

Report cmd_field(const Options& o) {
  Report rep;
  FieldData F = make_field(parse_integer(o.d));
  rep.inputs["d"] = to_json(F.d);
  ClassNumbers cn = class_numbers(F.d);
  QuadSurd delta = principal_delta(F);
  rep.payload["field"] = to_json(F);
  rep.payload["class_numbers"] = {{"h", cn.h}, {"h_plus", cn.h_plus}};
  rep.payload["principal_delta"] = to_json(delta);
  rep.payload["principal_minus_word"] = to_json(minus_expand(delta));
  return rep;
}

Report cmd_cf_expand(const Options& o) {
  Report rep;
  FieldData F = make_field(parse_integer(o.d));
  auto parts = split(o.x, ',');
  if (parts.size() != 3) invalid("--x expects a,b,c for (a + b sqrt(d))/c");
  QuadSurd x(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]), F.d);
  if (o.kind != "plus" && o.kind != "minus" && o.kind != "both") invalid("--kind must be plus, minus or both");
  rep.inputs = {{"d", to_json(F.d)}, {"x", to_json(x)}, {"kind", o.kind}};
  if (o.kind != "minus") rep.payload["plus"] = to_json(plus_expand(x));
  if (o.kind != "plus") rep.payload["minus"] = to_json(minus_expand(x));
  return rep;
}

Report cmd_cf_convert(const Options& o) {
  Report rep;
  PlusCF p = plus_word(parse_word(o.plus, "--plus"));
  rep.inputs["plus"] = p.period;
  rep.payload["plus"] = to_json(p);
  rep.payload["minus"] = to_json(plus_to_minus(p));
  return rep;
}

Report cmd_cf_eval(const Options& o) {
  Report rep;
  if (o.plus.empty() == o.minus.empty()) invalid("cf eval takes exactly one of --plus or --minus");
  QuadSurd value;
  if (!o.plus.empty()) {
    PlusCF p = plus_word(parse_word(o.plus, "--plus"));
    rep.inputs["plus"] = p.period;
    value = evaluate_periodic(p);
  } else {
    MinusCF m = minus_word(parse_word(o.minus, "--minus"));
    rep.inputs["minus"] = m.period;
    value = evaluate_periodic(m);
  }
  rep.payload["value"] = to_json(value);
  rep.payload["display"] = {{"note", "non-authoritative decimal approximation"}, {"decimal", value.to_double()}};
  return rep;
}

Report cmd_lvalue(const Options& o) {
  Report rep;
  FieldData F = make_field(parse_integer(o.d));
  auto parts = split(o.delta, ',');
  if (parts.size() != 3) invalid("--delta expects u,v,w for (u + v sqrt(d))/w");
  QuadSurd delta(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]), F.d);
  std::int64_t q = require_q(o.q);
  DirichletCharacter chi = require_character(o.chi, q);
  check_delta_range(delta);
  IdealLattice lattice = IdealLattice::from_basis(F, QuadSurd::rational(1, F.d), delta);
  if (!is_fractional_ideal(F, lattice)) throw Error(ErrorKind::NotAnIdeal, "[1, delta] is not a fractional ideal");
  IdealLattice b = ideal_inverse(F, lattice);
  rep.inputs = {{"d", to_json(F.d)}, {"delta", to_json(delta)}, {"q", q}, {"chi", chi.id()}};

  CycloElement L = partial_hecke_L_zero(F, delta, b, chi);
  rep.payload["b"] = to_json(b);
  rep.payload["value"] = value_json(L);
  rep.payload["display"] = display_json(L);

  if (o.cells || o.format == "csv") {
    MinusCF mcf = minus_expand(delta);
    Table t{{"C", "D", "norm_residue", "chi_value", "Z"}, {}};
    Json cells = Json::array();
    for (std::int64_t C = 1; C <= q; ++C) {
      for (std::int64_t D = 1; D <= q; ++D) {
        std::int64_t nr = norm_residue(F, b, delta, C, D, q);
        Rational z = partial_zeta_zero(q, C, D, mcf);
        CycloElement cv = chi.value(nr);
        cells.push_back({{"C", C}, {"D", D}, {"norm_residue", nr}, {"chi_value", to_json(cv)}, {"Z", to_json(z)}});
        t.rows.push_back({std::to_string(C), std::to_string(D), std::to_string(nr), cyclo_cell(cv), to_string(z)});
      }
    }
    rep.payload["cells"] = std::move(cells);
    rep.table = std::move(t);
  }
  return rep;
}

Json family_input(const FamilySpec& spec, const std::string& requested) {
  if (builtin_family(requested)) return requested;
  return to_json(spec);
}

Report cmd_linearity_verify(const Options& o) {
  Report rep;
  FamilySpec spec = load_family_config(o.family);
  std::int64_t q = require_q(o.q);
  DirichletCharacter chi = require_character(o.chi, q);
  std::int64_t r = require_r(o.r, q);
  std::vector<std::int64_t> ks = parse_int_list(o.k_list, "--k");
  rep.inputs = {{"family", family_input(spec, o.family)}, {"q", q}, {"chi", chi.id()}, {"r", r}, {"k", ks}};
  LinearityReport lr = verify_linearity(spec, q, chi, r, ks);
  rep.payload = to_json(lr);
  Table t{{"k", "n", "scaled_value"}, {}};
  for (const auto& p : lr.points) t.rows.push_back({std::to_string(p.k), std::to_string(p.n), cyclo_cell(p.scaled_value)});
  rep.table = std::move(t);
  return rep;
}

Report cmd_linearity_closed_form(const Options& o) {
  Report rep;
  FamilySpec spec = load_family_config(o.family);
  std::int64_t q = require_q(o.q);
  DirichletCharacter chi = require_character(o.chi, q);
  std::int64_t r = require_r(o.r, q);
  rep.inputs = {{"family", family_input(spec, o.family)}, {"q", q}, {"chi", chi.id()}, {"r", r}};
  ClosedFormAB cf = closed_form_chi(spec, q, chi, r);
  rep.payload = to_json(cf);
  Table t{{"C", "D", "A", "B", "norm_residue"}, {}};
  for (std::int64_t C = 1; C <= q; ++C) {
    for (std::int64_t D = 1; D <= q; ++D) {
      const CellAB& ab = cf.cell(C, D);
      std::size_t idx = static_cast<std::size_t>((C - 1) * q + (D - 1));
      t.rows.push_back({std::to_string(C), std::to_string(D), to_string(ab.A), to_string(ab.B),
                        std::to_string(cf.norm_residues[idx])});
    }
  }
  rep.table = std::move(t);
  return rep;
}

Report cmd_linearity_hypothesis(const Options& o) {
  Report rep;
  FamilySpec spec = load_family_config(o.family);
  std::int64_t q = require_q(o.q);
  std::int64_t r = require_r(o.r, q);
  std::vector<std::int64_t> ks = parse_int_list(o.k_list, "--k");
  rep.inputs = {{"family", family_input(spec, o.family)}, {"q", q}, {"r", r}, {"k", ks}};
  rep.payload["holds"] = hypothesis_check_norm(spec, q, r, ks);
  return rep;
}

void require_bounds(const Options& o) {
  if (o.q_max < 1 || o.q_max > 200) invalid("--q-max must lie in [1, 200]");
  if (o.p_max < 2 || o.p_max > 2000) invalid("--p-max must lie in [2, 2000]");
}

Report cmd_biro_search(const Options& o) {
  Report rep;
  require_bounds(o);
  rep.inputs = {{"q_max", o.q_max}, {"p_max", o.p_max}};
  Json pairs = Json::array();
  Table t{{"q", "p", "chi", "image", "witness"}, {}};
  for (const auto& pair : condition_star_search(o.q_max, o.p_max)) {
    pairs.push_back(to_json(pair));
    t.rows.push_back({std::to_string(pair.q), std::to_string(pair.p), pair.chi.id(),
                      std::to_string(pair.realization.image), std::to_string(pair.witness)});
  }
  rep.payload["pairs"] = std::move(pairs);
  rep.table = std::move(t);
  return rep;
}

Report cmd_biro_residues(const Options& o) {
  Report rep;
  require_bounds(o);
  FamilySpec spec = load_family_config(o.family);
  rep.inputs = {{"family", family_input(spec, o.family)}, {"q_max", o.q_max}, {"p_max", o.p_max}};
  if (o.r >= 0) rep.inputs["r"] = o.r;
  Json reports = Json::array();
  Table t{{"q", "p", "chi", "image", "r", "A_image", "B_image", "status", "residue"}, {}};
  for (const auto& pair : condition_star_search(o.q_max, o.p_max)) {
    for (std::int64_t r = 0; r < pair.q; ++r) {
      if (o.r >= 0 && r != o.r) continue;
      ResidueReport rr = residue_mod_p(spec, pair, r);
      reports.push_back(to_json(rr));
      t.rows.push_back({std::to_string(rr.q), std::to_string(rr.p), rr.chi_id, std::to_string(rr.image),
                        std::to_string(rr.r), std::to_string(rr.A_image), std::to_string(rr.B_image),
                        to_string(rr.status), rr.residue ? std::to_string(*rr.residue) : ""});
    }
  }
  rep.payload["reports"] = std::move(reports);
  rep.table = std::move(t);
  return rep;
}

Report cmd_biro_oracle(const Options& o) {
  Report rep;
  FamilySpec spec = load_family_config(o.family);
  DirichletCharacter chi = parse_character(o.chi);
  if (o.n < 1) invalid("--n must be a positive integer");
  rep.inputs = {{"family", family_input(spec, o.family)}, {"n", o.n}, {"chi", chi.id()}};
  rep.payload = to_json(factorization_oracle_check(spec, o.n, chi));
  return rep;
}

Report cmd_selftest(const Options& o, std::ostream& err) {
  Report rep;
  std::set<std::string> expected;
  if (!o.expect_fail.empty()) {
    for (const auto& id : split(o.expect_fail, ',')) expected.insert(id);
  }
  rep.inputs["expect_fail"] = Json(std::vector<std::string>(expected.begin(), expected.end()));
  auto results = run_acceptance(&err);
  Json criteria = Json::array();
  Table t{{"id", "pass", "title", "detail"}, {}};
  for (const auto& r : results) {
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    t.rows.push_back({r.id, r.pass ? "PASS" : "FAIL", r.title, r.detail});
  }
  rep.payload["criteria"] = std::move(criteria);
  rep.table = std::move(t);
  rep.exit_code = acceptance_exit_code(results, expected, err) == 0 ? kExitOk : kExitFailed;
  return rep;
}

// ---- output ------------------------------------------------------------

void write_table(const Table& t, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
    out << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

void append_jsonl(const std::string& path, const Json& envelope) {
  std::ofstream f(path, std::ios::app);
  if (!f) invalid("cannot open --out file '" + path + "'");
  f << envelope.dump() << '\n';
}

Json error_object(const std::string& subcommand, std::string_view kind, const std::string& message,
                  const std::string& witness) {
  Json e = {{"kind", kind}, {"message", message}};
  if (!witness.empty()) e["witness"] = witness;
  return {{"tool", kToolName}, {"version", tool_version()}, {"subcommand", subcommand}, {"error", e}};
}

}  // namespace

std::string tool_version() { return HECKE_ZERO_VERSION; }

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact values at s=0 of partial Hecke L-functions of real quadratic fields", kToolName};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out_path, "Append the report as one JSON line to this file");
  app.add_option("--threads", o.threads, "Worker thread cap (0 = hardware concurrency)")
      ->each([&](const std::string&) { o.threads_set = true; });

  auto* field = app.add_subcommand("field", "Field data and class numbers of Q(sqrt d)");
  field->add_option("--d", o.d, "Squarefree d > 1")->required();

  auto* cf = app.add_subcommand("cf", "Continued fractions");
  cf->require_subcommand(1);
  auto* cf_expand = cf->add_subcommand("expand", "Expand (a + b sqrt d)/c");
  cf_expand->add_option("--d", o.d)->required();
  cf_expand->add_option("--x", o.x, "a,b,c")->required();
  cf_expand->add_option("--kind", o.kind, "plus, minus or both");
  auto* cf_convert = cf->add_subcommand("convert", "Plus word to minus word");
  cf_convert->add_option("--plus", o.plus, "Period digits, comma separated")->required();
  auto* cf_eval = cf->add_subcommand("eval", "Value of a purely periodic word");
  cf_eval->add_option("--plus", o.plus);
  cf_eval->add_option("--minus", o.minus);

  auto* lvalue = app.add_subcommand("lvalue", "L(0, chi, b) for b^-1 = [1, delta]");
  lvalue->add_option("--d", o.d)->required();
  lvalue->add_option("--delta", o.delta, "u,v,w for (u + v sqrt d)/w")->required();
  lvalue->add_option("--q", o.q)->required();
  lvalue->add_option("--chi", o.chi, "Character id q=..;gens=g:e,...")->required();
  lvalue->add_flag("--cells", o.cells, "Include the per-(C,D) table");

  auto* lin = app.add_subcommand("linearity", "Family linearity");
  lin->require_subcommand(1);
  auto* lin_verify = lin->add_subcommand("verify", "Direct values against the affine fit and closed form");
  auto* lin_closed = lin->add_subcommand("closed-form", "Closed-form coefficients");
  auto* lin_hyp = lin->add_subcommand("hypothesis", "Norm-residue hypothesis across k");
  for (auto* sc : {lin_verify, lin_closed, lin_hyp}) {
    sc->add_option("--family", o.family, "Built-in name or JSON file")->required();
    sc->add_option("--q", o.q)->required();
    sc->add_option("--r", o.r)->required();
  }
  for (auto* sc : {lin_verify, lin_closed}) sc->add_option("--chi", o.chi)->required();
  for (auto* sc : {lin_verify, lin_hyp}) sc->add_option("--k", o.k_list, "k values, e.g. 1,2,5..9")->required();

  auto* biro = app.add_subcommand("biro", "Condition search and residue congruences");
  biro->require_subcommand(1);
  auto* biro_search = biro->add_subcommand("search", "Admissible (q, p, chi) pairs");
  auto* biro_res = biro->add_subcommand("residues", "Residues mod p for every pair");
  for (auto* sc : {biro_search, biro_res}) {
    sc->add_option("--q-max", o.q_max);
    sc->add_option("--p-max", o.p_max);
  }
  biro_res->add_option("--family", o.family)->required();
  biro_res->add_option("--r", o.r);
  auto* biro_oracle = biro->add_subcommand("oracle", "Factorization oracle for one instance");
  biro_oracle->add_option("--family", o.family)->required();
  biro_oracle->add_option("--n", o.n)->required();
  biro_oracle->add_option("--chi", o.chi)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--expect-fail", o.expect_fail, "Comma-separated criterion ids known to fail");

  std::string subcommand = args.empty() ? "" : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    bool known = false;
    for (const auto* sc : app.get_subcommands({})) known = known || sc->get_name() == subcommand;
    std::string_view kind = known ? to_string(ErrorKind::ValidationError) : to_string(ErrorKind::UnknownCommand);
    std::string message = known ? e.what() : "unknown command '" + subcommand + "'";
    out << error_object(subcommand, kind, message, "").dump(2) << std::endl;
    err << kToolName << ": " << message << std::endl;
    return kExitValidation;
  }

  std::string path;
  for (const CLI::App* sc = &app; !sc->get_subcommands().empty();) {
    sc = sc->get_subcommands().front();
    path += (path.empty() ? "" : " ") + sc->get_name();
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (o.threads_set) set_thread_limit(o.threads);
    Report rep;
    if (path == "field") rep = cmd_field(o);
    else if (path == "cf expand") rep = cmd_cf_expand(o);
    else if (path == "cf convert") rep = cmd_cf_convert(o);
    else if (path == "cf eval") rep = cmd_cf_eval(o);
    else if (path == "lvalue") rep = cmd_lvalue(o);
    else if (path == "linearity verify") rep = cmd_linearity_verify(o);
    else if (path == "linearity closed-form") rep = cmd_linearity_closed_form(o);
    else if (path == "linearity hypothesis") rep = cmd_linearity_hypothesis(o);
    else if (path == "biro search") rep = cmd_biro_search(o);
    else if (path == "biro residues") rep = cmd_biro_residues(o);
    else if (path == "biro oracle") rep = cmd_biro_oracle(o);
    else if (path == "selftest") rep = cmd_selftest(o, err);
    else throw Error(ErrorKind::UnknownCommand, "unknown command '" + path + "'");

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Json envelope = {{"tool", kToolName},         {"version", tool_version()}, {"subcommand", path},
                     {"inputs", rep.inputs},      {"payload", rep.payload},    {"elapsed_ms", ms}};
    if (o.format == "csv") {
      if (!rep.table) invalid("--format csv is only available for tabular subcommands");
      write_table(*rep.table, out);
    } else {
      out << envelope.dump(2) << std::endl;
    }
    if (!o.out_path.empty()) append_jsonl(o.out_path, envelope);
    return rep.exit_code;
  } catch (const Error& e) {
    out << error_object(path, to_string(e.kind()), e.what(), e.witness()).dump(2) << std::endl;
    err << kToolName << ": " << to_string(e.kind()) << ": " << e.what() << std::endl;
    return e.kind() == ErrorKind::InternalAssertion ? kExitInternal : kExitValidation;
  } catch (const std::exception& e) {
    out << error_object(path, to_string(ErrorKind::InternalAssertion), e.what(), "").dump(2) << std::endl;
    err << kToolName << ": internal error: " << e.what() << std::endl;
    return kExitInternal;
  }
}

}  // namespace hecke::cli
