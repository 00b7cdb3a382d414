#include "sncd/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "sncd/conductor_calculus.hpp"
#include "sncd/curve_json.hpp"
#include "sncd/errors.hpp"
#include "sncd/fiber_invariants.hpp"
#include "sncd/quotient_resolution.hpp"
#include "sncd/series_and_zeta.hpp"
#include "sncd/tame_base_change.hpp"

namespace sncd::cli {

namespace {

Json group_json(const FiniteAbelianGroup& g) {
  Json out = Json::array();
  for (const auto& f : g.invariant_factors()) out.push_back(integer_to_json(f));
  return out;
}

std::string poly_str(const CycloProduct& p) {
  auto poly = p.to_polynomial();
  return poly ? poly->str("t") : p.str("t");
}

Json rational_json(const Rational& q) {
  if (denominator(q) == 1) return integer_to_json(numerator(q));
  return to_string(q);
}

Json ring_json(const RingElement& c) {
  const auto& terms = c.terms();
  if (terms.size() == 1 && terms.begin()->first == Monomial{}) return integer_to_json(terms.begin()->second);
  return c.str();
}

Json series_json(const RationalSeries& s) {
  Json num = Json::array();
  for (const auto& [n, c] : s.numerator()) num.push_back(Json::array({n, ring_json(c)}));
  Json den = Json::array();
  for (const auto& [f, mult] : s.denominator()) {
    for (std::int64_t k = 0; k < mult; ++k) den.push_back(Json::array({f.l_exp, f.t_exp}));
  }
  Json out;
  out["num"] = std::move(num);
  out["den"] = std::move(den);
  out["text"] = s.str();
  return out;
}

Json analyze_json(const SncdCurve& curve) {
  auto report = validate(curve);
  auto inv = analyze(curve);
  auto trace = trace_identities(curve);
  Json out;
  out["p"] = curve.p();
  out["genus"] = inv.genus;
  out["phi"] = group_json(inv.phi);
  out["phi_order"] = integer_to_json(inv.phi.order());
  out["phi_rank"] = inv.phi_rank;
  out["t"] = inv.t;
  out["a"] = inv.a;
  out["u"] = inv.u;
  out["P"] = poly_str(inv.P);
  out["P_prime"] = poly_str(inv.P_prime);
  out["zeta"] = inv.zeta.str("t");
  out["e_model"] = inv.e_model;
  out["tame"] = inv.tame;
  out["additive"] = inv.additive;
  out["index_one"] = report.index_one;
  Json tr;
  tr["P_prime_at_1"] = integer_to_json(trace.p_prime_at_one);
  tr["phi_prime_order"] = integer_to_json(trace.phi_prime_order);
  tr["multiplicity_product"] = rational_json(trace.multiplicity_product);
  tr["agree"] = trace.agree;
  out["trace"] = std::move(tr);
  Json notes = Json::array();
  for (const auto& n : report.notes) notes.push_back(n);
  for (const auto& i : report.issues) notes.push_back(i.message);
  out["notes"] = std::move(notes);
  return out;
}

Json trace_json(const BaseChangeTrace& trace) {
  Json out;
  out["input_digest"] = trace.input_digest;
  out["d"] = trace.d;
  Json vertices = Json::array();
  for (const auto& v : trace.vertices) {
    Json jv;
    jv["id"] = v.id;
    jv["N"] = v.old_multiplicity;
    jv["gcd"] = v.gcd_with_d;
    jv["N_new"] = v.new_multiplicity;
    vertices.push_back(std::move(jv));
  }
  out["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : trace.edges) {
    Json je;
    je["edge"] = Json::array({e.from, e.to});
    je["m"] = Json::array({e.local.m1, e.local.m2});
    je["c"] = e.local.c;
    je["d2"] = e.local.d_second;
    if (e.local.r) je["r"] = *e.local.r;
    if (e.local.chain) {
      je["b"] = e.local.chain->b;
      je["mu"] = e.local.chain->mu;
    }
    je["inserted"] = e.inserted;
    edges.push_back(std::move(je));
  }
  out["edges"] = std::move(edges);
  return out;
}

// flat "key: value" rendering of a report for humans
void print_text(std::ostream& out, const Json& doc, const std::string& prefix = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      print_text(out, value, prefix + key + ".");
    } else if (value.is_string()) {
      out << prefix << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << prefix << key << ": " << value.dump() << "\n";
    }
  }
}

SncdCurve read_curve(const std::string& path, std::optional<std::int64_t> p) {
  SncdCurve curve = load_curve(path);
  if (p) curve = curve.with_p(*p);
  require_valid(curve);
  return curve;
}

struct Options {
  bool json = false;
  std::optional<std::int64_t> p;
  std::string path;
  std::int64_t d = 1;
  bool contract = false;
  std::string output;
  // hj / resolve
  std::int64_t n = 0, r = 0, m1 = 0, m2 = 0;
  // elliptic / genus2
  std::string type, potential = "good";
  std::optional<std::int64_t> vdelta, vj;
  std::int64_t delta = 0;
  std::optional<std::string> art;
  std::int64_t vdmin = 0, sigma = 0, tau = 0, deg = 1;
};

int write_output(std::ostream& out, const Options& opt, const Json& doc) {
  if (opt.json) out << doc.dump(2) << "\n";
  else print_text(out, doc);
  return Ok;
}

int cmd_analyze(std::ostream& out, const Options& opt) {
  return write_output(out, opt, analyze_json(read_curve(opt.path, opt.p)));
}

int cmd_basechange(std::ostream& out, const Options& opt) {
  SncdCurve curve = read_curve(opt.path, opt.p);
  auto result = transform(curve, opt.d);
  SncdCurve image = opt.contract ? contract_minus_one(result.curve) : result.curve;
  Json doc;
  if (!opt.output.empty()) {
    std::ofstream f(opt.output);
    if (!f) throw ParseError("cannot write \"" + opt.output + "\"");
    f << serialize_curve(image);
    doc["curve_file"] = opt.output;
  } else {
    doc["curve"] = curve_to_json(image);
  }
  doc["contracted"] = opt.contract;
  doc["trace"] = trace_json(result.trace);
  if (!opt.json && opt.output.empty()) {
    out << serialize_curve(image);
    return Ok;
  }
  return write_output(out, opt, doc);
}

ReductionProvider read_provider(const Options& opt) {
  auto provider = load_provider(opt.path);
  if (opt.p) {
    provider.p = *opt.p;
    provider.base = provider.base.with_p(*opt.p);
    for (auto& [a, c] : provider.curves) c = c.with_p(*opt.p);
  }
  return provider;
}

Json poles_json(const std::vector<PoleInfo>& poles) {
  Json out = Json::array();
  for (const auto& pole : poles) {
    Json jp;
    jp["slope"] = rational_json(pole.slope);
    jp["order"] = pole.order;
    out.push_back(std::move(jp));
  }
  return out;
}

int cmd_series(std::ostream& out, const Options& opt) {
  auto series = component_series(read_provider(opt));
  Json doc;
  doc["series"] = series_json(series);
  doc["pole_order"] = pole_at(series, 0).order;
  doc["degree"] = series.degree();
  return write_output(out, opt, doc);
}

int cmd_zeta(std::ostream& out, const Options& opt) {
  auto provider = read_provider(opt);
  auto zeta = motivic_zeta(provider);
  auto poles = pole_report(zeta);
  Json doc;
  doc["zeta"] = series_json(zeta);
  doc["c_tame"] = rational_json(provider.jumps.c_tame());
  doc["poles"] = poles_json(poles);
  doc["euler"] = series_json(euler_specialize(provider));
  return write_output(out, opt, doc);
}

int cmd_check(std::ostream& out, const Options& opt) {
  SncdCurve curve = read_curve(opt.path, opt.p);
  auto compfu = compfu_check(curve, opt.d);
  bool commutes = charpoly_commutation(curve, opt.d);
  auto law = e_division_law(curve, opt.d);
  Json doc;
  doc["d"] = opt.d;
  Json jc;
  jc["before"] = integer_to_json(compfu.before);
  jc["after"] = integer_to_json(compfu.after);
  jc["factor"] = integer_to_json(compfu.factor);
  jc["pass"] = compfu.holds();
  doc["component_group"] = std::move(jc);
  Json jp;
  jp["pass"] = commutes;
  doc["charpoly"] = std::move(jp);
  Json je;
  je["predicted"] = law.predicted;
  je["measured"] = law.measured;
  je["pass"] = law.holds();
  doc["e_division"] = std::move(je);
  const bool all = compfu.holds() && commutes && law.holds();
  doc["pass"] = all;
  if (opt.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "component group: " << (compfu.holds() ? "PASS" : "FAIL") << " (" << compfu.before << " -> "
        << compfu.after << ", factor " << compfu.factor << ")\n";
    out << "charpoly commutation: " << (commutes ? "PASS" : "FAIL") << "\n";
    out << "e division law: " << (law.holds() ? "PASS" : "FAIL") << " (" << law.predicted << " / "
        << law.measured << ")\n";
  }
  return all ? Ok : ValidationFailure;
}

int cmd_hj(std::ostream& out, const Options& opt) {
  Json doc;
  doc["b"] = hj_expand(opt.n, opt.r);
  return write_output(out, opt, doc);
}

int cmd_resolve(std::ostream& out, const Options& opt) {
  auto local = local_point_data(opt.m1, opt.m2, opt.d, opt.p.value_or(1));
  Json doc;
  doc["b"] = local.chain ? local.chain->b : std::vector<std::int64_t>{};
  doc["mu"] = local.chain ? local.chain->mu : std::vector<std::int64_t>{};
  doc["c"] = local.c;
  doc["e1"] = local.e1;
  doc["e2"] = local.e2;
  doc["d2"] = local.d_second;
  if (local.r) doc["r"] = *local.r;
  return write_output(out, opt, doc);
}

int cmd_elliptic(std::ostream& out, const Options& opt) {
  EllipticData data;
  data.type = parse_kodaira(opt.type);
  data.v_delta = opt.vdelta;
  data.v_j = opt.vj;
  data.delta_wild = opt.delta;
  data.p = opt.p.value_or(1);
  if (opt.potential == "good") data.potential = PotentialReduction::Good;
  else if (opt.potential == "multiplicative") data.potential = PotentialReduction::Multiplicative;
  else throw ParseError("--potential must be good or multiplicative");

  Json doc;
  doc["type"] = to_string(data.type);
  doc["c_tame"] = rational_json(ctame_elliptic(data.type));
  auto wild = wild_defect(data);
  doc["wild_defect"] = rational_json(wild.defect);
  if (wild.v_j) doc["v_j_predicted"] = *wild.v_j;
  if (data.v_delta) {
    std::optional<Rational> art;
    if (opt.art) art = parse_rational(*opt.art);
    auto rel = artin_relation(data, art);
    doc["c"] = rational_json(rel.c);
    doc["d_pot"] = rel.d_pot;
    doc["art"] = rational_json(rel.art);
  } else if (wild.c) {
    doc["c"] = rational_json(*wild.c);
  }
  return write_output(out, opt, doc);
}

int cmd_genus2(std::ostream& out, const Options& opt) {
  Json doc;
  doc["c"] = rational_json(genus2_c(opt.vdmin, opt.sigma, opt.tau, opt.deg));
  return write_output(out, opt, doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of sncd models of curves and their Jacobians", "sncd"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--p", opt.p, "Residue characteristic exponent (1 for characteristic zero)")->check(CLI::PositiveNumber);

  auto add_common = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  auto* analyze_cmd = add_common(app.add_subcommand("analyze", "Invariant report of a curve"));
  analyze_cmd->add_option("curve", opt.path, "Curve JSON")->required();

  auto* bc = add_common(app.add_subcommand("basechange", "Tame base change of a curve"));
  bc->add_option("curve", opt.path, "Curve JSON")->required();
  bc->add_option("-d", opt.d, "Degree")->required()->check(CLI::PositiveNumber);
  bc->add_flag("--contract", opt.contract, "Contract (-1)-curves in the output");
  bc->add_option("-o", opt.output, "Write the output curve here");

  auto* series_cmd = add_common(app.add_subcommand("series", "Component series of a provider"));
  series_cmd->add_option("provider", opt.path, "Provider JSON")->required();

  auto* zeta_cmd = add_common(app.add_subcommand("zeta", "Motivic zeta function of a provider"));
  zeta_cmd->add_option("provider", opt.path, "Provider JSON")->required();

  auto* check_cmd = add_common(app.add_subcommand("check", "Base change identities for one degree"));
  check_cmd->add_option("curve", opt.path, "Curve JSON")->required();
  check_cmd->add_option("-d", opt.d, "Degree")->required()->check(CLI::PositiveNumber);

  auto* hj_cmd = add_common(app.add_subcommand("hj", "Hirzebruch-Jung expansion of n/r"));
  hj_cmd->add_option("--n", opt.n)->required();
  hj_cmd->add_option("--r", opt.r)->required();

  auto* resolve_cmd = add_common(app.add_subcommand("resolve", "Resolution chain at an intersection point"));
  resolve_cmd->add_option("--m1", opt.m1)->required();
  resolve_cmd->add_option("--m2", opt.m2)->required();
  resolve_cmd->add_option("-d,--d", opt.d)->required();

  auto* ell = add_common(app.add_subcommand("elliptic", "Elliptic base change conductor"));
  ell->add_option("--type", opt.type, "Kodaira type, e.g. II, I3, I0*")->required();
  ell->add_option("--vdelta", opt.vdelta, "Valuation of the minimal discriminant");
  ell->add_option("--vj", opt.vj, "Valuation of j");
  ell->add_option("--delta", opt.delta, "Swan conductor");
  ell->add_option("--potential", opt.potential, "good or multiplicative");
  ell->add_option("--art", opt.art, "Artin conductor to cross-check");

  auto* g2 = add_common(app.add_subcommand("genus2", "Genus 2 base change conductor"));
  g2->add_option("--vdmin", opt.vdmin)->required();
  g2->add_option("--sigma", opt.sigma)->required();
  g2->add_option("--tau", opt.tau)->required();
  g2->add_option("--deg", opt.deg)->required();

  // CLI11 consumes a reversed argument vector
  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    if (opt.json) out << Json{{"error", e.what()}, {"kind", "UsageError"}}.dump() << "\n";
    else err << "usage error: " << e.what() << "\n";
    return UsageError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(out, opt);
    if (bc->parsed()) return cmd_basechange(out, opt);
    if (series_cmd->parsed()) return cmd_series(out, opt);
    if (zeta_cmd->parsed()) return cmd_zeta(out, opt);
    if (check_cmd->parsed()) return cmd_check(out, opt);
    if (hj_cmd->parsed()) return cmd_hj(out, opt);
    if (resolve_cmd->parsed()) return cmd_resolve(out, opt);
    if (ell->parsed()) return cmd_elliptic(out, opt);
    if (g2->parsed()) return cmd_genus2(out, opt);
  } catch (const Error& e) {
    if (opt.json) out << Json{{"error", e.what()}, {"kind", e.kind()}}.dump() << "\n";
    else err << "error: " << e.what() << "\n";
    return ValidationFailure;
  }
  return UsageError;
}

}  // namespace sncd::cli
