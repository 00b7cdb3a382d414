#include "sncd/series_and_zeta.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sncd/curve_json.hpp"
#include "sncd/errors.hpp"
#include "sncd/fiber_invariants.hpp"

namespace sncd {

// ------------------------------------------------------------------- jumps

JumpSet::JumpSet(const std::vector<Jump>& jumps) {
  std::map<Rational, std::int64_t> merged;
  for (const auto& jump : jumps) {
    if (jump.j < 0 || jump.j >= 1) throw InconsistentData("jump " + to_string(jump.j) + " is outside [0, 1)");
    if (jump.m < 1) throw InconsistentData("jump " + to_string(jump.j) + " has multiplicity < 1");
    merged[jump.j] += jump.m;
  }
  for (const auto& [j, m] : merged) jumps_.push_back({j, m});
}

Rational JumpSet::c_tame() const {
  Rational c = 0;
  for (const auto& jump : jumps_) c += jump.m * jump.j;
  return c;
}

std::int64_t JumpSet::total_multiplicity() const {
  std::int64_t s = 0;
  for (const auto& jump : jumps_) s += jump.m;
  return s;
}

std::int64_t JumpSet::multiplicity(const Rational& j) const {
  for (const auto& jump : jumps_) {
    if (jump.j == j) return jump.m;
  }
  return 0;
}

Integer ord_function(const JumpSet& jumps, std::int64_t d) {
  Integer ord = 0;
  for (const auto& jump : jumps.jumps()) ord += jump.m * floor(d * jump.j);
  return ord;
}

JumpSet prym_jump_difference(const JumpSet& a, const JumpSet& a1) {
  std::string missing;
  for (const auto& jump : a1.jumps()) {
    if (a.multiplicity(jump.j) < jump.m) {
      if (!missing.empty()) missing += ", ";
      missing += to_string(jump.j) + " x" + std::to_string(jump.m);
    }
  }
  if (!missing.empty()) throw NotContained("jumps not contained: " + missing);
  std::vector<Jump> out;
  for (const auto& jump : a.jumps()) {
    std::int64_t m = jump.m - a1.multiplicity(jump.j);
    if (m > 0) out.push_back({jump.j, m});
  }
  return JumpSet(out);
}

// ---------------------------------------------------------------- provider

std::int64_t ReductionProvider::e() const { return stabilization_index(base); }

std::vector<std::int64_t> ReductionProvider::degrees() const {
  std::int64_t n = e();
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a == 0 && (p <= 1 || gcd64(a, p) == 1)) out.push_back(a);
  }
  return out;
}

const SncdCurve& ReductionProvider::curve_for(std::int64_t a) const {
  auto it = curves.find(a);
  if (it != curves.end()) return it->second;
  if (a == 1) return base;
  throw ProviderIncomplete("no model for degree " + std::to_string(a));
}

void validate_provider(const ReductionProvider& provider) {
  require_valid(provider.base);
  std::int64_t e = provider.e();
  std::string missing;
  for (std::int64_t a : provider.degrees()) {
    if (a != 1 && !provider.curves.count(a)) missing += (missing.empty() ? "" : ", ") + std::to_string(a);
  }
  if (!missing.empty()) throw ProviderIncomplete("missing models for degrees " + missing);

  std::int64_t g = genus(provider.base);
  for (std::int64_t a : provider.degrees()) {
    const SncdCurve& c = provider.curve_for(a);
    require_valid(c);
    if (stabilization_index(c) != e / a)
      throw InconsistentData("model for degree " + std::to_string(a) + " has e = " +
                             std::to_string(stabilization_index(c)) + ", expected " + std::to_string(e / a));
    if (genus(c) != g)
      throw InconsistentData("model for degree " + std::to_string(a) + " has genus " + std::to_string(genus(c)));
  }
  if (provider.jumps.total_multiplicity() > g)
    throw InconsistentData("jump multiplicities exceed the genus");
  for (const auto& jump : provider.jumps.jumps()) {
    if (denominator(jump.j * e) != 1)
      throw InconsistentData("e * " + to_string(jump.j) + " is not an integer");
  }
}

ReductionProvider load_provider(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw ParseError(path + ": provider must be an object");
  namespace fs = std::filesystem;
  fs::path dir = fs::path(path).parent_path();
  auto resolve = [&](const Json& v, const std::string& field) {
    if (!v.is_string()) throw ParseError(path + ": " + field + ": expected a file name");
    fs::path f(v.get<std::string>());
    return (f.is_absolute() ? f : dir / f).string();
  };

  ReductionProvider provider;
  if (doc.contains("p")) {
    if (!doc["p"].is_number_integer() || doc["p"].get<std::int64_t>() < 1)
      throw ParseError(path + ": p: expected an integer >= 1");
    provider.p = doc["p"].get<std::int64_t>();
  }
  if (!doc.contains("base")) throw ParseError(path + ": base: missing");
  provider.base = load_curve(resolve(doc["base"], "base")).with_p(provider.p);
  if (doc.contains("curves")) {
    if (!doc["curves"].is_object()) throw ParseError(path + ": curves: expected an object");
    for (const auto& [key, value] : doc["curves"].items()) {
      std::int64_t a = 0;
      try {
        std::size_t used = 0;
        a = std::stoll(key, &used);
        if (used != key.size() || a < 1) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError(path + ": curves." + key + ": key must be a positive integer");
      }
      provider.curves[a] = load_curve(resolve(value, "curves." + key)).with_p(provider.p);
    }
  }
  if (doc.contains("jumps")) {
    if (!doc["jumps"].is_array()) throw ParseError(path + ": jumps: expected an array");
    std::vector<Jump> jumps;
    std::size_t k = 0;
    for (const auto& item : doc["jumps"]) {
      std::string at = path + ": jumps[" + std::to_string(k++) + "]";
      if (!item.is_object() || !item.contains("j")) throw ParseError(at + ".j: missing");
      Jump jump;
      if (item["j"].is_string()) jump.j = parse_rational(item["j"].get<std::string>());
      else if (item["j"].is_number_integer()) jump.j = Rational(item["j"].get<std::int64_t>());
      else throw ParseError(at + ".j: expected \"num/den\"");
      if (item.contains("m")) {
        if (!item["m"].is_number_integer()) throw ParseError(at + ".m: expected an integer");
        jump.m = item["m"].get<std::int64_t>();
      }
      jumps.push_back(jump);
    }
    provider.jumps = JumpSet(jumps);
  }
  return provider;
}

// ------------------------------------------------------------------ series

std::int64_t residue_period(std::int64_t e, std::int64_t p) {
  if (p <= 1 || e % p == 0) return e;
  return e * p;
}

namespace {

bool admissible(std::int64_t d, std::int64_t e, std::int64_t p) {
  return gcd64(d, e) == 1 && (p <= 1 || gcd64(d, p) == 1);
}

RingElement l_minus_one_power(std::int64_t t) {
  RingElement out(1);
  RingElement factor = RingElement::l_power(1) - RingElement(1);
  for (std::int64_t i = 0; i < t; ++i) out = out * factor;
  return out;
}

AbSymbol positive_genera(const SncdCurve& curve) {
  AbSymbol out;
  for (const auto& v : curve.vertices()) {
    if (v.genus > 0) out.push_back(v.genus);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RationalSeries component_series(const ReductionProvider& provider) {
  validate_provider(provider);
  const std::int64_t e = provider.e();
  const std::int64_t p = provider.p;
  RationalSeries total;
  for (std::int64_t a : provider.degrees()) {
    const SncdCurve& curve = provider.curve_for(a);
    Integer phi = component_group(curve).order();
    std::int64_t t = geometry(curve).betti_one;
    std::int64_t ea = e / a;
    std::int64_t period = residue_period(ea, p);
    RationalSeries part;
    for (std::int64_t b = 1; b <= period; ++b) {
      if (admissible(b, ea, p)) part += series_theta(period, b, t, 0);
    }
    total += (part * RingElement(phi)).substitute_power(a);
  }
  return total.reduced();
}

RationalSeries motivic_zeta(const ReductionProvider& provider) {
  validate_provider(provider);
  const std::int64_t e = provider.e();
  const std::int64_t p = provider.p;
  const std::int64_t period = residue_period(e, p);
  Rational w_exact = period * provider.jumps.c_tame();
  if (denominator(w_exact) != 1) throw NonIntegralAssembly("period * c_tame is not an integer");
  const auto w = static_cast<std::int64_t>(numerator(w_exact));

  RationalSeries total;
  for (std::int64_t alpha = 1; alpha <= period; ++alpha) {
    if (p > 1 && gcd64(alpha, p) != 1) continue;
    std::int64_t alpha_prime = gcd64(alpha, e);
    const SncdCurve& curve = provider.curve_for(alpha_prime);
    InvariantReport inv = analyze(curve);

    RingElement coefficient = RingElement(inv.phi.order()) * l_minus_one_power(inv.t) *
                              RingElement::l_power(inv.u) * RingElement::abelian(positive_genera(curve));
    Integer ord = ord_function(provider.jumps, alpha);
    coefficient = coefficient.shift_l(static_cast<std::int64_t>(ord));

    // sum_q ((q M + alpha) / alpha')^t L^{q w} T^{q M + alpha}
    RationalSeries theta = series_theta(period, alpha, inv.t, w);
    Integer scale = ipow(Integer(alpha_prime), static_cast<unsigned>(inv.t));
    RationalSeries::Numerator num;
    for (const auto& [n, c] : theta.numerator()) {
      if (!c.divide_exact(scale, num[n]))
        throw NonIntegralAssembly("coefficient of T^" + std::to_string(n) + " is not divisible by " + scale.str());
    }
    total += RationalSeries(num, theta.denominator()) * coefficient;
  }
  return total.reduced();
}

RationalSeries euler_specialize(const ReductionProvider& provider) {
  validate_provider(provider);
  const std::int64_t e = provider.e();
  const std::int64_t p = provider.p;
  const std::int64_t period = residue_period(e, p);
  RationalSeries total;
  for (std::int64_t alpha = 1; alpha <= period; ++alpha) {
    if (p > 1 && gcd64(alpha, p) != 1) continue;
    const SncdCurve& curve = provider.curve_for(gcd64(alpha, e));
    auto geo = geometry(curve);
    if (geo.betti_one != 0 || geo.abelian_rank != 0) continue;
    total += series_theta(period, alpha, 0, 0) * RingElement(component_group(curve).order());
  }
  return total.reduced();
}

}  // namespace sncd
