#include "sncd/conductor_calculus.hpp"

#include <algorithm>

#include "sncd/errors.hpp"

namespace sncd {

// ----------------------------------------------------------------- Kodaira

KodairaType parse_kodaira(const std::string& text) {
  static const std::pair<const char*, KodairaFamily> fixed[] = {
      {"II", KodairaFamily::II},           {"III", KodairaFamily::III},
      {"IV", KodairaFamily::IV},           {"IV*", KodairaFamily::IV_star},
      {"III*", KodairaFamily::III_star},   {"II*", KodairaFamily::II_star},
  };
  for (const auto& [name, family] : fixed) {
    if (text == name) return {family, 0};
  }
  // I<n> or I<n>*, also accepting an underscore: I_3, I_0*
  std::string s = text;
  if (s.size() >= 2 && s[0] == 'I') {
    std::size_t pos = 1;
    if (s[pos] == '_') ++pos;
    bool star = s.back() == '*';
    std::string digits = s.substr(pos, s.size() - pos - (star ? 1 : 0));
    if (!digits.empty() && digits.size() <= 9 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return {star ? KodairaFamily::I_star : KodairaFamily::I, std::stoll(digits)};
    }
  }
  throw ParseError("unknown Kodaira type \"" + text + "\"");
}

std::string to_string(const KodairaType& type) {
  switch (type.family) {
    case KodairaFamily::I: return "I" + std::to_string(type.n);
    case KodairaFamily::II: return "II";
    case KodairaFamily::III: return "III";
    case KodairaFamily::IV: return "IV";
    case KodairaFamily::I_star: return "I" + std::to_string(type.n) + "*";
    case KodairaFamily::IV_star: return "IV*";
    case KodairaFamily::III_star: return "III*";
    case KodairaFamily::II_star: return "II*";
  }
  return "?";
}

Rational ctame_elliptic(const KodairaType& type) {
  switch (type.family) {
    case KodairaFamily::I: return 0;
    case KodairaFamily::II: return Rational(1, 6);
    case KodairaFamily::III: return Rational(1, 4);
    case KodairaFamily::IV: return Rational(1, 3);
    case KodairaFamily::I_star: return Rational(1, 2);
    case KodairaFamily::IV_star: return Rational(2, 3);
    case KodairaFamily::III_star: return Rational(3, 4);
    case KodairaFamily::II_star: return Rational(5, 6);
  }
  return 0;
}

// ---------------------------------------------------------------- elliptic

namespace {

std::int64_t require_v_j(const EllipticData& data) {
  if (!data.v_j) throw MissingField("v_j is required for potential multiplicative reduction");
  if (*data.v_j >= 0) throw InconsistentData("potential multiplicative reduction needs v_j < 0");
  return *data.v_j;
}

}  // namespace

Rational c_elliptic(const EllipticData& data) {
  if (!data.v_delta) throw MissingField("v_delta");
  if (data.potential == PotentialReduction::Good) return Rational(*data.v_delta, 12);
  return Rational(*data.v_delta + require_v_j(data), 12);
}

Rational c_relative(std::int64_t v_delta, std::int64_t v_delta_prime, std::int64_t ram_index) {
  if (ram_index < 1) throw InconsistentData("ramification index must be >= 1");
  return (Rational(v_delta) - Rational(v_delta_prime, ram_index)) / 12;
}

std::int64_t d_pot(const EllipticData& data) {
  if (data.potential == PotentialReduction::Good) return 0;
  return -require_v_j(data);
}

ArtinRelation artin_relation(const EllipticData& data, std::optional<Rational> art) {
  ArtinRelation out;
  out.c = c_elliptic(data);
  out.d_pot = d_pot(data);
  out.art = -12 * out.c - out.d_pot;
  if (art && *art != out.art)
    throw InconsistentData("c = -(Art + d_pot)/12 fails: Art = " + to_string(*art) + ", expected " +
                           to_string(out.art));
  return out;
}

WildDefect wild_defect(const EllipticData& data) {
  if (data.delta_wild < 0) throw InconsistentData("Swan conductor must be >= 0");
  WildDefect out;
  const std::int64_t delta = data.delta_wild;
  const bool p2_istar = data.p == 2 && data.type.family == KodairaFamily::I_star;
  if (p2_istar && data.potential == PotentialReduction::Multiplicative) {
    out.defect = Rational(delta, 4);
    out.c = Rational(delta + 2, 4);
    out.v_j = 2 * delta - data.type.n;
  } else if (p2_istar) {
    out.defect = Rational(delta + data.type.n, 12);
    out.c = ctame_elliptic(data.type) + out.defect;
  } else {
    out.defect = Rational(delta, 12);
    out.c = ctame_elliptic(data.type) + out.defect;
  }
  return out;
}

Rational genus2_c(std::int64_t v_delta_min, std::int64_t sigma, std::int64_t tau, std::int64_t ext_degree) {
  if (ext_degree < 1) throw InconsistentData("extension degree must be >= 1");
  if (sigma < 0 || tau < 0 || tau > sigma) throw InconsistentData("need 0 <= tau <= sigma");
  Rational c = (Rational(v_delta_min) - Rational(sigma + tau, ext_degree)) / 10;
  if (c < 0) throw NegativeConductor("v(Delta_min) is too small: c = " + to_string(c));
  return c;
}

// ----------------------------------------------------------- ramification

void validate_filtration(const RamificationFiltration& filt) {
  const auto& lv = filt.levels;
  for (std::size_t i = 0; i < lv.size(); ++i) {
    const std::string at = "level " + std::to_string(i) + ": ";
    if (lv[i].order < 1) throw BadFiltration(at + "group order must be positive");
    if (lv[i].codim < 0) throw BadFiltration(at + "codimension must be >= 0");
    if (lv[0].order % lv[i].order != 0) throw BadFiltration(at + "order does not divide |Gamma|");
    if (lv[i].order == 1 && lv[i].codim != 0) throw BadFiltration(at + "trivial group with nonzero codimension");
    if (i > 0) {
      if (lv[i - 1].order % lv[i].order != 0) throw BadFiltration(at + "order does not divide the previous one");
      if (lv[i].codim > lv[i - 1].codim) throw BadFiltration(at + "codimension increases");
    }
  }
}

ArtinSwan artin_swan(const RamificationFiltration& filt) {
  validate_filtration(filt);
  ArtinSwan out;
  const Integer n = filt.group_order();
  for (std::size_t i = 0; i < filt.levels.size(); ++i) {
    Rational term = Rational(filt.levels[i].order, n) * filt.levels[i].codim;
    out.art += term;
    if (i == 0) out.tame = term;
    else out.sw += term;
  }
  return out;
}

RamificationFiltration filtration_base_change(const RamificationFiltration& filt, std::int64_t d,
                                              std::optional<std::int64_t> codim0) {
  validate_filtration(filt);
  if (d < 1) throw BadFiltration("degree must be >= 1");
  RamificationFiltration out;
  if (filt.levels.empty()) return out;
  const Integer n = filt.group_order();
  const auto e = static_cast<std::int64_t>(gcd(Integer(d), n));
  out.levels.push_back({n / e, codim0.value_or(filt.levels[0].codim)});
  // level i > 0 reads old level ceil(i e / d); the last nontrivial old level L
  // is reached for i up to L d / e
  const auto last = static_cast<std::int64_t>(filt.levels.size()) - 1;
  for (std::int64_t i = 1; i <= last * d / e; ++i) {
    std::int64_t k = (i * e + d - 1) / d;
    out.levels.push_back(filt.levels[static_cast<std::size_t>(k)]);
  }
  validate_filtration(out);
  if (artin_swan(out).sw != d * artin_swan(filt).sw) throw InternalError("Sw(V(d)) != d Sw(V)");
  return out;
}

TorusCtame torus_ctame(std::int64_t g, std::int64_t rank_fixed, const Rational& sw) {
  if (rank_fixed < 0 || rank_fixed > g) throw InconsistentData("need 0 <= rank_fixed <= g");
  if (sw < 0) throw InconsistentData("Swan conductor must be >= 0");
  return {Rational(g - rank_fixed, 2), sw / 2};
}

}  // namespace sncd
