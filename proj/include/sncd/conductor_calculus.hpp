#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sncd/integer.hpp"

namespace sncd {

enum class KodairaFamily { I, II, III, IV, I_star, IV_star, III_star, II_star };

struct KodairaType {
  KodairaFamily family = KodairaFamily::I;
  std::int64_t n = 0;  // used by I_n and I_n*
  bool operator==(const KodairaType&) const = default;
};

/// "I0", "I5", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*". Throws ParseError.
KodairaType parse_kodaira(const std::string& text);
std::string to_string(const KodairaType& type);

enum class PotentialReduction { Good, Multiplicative };

struct EllipticData {
  KodairaType type;
  std::optional<std::int64_t> v_delta;
  std::optional<std::int64_t> v_j;
  std::int64_t delta_wild = 0;  // Swan conductor
  PotentialReduction potential = PotentialReduction::Good;
  std::int64_t p = 1;
};

Rational ctame_elliptic(const KodairaType& type);

/// Throws MissingField (v_delta; v_j for potential multiplicative) or
/// InconsistentData (v_j >= 0 with potential multiplicative reduction).
Rational c_elliptic(const EllipticData& data);

Rational c_relative(std::int64_t v_delta, std::int64_t v_delta_prime, std::int64_t ram_index);

std::int64_t d_pot(const EllipticData& data);

struct ArtinRelation {
  Rational c;
  Rational art;       // -12 c - d_pot
  std::int64_t d_pot = 0;
};

/// Throws InconsistentData when `art` is given and disagrees with -12 c - d_pot.
ArtinRelation artin_relation(const EllipticData& data, std::optional<Rational> art = std::nullopt);

struct WildDefect {
  Rational defect;                  // c - c_tame
  std::optional<Rational> c;        // closed form when the branch gives one
  std::optional<std::int64_t> v_j;  // p = 2, I_n*, potential multiplicative
};

WildDefect wild_defect(const EllipticData& data);

/// (v - (sigma + tau)/deg) / 10. Throws NegativeConductor or InconsistentData.
Rational genus2_c(std::int64_t v_delta_min, std::int64_t sigma, std::int64_t tau, std::int64_t ext_degree);

/// Lower-numbering filtration Gamma_0 = Gamma >= Gamma_1 >= ...; level i is
/// levels[i]; levels past the end are trivial.
struct RamificationLevel {
  Integer order;          // |Gamma_i|
  std::int64_t codim = 0; // dim V / V^{Gamma_i}
  bool operator==(const RamificationLevel&) const = default;
};

struct RamificationFiltration {
  std::vector<RamificationLevel> levels;
  Integer group_order() const { return levels.empty() ? Integer(1) : levels.front().order; }
  bool operator==(const RamificationFiltration&) const = default;
};

/// Throws BadFiltration.
void validate_filtration(const RamificationFiltration& filt);

struct ArtinSwan {
  Rational art;
  Rational sw;
  Rational tame;  // level-0 term
};

ArtinSwan artin_swan(const RamificationFiltration& filt);

/// Filtration over a tame extension of degree d: Gamma'_i = Gamma_{ceil(i e / d)}
/// for i > 0 with e = gcd(d, |Gamma|), |Gamma'| = |Gamma| / e. The level-0
/// codimension is kept unless `codim0` is given. Checks Sw' = d Sw.
RamificationFiltration filtration_base_change(const RamificationFiltration& filt, std::int64_t d,
                                              std::optional<std::int64_t> codim0 = std::nullopt);

struct TorusCtame {
  Rational c_tame;
  Rational slope;
};

TorusCtame torus_ctame(std::int64_t g, std::int64_t rank_fixed, const Rational& sw);

}  // namespace sncd
