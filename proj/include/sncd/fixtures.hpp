#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sncd/conductor_calculus.hpp"
#include "sncd/curve.hpp"
#include "sncd/series_and_zeta.hpp"

namespace sncd::fixtures {

/// Star: one center with the given arms; arm vertices are listed outward.
SncdCurve star(std::int64_t center, const std::vector<std::vector<std::int64_t>>& arms,
               std::int64_t center_genus = 0);

/// Cycle of n >= 2 reduced rational curves.
SncdCurve cycle(std::int64_t n);

/// Good reduction: one genus-g component of multiplicity one.
SncdCurve good(std::int64_t g = 1);

/// Minimal sncd model of each Kodaira type. I_1 is the blow-up of the node.
SncdCurve kodaira(const KodairaType& type);
inline SncdCurve kodaira(const std::string& name) { return kodaira(parse_kodaira(name)); }

/// Two elliptic components meeting once.
SncdCurve genus2_elliptic_pair();
/// Double rational curve with six reduced tails; |Phi| = 16.
SncdCurve genus2_star();
/// Two rational curves meeting in three points.
SncdCurve genus2_theta();

struct NamedCurve {
  std::string name;  // file stem
  SncdCurve curve;
};

/// Shipped fixture set, in file order.
std::vector<NamedCurve> library();

struct ProviderSpec {
  std::string name;
  std::string base;                          // stem of the base curve
  std::map<std::int64_t, std::string> curves;  // a -> stem
  std::vector<Jump> jumps;
};

std::vector<ProviderSpec> provider_specs();

/// Provider assembled in memory from the library.
ReductionProvider provider(const ProviderSpec& spec);
ReductionProvider provider(const std::string& name);

/// File stem used for a Kodaira type: "I3", "I0star", "IVstar", ...
std::string stem(const KodairaType& type);

}  // namespace sncd::fixtures
