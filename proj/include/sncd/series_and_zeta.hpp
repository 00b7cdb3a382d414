#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sncd/curve.hpp"
#include "sncd/integer.hpp"
#include "sncd/rational_series.hpp"

namespace sncd {

struct Jump {
  Rational j;          // in [0, 1)
  std::int64_t m = 1;  // multiplicity >= 1
  bool operator==(const Jump&) const = default;
};

/// Multiset of jumps, kept sorted by j with merged multiplicities.
class JumpSet {
 public:
  JumpSet() = default;
  /// Throws InconsistentData on j outside [0, 1) or m < 1.
  explicit JumpSet(const std::vector<Jump>& jumps);

  const std::vector<Jump>& jumps() const noexcept { return jumps_; }
  bool empty() const noexcept { return jumps_.empty(); }
  /// sum m_j j
  Rational c_tame() const;
  /// sum m_j
  std::int64_t total_multiplicity() const;
  std::int64_t multiplicity(const Rational& j) const;
  bool operator==(const JumpSet&) const = default;

 private:
  std::vector<Jump> jumps_;
};

/// Reduction data over the tame extensions of degree a | e, gcd(a, p) = 1.
struct ReductionProvider {
  std::int64_t p = 1;
  SncdCurve base;
  std::map<std::int64_t, SncdCurve> curves;  // a -> model over K(a); a = 1 may be omitted
  JumpSet jumps;

  std::int64_t e() const;
  /// Divisors of e prime to p, increasing.
  std::vector<std::int64_t> degrees() const;
  /// Model over K(a); the base for a = 1 when not given. Throws ProviderIncomplete.
  const SncdCurve& curve_for(std::int64_t a) const;
};

/// Checks completeness (ProviderIncomplete) and the consistency of e, genus
/// and jumps (InconsistentData).
void validate_provider(const ReductionProvider& provider);

/// Paths inside the document are resolved relative to the document's directory.
ReductionProvider load_provider(const std::string& path);

/// Smallest period of the degrees d prime to p with gcd(d, e) fixed:
/// e itself when p = 1 or p | e, otherwise e p.
std::int64_t residue_period(std::int64_t e, std::int64_t p);

RationalSeries component_series(const ReductionProvider& provider);

/// sum m floor(d j)
Integer ord_function(const JumpSet& jumps, std::int64_t d);

RationalSeries motivic_zeta(const ReductionProvider& provider);

/// sum over additive degrees d of |Phi(A(d))| T^d, in closed form.
RationalSeries euler_specialize(const ReductionProvider& provider);

/// Pointwise multiplicity difference. Throws NotContained.
JumpSet prym_jump_difference(const JumpSet& a, const JumpSet& a1);

}  // namespace sncd
