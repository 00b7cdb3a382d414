#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sncd/integer.hpp"

namespace sncd {

/// Opaque class of an abelian variety, keyed by the multiset of positive
/// genera it came from. The empty key is the class of a point and is never stored.
using AbSymbol = std::vector<std::int64_t>;

/// L^{l} times a product of abelian symbols.
struct Monomial {
  std::int64_t l_exp = 0;
  std::vector<AbSymbol> ab;  // sorted; free commutative monoid

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Element of Z[L, L^-1][AB].
class RingElement {
 public:
  RingElement() = default;
  RingElement(const Integer& c);  // NOLINT: integers embed
  static RingElement l_power(std::int64_t l, const Integer& c = 1);
  /// Class of the abelian symbol keyed by `genera` (positive entries only; empty -> 1).
  static RingElement abelian(AbSymbol genera);

  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  RingElement operator+(const RingElement& rhs) const;
  RingElement operator-(const RingElement& rhs) const;
  RingElement operator*(const RingElement& rhs) const;
  RingElement operator-() const;
  RingElement& operator+=(const RingElement& rhs);
  bool operator==(const RingElement&) const = default;

  /// Multiplies by L^shift.
  RingElement shift_l(std::int64_t shift) const;
  /// Divides every coefficient by d; returns false (leaving `out` unspecified) if some
  /// coefficient is not divisible.
  bool divide_exact(const Integer& d, RingElement& out) const;

  /// Euler characteristic: L -> 1, every abelian symbol -> 0.
  Integer euler_characteristic() const;

  /// "2L-2", "L^2[B:1]", ...
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  std::map<Monomial, Integer> terms_;
};

/// Factor (1 - L^a T^b) of a denominator, b >= 1.
struct DenominatorFactor {
  std::int64_t l_exp = 0;
  std::int64_t t_exp = 1;
  auto operator<=>(const DenominatorFactor&) const = default;
  bool operator==(const DenominatorFactor&) const = default;
};

/// numerator(T) / prod (1 - L^a T^b)^{mult}, numerator coefficients in Z[L^{+-1}][AB].
class RationalSeries {
 public:
  using Numerator = std::map<std::int64_t, RingElement>;    // T exponent -> coefficient
  using Denominator = std::map<DenominatorFactor, std::int64_t>;

  RationalSeries() = default;
  RationalSeries(Numerator num, Denominator den);

  /// c * T^n with trivial denominator.
  static RationalSeries term(const RingElement& c, std::int64_t t_exp);

  const Numerator& numerator() const noexcept { return num_; }
  const Denominator& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.empty(); }

  RationalSeries operator+(const RationalSeries& rhs) const;
  RationalSeries& operator+=(const RationalSeries& rhs);
  RationalSeries operator*(const RingElement& c) const;
  bool operator==(const RationalSeries&) const = default;

  /// The series divided by (1 - L^a T^b)^mult.
  RationalSeries divided_by(const DenominatorFactor& f, std::int64_t mult = 1) const;

  /// T -> T^a.
  RationalSeries substitute_power(std::int64_t a) const;

  /// Cancels every denominator factor that divides the numerator exactly.
  RationalSeries reduced() const;

  /// Power-series coefficients of T^0 .. T^order.
  std::vector<RingElement> expand_to(std::int64_t order) const;

  /// deg_T(numerator) - sum of b over denominator factors (with multiplicity).
  /// Throws InternalError for the zero series.
  std::int64_t degree() const;

  /// Applies the Euler characteristic to every coefficient (L -> 1, abelian symbols -> 0).
  RationalSeries euler_specialization() const;

  /// "num / (1-T)^2(1-L T^6)".
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

 private:
  void normalize();
  Numerator num_;
  Denominator den_;
};

/// Closed form of sum_{q >= 0} (q e + b)^t L^{q w} T^{q e + b}, obtained by applying
/// t times the operator T d/dT to T^b / (1 - L^w T^e).
RationalSeries series_theta(std::int64_t e, std::int64_t b, std::int64_t t, std::int64_t w);

/// One pole of Z(L^{-s}) located at s = slope (T = 1 is slope 0 for L-free series).
struct PoleInfo {
  Rational slope;
  std::int64_t denominator_multiplicity = 0;
  std::int64_t numerator_vanishing = 0;
  std::int64_t order = 0;  // denominator_multiplicity - numerator_vanishing
};

/// Poles at every slope a/b occurring in the denominator, sorted by slope.
/// Throws NonReducible when the numerator vanishes to at least the denominator
/// multiplicity at some slope (factors that exact division could not cancel).
std::vector<PoleInfo> pole_report(const RationalSeries& s);

/// Pole data at one slope (order 0 if no denominator factor has that slope).
PoleInfo pole_at(const RationalSeries& s, const Rational& slope);

}  // namespace sncd
