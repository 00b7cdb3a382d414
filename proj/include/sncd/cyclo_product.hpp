#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sncd/integer.hpp"
#include "sncd/polynomial.hpp"

namespace sncd {

/// Exact factored expression prod_a (t^a - 1)^{e_a} with integer exponents.
///
/// The (t^a - 1) basis is primary. The cyclotomic basis prod_m Phi_m^{k_m},
/// with k_m = sum over multiples a of m of e_a, is derived on demand and is
/// the canonical form used for equality.
class CycloProduct {
 public:
  using Exponents = std::map<std::int64_t, std::int64_t>;

  CycloProduct() = default;
  /// Entries with a < 1 throw InternalError; zero exponents are dropped.
  explicit CycloProduct(const Exponents& factors);

  /// (t^a - 1)^e.
  static CycloProduct factor(std::int64_t a, std::int64_t e = 1);

  const Exponents& factors() const noexcept { return factors_; }
  bool has_cyclotomic_cache() const noexcept { return cyclotomic_.has_value(); }

  /// m -> k_m, zero entries omitted.
  Exponents cyclotomic_form() const;
  bool is_polynomial() const;
  /// sum_a a * e_a.
  std::int64_t degree() const;

  /// Expanded polynomial; nullopt when some k_m < 0.
  std::optional<IntPolynomial> to_polynomial() const;

  /// Value at t = 1 of a polynomial product; Phi_1(1) = 0 is handled exactly.
  /// Throws InternalError when the product is not a polynomial.
  Integer value_at_one() const;

  CycloProduct operator*(const CycloProduct& rhs) const;
  CycloProduct inverse() const;
  /// Equality as rational functions (compares cyclotomic forms).
  bool operator==(const CycloProduct& rhs) const;

  /// "(t^6-1)(t^3-1)^-1(t-1)"; "1" for the empty product.
  std::string str(const std::string& var = "t") const;

 private:
  friend CycloProduct cyclo_normalize(const CycloProduct&);
  Exponents factors_;
  std::optional<Exponents> cyclotomic_;
};

/// Copy of P with the cyclotomic form cached.
CycloProduct cyclo_normalize(const CycloProduct& p);

/// Q -> Q^{(d)}, the product over roots z of (t - z^d):
/// each (t^a - 1)^e becomes (t^{a/g} - 1)^{g e} with g = gcd(a, d).
CycloProduct cyclo_power_d(const CycloProduct& p, std::int64_t d);

/// Smallest e > 0 with z^e = 1 for every root z: lcm of m with k_m > 0 (1 if none).
/// Throws InternalError when P is not a polynomial.
std::int64_t e_from_roots(const CycloProduct& p);

/// Phi-exponent domination: k_m(divisor) <= k_m(p) for all m.
bool divides(const CycloProduct& divisor, const CycloProduct& p);

/// Euler totient.
std::int64_t euler_phi(std::int64_t n);

}  // namespace sncd
