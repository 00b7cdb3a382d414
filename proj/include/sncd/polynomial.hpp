#pragma once

#include <string>
#include <vector>

#include "sncd/integer.hpp"

namespace sncd {

/// Dense univariate polynomial over Z, coefficients stored low degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);

  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  bool operator==(const IntPolynomial&) const = default;

  /// Exact division by a monic divisor; throws InternalError if it leaves a remainder.
  IntPolynomial exact_div(const IntPolynomial& monic_divisor) const;

  Integer evaluate(const Integer& x) const;

  /// Human form in the variable `var`, e.g. "t^2-t+1".
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// t^a - 1.
IntPolynomial t_power_minus_one(std::size_t a);

/// The m-th cyclotomic polynomial.
IntPolynomial cyclotomic_polynomial(std::size_t m);

}  // namespace sncd
