#include "sncd/polynomial.hpp"

#include <sstream>

#include "sncd/errors.hpp"

namespace sncd {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Integer> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Integer> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& d) const {
  if (d.is_zero() || d.coeffs_.back() != 1) throw InternalError("exact_div needs a monic divisor");
  if (degree() < d.degree()) {
    if (is_zero()) return {};
    throw InternalError("polynomial division leaves a remainder");
  }
  std::vector<Integer> rem = coeffs_;
  const std::size_t dn = d.coeffs_.size() - 1;
  std::vector<Integer> q(rem.size() - dn);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = rem[k + dn];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= c * d.coeffs_[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw InternalError("polynomial division leaves a remainder");
  }
  return IntPolynomial(std::move(q));
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = boost::multiprecision::abs(c);
    if (c < 0) os << "-";
    else if (!first) os << "+";
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

IntPolynomial t_power_minus_one(std::size_t a) {
  std::vector<Integer> v(a + 1);
  v[0] = -1;
  v[a] += 1;
  return IntPolynomial(std::move(v));
}

IntPolynomial cyclotomic_polynomial(std::size_t m) {
  if (m == 0) throw InternalError("cyclotomic index must be positive");
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= m; ++d) {
    if (m % d == 0) divisors.push_back(d);
  }
  // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e, built up over the divisors of m.
  std::vector<IntPolynomial> phi(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    IntPolynomial p = t_power_minus_one(divisors[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (divisors[i] % divisors[j] == 0) p = p.exact_div(phi[j]);
    }
    phi[i] = std::move(p);
  }
  return phi.back();
}

}  // namespace sncd
