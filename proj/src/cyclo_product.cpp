#include "sncd/cyclo_product.hpp"

#include <sstream>

#include "sncd/errors.hpp"

namespace sncd {

CycloProduct::CycloProduct(const Exponents& factors) {
  for (const auto& [a, e] : factors) {
    if (a < 1) throw InternalError("cyclotomic product factor index must be >= 1");
    if (e != 0) factors_[a] += e;
  }
  std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
}

CycloProduct CycloProduct::factor(std::int64_t a, std::int64_t e) { return CycloProduct(Exponents{{a, e}}); }

CycloProduct::Exponents CycloProduct::cyclotomic_form() const {
  if (cyclotomic_) return *cyclotomic_;
  Exponents k;
  for (const auto& [a, e] : factors_) {
    for (std::int64_t m = 1; m * m <= a; ++m) {
      if (a % m != 0) continue;
      k[m] += e;
      if (m != a / m) k[a / m] += e;
    }
  }
  std::erase_if(k, [](const auto& kv) { return kv.second == 0; });
  return k;
}

bool CycloProduct::is_polynomial() const {
  for (const auto& [m, k] : cyclotomic_form()) {
    if (k < 0) return false;
  }
  return true;
}

std::int64_t CycloProduct::degree() const {
  std::int64_t d = 0;
  for (const auto& [a, e] : factors_) d += a * e;
  return d;
}

std::optional<IntPolynomial> CycloProduct::to_polynomial() const {
  Exponents k = cyclotomic_form();
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& [m, mult] : k) {
    if (mult < 0) return std::nullopt;
    IntPolynomial phi = cyclotomic_polynomial(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < mult; ++i) out = out * phi;
  }
  return out;
}

Integer CycloProduct::value_at_one() const {
  Integer v = 1;
  for (const auto& [m, k] : cyclotomic_form()) {
    if (k < 0) throw InternalError("value_at_one requires a polynomial product");
    if (m == 1) return 0;
    v *= ipow(cyclotomic_polynomial(static_cast<std::size_t>(m)).evaluate(1), static_cast<unsigned>(k));
  }
  return v;
}

CycloProduct CycloProduct::operator*(const CycloProduct& rhs) const {
  Exponents f = factors_;
  for (const auto& [a, e] : rhs.factors_) f[a] += e;
  return CycloProduct(f);
}

CycloProduct CycloProduct::inverse() const {
  Exponents f;
  for (const auto& [a, e] : factors_) f[a] = -e;
  return CycloProduct(f);
}

bool CycloProduct::operator==(const CycloProduct& rhs) const {
  return cyclotomic_form() == rhs.cyclotomic_form();
}

std::string CycloProduct::str(const std::string& var) const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    const auto [a, e] = *it;
    os << "(" << var;
    if (a != 1) os << "^" << a;
    os << "-1)";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

CycloProduct cyclo_normalize(const CycloProduct& p) {
  CycloProduct out = p;
  out.cyclotomic_ = p.cyclotomic_form();
  return out;
}

CycloProduct cyclo_power_d(const CycloProduct& p, std::int64_t d) {
  if (d < 1) throw InternalError("cyclo_power_d needs d >= 1");
  CycloProduct::Exponents f;
  for (const auto& [a, e] : p.factors()) {
    std::int64_t g = gcd64(a, d);
    f[a / g] += g * e;
  }
  return CycloProduct(f);
}

std::int64_t e_from_roots(const CycloProduct& p) {
  std::int64_t e = 1;
  for (const auto& [m, k] : p.cyclotomic_form()) {
    if (k < 0) throw InternalError("e_from_roots requires a polynomial product");
    e = lcm64(e, m);
  }
  return e;
}

bool divides(const CycloProduct& divisor, const CycloProduct& p) {
  auto kd = divisor.cyclotomic_form();
  auto kp = p.cyclotomic_form();
  for (const auto& [m, k] : kd) {
    auto it = kp.find(m);
    std::int64_t have = it == kp.end() ? 0 : it->second;
    if (k > have) return false;
  }
  for (const auto& [m, k] : kp) {
    if (k < 0 && kd.find(m) == kd.end()) return false;
  }
  return true;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace sncd
