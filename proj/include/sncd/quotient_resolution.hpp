#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sncd {

/// Exceptional chain of the minimal resolution of a tame cyclic quotient
/// singularity of type (n, r), with the multiplicities of the pulled-back fiber.
struct HJChain {
  std::int64_t n = 1;
  std::int64_t r = 0;
  std::vector<std::int64_t> b;   // b_1 .. b_L, all >= 2
  std::vector<std::int64_t> mu;  // mu_0 .. mu_{L+1}
  bool operator==(const HJChain&) const = default;
};

struct LocalPointData {
  std::int64_t m1 = 1, m2 = 1, d = 1;
  std::int64_t c = 1;
  std::int64_t d_prime = 1;
  std::int64_t m1_prime = 1, m2_prime = 1;
  std::int64_t e1 = 1, e2 = 1;
  std::int64_t d_second = 1;
  std::int64_t m1_second = 1, m2_second = 1;
  std::optional<std::int64_t> r;   // absent when d'' = 1
  std::optional<HJChain> chain;    // absent when d'' = 1
};

/// Hirzebruch-Jung expansion n/r = b_1 - 1/(b_2 - ...). Throws BadFraction.
std::vector<std::int64_t> hj_expand(std::int64_t n, std::int64_t r);

/// Exact value of the continued fraction as (numerator, denominator).
std::pair<std::int64_t, std::int64_t> hj_recompose(const std::vector<std::int64_t>& b);

/// Chain with mu_0 = m2, mu_1 = (m1 + r m2)/n. Throws BadLocalData.
HJChain resolve_chain(std::int64_t m1, std::int64_t m2, std::int64_t n, std::int64_t r);

/// Local normalization data at a point of E_1 n E_2 under degree-d base change.
/// With p > 1 the call additionally requires gcd(d, p) = 1. Throws BadLocalData.
LocalPointData local_point_data(std::int64_t m1, std::int64_t m2, std::int64_t d, std::int64_t p = 1);

/// Inverse of a modulo n (gcd(a, n) = 1, n >= 1).
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

}  // namespace sncd
