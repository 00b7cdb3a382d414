#include "sncd/quotient_resolution.hpp"

#include <string>
#include <tuple>

#include "sncd/errors.hpp"
#include "sncd/integer.hpp"

namespace sncd {

namespace {

std::string pair_str(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

std::vector<std::int64_t> hj_expand(std::int64_t n, std::int64_t r) {
  if (!(0 < r && r < n) || gcd64(n, r) != 1)
    throw BadFraction("need 0 < r < n with gcd(n, r) = 1, got (n, r) = " + pair_str(n, r));
  std::vector<std::int64_t> b;
  // n/r = b - 1/(r/s) with b = ceil(n/r), s = b r - n
  while (r > 0) {
    std::int64_t q = (n + r - 1) / r;
    b.push_back(q);
    std::int64_t s = q * r - n;
    n = r;
    r = s;
  }
  return b;
}

std::pair<std::int64_t, std::int64_t> hj_recompose(const std::vector<std::int64_t>& b) {
  if (b.empty()) throw BadFraction("empty continued fraction");
  // evaluate from the tail: x = b_L, x <- b_i - 1/x
  std::int64_t num = b.back(), den = 1;
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) {
    std::int64_t next = *it * num - den;
    den = num;
    num = next;
  }
  std::int64_t g = gcd64(num, den);
  return {num / g, den / g};
}

HJChain resolve_chain(std::int64_t m1, std::int64_t m2, std::int64_t n, std::int64_t r) {
  if (m1 < 1 || m2 < 1) throw BadLocalData("multiplicities must be positive");
  if (!(0 < r && r < n)) throw BadLocalData("need 0 < r < n, got (n, r) = " + pair_str(n, r));
  if (gcd64(n, m1) != 1 || gcd64(n, m2) != 1)
    throw BadLocalData("n = " + std::to_string(n) + " is not prime to (m1, m2) = " + pair_str(m1, m2));
  if ((m1 + r * m2) % n != 0) throw BadLocalData("m1 + r m2 is not divisible by n");

  HJChain chain;
  chain.n = n;
  chain.r = r;
  try {
    chain.b = hj_expand(n, r);
  } catch (const BadFraction& e) {
    throw BadLocalData(e.what());
  }
  chain.mu = {m2, (m1 + r * m2) / n};
  for (std::int64_t bi : chain.b) {
    std::size_t k = chain.mu.size();
    chain.mu.push_back(bi * chain.mu[k - 1] - chain.mu[k - 2]);
  }
  if (chain.mu.back() != m1) throw InternalError("chain does not terminate at m1");
  return chain;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = ((a % n) + n) % n, r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw BadLocalData(std::to_string(a) + " is not invertible mod " + std::to_string(n));
  return ((old_s % n) + n) % n;
}

LocalPointData local_point_data(std::int64_t m1, std::int64_t m2, std::int64_t d, std::int64_t p) {
  if (d < 1) throw BadLocalData("degree must be >= 1");
  if (m1 < 1 || m2 < 1) throw BadLocalData("multiplicities must be positive");
  if (p > 1 && gcd64(d, p) != 1)
    throw BadLocalData("degree " + std::to_string(d) + " is not prime to p = " + std::to_string(p));

  LocalPointData out;
  out.m1 = m1;
  out.m2 = m2;
  out.d = d;
  out.c = gcd64(d, gcd64(m1, m2));
  out.d_prime = d / out.c;
  out.m1_prime = m1 / out.c;
  out.m2_prime = m2 / out.c;
  out.e1 = gcd64(out.d_prime, out.m1_prime);
  out.e2 = gcd64(out.d_prime, out.m2_prime);
  out.d_second = out.d_prime / (out.e1 * out.e2);
  out.m1_second = out.m1_prime / out.e1;
  out.m2_second = out.m2_prime / out.e2;
  if (out.d_second == 1) return out;

  std::int64_t n = out.d_second;
  // r = -m1'' / m2'' mod d''
  std::int64_t r = ((-(out.m1_second % n) * mod_inverse(out.m2_second, n)) % n + n) % n;
  out.r = r;
  out.chain = resolve_chain(out.m1_second, out.m2_second, n, r);
  return out;
}

}  // namespace sncd
