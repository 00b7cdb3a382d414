#include <doctest.h>

#include "sncd/errors.hpp"
#include "sncd/integer.hpp"
#include "sncd/quotient_resolution.hpp"

using namespace sncd;

namespace {

Rational continued_fraction(const std::vector<std::int64_t>& b) {
  Rational x = b.back();
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) x = Rational(*it) - 1 / x;
  return x;
}

}  // namespace

TEST_CASE("hj expansion") {
  CHECK(hj_expand(5, 2) == std::vector<std::int64_t>{3, 2});
  CHECK(hj_expand(3, 2) == std::vector<std::int64_t>{2, 2});
  for (std::int64_t n = 2; n <= 20; ++n) CHECK(hj_expand(n, 1) == std::vector<std::int64_t>{n});
  CHECK(hj_expand(5, 3) == std::vector<std::int64_t>{2, 3});
  CHECK_THROWS_AS(hj_expand(4, 2), BadFraction);
  CHECK_THROWS_AS(hj_expand(3, 3), BadFraction);
  CHECK_THROWS_AS(hj_expand(3, 0), BadFraction);
}

TEST_CASE("recomposition for all small fractions") {
  for (std::int64_t n = 2; n <= 120; ++n) {
    for (std::int64_t r = 1; r < n; ++r) {
      if (gcd64(n, r) != 1) continue;
      auto b = hj_expand(n, r);
      for (auto x : b) CHECK(x >= 2);
      CHECK(continued_fraction(b) == Rational(n, r));
      CHECK(hj_recompose(b) == std::make_pair(n, r));
    }
  }
}

TEST_CASE("resolution chains") {
  auto a = resolve_chain(2, 1, 3, 1);
  CHECK(a.b == std::vector<std::int64_t>{3});
  CHECK(a.mu == std::vector<std::int64_t>{1, 1, 2});
  auto b = resolve_chain(1, 1, 3, 2);
  CHECK(b.b == std::vector<std::int64_t>{2, 2});
  CHECK(b.mu == std::vector<std::int64_t>{1, 1, 1, 1});
  auto c = resolve_chain(6, 1, 5, 4);
  CHECK(c.b == std::vector<std::int64_t>{2, 2, 2, 2});
  CHECK(c.mu == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(resolve_chain(1, 1, 3, 1), BadLocalData);
  CHECK_THROWS_AS(resolve_chain(3, 1, 3, 0), BadLocalData);
  CHECK_THROWS_AS(resolve_chain(3, 3, 3, 1), BadLocalData);
}

TEST_CASE("terminal identity, fiber relation and orientation symmetry") {
  for (std::int64_t m1 = 1; m1 <= 12; ++m1) {
    for (std::int64_t m2 = 1; m2 <= 12; ++m2) {
      for (std::int64_t n = 2; n <= 30; ++n) {
        if (gcd64(n, m1) != 1 || gcd64(n, m2) != 1) continue;
        std::int64_t r = ((-m1 % n + n) % n) * mod_inverse(m2, n) % n;
        REQUIRE((m1 + r * m2) % n == 0);
        auto ch = resolve_chain(m1, m2, n, r);
        CHECK(ch.mu.front() == m2);
        CHECK(ch.mu.back() == m1);
        for (std::size_t i = 1; i + 1 < ch.mu.size(); ++i) {
          CHECK(ch.mu[i - 1] + ch.mu[i + 1] == ch.b[i - 1] * ch.mu[i]);
          CHECK(ch.mu[i] > 0);
        }
        std::int64_t rt = ((-m2 % n + n) % n) * mod_inverse(m1, n) % n;
        auto back = resolve_chain(m2, m1, n, rt);
        CHECK(std::vector<std::int64_t>(ch.mu.rbegin(), ch.mu.rend()) == back.mu);
      }
    }
  }
}

TEST_CASE("local point data") {
  auto a = local_point_data(1, 1, 3);
  CHECK(a.c == 1);
  CHECK(a.d_second == 3);
  CHECK(*a.r == 2);
  CHECK(a.chain->mu == std::vector<std::int64_t>{1, 1, 1, 1});

  auto b = local_point_data(6, 3, 5);
  CHECK(b.c == 1);
  CHECK(b.e1 == 1);
  CHECK(b.e2 == 1);
  CHECK(b.d_second == 5);
  CHECK(*b.r == 3);
  CHECK(b.chain->b == std::vector<std::int64_t>{2, 3});
  CHECK(b.chain->mu == std::vector<std::int64_t>{3, 3, 3, 6});

  auto c = local_point_data(2, 2, 2);
  CHECK(c.c == 2);
  CHECK(c.d_prime == 1);
  CHECK(c.d_second == 1);
  CHECK_FALSE(c.chain);
  CHECK_FALSE(c.r);

  CHECK_THROWS_AS(local_point_data(1, 1, 0), BadLocalData);
  CHECK_THROWS_AS(local_point_data(1, 1, 4, 2), BadLocalData);
  CHECK_NOTHROW(local_point_data(1, 1, 4));

  for (std::int64_t m1 = 1; m1 <= 12; ++m1)
    for (std::int64_t m2 = 1; m2 <= 12; ++m2)
      for (std::int64_t d = 1; d <= 30; ++d) {
        auto l = local_point_data(m1, m2, d);
        CHECK(l.d_prime % (l.e1 * l.e2) == 0);
        CHECK(gcd64(l.d_second, l.m1_second) == 1);
        CHECK(gcd64(l.d_second, l.m2_second) == 1);
        if (l.chain) {
          CHECK(l.chain->mu.front() == l.m2_second);
          CHECK(l.chain->mu.back() == l.m1_second);
        }
      }
}
