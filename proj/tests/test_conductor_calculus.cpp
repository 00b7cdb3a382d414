#include <doctest.h>

#include "sncd/conductor_calculus.hpp"
#include "sncd/errors.hpp"
#include "sncd/fiber_invariants.hpp"
#include "sncd/fixtures.hpp"

using namespace sncd;

namespace {

struct TypeRow {
  const char* name;
  std::int64_t v_delta;  // minimal discriminant valuation of the tame type
  Rational c_tame;
};

const TypeRow kTable[] = {
    {"I0", 0, 0},          {"I5", 5, 0},           {"II", 2, Rational(1, 6)},  {"III", 3, Rational(1, 4)},
    {"IV", 4, Rational(1, 3)}, {"I0*", 6, Rational(1, 2)}, {"I3*", 9, Rational(1, 2)},
    {"IV*", 8, Rational(2, 3)}, {"III*", 9, Rational(3, 4)}, {"II*", 10, Rational(5, 6)},
};

EllipticData good(const char* type, std::int64_t v_delta) {
  EllipticData d;
  d.type = parse_kodaira(type);
  d.v_delta = v_delta;
  return d;
}

// I_n and I_n* with n > 0 have potential multiplicative reduction with v(j) = -n.
EllipticData standard(const TypeRow& row) {
  EllipticData d = good(row.name, row.v_delta);
  auto t = d.type;
  if ((t.family == KodairaFamily::I || t.family == KodairaFamily::I_star) && t.n > 0) {
    d.potential = PotentialReduction::Multiplicative;
    d.v_j = -t.n;
  }
  return d;
}

}  // namespace

TEST_CASE("Kodaira symbols") {
  CHECK(parse_kodaira("I5") == KodairaType{KodairaFamily::I, 5});
  CHECK(parse_kodaira("I_0*") == KodairaType{KodairaFamily::I_star, 0});
  CHECK(parse_kodaira("II*").family == KodairaFamily::II_star);
  CHECK_THROWS_AS(parse_kodaira("V"), ParseError);
  CHECK_THROWS_AS(parse_kodaira("I"), ParseError);
  for (const auto& row : kTable) CHECK(to_string(parse_kodaira(row.name)) == row.name);
}

TEST_CASE("tame conductor table") {
  for (const auto& row : kTable) CHECK(ctame_elliptic(parse_kodaira(row.name)) == row.c_tame);
}

TEST_CASE("discriminant formula reproduces the table on tame types") {
  for (const auto& row : kTable) CHECK(c_elliptic(standard(row)) == row.c_tame);
}

TEST_CASE("denominator of c_tame is the stabilization index") {
  for (const auto& row : kTable) {
    SncdCurve c = fixtures::kodaira(row.name);
    CHECK(denominator(row.c_tame) == stabilization_index(c));
  }
}

TEST_CASE("elliptic conductor") {
  CHECK(c_elliptic(good("II", 6)) == Rational(1, 2));
  CHECK(ctame_elliptic(parse_kodaira("II")) == Rational(1, 6));
  CHECK(c_elliptic(good("I0", 0)) == 0);
  EllipticData mult;
  mult.type = parse_kodaira("I3*");
  mult.potential = PotentialReduction::Multiplicative;
  mult.v_delta = 12 * 4 + 3;
  mult.v_j = -3;
  CHECK(c_elliptic(mult) == 4);
  CHECK(d_pot(mult) == 3);
  mult.v_j.reset();
  CHECK_THROWS_AS(c_elliptic(mult), MissingField);
  mult.v_j = 2;
  CHECK_THROWS_AS(c_elliptic(mult), InconsistentData);
  CHECK_THROWS_AS(c_elliptic(EllipticData{}), MissingField);
}

TEST_CASE("relative conductor and towers") {
  CHECK(c_relative(6, 0, 2) == Rational(1, 2));
  CHECK(c_relative(7, 21, 3) == 0);
  // K'' / K' / K with e(K'/K) = 2, e(K''/K') = 3
  std::int64_t v = 10, v1 = 8, v2 = 6;
  Rational whole = c_relative(v, v2, 6);
  Rational composed = c_relative(v, v1, 2) + c_relative(v1, v2, 3) / 2;
  CHECK(whole == composed);
  CHECK_THROWS_AS(c_relative(1, 1, 0), InconsistentData);
}

TEST_CASE("Artin relation") {
  auto rel = artin_relation(good("II", 6));
  CHECK(rel.art == -6);
  CHECK(rel.d_pot == 0);
  CHECK(rel.c == Rational(1, 2));
  CHECK_NOTHROW(artin_relation(good("II", 6), Rational(-6)));
  CHECK_THROWS_AS(artin_relation(good("II", 6), Rational(-5)), InconsistentData);
}

TEST_CASE("wild defect") {
  EllipticData d = good("I2*", 8);
  d.p = 2;
  d.potential = PotentialReduction::Multiplicative;
  d.delta_wild = 3;
  auto w = wild_defect(d);
  CHECK(w.defect == Rational(3, 4));
  CHECK(*w.c == Rational(5, 4));
  CHECK(*w.v_j == 4);

  d.potential = PotentialReduction::Good;
  CHECK(wild_defect(d).defect == Rational(5, 12));

  EllipticData t = good("IV", 4);
  CHECK(wild_defect(t).defect == 0);
  CHECK(*wild_defect(t).c == ctame_elliptic(t.type));
  t.delta_wild = 6;
  t.p = 3;
  CHECK(wild_defect(t).defect == Rational(1, 2));
}

TEST_CASE("genus two") {
  CHECK(genus2_c(5, 3, 2, 1) == 0);
  CHECK(genus2_c(10, 0, 0, 1) == 1);
  CHECK(genus2_c(21, 2, 0, 2) == 2);
  CHECK_THROWS_AS(genus2_c(0, 3, 1, 1), NegativeConductor);
  CHECK_THROWS_AS(genus2_c(10, 1, 2, 1), InconsistentData);
  CHECK_THROWS_AS(genus2_c(10, 1, 0, 0), InconsistentData);
}

TEST_CASE("Artin and Swan conductors") {
  CHECK(artin_swan({}).art == 0);
  RamificationFiltration trivial{{{1, 0}}};
  auto t = artin_swan(trivial);
  CHECK(t.art == 0);
  CHECK(t.sw == 0);

  RamificationFiltration z2{{{2, 1}, {2, 1}}};
  auto a = artin_swan(z2);
  CHECK(a.art == 2);
  CHECK(a.sw == 1);
  CHECK(a.tame == 1);

  auto bc = filtration_base_change(z2, 3);
  CHECK(artin_swan(bc).sw == 3);

  // Z/6 with wild part Z/2
  RamificationFiltration z6{{{6, 2}, {2, 1}, {2, 1}, {2, 1}}};
  for (std::int64_t d = 1; d <= 13; d += 2) {
    auto f = filtration_base_change(z6, d);
    auto before = artin_swan(z6), after = artin_swan(f);
    CHECK(after.sw == d * before.sw);
    CHECK(after.art == after.tame + d * before.sw);
    CHECK(after.tame <= 2);
  }
  CHECK(filtration_base_change(z6, 3).group_order() == 2);
  CHECK_THROWS_AS(filtration_base_change(z6, 2), BadFiltration);  // wild degree
  CHECK(filtration_base_change(z6, 3, 1).levels[0].codim == 1);

  CHECK_THROWS_AS(artin_swan(RamificationFiltration{{{2, 1}, {3, 1}}}), BadFiltration);
  CHECK_THROWS_AS(artin_swan(RamificationFiltration{{{2, 1}, {2, 2}}}), BadFiltration);
  CHECK_THROWS_AS(artin_swan(RamificationFiltration{{{1, 1}}}), BadFiltration);
  CHECK_THROWS_AS(artin_swan(RamificationFiltration{{{0, 0}}}), BadFiltration);
}

TEST_CASE("torus conductors") {
  auto a = torus_ctame(1, 0, 0);
  CHECK(a.c_tame == Rational(1, 2));
  CHECK(torus_ctame(3, 3, 0).c_tame == 0);
  auto b = torus_ctame(2, 1, 4);
  CHECK(b.c_tame == Rational(1, 2));
  CHECK(b.slope == 2);
  CHECK_THROWS_AS(torus_ctame(1, 2, 0), InconsistentData);
}
