#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sncd/errors.hpp"
#include "sncd/fiber_invariants.hpp"
#include "sncd/fixtures.hpp"
#include "sncd/tame_base_change.hpp"

using namespace sncd;

namespace {

std::vector<std::int64_t> sorted_multiplicities(const SncdCurve& c) {
  auto m = c.multiplicities();
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_CASE("I_2 by 3 is I_6") {
  auto [out, trace] = transform(fixtures::kodaira("I2"), 3);
  CHECK(out.size() == 6);
  CHECK(out.edges().size() == 6);
  for (const auto& v : out.vertices()) CHECK(v.multiplicity == 1);
  CHECK(component_group(out).order() == 6);
  CHECK(trace.edges.size() == 2);
  CHECK(trace.edges[0].inserted.size() == 2);
  CHECK(trace.edges[0].inserted[0] == "v0|v1|0|1");
}

TEST_CASE("II by 5 contracts to II*") {
  auto [out, trace] = transform(fixtures::kodaira("II"), 5);
  CHECK(validate(out).valid());
  CHECK(sorted_multiplicities(out) == std::vector<std::int64_t>{1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 5, 6});
  SncdCurve min = contract_minus_one(out);
  CHECK(sorted_multiplicities(min) == std::vector<std::int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(component_group(min).trivial());
  CHECK(char_poly(min) == char_poly(fixtures::kodaira("II*")));
}

TEST_CASE("degree one is the identity") {
  for (const auto& [name, curve] : fixtures::library()) {
    auto r = transform(curve, 1);
    CHECK(r.curve == curve);
    CHECK(r.trace.edges.empty());
    CHECK(r.trace.vertices.empty());
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(transform(fixtures::kodaira("II"), 2), PreconditionError);
  CHECK_THROWS_AS(transform(fixtures::kodaira("I2").with_p(3), 3), PreconditionError);
  SncdCurve non_index_one(1, {{"a", 2, 1}}, std::vector<SncdCurve::Edge>{});
  CHECK_THROWS_AS(transform(non_index_one, 3), PreconditionError);
  CHECK_THROWS_AS(transform(fixtures::kodaira("I2"), 0), PreconditionError);
  try {
    transform(fixtures::kodaira("I0*"), 4);
    FAIL("expected an error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("gcd(d, e)") != std::string::npos);
  }
}

TEST_CASE("laws under base change") {
  CHECK(e_division_law(fixtures::kodaira("II"), 5).predicted == 6);
  CHECK(e_division_law(fixtures::kodaira("II"), 5).measured == 6);
  CHECK(e_division_law(fixtures::kodaira("I0*"), 3).holds());
  CHECK(e_division_law(fixtures::kodaira("I2"), 4).predicted == 1);
  // report-only: II over K(2) has type IV
  auto report = e_division_law(fixtures::kodaira("II"), 2, fixtures::kodaira("IV"));
  CHECK(report.predicted == 3);
  CHECK(report.holds());

  auto a = compfu_check(fixtures::kodaira("I2"), 3);
  CHECK(a.before == 2);
  CHECK(a.after == 6);
  CHECK(a.holds());
  CHECK(compfu_check(fixtures::kodaira("II"), 5).after == 1);
  CHECK(compfu_check(fixtures::kodaira("I0*"), 3).after == 4);

  CHECK(charpoly_commutation(fixtures::kodaira("I2"), 3));
  CHECK(charpoly_commutation(fixtures::kodaira("II"), 5));
}

TEST_CASE("invariants of the transform on the fixture library") {
  for (const auto& [name, curve] : fixtures::library()) {
    std::int64_t e = stabilization_index(curve);
    for (std::int64_t d = 2; d <= 13; ++d) {
      if (gcd64(d, e) != 1) continue;
      INFO(name << " d=" << d);
      auto [out, trace] = transform(curve, d);
      auto g0 = geometry(curve), g1 = geometry(out);
      CHECK(g1.betti_one == g0.betti_one);
      CHECK(genus(out) == genus(curve));
      CHECK(trace.input_digest == curve_digest(curve));
      // principal components keep their multiplicity
      for (std::size_t i = 0; i < curve.size(); ++i) {
        if (g0.vertices[i].principal) CHECK(out.vertices()[i].multiplicity == curve.vertices()[i].multiplicity);
        CHECK(out.vertices()[i].genus == curve.vertices()[i].genus);
      }
      // chain endpoints match the new multiplicities
      for (const auto& edge : trace.edges) {
        if (!edge.local.chain) continue;
        const auto& mu = edge.local.chain->mu;
        CHECK(mu.front() == out.vertices()[*out.index_of(edge.to)].multiplicity);
        CHECK(mu.back() == out.vertices()[*out.index_of(edge.from)].multiplicity);
        for (std::size_t s = 0; s < edge.inserted.size(); ++s) {
          auto idx = *out.index_of(edge.inserted[s]);
          CHECK(out.vertices()[idx].genus == 0);
          CHECK(g1.vertices[idx].self_intersection == -edge.local.chain->b[s]);
        }
      }
      CHECK(component_group(out).order() == oracle::phi_order(out));
    }
  }
}

TEST_CASE("composite degrees agree at the invariant level") {
  for (const auto& [name, curve] : fixtures::library()) {
    std::int64_t e = stabilization_index(curve);
    for (auto [d1, d2] : {std::pair{5, 7}, std::pair{7, 11}, std::pair{2, 3}, std::pair{5, 2}}) {
      if (gcd64(d1 * d2, e) != 1) continue;
      SncdCurve twice = contract_minus_one(transform(transform(curve, d1).curve, d2).curve);
      SncdCurve once = contract_minus_one(transform(curve, d1 * d2).curve);
      auto a = analyze(twice), b = analyze(once);
      CHECK(a.phi == b.phi);
      CHECK(a.P == b.P);
      CHECK(a.e_model == b.e_model);
      CHECK(a.t == b.t);
    }
  }
}
