#include "sncd/tame_base_change.hpp"

#include <cstdio>

#include "sncd/errors.hpp"
#include "sncd/fiber_invariants.hpp"

namespace sncd {

std::string curve_digest(const SncdCurve& curve) {
  // FNV-1a over the canonical JSON
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : serialize_curve(curve)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

void check_preconditions(const SncdCurve& curve, std::int64_t d) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  auto report = validate(curve);
  if (!report.valid()) require_valid(curve);
  if (curve.p() > 1 && gcd64(d, curve.p()) != 1)
    throw PreconditionError("gcd(d, p) = " + std::to_string(gcd64(d, curve.p())) + " != 1");
  std::int64_t e = stabilization_index(curve);
  if (gcd64(d, e) != 1) throw PreconditionError("gcd(d, e) = " + std::to_string(gcd64(d, e)) + " != 1");
  if (!report.index_one) throw PreconditionError("gcd of multiplicities != 1 (curve is not index one)");
}

}  // namespace

BaseChangeResult transform(const SncdCurve& curve, std::int64_t d) {
  check_preconditions(curve, d);
  BaseChangeResult out;
  auto& trace = out.trace;
  trace.input_digest = curve_digest(curve);
  trace.d = d;
  if (d == 1) {
    out.curve = curve;
    return out;
  }

  std::vector<Vertex> vertices;
  for (const auto& v : curve.vertices()) {
    std::int64_t g = gcd64(v.multiplicity, d);
    vertices.push_back({v.id, v.multiplicity / g, v.genus});
    trace.vertices.push_back({v.id, v.multiplicity, g, v.multiplicity / g});
  }

  std::vector<SncdCurve::Edge> edges;
  for (std::size_t k = 0; k < curve.edges().size(); ++k) {
    auto [i, j] = curve.edges()[k];
    const auto& vi = curve.vertices()[i];
    const auto& vj = curve.vertices()[j];
    EdgeChange change{vi.id, vj.id, local_point_data(vi.multiplicity, vj.multiplicity, d, curve.p()), {}};
    if (change.local.c != 1)
      throw InternalError("edge " + vi.id + "-" + vj.id + " has " + std::to_string(change.local.c) +
                          " points above it");
    std::size_t prev = j;
    if (change.local.chain) {
      const auto& mu = change.local.chain->mu;
      for (std::size_t s = 1; s + 1 < mu.size(); ++s) {
        std::string id = vi.id + "|" + vj.id + "|" + std::to_string(k) + "|" + std::to_string(s);
        vertices.push_back({id, mu[s], 0});
        change.inserted.push_back(id);
        edges.emplace_back(prev, vertices.size() - 1);
        prev = vertices.size() - 1;
      }
    }
    edges.emplace_back(prev, i);
    trace.edges.push_back(std::move(change));
  }
  out.curve = SncdCurve(curve.p(), std::move(vertices), std::move(edges));

  auto report = validate(out.curve);
  if (!report.valid()) throw InternalError("base change produced an invalid curve");
  if (genus(out.curve) != genus(curve)) throw InternalError("base change changed the genus");
  return out;
}

EDivision e_division_law(const SncdCurve& curve, std::int64_t d, const std::optional<SncdCurve>& supplied) {
  EDivision out;
  std::int64_t e = stabilization_index(curve);
  out.predicted = e / gcd64(e, d);
  if (supplied) {
    require_valid(*supplied);
    out.measured = stabilization_index(*supplied);
  } else {
    out.measured = stabilization_index(transform(curve, d).curve);
  }
  return out;
}

CompfuCheck compfu_check(const SncdCurve& curve, std::int64_t d) {
  CompfuCheck out;
  SncdCurve image = transform(curve, d).curve;
  out.before = component_group(curve).order();
  out.after = component_group(image).order();
  out.factor = ipow(Integer(d), static_cast<unsigned>(geometry(curve).betti_one));
  return out;
}

bool charpoly_commutation(const SncdCurve& curve, std::int64_t d) {
  SncdCurve image = transform(curve, d).curve;
  return char_poly(image) == cyclo_power_d(char_poly(curve), d);
}

}  // namespace sncd
