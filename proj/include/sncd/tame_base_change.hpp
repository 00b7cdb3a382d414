#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sncd/curve.hpp"
#include "sncd/quotient_resolution.hpp"

namespace sncd {

struct VertexChange {
  std::string id;
  std::int64_t old_multiplicity = 1;
  std::int64_t gcd_with_d = 1;
  std::int64_t new_multiplicity = 1;
};

struct EdgeChange {
  std::string from, to;  // original endpoints (i, j)
  LocalPointData local;
  std::vector<std::string> inserted;  // path order, from the j side to the i side
};

struct BaseChangeTrace {
  std::string input_digest;
  std::int64_t d = 1;
  std::vector<VertexChange> vertices;
  std::vector<EdgeChange> edges;
};

struct BaseChangeResult {
  SncdCurve curve;
  BaseChangeTrace trace;
};

/// Dual graph of the minimal desingularization of the normalized pullback
/// along a tame extension of degree d, for d prime to p and to e.
/// Throws PreconditionError or InternalError.
BaseChangeResult transform(const SncdCurve& curve, std::int64_t d);

/// Short stable hash of the canonical serialization.
std::string curve_digest(const SncdCurve& curve);

struct EDivision {
  std::int64_t predicted = 1;
  std::int64_t measured = 1;
  bool holds() const { return predicted == measured; }
};

/// Predicted e / gcd(e, d) against e measured on the transform, or on
/// `supplied` (report-only mode, any d >= 1).
EDivision e_division_law(const SncdCurve& curve, std::int64_t d,
                         const std::optional<SncdCurve>& supplied = std::nullopt);

struct CompfuCheck {
  Integer before;
  Integer after;
  Integer factor;  // d^{b_1}
  bool holds() const { return after == factor * before; }
};

CompfuCheck compfu_check(const SncdCurve& curve, std::int64_t d);

/// char_poly of the transform equals the d-th power transform of char_poly.
bool charpoly_commutation(const SncdCurve& curve, std::int64_t d);

}  // namespace sncd
