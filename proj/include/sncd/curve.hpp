#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sncd/integer.hpp"
#include "sncd/matrix.hpp"

namespace sncd {

/// Component E_i of the special fiber: multiplicity N_i and genus g_i.
struct Vertex {
  std::string id;
  std::int64_t multiplicity = 1;
  std::int64_t genus = 0;
  bool operator==(const Vertex&) const = default;
};

/// Weighted dual multigraph of an sncd special fiber.
///
/// Edges are intersection points and are stored as pairs of vertex indices;
/// repeated pairs are distinct intersection points. Loops are rejected on
/// construction. Self-intersections are never stored; they follow from the
/// fiber relation (see geometry()).
class SncdCurve {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  SncdCurve() = default;
  /// Throws MalformedFiber on duplicate ids, unknown endpoints or loops.
  SncdCurve(std::int64_t p, std::vector<Vertex> vertices,
            const std::vector<std::pair<std::string, std::string>>& edges);
  SncdCurve(std::int64_t p, std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::int64_t p() const noexcept { return p_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// True when the document this curve was parsed from had no "p" field.
  bool p_defaulted() const noexcept { return p_defaulted_; }

  std::optional<std::size_t> index_of(const std::string& id) const;
  std::vector<std::int64_t> multiplicities() const;

  SncdCurve with_p(std::int64_t p) const;

  bool operator==(const SncdCurve& rhs) const {
    return p_ == rhs.p_ && vertices_ == rhs.vertices_ && edges_ == rhs.edges_;
  }

 private:
  friend SncdCurve parse_curve(const std::string& text);
  std::int64_t p_ = 1;
  bool p_defaulted_ = false;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

struct ValidationIssue {
  std::string code;     // "connected", "divisibility", "index_one", ...
  std::string message;
  bool fatal = true;    // index-one is reported but not fatal
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<std::string> notes;  // e.g. defaulted p
  bool index_one = false;

  /// No fatal issue.
  bool valid() const;
  /// No issue at all.
  bool empty() const noexcept { return issues.empty(); }
};

ValidationReport validate(const SncdCurve& curve);

/// Throws MalformedFiber when validate() reports a fatal issue.
void require_valid(const SncdCurve& curve);

/// g with sum_i N_i chi(E_i^o) = 2 - 2g. Throws MalformedFiber if the
/// left side is not of that form.
std::int64_t genus(const SncdCurve& curve);

struct VertexGeometry {
  std::int64_t degree = 0;            // number of edge endpoints at the vertex
  std::int64_t chi_open = 0;          // 2 - 2g - degree
  std::int64_t self_intersection = 0;
  bool principal = false;             // g > 0 or degree >= 3
  bool operator==(const VertexGeometry&) const = default;
};

struct CurveGeometry {
  std::vector<VertexGeometry> vertices;  // aligned with SncdCurve::vertices()
  std::int64_t betti_one = 0;            // #edges - #vertices + 1
  std::int64_t abelian_rank = 0;         // sum of genera
};

/// Requires the divisibility invariant; throws MalformedFiber otherwise.
CurveGeometry geometry(const SncdCurve& curve);

/// Intersection matrix: edge counts off the diagonal, derived E_i^2 on it.
IntMatrix intersection_matrix(const SncdCurve& curve);

/// Contracts rational (-1)-curves of degree 1, and of degree 2 with two
/// distinct neighbours, until none is left. Other (-1)-curves are kept.
SncdCurve contract_minus_one(const SncdCurve& curve);

/// Canonical JSON document (ordered keys, two-space indent, trailing newline).
std::string serialize_curve(const SncdCurve& curve);

/// Throws ParseError naming the offending field.
SncdCurve parse_curve(const std::string& text);

SncdCurve load_curve(const std::string& path);

}  // namespace sncd
