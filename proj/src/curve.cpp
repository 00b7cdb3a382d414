#include "sncd/curve.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "sncd/curve_json.hpp"
#include "sncd/errors.hpp"

namespace sncd {

// -------------------------------------------------------------- construction

SncdCurve::SncdCurve(std::int64_t p, std::vector<Vertex> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges)
    : p_(p), vertices_(std::move(vertices)) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index.emplace(vertices_[i].id, i).second)
      throw MalformedFiber("duplicate vertex id \"" + vertices_[i].id + "\"");
  }
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw MalformedFiber("edge endpoint \"" + a + "\" is not a vertex");
    if (ib == index.end()) throw MalformedFiber("edge endpoint \"" + b + "\" is not a vertex");
    if (ia->second == ib->second) throw MalformedFiber("loop at \"" + a + "\"");
    edges_.emplace_back(ia->second, ib->second);
  }
}

SncdCurve::SncdCurve(std::int64_t p, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : p_(p), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> ids;
  for (const auto& v : vertices_) {
    if (!ids.insert(v.id).second) throw MalformedFiber("duplicate vertex id \"" + v.id + "\"");
  }
  for (const auto& [a, b] : edges_) {
    if (a >= vertices_.size() || b >= vertices_.size())
      throw MalformedFiber("edge endpoint out of range");
    if (a == b) throw MalformedFiber("loop at \"" + vertices_[a].id + "\"");
  }
}

std::optional<std::size_t> SncdCurve::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<std::int64_t> SncdCurve::multiplicities() const {
  std::vector<std::int64_t> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.multiplicity);
  return out;
}

SncdCurve SncdCurve::with_p(std::int64_t p) const {
  SncdCurve out = *this;
  out.p_ = p;
  out.p_defaulted_ = false;
  return out;
}

// ---------------------------------------------------------------- validation

bool ValidationReport::valid() const {
  return std::none_of(issues.begin(), issues.end(), [](const auto& i) { return i.fatal; });
}

namespace {

std::vector<std::vector<std::size_t>> adjacency(const SncdCurve& curve) {
  std::vector<std::vector<std::size_t>> adj(curve.size());
  for (const auto& [a, b] : curve.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

bool connected(const SncdCurve& curve) {
  if (curve.size() == 0) return false;
  auto adj = adjacency(curve);
  std::vector<bool> seen(curve.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == curve.size();
}

// sum over edges at i of the multiplicity at the other end
std::vector<std::int64_t> neighbour_sums(const SncdCurve& curve) {
  std::vector<std::int64_t> sums(curve.size(), 0);
  for (const auto& [a, b] : curve.edges()) {
    sums[a] += curve.vertices()[b].multiplicity;
    sums[b] += curve.vertices()[a].multiplicity;
  }
  return sums;
}

std::vector<std::int64_t> degrees(const SncdCurve& curve) {
  std::vector<std::int64_t> deg(curve.size(), 0);
  for (const auto& [a, b] : curve.edges()) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

// sum_i N_i chi(E_i^o)
std::int64_t weighted_euler_sum(const SncdCurve& curve) {
  auto deg = degrees(curve);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& v = curve.vertices()[i];
    sum += v.multiplicity * (2 - 2 * v.genus - deg[i]);
  }
  return sum;
}

}  // namespace

ValidationReport validate(const SncdCurve& curve) {
  ValidationReport report;
  if (curve.p_defaulted()) report.notes.push_back("p missing, defaulted to 1");
  if (curve.size() == 0) {
    report.issues.push_back({"empty", "curve has no components", true});
    return report;
  }
  if (curve.p() < 1) {
    report.issues.push_back({"p", "characteristic exponent must be >= 1", true});
  }
  bool weights_ok = true;
  for (const auto& v : curve.vertices()) {
    if (v.multiplicity < 1) {
      report.issues.push_back({"multiplicity", "vertex \"" + v.id + "\" has N < 1", true});
      weights_ok = false;
    }
    if (v.genus < 0) {
      report.issues.push_back({"genus", "vertex \"" + v.id + "\" has g < 0", true});
      weights_ok = false;
    }
  }
  if (!connected(curve)) report.issues.push_back({"connected", "dual graph is not connected", true});
  if (!weights_ok) return report;

  auto sums = neighbour_sums(curve);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& v = curve.vertices()[i];
    if (sums[i] % v.multiplicity != 0) {
      std::ostringstream os;
      os << "vertex \"" << v.id << "\": N = " << v.multiplicity
         << " does not divide the neighbour sum " << sums[i];
      report.issues.push_back({"divisibility", os.str(), true});
    }
  }

  std::int64_t g = std::accumulate(curve.vertices().begin(), curve.vertices().end(), std::int64_t{0},
                                   [](std::int64_t acc, const Vertex& v) { return gcd64(acc, v.multiplicity); });
  report.index_one = g == 1;
  if (!report.index_one) {
    report.issues.push_back({"index_one", "gcd of multiplicities is " + std::to_string(g), false});
  }

  std::int64_t s = 2 - weighted_euler_sum(curve);
  if (s < 0 || s % 2 != 0) {
    report.issues.push_back(
        {"genus", "2 - sum N_i chi(E_i^o) = " + std::to_string(s) + " is not 2g with g >= 0", true});
  }
  return report;
}

void require_valid(const SncdCurve& curve) {
  auto report = validate(curve);
  if (report.valid()) return;
  std::string msg;
  for (const auto& issue : report.issues) {
    if (!issue.fatal) continue;
    if (!msg.empty()) msg += "; ";
    msg += issue.message;
  }
  throw MalformedFiber(msg);
}

std::int64_t genus(const SncdCurve& curve) {
  std::int64_t s = 2 - weighted_euler_sum(curve);
  if (s < 0 || s % 2 != 0) {
    throw MalformedFiber("2 - sum N_i chi(E_i^o) = " + std::to_string(s) + " is not 2g with g >= 0");
  }
  return s / 2;
}

CurveGeometry geometry(const SncdCurve& curve) {
  CurveGeometry out;
  auto deg = degrees(curve);
  auto sums = neighbour_sums(curve);
  out.vertices.resize(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& v = curve.vertices()[i];
    if (v.multiplicity < 1 || sums[i] % v.multiplicity != 0)
      throw MalformedFiber("self-intersection of \"" + v.id + "\" is not integral");
    auto& g = out.vertices[i];
    g.degree = deg[i];
    g.chi_open = 2 - 2 * v.genus - deg[i];
    g.self_intersection = -sums[i] / v.multiplicity;
    g.principal = v.genus > 0 || deg[i] >= 3;
    out.abelian_rank += v.genus;
  }
  out.betti_one = static_cast<std::int64_t>(curve.edges().size()) -
                  static_cast<std::int64_t>(curve.size()) + 1;
  return out;
}

IntMatrix intersection_matrix(const SncdCurve& curve) {
  auto geo = geometry(curve);
  IntMatrix m(curve.size(), curve.size());
  for (const auto& [a, b] : curve.edges()) {
    m(a, b) += 1;
    m(b, a) += 1;
  }
  for (std::size_t i = 0; i < curve.size(); ++i) m(i, i) = geo.vertices[i].self_intersection;
  return m;
}

// -------------------------------------------------------------- contraction

SncdCurve contract_minus_one(const SncdCurve& input) {
  SncdCurve curve = input;
  for (;;) {
    auto geo = geometry(curve);
    std::optional<std::size_t> target;
    for (std::size_t i = 0; i < curve.size() && !target; ++i) {
      const auto& g = geo.vertices[i];
      if (curve.vertices()[i].genus != 0 || g.self_intersection != -1) continue;
      if (g.degree == 1) target = i;
      if (g.degree == 2) {
        std::vector<std::size_t> nb;
        for (const auto& [a, b] : curve.edges()) {
          if (a == i) nb.push_back(b);
          if (b == i) nb.push_back(a);
        }
        if (nb[0] != nb[1]) target = i;
      }
    }
    if (!target) return curve;

    const std::size_t v = *target;
    std::vector<std::size_t> nb;
    std::vector<SncdCurve::Edge> edges;
    for (const auto& [a, b] : curve.edges()) {
      if (a == v) nb.push_back(b);
      else if (b == v) nb.push_back(a);
      else edges.emplace_back(a, b);
    }
    if (nb.size() == 2) edges.emplace_back(nb[0], nb[1]);
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (i != v) vertices.push_back(curve.vertices()[i]);
    }
    for (auto& [a, b] : edges) {
      if (a > v) --a;
      if (b > v) --b;
    }
    curve = SncdCurve(curve.p(), std::move(vertices), std::move(edges));
  }
}

// ---------------------------------------------------------------------- JSON

Json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(z));
  return Json(z.str());
}

Json curve_to_json(const SncdCurve& curve) {
  Json doc;
  doc["p"] = curve.p();
  Json vertices = Json::array();
  for (const auto& v : curve.vertices()) {
    Json jv;
    jv["id"] = v.id;
    jv["N"] = v.multiplicity;
    jv["g"] = v.genus;
    vertices.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& [a, b] : curve.edges()) {
    edges.push_back(Json::array({curve.vertices()[a].id, curve.vertices()[b].id}));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

namespace {

std::int64_t require_int(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + key + ": missing");
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(where + key + ": expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace

SncdCurve curve_from_json(const Json& doc, const std::string& where) {
  if (!doc.is_object()) throw ParseError(where + "curve document must be a JSON object");
  bool defaulted = !doc.contains("p");
  std::int64_t p = defaulted ? 1 : require_int(doc, "p", where);
  if (p < 1) throw ParseError(where + "p: must be >= 1");

  if (!doc.contains("vertices") || !doc.at("vertices").is_array())
    throw ParseError(where + "vertices: missing or not an array");
  std::vector<Vertex> vertices;
  std::size_t k = 0;
  for (const auto& jv : doc.at("vertices")) {
    std::string at = where + "vertices[" + std::to_string(k++) + "].";
    if (!jv.is_object()) throw ParseError(at.substr(0, at.size() - 1) + ": expected an object");
    if (!jv.contains("id") || !jv.at("id").is_string()) throw ParseError(at + "id: missing or not a string");
    Vertex v;
    v.id = jv.at("id").get<std::string>();
    v.multiplicity = require_int(jv, "N", at);
    v.genus = require_int(jv, "g", at);
    if (v.multiplicity < 1) throw ParseError(at + "N: must be >= 1");
    if (v.genus < 0) throw ParseError(at + "g: must be >= 0");
    vertices.push_back(std::move(v));
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) throw ParseError(where + "edges: not an array");
    k = 0;
    for (const auto& je : doc.at("edges")) {
      std::string at = where + "edges[" + std::to_string(k++) + "]";
      if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
        throw ParseError(at + ": expected a pair of vertex ids");
      if (je[0] == je[1]) throw ParseError(at + ": loop at \"" + je[0].get<std::string>() + "\"");
      edges.emplace_back(je[0].get<std::string>(), je[1].get<std::string>());
    }
  }
  try {
    SncdCurve curve(p, std::move(vertices), edges);
    return defaulted ? curve.with_p(1) : curve;
  } catch (const MalformedFiber& e) {
    throw ParseError(where + e.what());
  }
}

std::string serialize_curve(const SncdCurve& curve) { return curve_to_json(curve).dump(2) + "\n"; }

SncdCurve parse_curve(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  SncdCurve curve = curve_from_json(doc);
  curve.p_defaulted_ = !doc.is_object() || !doc.contains("p");
  return curve;
}

SncdCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_curve(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace sncd
