#include "sncd/fixtures.hpp"

#include "sncd/errors.hpp"

namespace sncd::fixtures {

SncdCurve star(std::int64_t center, const std::vector<std::vector<std::int64_t>>& arms, std::int64_t center_genus) {
  std::vector<Vertex> vertices{{"c", center, center_genus}};
  std::vector<SncdCurve::Edge> edges;
  for (std::size_t k = 0; k < arms.size(); ++k) {
    std::size_t prev = 0;
    for (std::size_t s = 0; s < arms[k].size(); ++s) {
      std::string id(1, static_cast<char>('a' + k));
      vertices.push_back({id + std::to_string(s + 1), arms[k][s], 0});
      edges.emplace_back(prev, vertices.size() - 1);
      prev = vertices.size() - 1;
    }
  }
  return SncdCurve(1, std::move(vertices), std::move(edges));
}

SncdCurve cycle(std::int64_t n) {
  if (n < 2) throw PreconditionError("cycle needs at least two components");
  std::vector<Vertex> vertices;
  std::vector<SncdCurve::Edge> edges;
  for (std::int64_t i = 0; i < n; ++i) {
    vertices.push_back({"v" + std::to_string(i), 1, 0});
    edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n));
  }
  return SncdCurve(1, std::move(vertices), std::move(edges));
}

SncdCurve good(std::int64_t g) { return SncdCurve(1, {{"c", 1, g}}, std::vector<SncdCurve::Edge>{}); }

namespace {

// chain of n+1 double curves with two reduced tails at each end
SncdCurve i_n_star(std::int64_t n) {
  std::vector<Vertex> vertices;
  std::vector<SncdCurve::Edge> edges;
  for (std::int64_t i = 0; i <= n; ++i) {
    vertices.push_back({"c" + std::to_string(i), 2, 0});
    if (i > 0) edges.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
  }
  const auto last = static_cast<std::size_t>(n);
  for (const char* id : {"a1", "b1"}) {
    vertices.push_back({id, 1, 0});
    edges.emplace_back(0, vertices.size() - 1);
  }
  for (const char* id : {"d1", "e1"}) {
    vertices.push_back({id, 1, 0});
    edges.emplace_back(last, vertices.size() - 1);
  }
  return SncdCurve(1, std::move(vertices), std::move(edges));
}

}  // namespace

SncdCurve kodaira(const KodairaType& type) {
  switch (type.family) {
    case KodairaFamily::I:
      if (type.n == 0) return good(1);
      if (type.n == 1) {
        return SncdCurve(1, {{"v0", 1, 0}, {"x", 2, 0}}, std::vector<SncdCurve::Edge>{{0, 1}, {0, 1}});
      }
      return cycle(type.n);
    case KodairaFamily::II: return star(6, {{3}, {2}, {1}});
    case KodairaFamily::III: return star(4, {{1}, {1}, {2}});
    case KodairaFamily::IV: return star(3, {{1}, {1}, {1}});
    case KodairaFamily::I_star:
      if (type.n == 0) return star(2, {{1}, {1}, {1}, {1}});
      return i_n_star(type.n);
    case KodairaFamily::IV_star: return star(3, {{2, 1}, {2, 1}, {2, 1}});
    case KodairaFamily::III_star: return star(4, {{3, 2, 1}, {3, 2, 1}, {2}});
    case KodairaFamily::II_star: return star(6, {{3}, {4, 2}, {5, 4, 3, 2, 1}});
  }
  throw PreconditionError("unknown Kodaira type");
}

SncdCurve genus2_elliptic_pair() {
  return SncdCurve(1, {{"x", 1, 1}, {"y", 1, 1}}, std::vector<SncdCurve::Edge>{{0, 1}});
}

SncdCurve genus2_star() { return star(2, {{1}, {1}, {1}, {1}, {1}, {1}}); }

SncdCurve genus2_theta() {
  return SncdCurve(1, {{"x", 1, 0}, {"y", 1, 0}}, std::vector<SncdCurve::Edge>{{0, 1}, {0, 1}, {0, 1}});
}

std::string stem(const KodairaType& type) {
  std::string s = to_string(type);
  if (!s.empty() && s.back() == '*') s = s.substr(0, s.size() - 1) + "star";
  return s;
}

std::vector<NamedCurve> library() {
  std::vector<NamedCurve> out;
  auto add = [&](const KodairaType& t) { out.push_back({stem(t), kodaira(t)}); };
  for (std::int64_t n = 2; n <= 6; ++n) add({KodairaFamily::I, n});
  add({KodairaFamily::II, 0});
  add({KodairaFamily::III, 0});
  add({KodairaFamily::IV, 0});
  for (std::int64_t n = 0; n <= 4; ++n) add({KodairaFamily::I_star, n});
  add({KodairaFamily::IV_star, 0});
  add({KodairaFamily::III_star, 0});
  add({KodairaFamily::II_star, 0});
  out.push_back({"good", good(1)});
  out.push_back({"genus2_pair", genus2_elliptic_pair()});
  out.push_back({"genus2_star", genus2_star()});
  out.push_back({"genus2_theta", genus2_theta()});
  out.push_back({"genus2_good", good(2)});
  return out;
}

std::vector<ProviderSpec> provider_specs() {
  auto j = [](std::int64_t a, std::int64_t b) { return std::vector<Jump>{{Rational(a, b), 1}}; };
  return {
      {"good", "good", {}, {}},
      {"I2", "I2", {}, {}},
      {"I3", "I3", {}, {}},
      {"II", "II", {{2, "IV"}, {3, "I0star"}, {6, "good"}}, j(1, 6)},
      {"III", "III", {{2, "I0star"}, {4, "good"}}, j(1, 4)},
      {"IV", "IV", {{3, "good"}}, j(1, 3)},
      {"I0star", "I0star", {{2, "good"}}, j(1, 2)},
      {"I1star", "I1star", {{2, "I2"}}, j(1, 2)},
      {"I2star", "I2star", {{2, "I4"}}, j(1, 2)},
      {"IVstar", "IVstar", {{3, "good"}}, j(2, 3)},
      {"IIIstar", "IIIstar", {{2, "I0star"}, {4, "good"}}, j(3, 4)},
      {"IIstar", "IIstar", {{2, "IVstar"}, {3, "I0star"}, {6, "good"}}, j(5, 6)},
      {"genus2_star", "genus2_star", {{2, "genus2_good"}}, std::vector<Jump>{{Rational(1, 2), 2}}},
  };
}

namespace {

SncdCurve by_stem(const std::string& name) {
  for (auto& nc : library()) {
    if (nc.name == name) return nc.curve;
  }
  throw PreconditionError("no fixture named \"" + name + "\"");
}

}  // namespace

ReductionProvider provider(const ProviderSpec& spec) {
  ReductionProvider out;
  out.base = by_stem(spec.base);
  for (const auto& [a, name] : spec.curves) out.curves[a] = by_stem(name);
  out.jumps = JumpSet(spec.jumps);
  return out;
}

ReductionProvider provider(const std::string& name) {
  for (const auto& spec : provider_specs()) {
    if (spec.name == name) return provider(spec);
  }
  throw PreconditionError("no provider named \"" + name + "\"");
}

}  // namespace sncd::fixtures
