// Writes the fixture library and provider documents into a directory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "sncd/curve_json.hpp"
#include "sncd/fixtures.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  fs::path dir(argv[1]);
  fs::create_directories(dir / "providers");
  for (const auto& [name, curve] : sncd::fixtures::library()) {
    std::ofstream(dir / (name + ".json")) << sncd::serialize_curve(curve);
  }
  for (const auto& spec : sncd::fixtures::provider_specs()) {
    sncd::Json doc;
    doc["p"] = 1;
    doc["base"] = "../" + spec.base + ".json";
    sncd::Json curves = sncd::Json::object();
    for (const auto& [a, name] : spec.curves) curves[std::to_string(a)] = "../" + name + ".json";
    doc["curves"] = std::move(curves);
    sncd::Json jumps = sncd::Json::array();
    for (const auto& jump : spec.jumps) {
      jumps.push_back({{"j", sncd::to_string(jump.j)}, {"m", jump.m}});
    }
    doc["jumps"] = std::move(jumps);
    std::ofstream(dir / "providers" / (spec.name + ".json")) << doc.dump(2) << "\n";
  }
  return 0;
}
