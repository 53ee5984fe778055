// Runs the extraction on a few built-in parts, prints what it finds and
// writes the models and colored meshes next to the given directory.
//   taag_demo [out_dir]

#include <filesystem>
#include <fstream>
#include <iostream>

#include "taag/taag.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  const fs::path out = argc > 1 ? fs::path(argv[1]) : fs::path("demo_out");
  fs::create_directories(out);
  for (auto kind : {taag::FixtureKind::ThroughRectHole, taag::FixtureKind::ChamferedProtrusion, taag::FixtureKind::CaseA,
                    taag::FixtureKind::CaseB, taag::FixtureKind::Part1Composite}) {
    const auto info = taag::build_fixture_info({kind, {}});
    const auto fx = taag::extract_features(info.model);

    std::cout << info.model.name << ": " << info.model.faces.size() << " faces, " << info.model.edges.size() << " edges\n";
    for (const auto& b : fx.boundaries()) {
      std::cout << "  boundary " << taag::to_string(b.convexity) << ", " << b.edges.size() << " edges\n";
    }
    for (const auto& s : fx.subgraphs) {
      std::cout << "  subgraph " << taag::to_string(s.convexity) << (s.inherited ? " (inherited)" : "") << ", faces";
      for (auto f : s.faces) {
        std::string label;
        for (const auto& [name, faces] : info.groups) {
          if (std::find(faces.begin(), faces.end(), f) != faces.end()) label = name;
        }
        std::cout << ' ' << f.value << ':' << label;
      }
      std::cout << "\n";
    }
    for (const auto& d : fx.diagnostics) std::cout << "  note " << taag::to_string(d.kind) << ": " << d.message << "\n";

    std::ofstream(out / (info.model.name + ".nbrep")) << taag::serialize_model(info.model);
    std::ofstream(out / (info.model.name + ".ply")) << taag::to_ply(taag::build_feature_mesh(info.model, fx), info.model.name);
  }
  std::cout << "wrote models and meshes to " << out.string() << "\n";
}
