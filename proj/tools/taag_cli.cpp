#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "taag/taag.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw taag::Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes next to the target and renames, so a failed run leaves no partial file.
void write_atomically(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw taag::Error("cannot write " + path.string());
    out << text;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw taag::Error("cannot write " + path.string());
    }
  }
  fs::rename(tmp, path);
}

struct Options {
  std::string input;
  std::string fixture;
  std::string out;
  std::string mesh;
  double tolerance = taag::tol::convexity;
  bool quiet = false;
  bool timing = false;
};

int run_extract(const Options& opt) {
  taag::SolidModel model;
  if (!opt.input.empty()) {
    model = taag::parse_model(read_file(opt.input));
  } else {
    const auto kind = taag::fixture_kind(opt.fixture);
    if (!kind) {
      std::string names;
      for (const auto& n : taag::fixture_names()) names += " " + n;
      throw taag::Error("unknown fixture '" + opt.fixture + "'; known:" + names);
    }
    model = taag::build_fixture(*kind);
  }

  const auto start = std::chrono::steady_clock::now();
  const auto fx = taag::extract_features(model, opt.tolerance);
  const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const auto report = taag::make_report(model, fx, opt.tolerance, opt.timing ? std::optional<double>(elapsed) : std::nullopt);
  const std::string report_text = taag::report_text(report);
  std::string mesh_text;
  if (!opt.mesh.empty()) mesh_text = taag::to_ply(taag::build_feature_mesh(model, fx), "taag features of " + model.name);

  write_atomically(opt.out, report_text);
  if (!opt.mesh.empty()) write_atomically(opt.mesh, mesh_text);

  if (!opt.quiet) {
    std::cout << model.name << ": " << fx.boundaries().size() << " boundaries, " << fx.subgraphs.size() << " subgraphs";
    for (const auto& s : fx.subgraphs) {
      std::cout << (&s == &fx.subgraphs.front() ? " (" : ", ") << taag::to_string(s.convexity) << ' ' << s.faces.size();
    }
    std::cout << (fx.subgraphs.empty() ? "" : ")") << "\n";
    for (const auto& d : fx.diagnostics) std::cout << "  " << taag::to_string(d.kind) << ": " << d.message << "\n";
  }
  return fx.clean() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feature extraction on attributed adjacency graphs of B-REP solids"};
  app.require_subcommand(1);

  Options opt;
  auto* extract = app.add_subcommand("extract", "Extract feature boundaries and subgraphs");
  auto* input = extract->add_option("--input", opt.input, "Model file (.nbrep)")->check(CLI::ExistingFile);
  auto* fixture = extract->add_option("--fixture", opt.fixture, "Built-in fixture name");
  input->excludes(fixture);
  fixture->excludes(input);
  extract->add_option("--out", opt.out, "Report path (.json)")->required();
  extract->add_option("--export-mesh", opt.mesh, "Colored mesh path (.ply)");
  extract->add_option("--tolerance", opt.tolerance, "Edge convexity dead band")->check(CLI::NonNegativeNumber);
  extract->add_flag("--quiet", opt.quiet, "No summary on stdout");
  extract->add_flag("--timing", opt.timing, "Record pipeline wall time in the report");

  auto* list = app.add_subcommand("fixtures", "List built-in fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (list->parsed()) {
    for (const auto& n : taag::fixture_names()) std::cout << n << "\n";
    return 0;
  }
  if (opt.input.empty() == opt.fixture.empty()) {
    std::cerr << "extract: exactly one of --input or --fixture is required\n";
    return 1;
  }
  try {
    return run_extract(opt);
  } catch (const taag::SyntaxError& e) {
    std::cerr << "error: " << opt.input << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
