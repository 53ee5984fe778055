#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace taag;

namespace {

double mesh_volume(const FeatureMesh& mesh) {
  double v = 0.0;
  for (const auto& t : mesh.triangles) {
    v += mesh.positions[t[0]].dot(mesh.positions[t[1]].cross(mesh.positions[t[2]])) / 6.0;
  }
  return v;
}

// Area of the regular 24-gon inscribed in a circle of radius r.
double polygon_disk(double r) { return 0.5 * kSegmentsPerTurn * r * r * std::sin(2.0 * std::numbers::pi / kSegmentsPerTurn); }

}  // namespace

TEST(Report, MatchesSchemaForEveryFixture) {
  const support::SchemaChecker schema(nlohmann::json::parse(support::slurp(TAAG_SCHEMA_PATH)));
  for (const auto& info : support::all_fixtures()) {
    const auto fx = extract_features(info.model);
    const auto doc = nlohmann::json::parse(report_text(make_report(info.model, fx, tol::convexity)));
    EXPECT_EQ(schema.check(doc), "") << info.model.name;
  }
}

TEST(Report, SchemaCheckerCatchesViolations) {
  const support::SchemaChecker schema(nlohmann::json::parse(support::slurp(TAAG_SCHEMA_PATH)));
  const auto m = build_fixture(FixtureKind::Cube);
  auto doc = nlohmann::json::parse(report_text(make_report(m, extract_features(m), tol::convexity)));
  auto bad = doc;
  bad["convexity"]["edges"][0] = "wobbly";
  EXPECT_NE(schema.check(bad), "");
  bad = doc;
  bad.erase("subgraphs");
  EXPECT_NE(schema.check(bad), "");
  bad = doc;
  bad["extra"] = 1;
  EXPECT_NE(schema.check(bad), "");
  bad = doc;
  bad["subgraphs"][0]["faces"][0] = -1;
  EXPECT_NE(schema.check(bad), "");
}

TEST(Report, FaithfulToPipeline) {
  const auto info = support::fixture(FixtureKind::CaseB);
  const auto fx = extract_features(info.model);
  const auto doc = nlohmann::json::parse(report_text(make_report(info.model, fx, 1e-7)));
  EXPECT_EQ(doc["model_name"], "case_b");
  EXPECT_EQ(doc["convexity"]["edges"].size(), info.model.edges.size());
  ASSERT_EQ(doc["boundaries"].size(), fx.boundaries().size());
  for (std::size_t i = 0; i < fx.boundaries().size(); ++i) {
    EXPECT_EQ(doc["boundaries"][i]["edges"].size(), fx.boundaries()[i].edges.size());
  }
  ASSERT_EQ(doc["subgraphs"].size(), fx.subgraphs.size());
  for (std::size_t i = 0; i < fx.subgraphs.size(); ++i) {
    for (std::size_t k = 0; k < fx.subgraphs[i].faces.size(); ++k) {
      EXPECT_EQ(doc["subgraphs"][i]["faces"][k].get<std::uint32_t>(), fx.subgraphs[i].faces[k].value);
    }
  }
  EXPECT_EQ(doc["clusters"].size(), fx.stage.clusters.size());
  EXPECT_EQ(doc["diagnostics"].size(), fx.diagnostics.size());
  EXPECT_TRUE(doc["timing_ms"].is_null());
  EXPECT_DOUBLE_EQ(doc["tolerance"].get<double>(), 1e-7);
}

TEST(Report, TimingIsOptIn) {
  const auto m = build_fixture(FixtureKind::Cube);
  const auto doc = make_report(m, extract_features(m), 1e-7, 1.5);
  EXPECT_DOUBLE_EQ(doc["timing_ms"].get<double>(), 1.5);
}

TEST(Mesh, ClosedAndVolumeExact) {
  // The tessellation is watertight, so its enclosed volume equals that of
  // the solid with circles replaced by inscribed 24-gons.
  const std::map<FixtureKind, double> volume{
      {FixtureKind::Cube, 1.0},
      {FixtureKind::Step, 18.0},
      {FixtureKind::Pocket, 72.0 - 2.0 * 1.5 * 1.0},
      {FixtureKind::ThroughRectHole, 72.0 - 2.0 * 1.6 * 3.0},
      {FixtureKind::ChamferedProtrusion, 96.0 + (12.0 - 4 * 0.125) * 1.5},
      {FixtureKind::CaseA, 36.0 + 6.0 + 1.0},
      {FixtureKind::BlindHole, 72.0 - polygon_disk(1.0) * 1.5},
      {FixtureKind::CylBoss, 48.0 + polygon_disk(1.0) * 1.5},
      {FixtureKind::CylHole, 72.0 - polygon_disk(1.0) * 3.0},
      {FixtureKind::Part2Fixture, 48.0 - 3 * polygon_disk(0.5)},
  };
  for (const auto& [kind, want] : volume) {
    const auto m = build_fixture(kind);
    const auto mesh = build_feature_mesh(m, extract_features(m));
    EXPECT_NEAR(mesh_volume(mesh), want, 1e-9) << m.name;
  }
}

TEST(Mesh, EveryTriangleFacesOutward) {
  for (const auto& info : support::all_fixtures()) {
    const auto mesh = build_feature_mesh(info.model, extract_features(info.model));
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
      const auto& t = mesh.triangles[i];
      const Vec3 n = (mesh.positions[t[1]] - mesh.positions[t[0]]).cross(mesh.positions[t[2]] - mesh.positions[t[0]]);
      const Point3 c = (mesh.positions[t[0]] + mesh.positions[t[1]] + mesh.positions[t[2]]) / 3.0;
      const auto& s = info.model.face(mesh.triangle_face[i]).surface;
      EXPECT_GT(n.dot(outward_normal_at(s, project_onto(s, c))), 0.0) << info.model.name;
    }
  }
}

TEST(Mesh, ColorsFollowSubgraphs) {
  const auto info = support::fixture(FixtureKind::ThroughRectHole);
  const auto fx = extract_features(info.model);
  const auto mesh = build_feature_mesh(info.model, fx);
  const auto& hole = info.groups.at("hole");
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
    const bool in_hole = std::count(hole.begin(), hole.end(), mesh.triangle_face[i]) > 0;
    EXPECT_EQ(mesh.colors[mesh.triangles[i][0]], in_hole ? colors::concave : colors::convex);
  }
  EXPECT_EQ(mesh.segments.size(), 8u);
  for (const auto& s : mesh.segments) EXPECT_EQ(mesh.colors[s[0]], colors::boundary);
}

TEST(Mesh, PlyHeaderAndCounts) {
  const auto m = build_fixture(FixtureKind::CylBoss);
  const auto mesh = build_feature_mesh(m, extract_features(m));
  const std::string ply = to_ply(mesh);
  std::istringstream in(ply);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "ply");
  std::getline(in, line);
  EXPECT_EQ(line, "format ascii 1.0");
  std::size_t nv = 0, nf = 0, ne = 0;
  while (std::getline(in, line) && line != "end_header") {
    std::istringstream ls(line);
    std::string word, what;
    std::size_t n = 0;
    ls >> word >> what >> n;
    if (word == "element" && what == "vertex") nv = n;
    if (word == "element" && what == "face") nf = n;
    if (word == "element" && what == "edge") ne = n;
  }
  EXPECT_EQ(nv, mesh.positions.size());
  EXPECT_EQ(nf, mesh.triangles.size());
  EXPECT_EQ(ne, mesh.segments.size());
  std::size_t body = 0;
  while (std::getline(in, line)) ++body;
  EXPECT_EQ(body, nv + nf + ne);
}
