#include <gtest/gtest.h>

#include "support.hpp"

using namespace taag;

namespace {

struct Counts {
  std::size_t v, e, f;
  int genus;
};

// Hand counts of each construction.
const std::map<std::string, Counts> kCounts{
    {"cube", {8, 12, 6, 0}},
    {"block", {8, 12, 6, 0}},
    {"step", {12, 18, 8, 0}},
    {"slot", {16, 24, 10, 0}},
    {"pocket", {16, 24, 11, 0}},
    {"blind_hole", {8, 14, 8, 0}},
    {"through_rect_hole", {16, 24, 10, 1}},
    {"cyl_boss", {8, 14, 8, 0}},
    {"cyl_hole", {8, 14, 7, 1}},
    {"chamfered_protrusion", {24, 36, 15, 0}},
    {"two_block_step", {16, 24, 11, 0}},
    {"case_a", {28, 42, 17, 0}},
    {"case_b", {20, 31, 14, 0}},
    {"part1", {36, 60, 27, 1}},
    {"part2", {12, 24, 11, 3}},
    {"tapered_boss", {8, 14, 8, 0}},
    {"rounded_block", {10, 15, 7, 0}},
};

}  // namespace

TEST(Fixtures, NamesRoundTrip) {
  EXPECT_EQ(fixture_names().size(), 17u);
  for (const auto& n : fixture_names()) {
    const auto k = fixture_kind(n);
    ASSERT_TRUE(k.has_value()) << n;
    EXPECT_EQ(to_string(*k), n);
  }
  EXPECT_FALSE(fixture_kind("teapot").has_value());
}

TEST(Fixtures, EntityCounts) {
  for (const auto& info : support::all_fixtures()) {
    const auto& m = info.model;
    const auto& want = kCounts.at(m.name);
    EXPECT_EQ(m.vertices.size(), want.v) << m.name;
    EXPECT_EQ(m.edges.size(), want.e) << m.name;
    EXPECT_EQ(m.faces.size(), want.f) << m.name;
    EXPECT_EQ(m.genus, want.genus) << m.name;
  }
}

TEST(Fixtures, EulerPoincare) {
  for (const auto& info : support::all_fixtures()) {
    const auto& m = info.model;
    long closed = 0, rings = 0;
    for (const auto& e : m.edges) closed += e.closed();
    for (const auto& f : m.faces) rings += loop_count(m, f) - 1;
    const long lhs = long(m.vertices.size()) + closed - long(m.edges.size()) + long(m.faces.size()) - rings;
    EXPECT_EQ(lhs, 2 - 2 * m.genus) << m.name;
  }
}

TEST(Fixtures, ValidateAndStayBelowDeskScale) {
  for (const auto& info : support::all_fixtures()) {
    EXPECT_NO_THROW(validate(info.model)) << info.model.name;
    EXPECT_LT(info.model.faces.size(), 100u);
  }
}

TEST(Fixtures, GroupsPartitionFaces) {
  for (const auto& info : support::all_fixtures()) {
    std::vector<int> seen(info.model.faces.size(), 0);
    for (const auto& [_, faces] : info.groups) {
      for (FaceId f : faces) ++seen.at(f.index());
    }
    for (int s : seen) EXPECT_EQ(s, 1) << info.model.name;
  }
}

TEST(Fixtures, Deterministic) {
  for (auto k : all_fixture_kinds()) {
    EXPECT_EQ(serialize_model(build_fixture(k)), serialize_model(build_fixture(k)));
  }
}

TEST(Fixtures, DimensionsDriveGeometry) {
  const auto small = build_fixture({FixtureKind::Cube, {{"size", 2.0}}});
  double top = 0.0;
  for (const auto& v : small.vertices) top = std::max(top, v.position.z());
  EXPECT_DOUBLE_EQ(top, 2.0);
  const auto scaled = build_fixture({FixtureKind::CaseB, {{"scale", 0.5}}});
  EXPECT_EQ(scaled.edges.size(), 31u);
  const auto fx = extract_features(scaled);
  std::size_t concave6 = 0;
  for (const auto& b : fx.boundaries()) concave6 += b.convexity == Convexity::Concave && b.edges.size() == 6;
  EXPECT_EQ(concave6, 1u);
}

TEST(Fixtures, InvalidDimensions) {
  auto kind_of = [](const FixtureSpec& spec) {
    try {
      build_fixture(spec);
    } catch (const GeometryError& e) {
      return e.kind();
    }
    return GeometryKind::UnknownNode;
  };
  EXPECT_EQ(kind_of({FixtureKind::Cube, {{"size", 0.0}}}), GeometryKind::InvalidDimensions);
  EXPECT_EQ(kind_of({FixtureKind::Block, {{"height", -1.0}}}), GeometryKind::InvalidDimensions);
  EXPECT_EQ(kind_of({FixtureKind::Block, {{"depth", 1.0}}}), GeometryKind::InvalidDimensions);
  EXPECT_EQ(kind_of({FixtureKind::Pocket, {{"pocket_depth", 3.0}}}), GeometryKind::InvalidDimensions);
  EXPECT_EQ(kind_of({FixtureKind::CylHole, {{"radius", 2.0}}}), GeometryKind::InvalidDimensions);
  EXPECT_EQ(kind_of({FixtureKind::ChamferedProtrusion, {{"chamfer", 1.6}}}), GeometryKind::InvalidDimensions);
  EXPECT_EQ(kind_of({FixtureKind::TaperedBoss, {{"top_radius", 1.5}}}), GeometryKind::InvalidDimensions);
}

TEST(Fixtures, UnpairedHalfEdgeIsReported) {
  ModelBuilder b("broken", 0);
  const FaceId f = b.plane(Point3::Zero(), Vec3::UnitZ());
  b.polygon(f, std::vector<Point3>{Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0)});
  EXPECT_THROW(b.build(), Error);
}

TEST(Fixtures, SerializedFixturesParse) {
  for (const auto& info : support::all_fixtures()) {
    EXPECT_NO_THROW(parse_model(serialize_model(info.model))) << info.model.name;
  }
}

TEST(Fixtures, SampleModelFilesAreCurrent) {
  for (const char* name : {"through_rect_hole", "chamfered_protrusion", "case_a", "case_b", "part1"}) {
    const auto text = support::slurp(std::string(TAAG_SAMPLES_DIR) + "/" + name + ".nbrep");
    EXPECT_EQ(text, serialize_model(build_fixture(*fixture_kind(name)))) << name;
  }
}
