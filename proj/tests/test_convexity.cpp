#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace taag;
using support::count_edges;

namespace {

// Rigid motion or reflection of a whole model. A reflection flips the
// handedness of every loop, so edges are re-stored in reverse to keep the
// left-face convention.
SolidModel transformed(const SolidModel& in, const Eigen::Matrix3d& r, const Vec3& t) {
  SolidModel m = in;
  const bool mirror = r.determinant() < 0.0;
  const double sense = mirror ? -1.0 : 1.0;
  for (auto& v : m.vertices) v.position = r * v.position + t;
  for (auto& e : m.edges) {
    e.midpoint = r * e.midpoint + t;
    std::visit(Overloaded{
                   [](LineSegment&) {},
                   [&](CircularArc& a) {
                     a.center = r * a.center + t;
                     a.axis = sense * (r * a.axis);
                   },
                   [&](FullCircle& c) {
                     c.center = r * c.center + t;
                     c.axis = sense * (r * c.axis);
                   },
               },
               e.curve);
  }
  for (auto& f : m.faces) {
    std::visit(Overloaded{
                   [&](Plane& p) {
                     p.point = r * p.point + t;
                     p.normal = r * p.normal;
                   },
                   [&](Cylinder& c) {
                     c.axis_point = r * c.axis_point + t;
                     c.axis_dir = r * c.axis_dir;
                   },
                   [&](Cone& c) {
                     c.apex = r * c.apex + t;
                     c.axis_dir = r * c.axis_dir;
                   },
                   [](RuledSaddle&) {},
               },
               f.surface);
  }
  // A reflection swaps left and right, so the same stored direction now has
  // its faces on the opposite sides.
  if (mirror) {
    for (auto& e : m.edges) std::swap(e.faces.first, e.faces.second);
  }
  derive_face_data(m);
  validate(m);
  return m;
}

Face face_with(SurfaceGeometry s, const Point3& p) { return Face{FaceId{0}, std::move(s), {EdgeId{0}}, p}; }

}  // namespace

TEST(Curvature, Plane) {
  const auto k = curvatures_at(Plane{Point3::Zero(), Vec3::UnitZ()}, Point3(3, 4, 0));
  EXPECT_EQ(k.k1, 0.0);
  EXPECT_EQ(k.k2, 0.0);
}

TEST(Curvature, CylinderSignFollowsMaterial) {
  Cylinder c{Point3::Zero(), Vec3::UnitZ(), 2.0, MaterialSide::Outside};
  auto k = curvatures_at(c, Point3(2, 0, 1));
  EXPECT_DOUBLE_EQ(k.k1, 0.0);
  EXPECT_DOUBLE_EQ(k.k2, -0.5);
  c.side = MaterialSide::Inside;
  k = curvatures_at(c, Point3(2, 0, 1));
  EXPECT_DOUBLE_EQ(k.k2, 0.5);
}

TEST(Curvature, ConeAcrossRulings) {
  // Normal curvature across the rulings of a cone is cos(alpha)/rho, rho
  // being the distance to the axis.
  const double alpha = 0.3;
  const Cone c{Point3::Zero(), Vec3::UnitZ(), alpha, MaterialSide::Outside};
  const double z = 2.0, rho = z * std::tan(alpha);
  const auto k = curvatures_at(c, Point3(rho, 0, z));
  EXPECT_DOUBLE_EQ(k.k1, 0.0);
  EXPECT_NEAR(k.k2, -std::cos(alpha) / rho, 1e-12);
}

TEST(Curvature, OffSurfaceThrows) {
  EXPECT_THROW(curvatures_at(Plane{Point3::Zero(), Vec3::UnitZ()}, Point3(0, 0, 1)), GeometryError);
}

TEST(FaceConvexity, SignTable) {
  EXPECT_EQ(classify_curvatures({0.0, 0.0}), Convexity::Transitory);
  EXPECT_EQ(classify_curvatures({1.0, -1.0}), Convexity::Transitory);
  EXPECT_EQ(classify_curvatures({0.0, -1.0}), Convexity::Convex);
  EXPECT_EQ(classify_curvatures({-2.0, -1.0}), Convexity::Convex);
  EXPECT_EQ(classify_curvatures({0.0, 1.0}), Convexity::Concave);
  EXPECT_EQ(classify_curvatures({2.0, 1.0}), Convexity::Concave);
}

TEST(FaceConvexity, SurfaceKinds) {
  EXPECT_EQ(classify_face(face_with(Plane{Point3::Zero(), Vec3::UnitZ()}, Point3(1, 1, 0))), Convexity::Transitory);
  EXPECT_EQ(classify_face(face_with(RuledSaddle{}, Point3::Zero())), Convexity::Transitory);
  Cylinder c{Point3::Zero(), Vec3::UnitZ(), 1.0, MaterialSide::Outside};
  EXPECT_EQ(classify_face(face_with(c, Point3(1, 0, 0))), Convexity::Convex);
  c.side = MaterialSide::Inside;
  EXPECT_EQ(classify_face(face_with(c, Point3(1, 0, 0))), Convexity::Concave);
  const Cone cone{Point3::Zero(), Vec3::UnitZ(), 0.4, MaterialSide::Inside};
  EXPECT_EQ(classify_face(face_with(cone, Point3(std::tan(0.4), 0, 1))), Convexity::Concave);
}

TEST(EdgeConvexity, CubeIsAllConvex) {
  const auto cube = build_fixture(FixtureKind::Cube);
  const auto c = classify_all(cube);
  EXPECT_EQ(count_edges(c, Convexity::Convex), 12u);
  for (auto v : c.vertex_conv) EXPECT_EQ(v, Convexity::Convex);
  for (auto f : c.face_conv) EXPECT_EQ(f, Convexity::Transitory);
  for (const auto& e : cube.edges) EXPECT_NEAR(edge_triple_product(e, cube), 1.0, 1e-12);
}

TEST(EdgeConvexity, SlotBottomEdgesAreConcave) {
  const auto info = support::fixture(FixtureKind::Slot);
  const auto& m = info.model;
  const auto c = classify_all(m);
  EXPECT_EQ(count_edges(c, Convexity::Concave), 2u);
  const auto& slot = info.groups.at("slot");
  for (const auto& e : m.edges) {
    if (c.edge(e.id) != Convexity::Concave) continue;
    // both concave edges join a slot wall to the slot floor
    EXPECT_TRUE(std::count(slot.begin(), slot.end(), e.left()));
    EXPECT_TRUE(std::count(slot.begin(), slot.end(), e.right()));
    EXPECT_NEAR(e.midpoint.z(), 1.0, 1e-12);
  }
}

TEST(EdgeConvexity, StepHasOneConcaveEdge) {
  const auto c = classify_all(build_fixture(FixtureKind::Step));
  EXPECT_EQ(count_edges(c, Convexity::Concave), 1u);
  EXPECT_EQ(count_edges(c, Convexity::Convex), 17u);
}

TEST(EdgeConvexity, TangentFilletEdgesAreTransitory) {
  const auto info = support::fixture(FixtureKind::RoundedBlock);
  const auto c = classify_all(info.model);
  EXPECT_EQ(count_edges(c, Convexity::Transitory), 2u);
  EXPECT_EQ(c.face(info.groups.at("fillet").front()), Convexity::Convex);
  for (const auto& e : info.model.edges) {
    if (c.edge(e.id) == Convexity::Transitory) {
      EXPECT_NEAR(material_wedge_angle(e, info.model), std::numbers::pi, 1e-6);
    }
  }
}

TEST(EdgeConvexity, LargeToleranceMakesEverythingTransitory) {
  const auto c = classify_all(build_fixture(FixtureKind::Slot), 10.0);
  EXPECT_EQ(count_edges(c, Convexity::Transitory), 24u);
}

TEST(EdgeConvexity, CircularEdgesOfBossAndHoles) {
  // boss: base circle concave, top circle convex; hole: both rims convex
  auto conv_of_closed = [](FixtureKind k) {
    const auto m = build_fixture(k);
    const auto c = classify_all(m);
    std::vector<Convexity> out;
    for (const auto& e : m.edges) {
      if (e.closed()) out.push_back(c.edge(e.id));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  EXPECT_EQ(conv_of_closed(FixtureKind::CylBoss), (std::vector{Convexity::Concave, Convexity::Convex}));
  EXPECT_EQ(conv_of_closed(FixtureKind::TaperedBoss), (std::vector{Convexity::Concave, Convexity::Convex}));
  EXPECT_EQ(conv_of_closed(FixtureKind::CylHole), (std::vector{Convexity::Convex, Convexity::Convex}));
  EXPECT_EQ(conv_of_closed(FixtureKind::BlindHole), (std::vector{Convexity::Concave, Convexity::Convex}));
}

TEST(EdgeConvexity, WedgeAngles) {
  const auto cube = build_fixture(FixtureKind::Cube);
  for (const auto& e : cube.edges) EXPECT_NEAR(material_wedge_angle(e, cube), std::numbers::pi / 2, 1e-9);
  const auto step = build_fixture(FixtureKind::Step);
  const auto c = classify_all(step);
  for (const auto& e : step.edges) {
    const double want = c.edge(e.id) == Convexity::Concave ? 1.5 * std::numbers::pi : 0.5 * std::numbers::pi;
    EXPECT_NEAR(material_wedge_angle(e, step), want, 1e-9);
  }
}

TEST(EdgeConvexity, OracleAgreesOnEveryFixtureEdge) {
  std::size_t edges = 0;
  for (const auto& info : support::all_fixtures()) {
    for (const auto& e : info.model.edges) {
      EXPECT_EQ(classify_edge(e, info.model), oracle_edge_convexity(e, info.model)) << info.model.name << " edge " << e.id.value;
      ++edges;
    }
  }
  EXPECT_GE(edges, 300u);
}

TEST(EdgeConvexity, InvariantUnderStoredDirection) {
  for (const auto& info : support::all_fixtures()) {
    const auto flipped = support::reverse_edges(info.model);
    validate(flipped);
    EXPECT_EQ(classify_all(flipped).edge_conv, classify_all(info.model).edge_conv) << info.model.name;
  }
}

TEST(EdgeConvexity, InvariantUnderRigidMotion) {
  const Eigen::Matrix3d r = Eigen::AngleAxisd(0.7, Vec3(1, 2, 3).normalized()).toRotationMatrix();
  for (const auto& info : support::all_fixtures()) {
    const auto moved = transformed(info.model, r, Vec3(5, -2, 0.25));
    const auto a = classify_all(info.model), b = classify_all(moved);
    EXPECT_EQ(a.edge_conv, b.edge_conv) << info.model.name;
    EXPECT_EQ(a.face_conv, b.face_conv) << info.model.name;
  }
}

TEST(EdgeConvexity, MirrorSymmetric) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  r(0, 0) = -1.0;
  for (const auto& info : support::all_fixtures()) {
    const auto mirrored = transformed(info.model, r, Vec3::Zero());
    EXPECT_EQ(classify_all(mirrored).edge_conv, classify_all(info.model).edge_conv) << info.model.name;
  }
}

TEST(EdgeConvexity, FlippingCylinderSideFlipsFace) {
  auto m = build_fixture(FixtureKind::CylHole);
  const auto before = classify_all(m);
  for (auto& f : m.faces) {
    if (auto* c = std::get_if<Cylinder>(&f.surface)) {
      c->side = MaterialSide::Outside;
      EXPECT_EQ(before.face(f.id), Convexity::Concave);
      EXPECT_EQ(classify_face(f), Convexity::Convex);
    }
  }
}

TEST(VertexConvexity, Cases) {
  const auto step = build_fixture(FixtureKind::Step);
  const auto c = classify_all(step);
  std::size_t mixed = 0;
  for (auto v : c.vertex_conv) mixed += v == Convexity::Transitory;
  EXPECT_EQ(mixed, 2u);  // the two ends of the step's inner edge

  const auto pocket = build_fixture(FixtureKind::Pocket);
  const auto pc = classify_all(pocket);
  std::size_t concave = 0;
  for (auto v : pc.vertex_conv) concave += v == Convexity::Concave;
  EXPECT_EQ(concave, 4u);  // floor corners
}

TEST(VertexConvexity, IsolatedVertexThrows) {
  const auto cube = build_fixture(FixtureKind::Cube);
  std::vector<std::vector<EdgeId>> incident(cube.vertices.size());
  try {
    classify_vertex(cube.vertices.front(), cube, classify_all(cube).edge_conv, incident);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryKind::IsolatedVertex);
  }
}
