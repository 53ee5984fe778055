#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace taag;

TEST(Normals, CubeTopIsPlusZ) {
  const auto cube = build_fixture(FixtureKind::Cube);
  for (const auto& f : cube.faces) {
    const auto& pl = std::get<Plane>(f.surface);
    if (pl.normal.z() > 0.5) {
      const Vec3 n = outward_normal_at(f.surface, Point3(0.3, 0.7, 1.0));
      EXPECT_NEAR((n - Vec3::UnitZ()).norm(), 0.0, 1e-15);
    }
  }
}

TEST(Normals, HoleWallPointsTowardAxis) {
  const Cylinder wall{Point3(1, 1, 0), Vec3::UnitZ(), 2.0, MaterialSide::Inside};
  const Point3 p(3, 1, 5);
  const Vec3 n = outward_normal_at(wall, p);
  EXPECT_NEAR((n - Vec3(-1, 0, 0)).norm(), 0.0, 1e-12);
}

TEST(Normals, BossWallPointsAwayFromAxis) {
  const Cylinder wall{Point3(0, 0, 0), Vec3::UnitZ(), 1.0, MaterialSide::Outside};
  const Vec3 n = outward_normal_at(wall, Point3(0, -1, 0.25));
  EXPECT_NEAR((n - Vec3(0, -1, 0)).norm(), 0.0, 1e-12);
}

TEST(Normals, ConeNormalIsPerpendicularToRulingAndOutward) {
  const Cone cone{Point3(0, 0, 4), -Vec3::UnitZ(), std::atan(0.25), MaterialSide::Outside};
  for (double theta : {0.0, 0.7, 2.1, 4.0}) {
    const double z = 1.3;
    const double rho = (4.0 - z) * std::tan(cone.half_angle);
    const Point3 p(rho * std::cos(theta), rho * std::sin(theta), z);
    ASSERT_LT(distance_to_surface(cone, p), 1e-12);
    const Vec3 n = outward_normal_at(cone, p);
    const Vec3 ruling = (p - cone.apex).normalized();
    EXPECT_NEAR(n.dot(ruling), 0.0, 1e-12);
    const Vec3 radial = Vec3(p.x(), p.y(), 0.0).normalized();
    EXPECT_GT(n.dot(radial), 0.0);
    EXPECT_NEAR(n.norm(), 1.0, 1e-12);
  }
}

TEST(Normals, InsideConeFlipsNormal) {
  Cone cone{Point3(0, 0, 0), Vec3::UnitZ(), 0.4, MaterialSide::Outside};
  const Point3 p(std::tan(0.4), 0.0, 1.0);
  const Vec3 out = outward_normal_at(cone, p);
  cone.side = MaterialSide::Inside;
  EXPECT_NEAR((outward_normal_at(cone, p) + out).norm(), 0.0, 1e-12);
}

TEST(Normals, OffSurfacePointThrows) {
  const Plane pl{Point3::Zero(), Vec3::UnitZ()};
  try {
    outward_normal_at(pl, Point3(0, 0, 1e-3));
    FAIL() << "expected PointOffSurface";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryKind::PointOffSurface);
  }
}

TEST(Normals, ApexThrows) {
  const Cone cone{Point3(1, 2, 3), Vec3::UnitZ(), 0.3, MaterialSide::Outside};
  try {
    outward_normal_at(cone, Point3(1, 2, 3));
    FAIL() << "expected ApexSingularity";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryKind::ApexSingularity);
  }
}

TEST(Normals, SaddleHasNoNormal) {
  EXPECT_THROW(outward_normal_at(RuledSaddle{}, Point3::Zero()), GeometryError);
}

TEST(Geometry, ProjectionLandsOnSurface) {
  const std::vector<SurfaceGeometry> surfaces{
      Plane{Point3(1, 0, 0), Vec3(1, 1, 0).normalized()},
      Cylinder{Point3(0, 0, 0), Vec3(0, 1, 0), 0.7, MaterialSide::Inside},
      Cone{Point3(0, 0, 2), -Vec3::UnitZ(), 0.5, MaterialSide::Outside},
  };
  for (const auto& s : surfaces) {
    for (const Point3& q : {Point3(0.3, 0.2, 0.9), Point3(-1, 2, 0.5), Point3(0.1, -0.4, 1.1)}) {
      EXPECT_LT(distance_to_surface(s, project_onto(s, q)), 1e-12);
    }
  }
}

TEST(Geometry, CcwAngleRange) {
  const Vec3 z = Vec3::UnitZ();
  EXPECT_NEAR(ccw_angle(Vec3::UnitX(), Vec3::UnitY(), z), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(ccw_angle(Vec3::UnitY(), Vec3::UnitX(), z), 3 * std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(ccw_angle(Vec3::UnitX(), Vec3::UnitX(), z), 2 * std::numbers::pi, 1e-15);
}

TEST(Geometry, AnyPerpendicularIsUnitAndOrthogonal) {
  for (const Vec3& a : std::vector<Vec3>{Vec3::UnitX(), Vec3::UnitY(), Vec3(1, 2, 3).normalized(), Vec3(-0.95, 0.1, 0.3).normalized()}) {
    const Vec3 p = any_perpendicular(a);
    EXPECT_NEAR(p.norm(), 1.0, 1e-12);
    EXPECT_NEAR(p.dot(a), 0.0, 1e-12);
  }
}

TEST(Geometry, EveryFixtureEdgeHasWellDefinedNormals) {
  for (const auto& info : support::all_fixtures()) {
    const auto& m = info.model;
    for (const auto& e : m.edges) {
      const Vec3 a = outward_normal_at(m.face(e.left()).surface, e.midpoint);
      const Vec3 b = outward_normal_at(m.face(e.right()).surface, e.midpoint);
      EXPECT_NEAR(a.norm(), 1.0, 1e-9);
      EXPECT_NEAR(b.norm(), 1.0, 1e-9);
      // parallel normals only where the faces meet tangentially
      if (a.cross(b).norm() < 1e-9) {
        EXPECT_GT(a.dot(b), 0.0) << m.name << " edge " << e.id.value;
      }
    }
  }
}
