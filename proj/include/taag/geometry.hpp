#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <variant>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "taag/error.hpp"

namespace taag {

using Vec3 = Eigen::Vector3d;
using Point3 = Eigen::Vector3d;

namespace tol {
inline constexpr double merge = 1e-6;     // vertex merge and on-surface distance
inline constexpr double unit = 1e-9;      // | |n| - 1 | for stored directions
inline constexpr double convexity = 1e-7; // triple-product dead band
}  // namespace tol

enum class MaterialSide { Outside, Inside };

struct Plane {
  Point3 point;
  Vec3 normal;  // outward
};

struct Cylinder {
  Point3 axis_point;
  Vec3 axis_dir;
  double radius = 1.0;
  MaterialSide side = MaterialSide::Outside;
};

// axis_dir points from the apex into the opening of the cone.
struct Cone {
  Point3 apex;
  Vec3 axis_dir;
  double half_angle = 0.5;
  MaterialSide side = MaterialSide::Outside;
};

// Marker for a doubly ruled face with principal curvatures of opposite sign.
// Carries no geometry, so normals are not defined on it.
struct RuledSaddle {};

using SurfaceGeometry = std::variant<Plane, Cylinder, Cone, RuledSaddle>;

struct LineSegment {};

// Arcs run counter-clockwise about `axis` from the first to the second endpoint.
struct CircularArc {
  Point3 center;
  Vec3 axis;
  double radius = 1.0;
};

struct FullCircle {
  Point3 center;
  Vec3 axis;
  double radius = 1.0;
};

using EdgeCurve = std::variant<LineSegment, CircularArc, FullCircle>;

inline bool is_unit(const Vec3& v) { return std::abs(v.norm() - 1.0) <= tol::unit; }

namespace detail {

struct AxisFrame {
  double axial;   // signed distance along the axis
  double rho;     // distance to the axis
  Vec3 radial;    // unit vector from the axis toward the point, zero if on the axis
};

inline AxisFrame axis_frame(const Point3& origin, const Vec3& dir, const Point3& p) {
  const Vec3 w = p - origin;
  const double axial = w.dot(dir);
  const Vec3 r = w - axial * dir;
  const double rho = r.norm();
  return {axial, rho, rho > 0.0 ? Vec3(r / rho) : Vec3::Zero()};
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace detail

using detail::Overloaded;

/// Unsigned distance from `p` to the surface. Zero for the saddle marker.
inline double distance_to_surface(const SurfaceGeometry& s, const Point3& p) {
  return std::visit(
      Overloaded{
          [&](const Plane& pl) { return std::abs((p - pl.point).dot(pl.normal)); },
          [&](const Cylinder& c) {
            return std::abs(detail::axis_frame(c.axis_point, c.axis_dir, p).rho - c.radius);
          },
          [&](const Cone& c) {
            const auto f = detail::axis_frame(c.apex, c.axis_dir, p);
            if (f.axial < 0.0) return (p - c.apex).norm();
            return std::abs(f.rho * std::cos(c.half_angle) - f.axial * std::sin(c.half_angle));
          },
          [](const RuledSaddle&) { return 0.0; },
      },
      s);
}

/// Normal pointing away from the material at `p`.
inline Vec3 outward_normal_at(const SurfaceGeometry& s, const Point3& p) {
  if (distance_to_surface(s, p) > tol::merge) {
    throw GeometryError(GeometryKind::PointOffSurface, "point is not on the surface");
  }
  return std::visit(
      Overloaded{
          [&](const Plane& pl) -> Vec3 { return pl.normal.normalized(); },
          [&](const Cylinder& c) -> Vec3 {
            const auto f = detail::axis_frame(c.axis_point, c.axis_dir, p);
            return c.side == MaterialSide::Outside ? f.radial : Vec3(-f.radial);
          },
          [&](const Cone& c) -> Vec3 {
            const auto f = detail::axis_frame(c.apex, c.axis_dir, p);
            if (f.rho <= tol::merge) {
              throw GeometryError(GeometryKind::ApexSingularity, "normal undefined at cone apex");
            }
            const Vec3 n = std::cos(c.half_angle) * f.radial - std::sin(c.half_angle) * c.axis_dir;
            return c.side == MaterialSide::Outside ? n : Vec3(-n);
          },
          [](const RuledSaddle&) -> Vec3 {
            throw GeometryError(GeometryKind::DegenerateNormals, "saddle marker carries no normal");
          },
      },
      s);
}

/// Closest-point projection onto the surface (approximate for cones far off
/// the surface; exact on it).
inline Point3 project_onto(const SurfaceGeometry& s, const Point3& q) {
  return std::visit(
      Overloaded{
          [&](const Plane& pl) -> Point3 { return q - (q - pl.point).dot(pl.normal) * pl.normal; },
          [&](const Cylinder& c) -> Point3 {
            const auto f = detail::axis_frame(c.axis_point, c.axis_dir, q);
            return c.axis_point + f.axial * c.axis_dir + c.radius * f.radial;
          },
          [&](const Cone& c) -> Point3 {
            const auto f = detail::axis_frame(c.apex, c.axis_dir, q);
            const Vec3 ruling = std::cos(c.half_angle) * c.axis_dir + std::sin(c.half_angle) * f.radial;
            const double t = std::max(0.0, (q - c.apex).dot(ruling));
            return c.apex + t * ruling;
          },
          [&](const RuledSaddle&) -> Point3 { return q; },
      },
      s);
}

inline Vec3 any_perpendicular(const Vec3& axis) {
  const Vec3 a = axis.normalized();
  const Vec3 probe = std::abs(a.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return a.cross(probe).normalized();
}

/// Counter-clockwise sweep angle about `axis` from `from` to `to`, in (0, 2pi].
inline double ccw_angle(const Vec3& from, const Vec3& to, const Vec3& axis) {
  const double a = std::atan2(from.cross(to).dot(axis), from.dot(to));
  return a > 0.0 ? a : a + 2.0 * std::numbers::pi;
}

}  // namespace taag
