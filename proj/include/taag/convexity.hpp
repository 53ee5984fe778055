#pragma once

#include <array>
#include <vector>

#include "taag/brep.hpp"

namespace taag {

enum class Convexity : int { Concave = -1, Transitory = 0, Convex = 1 };

inline const char* to_string(Convexity c) {
  switch (c) {
    case Convexity::Concave: return "concave";
    case Convexity::Transitory: return "transitory";
    case Convexity::Convex: return "convex";
  }
  return "?";
}

inline Convexity opposite(Convexity c) {
  switch (c) {
    case Convexity::Concave: return Convexity::Convex;
    case Convexity::Convex: return Convexity::Concave;
    default: return Convexity::Transitory;
  }
}

/// Principal curvatures, positive where the surface bends toward the
/// material (concave) and negative where it bends away (convex).
struct CurvaturePair {
  double k1 = 0.0;
  double k2 = 0.0;
};

struct ConvexityMap {
  std::vector<Convexity> face_conv;
  std::vector<Convexity> edge_conv;
  std::vector<Convexity> vertex_conv;

  Convexity face(FaceId id) const { return face_conv.at(id.index()); }
  Convexity edge(EdgeId id) const { return edge_conv.at(id.index()); }
  Convexity vertex(VertexId id) const { return vertex_conv.at(id.index()); }
};

inline CurvaturePair curvatures_at(const SurfaceGeometry& s, const Point3& p) {
  if (distance_to_surface(s, p) > tol::merge) {
    throw GeometryError(GeometryKind::PointOffSurface, "point is not on the surface");
  }
  return std::visit(
      Overloaded{
          [](const Plane&) { return CurvaturePair{0.0, 0.0}; },
          [](const Cylinder& c) {
            const double k = 1.0 / c.radius;
            return CurvaturePair{0.0, c.side == MaterialSide::Outside ? -k : k};
          },
          [&](const Cone& c) {
            const auto f = detail::axis_frame(c.apex, c.axis_dir, p);
            if (f.rho <= tol::merge) throw GeometryError(GeometryKind::ApexSingularity, "curvature undefined at cone apex");
            // normal curvature across the rulings
            const double k = std::cos(c.half_angle) / f.rho;
            return CurvaturePair{0.0, c.side == MaterialSide::Outside ? -k : k};
          },
          [](const RuledSaddle&) { return CurvaturePair{1.0, -1.0}; },
      },
      s);
}

/// Face convexity from the signs of the principal curvatures. The plane row
/// is checked first, then the mixed-sign row.
inline Convexity classify_curvatures(const CurvaturePair& k) {
  const double prod = k.k1 * k.k2;
  if (k.k1 == 0.0 && k.k2 == 0.0) return Convexity::Transitory;
  if (prod < 0.0) return Convexity::Transitory;
  if (std::min(k.k1, k.k2) < 0.0) return Convexity::Convex;
  return Convexity::Concave;
}

inline Convexity classify_face(const Face& face) {
  return classify_curvatures(curvatures_at(face.surface, face.representative_point));
}

namespace detail {

struct EdgeFrame {
  Point3 p;
  Vec3 n_left;
  Vec3 n_right;
  Vec3 tangent;
};

inline EdgeFrame edge_frame(const Edge& edge, const SolidModel& model) {
  const Point3& p = edge.midpoint;
  EdgeFrame f{p, Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
  try {
    f.n_left = outward_normal_at(model.face(edge.left()).surface, p);
    f.n_right = outward_normal_at(model.face(edge.right()).surface, p);
  } catch (const GeometryError& err) {
    throw GeometryError(GeometryKind::DegenerateNormals, "edge " + std::to_string(edge.id.value) + ": " + err.what());
  }
  f.tangent = tangent_at(model, edge, p);
  if (!f.tangent.allFinite() || f.tangent.norm() < 0.5) {
    throw GeometryError(GeometryKind::DegenerateNormals, "edge " + std::to_string(edge.id.value) + ": no tangent");
  }
  return f;
}

}  // namespace detail

/// Signed triple product (n_left x n_right) . t at the edge midpoint, with
/// the left face taken w.r.t. the stored direction. Positive on convex edges.
inline double edge_triple_product(const Edge& edge, const SolidModel& model) {
  const auto f = detail::edge_frame(edge, model);
  return f.n_left.cross(f.n_right).dot(f.tangent);
}

inline Convexity classify_edge(const Edge& edge, const SolidModel& model, double tau = tol::convexity) {
  const double t = edge_triple_product(edge, model);
  if (t > tau) return Convexity::Convex;
  if (t < -tau) return Convexity::Concave;
  return Convexity::Transitory;
}

/// Material dihedral angle at the edge midpoint, in (0, 2pi), measured by
/// stepping `eps` into each adjacent face along the surface. The two step
/// sizes eps and eps/2 are Richardson-combined so that curved faces meeting
/// tangentially measure pi to O(eps^2).
inline double material_wedge_angle(const Edge& edge, const SolidModel& model, double eps = 1e-4) {
  const auto f = detail::edge_frame(edge, model);
  const auto& left = model.face(edge.left()).surface;
  const auto& right = model.face(edge.right()).surface;
  // Interior directions: the left face lies to the left of the tangent seen
  // from outside, the right face to the left of the reversed tangent.
  const Vec3 into_left = f.n_left.cross(f.tangent).normalized();
  const Vec3 into_right = f.tangent.cross(f.n_right).normalized();
  const Vec3 below_left = -f.n_left;

  auto angle_for = [&](double h) {
    const Vec3 a = project_onto(left, f.p + h * into_left) - f.p;
    const Vec3 b = project_onto(right, f.p + h * into_right) - f.p;
    // angle from the left chord, rotating through the material, to the right chord
    const Vec3 e1 = (a - a.dot(f.tangent) * f.tangent).normalized();
    Vec3 e2 = below_left - below_left.dot(e1) * e1 - below_left.dot(f.tangent) * f.tangent;
    e2.normalize();
    const Vec3 bp = b - b.dot(f.tangent) * f.tangent;
    double ang = std::atan2(bp.dot(e2), bp.dot(e1));
    if (ang <= 0.0) ang += 2.0 * std::numbers::pi;
    return ang;
  };
  const double coarse = angle_for(eps);
  const double fine = angle_for(0.5 * eps);
  return 2.0 * fine - coarse;
}

/// Independent check of classify_edge: compares the measured material
/// wedge angle with pi, dead band `delta` radians.
inline Convexity oracle_edge_convexity(const Edge& edge, const SolidModel& model, double eps = 1e-4,
                                       double delta = 1e-5) {
  const double a = material_wedge_angle(edge, model, eps);
  if (a < std::numbers::pi - delta) return Convexity::Convex;
  if (a > std::numbers::pi + delta) return Convexity::Concave;
  return Convexity::Transitory;
}

/// Convex if no incident edge is concave, concave if none is convex,
/// transitory otherwise.
inline Convexity classify_vertex(const Vertex& vertex, const SolidModel& model, const std::vector<Convexity>& edge_conv,
                                 const std::vector<std::vector<EdgeId>>& incident) {
  const auto& edges = incident.at(vertex.id.index());
  if (edges.empty()) throw GeometryError(GeometryKind::IsolatedVertex, "vertex " + std::to_string(vertex.id.value));
  (void)model;
  bool any_concave = false;
  bool any_convex = false;
  for (EdgeId e : edges) {
    any_concave |= edge_conv.at(e.index()) == Convexity::Concave;
    any_convex |= edge_conv.at(e.index()) == Convexity::Convex;
  }
  if (!any_concave) return Convexity::Convex;
  if (!any_convex) return Convexity::Concave;
  return Convexity::Transitory;
}

inline Convexity classify_vertex(const Vertex& vertex, const SolidModel& model, const std::vector<Convexity>& edge_conv) {
  return classify_vertex(vertex, model, edge_conv, model.vertex_edges());
}

inline ConvexityMap classify_all(const SolidModel& model, double tau = tol::convexity) {
  ConvexityMap map;
  map.face_conv.reserve(model.faces.size());
  for (const auto& f : model.faces) map.face_conv.push_back(classify_face(f));
  map.edge_conv.reserve(model.edges.size());
  for (const auto& e : model.edges) map.edge_conv.push_back(classify_edge(e, model, tau));
  const auto incident = model.vertex_edges();
  map.vertex_conv.reserve(model.vertices.size());
  for (const auto& v : model.vertices) map.vertex_conv.push_back(classify_vertex(v, model, map.edge_conv, incident));
  return map;
}

}  // namespace taag
