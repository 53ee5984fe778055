#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taag/error.hpp"
#include "taag/geometry.hpp"

namespace taag {

template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}
  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(Id, Id) = default;
};

struct VertexTag {};
struct EdgeTag {};
struct FaceTag {};
using VertexId = Id<VertexTag>;
using EdgeId = Id<EdgeTag>;
using FaceId = Id<FaceTag>;

struct Vertex {
  VertexId id;
  Point3 position;
};

struct Edge {
  EdgeId id;
  std::optional<std::pair<VertexId, VertexId>> endpoints;  // absent for closed edges
  EdgeCurve curve;
  std::pair<FaceId, FaceId> faces;  // (left, right) w.r.t. the stored direction
  Point3 midpoint;

  bool closed() const { return !endpoints.has_value(); }
  FaceId left() const { return faces.first; }
  FaceId right() const { return faces.second; }
  FaceId other_face(FaceId f) const { return f == faces.first ? faces.second : faces.first; }
};

struct Face {
  FaceId id;
  SurfaceGeometry surface;
  std::vector<EdgeId> bounding_edges;  // ascending, all loops flattened
  Point3 representative_point;
};

/// Indexed B-REP solid. Treat as immutable once validated; all lookups are
/// by dense index.
struct SolidModel {
  std::string name;
  int genus = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  const Vertex& vertex(VertexId id) const { return vertices.at(id.index()); }
  const Edge& edge(EdgeId id) const { return edges.at(id.index()); }
  const Face& face(FaceId id) const { return faces.at(id.index()); }

  /// Edges incident to each vertex, ascending by id.
  std::vector<std::vector<EdgeId>> vertex_edges() const {
    std::vector<std::vector<EdgeId>> out(vertices.size());
    for (const auto& e : edges) {
      if (!e.endpoints) continue;
      out[e.endpoints->first.index()].push_back(e.id);
      out[e.endpoints->second.index()].push_back(e.id);
    }
    return out;
  }
};

/// Unit tangent of the edge at `p` in the stored direction.
inline Vec3 tangent_at(const SolidModel& m, const Edge& e, const Point3& p) {
  return std::visit(
      Overloaded{
          [&](const LineSegment&) -> Vec3 {
            const Vec3 d = m.vertex(e.endpoints->second).position - m.vertex(e.endpoints->first).position;
            return d.normalized();
          },
          [&](const CircularArc& a) -> Vec3 { return a.axis.cross(p - a.center).normalized(); },
          [&](const FullCircle& c) -> Vec3 { return c.axis.cross(p - c.center).normalized(); },
      },
      e.curve);
}

/// Point halfway along the curve between the endpoints (or any point for a
/// full circle).
inline Point3 curve_midpoint(const EdgeCurve& curve, const Point3& a, const Point3& b) {
  return std::visit(
      Overloaded{
          [&](const LineSegment&) -> Point3 { return 0.5 * (a + b); },
          [&](const CircularArc& arc) -> Point3 {
            const Vec3 axis = arc.axis.normalized();
            const Vec3 u0 = (a - arc.center).normalized();
            const Vec3 u1 = (b - arc.center).normalized();
            const double half = 0.5 * ccw_angle(u0, u1, axis);
            return arc.center + arc.radius * (std::cos(half) * u0 + std::sin(half) * axis.cross(u0));
          },
          [&](const FullCircle& c) -> Point3 { return c.center + c.radius * any_perpendicular(c.axis); },
      },
      curve);
}

/// Number of boundary loops of a face: connected components of its bounding
/// edges under shared vertices, each closed edge counting as its own loop.
inline int loop_count(const SolidModel& m, const Face& f) {
  std::vector<std::uint32_t> parent(m.vertices.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int closed = 0;
  std::vector<std::uint32_t> touched;
  for (EdgeId eid : f.bounding_edges) {
    const Edge& e = m.edge(eid);
    if (!e.endpoints) {
      ++closed;
      continue;
    }
    const auto a = e.endpoints->first.value;
    const auto b = e.endpoints->second.value;
    touched.push_back(a);
    touched.push_back(b);
    parent[find(a)] = find(b);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  int roots = 0;
  for (auto v : touched) roots += find(v) == v ? 1 : 0;
  return roots + closed;
}

namespace detail {

inline std::string name(VertexId id) { return "vertex " + std::to_string(id.value); }
inline std::string name(EdgeId id) { return "edge " + std::to_string(id.value); }
inline std::string name(FaceId id) { return "face " + std::to_string(id.value); }

inline void check_direction(const Vec3& v, const std::string& who, const char* what) {
  if (!v.allFinite() || !is_unit(v)) {
    throw ValidationError(ValidationKind::BadNormal, who, std::string(what) + " is not a unit vector");
  }
}

inline void check_surface(const Face& f) {
  const auto who = name(f.id);
  std::visit(Overloaded{
                 [&](const Plane& p) { check_direction(p.normal, who, "plane normal"); },
                 [&](const Cylinder& c) {
                   check_direction(c.axis_dir, who, "cylinder axis");
                   if (!(c.radius > 0.0)) throw ValidationError(ValidationKind::BadGeometry, who, "radius must be > 0");
                 },
                 [&](const Cone& c) {
                   check_direction(c.axis_dir, who, "cone axis");
                   if (!(c.half_angle > 0.0 && c.half_angle < std::numbers::pi / 2)) {
                     throw ValidationError(ValidationKind::BadGeometry, who, "half angle must lie in (0, pi/2)");
                   }
                 },
                 [](const RuledSaddle&) {},
             },
             f.surface);
}

inline void check_curve(const SolidModel& m, const Edge& e) {
  const auto who = name(e.id);
  const bool circle = std::holds_alternative<FullCircle>(e.curve);
  if (circle == e.endpoints.has_value()) {
    throw ValidationError(ValidationKind::BadGeometry, who, "endpoints must be absent exactly for full circles");
  }
  std::visit(Overloaded{
                 [&](const LineSegment&) {
                   const auto& [a, b] = *e.endpoints;
                   if ((m.vertex(a).position - m.vertex(b).position).norm() <= tol::merge) {
                     throw ValidationError(ValidationKind::BadGeometry, who, "zero-length line");
                   }
                 },
                 [&](const auto& arc) {
                   check_direction(arc.axis, who, "curve axis");
                   if (!(arc.radius > 0.0)) throw ValidationError(ValidationKind::BadGeometry, who, "radius must be > 0");
                 },
             },
             e.curve);
}

}  // namespace detail

/// Checks every structural and geometric invariant; throws ValidationError
/// naming the first offending entity.
inline void validate(const SolidModel& m) {
  using detail::name;
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    if (m.vertices[i].id.index() != i) throw ValidationError(ValidationKind::DanglingReference, name(m.vertices[i].id), "ids not dense");
  }
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (m.edges[i].id.index() != i) throw ValidationError(ValidationKind::DanglingReference, name(m.edges[i].id), "ids not dense");
  }
  for (std::size_t i = 0; i < m.faces.size(); ++i) {
    if (m.faces[i].id.index() != i) throw ValidationError(ValidationKind::DanglingReference, name(m.faces[i].id), "ids not dense");
  }
  if (m.faces.size() < 4) throw ValidationError(ValidationKind::NonManifoldEdge, "solid", "a closed solid needs at least 4 faces");

  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < m.vertices.size(); ++j) {
      if ((m.vertices[i].position - m.vertices[j].position).norm() <= tol::merge) {
        throw ValidationError(ValidationKind::BadGeometry, name(m.vertices[j].id), "coincides with " + name(m.vertices[i].id));
      }
    }
  }
  for (const auto& f : m.faces) detail::check_surface(f);

  std::vector<int> vertex_use(m.vertices.size(), 0);
  std::vector<std::vector<EdgeId>> face_edges(m.faces.size());
  for (const auto& e : m.edges) {
    const auto who = name(e.id);
    const auto [fl, fr] = e.faces;
    if (fl.index() >= m.faces.size() || fr.index() >= m.faces.size()) {
      throw ValidationError(ValidationKind::DanglingReference, who, "references a missing face");
    }
    if (fl == fr) throw ValidationError(ValidationKind::NonManifoldEdge, who, "both sides are the same face");
    if (e.endpoints) {
      for (VertexId v : {e.endpoints->first, e.endpoints->second}) {
        if (v.index() >= m.vertices.size()) throw ValidationError(ValidationKind::DanglingReference, who, "references a missing vertex");
        ++vertex_use[v.index()];
      }
      if (e.endpoints->first == e.endpoints->second) throw ValidationError(ValidationKind::BadGeometry, who, "endpoints coincide");
    }
    detail::check_curve(m, e);
    for (FaceId f : {fl, fr}) {
      if (distance_to_surface(m.face(f).surface, e.midpoint) > tol::merge) {
        throw ValidationError(ValidationKind::OffSurface, who, "midpoint is not on " + name(f));
      }
    }
    face_edges[fl.index()].push_back(e.id);
    face_edges[fr.index()].push_back(e.id);
  }
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    if (vertex_use[i] == 0) throw ValidationError(ValidationKind::DanglingReference, name(m.vertices[i].id), "vertex is used by no edge");
  }
  for (const auto& f : m.faces) {
    if (f.bounding_edges.empty()) throw ValidationError(ValidationKind::DanglingReference, name(f.id), "face has no bounding edges");
    if (f.bounding_edges != face_edges[f.id.index()]) {
      throw ValidationError(ValidationKind::NonManifoldEdge, name(f.id), "bounding edges disagree with edge adjacency");
    }
  }

  long closed = 0;
  long rings = 0;
  for (const auto& e : m.edges) closed += e.closed() ? 1 : 0;
  for (const auto& f : m.faces) rings += loop_count(m, f) - 1;
  const long chi = static_cast<long>(m.vertices.size()) + closed - static_cast<long>(m.edges.size()) +
                   static_cast<long>(m.faces.size()) - rings;
  if (chi != 2 - 2L * m.genus) {
    throw ValidationError(ValidationKind::EulerMismatch, "solid",
                          "Euler-Poincare characteristic " + std::to_string(chi) + " does not match genus " +
                              std::to_string(m.genus));
  }
}

/// Fills each face's bounding edge list and representative point from the
/// edges. Used by the parser and the model builder.
inline void derive_face_data(SolidModel& m) {
  for (auto& f : m.faces) f.bounding_edges.clear();
  for (const auto& e : m.edges) {
    for (FaceId f : {e.faces.first, e.faces.second}) {
      if (f.index() < m.faces.size()) m.faces[f.index()].bounding_edges.push_back(e.id);
    }
  }
  for (auto& f : m.faces) {
    auto& b = f.bounding_edges;
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (!b.empty()) f.representative_point = m.edge(b.front()).midpoint;
  }
}

}  // namespace taag
