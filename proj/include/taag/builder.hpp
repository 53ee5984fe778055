#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taag/brep.hpp"

namespace taag {

/// Assembles a SolidModel from per-face boundary loops. Each face lists its
/// half-edges; build() pairs every half-edge with its reverse on another
/// face and emits one Edge per pair, stored in the direction of the first
/// half-edge so that face is on its left.
///
/// Planar polygon loops are oriented automatically from the plane normal.
/// Arcs and circles must be given with the face on the left of the
/// counter-clockwise direction about the supplied axis.
class ModelBuilder {
 public:
  ModelBuilder(std::string name, int genus) : name_(std::move(name)), genus_(genus) {}

  VertexId vertex(const Point3& p) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if ((vertices_[i] - p).norm() <= tol::merge) return VertexId{static_cast<std::uint32_t>(i)};
    }
    vertices_.push_back(p);
    return VertexId{static_cast<std::uint32_t>(vertices_.size() - 1)};
  }

  std::vector<VertexId> vertices(std::span<const Point3> pts) {
    std::vector<VertexId> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(vertex(p));
    return out;
  }

  const Point3& position(VertexId v) const { return vertices_.at(v.index()); }

  FaceId face(SurfaceGeometry s) {
    surfaces_.push_back(std::move(s));
    return FaceId{static_cast<std::uint32_t>(surfaces_.size() - 1)};
  }

  FaceId plane(const Point3& point, const Vec3& normal) { return face(Plane{point, normal.normalized()}); }

  /// Straight-sided loop on a planar face. `hole` marks an inner loop.
  void polygon(FaceId f, std::vector<VertexId> loop, bool hole = false) {
    const auto* pl = std::get_if<Plane>(&surfaces_.at(f.index()));
    if (pl == nullptr) throw Error("polygon() needs a planar face");
    Vec3 newell = Vec3::Zero();
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Point3& a = position(loop[i]);
      const Point3& b = position(loop[(i + 1) % loop.size()]);
      newell += a.cross(b);
    }
    const bool ccw = newell.dot(pl->normal) > 0.0;
    if (ccw == hole) std::reverse(loop.begin(), loop.end());
    for (std::size_t i = 0; i < loop.size(); ++i) line(f, loop[i], loop[(i + 1) % loop.size()]);
  }

  void polygon(FaceId f, std::span<const Point3> pts, bool hole = false) { polygon(f, vertices(pts), hole); }

  void line(FaceId f, VertexId from, VertexId to) { halves_.push_back({f, from, to, LineSegment{}}); }

  void arc(FaceId f, VertexId from, VertexId to, const Point3& center, const Vec3& axis) {
    halves_.push_back({f, from, to, CircularArc{center, axis.normalized(), (position(from) - center).norm()}});
  }

  void circle(FaceId f, const Point3& center, const Vec3& axis, double radius) {
    halves_.push_back({f, VertexId{}, VertexId{}, FullCircle{center, axis.normalized(), radius}});
  }

  std::size_t face_count() const { return surfaces_.size(); }

  SolidModel build() const {
    SolidModel m;
    m.name = name_;
    m.genus = genus_;
    for (std::size_t i = 0; i < vertices_.size(); ++i) m.vertices.push_back({VertexId{static_cast<std::uint32_t>(i)}, vertices_[i]});
    for (std::size_t i = 0; i < surfaces_.size(); ++i) {
      m.faces.push_back({FaceId{static_cast<std::uint32_t>(i)}, surfaces_[i], {}, Point3::Zero()});
    }
    std::vector<char> used(halves_.size(), 0);
    for (std::size_t i = 0; i < halves_.size(); ++i) {
      if (used[i]) continue;
      const auto& h = halves_[i];
      std::size_t mate = halves_.size();
      for (std::size_t j = i + 1; j < halves_.size(); ++j) {
        if (!used[j] && reverses(h, halves_[j])) {
          mate = j;
          break;
        }
      }
      if (mate == halves_.size()) {
        throw Error("builder '" + name_ + "': unpaired half-edge on face " + std::to_string(h.face.value) + " (" +
                    std::to_string(h.from.value) + " -> " + std::to_string(h.to.value) + ")");
      }
      used[i] = used[mate] = 1;
      Edge e;
      e.id = EdgeId{static_cast<std::uint32_t>(m.edges.size())};
      e.curve = h.curve;
      e.faces = {h.face, halves_[mate].face};
      if (std::holds_alternative<FullCircle>(h.curve)) {
        e.midpoint = curve_midpoint(h.curve, Point3::Zero(), Point3::Zero());
      } else {
        e.endpoints = std::pair{h.from, h.to};
        e.midpoint = curve_midpoint(h.curve, position(h.from), position(h.to));
      }
      m.edges.push_back(std::move(e));
    }
    derive_face_data(m);
    validate(m);
    return m;
  }

 private:
  struct HalfEdge {
    FaceId face;
    VertexId from;
    VertexId to;
    EdgeCurve curve;
  };

  static bool same_point(const Point3& a, const Point3& b) { return (a - b).norm() <= tol::merge; }

  static bool reverses(const HalfEdge& a, const HalfEdge& b) {
    if (a.curve.index() != b.curve.index() || a.face == b.face) return false;
    return std::visit(
        Overloaded{
            [&](const LineSegment&) { return a.from == b.to && a.to == b.from; },
            [&](const CircularArc& ca) {
              const auto& cb = std::get<CircularArc>(b.curve);
              return a.from == b.to && a.to == b.from && same_point(ca.center, cb.center) && ca.axis.dot(cb.axis) < -0.999;
            },
            [&](const FullCircle& ca) {
              const auto& cb = std::get<FullCircle>(b.curve);
              return same_point(ca.center, cb.center) && std::abs(ca.radius - cb.radius) <= tol::merge &&
                     ca.axis.dot(cb.axis) < -0.999;
            },
        },
        a.curve);
  }

  std::string name_;
  int genus_;
  std::vector<Point3> vertices_;
  std::vector<SurfaceGeometry> surfaces_;
  std::vector<HalfEdge> halves_;
};

/// Orthonormal frame on a planar host face: `n` is the host's outward
/// normal and u x v = n.
struct Frame {
  Point3 origin;
  Vec3 u;
  Vec3 v;
  Vec3 n;

  Point3 at(double a, double b, double c = 0.0) const { return origin + a * u + b * v + c * n; }
};

/// Right prism over a planar profile. `sides[i]` is the face over profile
/// edge i -> i+1; caps sit at the profile plane and at `depth` along `dir`.
struct Prism {
  std::vector<FaceId> sides;
  FaceId start_cap;
  FaceId end_cap;
  std::vector<VertexId> start_ring;
  std::vector<VertexId> end_ring;
};

inline Prism extrude(ModelBuilder& b, std::span<const Point3> profile, const Vec3& dir, double depth) {
  const Vec3 w = dir.normalized();
  Vec3 newell = Vec3::Zero();
  for (std::size_t i = 0; i < profile.size(); ++i) newell += profile[i].cross(profile[(i + 1) % profile.size()]);
  const double turn = newell.dot(w) > 0.0 ? 1.0 : -1.0;  // +1 when the profile is ccw about w

  Prism p;
  std::vector<Point3> far;
  for (const auto& q : profile) far.push_back(q + depth * w);
  p.start_ring = b.vertices(profile);
  p.end_ring = b.vertices(far);
  p.start_cap = b.plane(profile.front(), -w);
  p.end_cap = b.plane(far.front(), w);
  b.polygon(p.start_cap, p.start_ring);
  b.polygon(p.end_cap, p.end_ring);
  const std::size_t n = profile.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Vec3 d = (profile[j] - profile[i]).normalized();
    const FaceId f = b.plane(profile[i], turn * d.cross(w));
    b.polygon(f, std::vector<VertexId>{p.start_ring[i], p.start_ring[j], p.end_ring[j], p.end_ring[i]});
    p.sides.push_back(f);
  }
  return p;
}

inline Prism box(ModelBuilder& b, const Point3& lo, const Point3& hi) {
  const std::vector<Point3> base{{lo.x(), lo.y(), lo.z()}, {hi.x(), lo.y(), lo.z()}, {hi.x(), hi.y(), lo.z()}, {lo.x(), hi.y(), lo.z()}};
  return extrude(b, base, Vec3::UnitZ(), hi.z() - lo.z());
}

/// Features cut into or raised from a planar host face. Footprints are
/// given in the host frame's (u, v) coordinates.
struct FeatureFaces {
  std::vector<FaceId> walls;
  std::vector<FaceId> caps;  // top of a protrusion, floor of a pocket; empty for through holes

  std::vector<FaceId> all() const {
    std::vector<FaceId> out = walls;
    out.insert(out.end(), caps.begin(), caps.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

inline FeatureFaces prism_feature(ModelBuilder& b, FaceId host, const Frame& fr, std::span<const std::pair<double, double>> footprint,
                                  double offset, std::optional<FaceId> exit_face) {
  std::vector<Point3> ring;
  std::vector<Point3> far;
  for (const auto& [a, c] : footprint) {
    ring.push_back(fr.at(a, c));
    far.push_back(fr.at(a, c, offset));
  }
  b.polygon(host, std::span<const Point3>(ring), true);
  const auto near_ids = b.vertices(ring);
  const auto far_ids = b.vertices(far);
  FeatureFaces out;
  const bool pocket = offset < 0.0;
  if (exit_face) {
    b.polygon(*exit_face, far_ids, true);
  } else {
    const FaceId cap = b.plane(far.front(), fr.n);
    b.polygon(cap, far_ids);
    out.caps.push_back(cap);
  }
  Vec3 newell = Vec3::Zero();
  for (std::size_t i = 0; i < ring.size(); ++i) newell += ring[i].cross(ring[(i + 1) % ring.size()]);
  const double turn = newell.dot(fr.n) > 0.0 ? 1.0 : -1.0;
  const double inward = pocket ? -1.0 : 1.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const std::size_t j = (i + 1) % ring.size();
    const Vec3 d = (ring[j] - ring[i]).normalized();
    const FaceId f = b.plane(ring[i], inward * turn * d.cross(fr.n));
    b.polygon(f, std::vector<VertexId>{near_ids[i], near_ids[j], far_ids[j], far_ids[i]});
    out.walls.push_back(f);
  }
  return out;
}

}  // namespace detail

inline FeatureFaces protrusion(ModelBuilder& b, FaceId host, const Frame& fr, std::span<const std::pair<double, double>> footprint, double height) {
  return detail::prism_feature(b, host, fr, footprint, height, std::nullopt);
}

inline FeatureFaces pocket(ModelBuilder& b, FaceId host, const Frame& fr, std::span<const std::pair<double, double>> footprint, double depth) {
  return detail::prism_feature(b, host, fr, footprint, -depth, std::nullopt);
}

inline FeatureFaces through_cut(ModelBuilder& b, FaceId entry, FaceId exit, const Frame& fr,
                                std::span<const std::pair<double, double>> footprint, double length) {
  return detail::prism_feature(b, entry, fr, footprint, -length, exit);
}

inline std::vector<std::pair<double, double>> rect(double a0, double b0, double a1, double b1) {
  return {{a0, b0}, {a1, b0}, {a1, b1}, {a0, b1}};
}

inline FeatureFaces cylinder_boss(ModelBuilder& b, FaceId host, const Point3& c, const Vec3& n, double r, double h) {
  b.circle(host, c, -n, r);
  const FaceId wall = b.face(Cylinder{c, n, r, MaterialSide::Outside});
  b.circle(wall, c, n, r);
  b.circle(wall, c + h * n, -n, r);
  const FaceId top = b.plane(c + h * n, n);
  b.circle(top, c + h * n, n, r);
  return {{wall}, {top}};
}

inline FeatureFaces tapered_boss(ModelBuilder& b, FaceId host, const Point3& c, const Vec3& n, double r_base, double r_top, double h) {
  b.circle(host, c, -n, r_base);
  const double half = std::atan((r_base - r_top) / h);
  const Point3 apex = c + n * (h * r_base / (r_base - r_top));
  const FaceId wall = b.face(Cone{apex, -n, half, MaterialSide::Outside});
  b.circle(wall, c, n, r_base);
  b.circle(wall, c + h * n, -n, r_top);
  const FaceId top = b.plane(c + h * n, n);
  b.circle(top, c + h * n, n, r_top);
  return {{wall}, {top}};
}

inline FeatureFaces blind_hole(ModelBuilder& b, FaceId host, const Point3& c, const Vec3& n, double r, double depth) {
  b.circle(host, c, -n, r);
  const FaceId wall = b.face(Cylinder{c, n, r, MaterialSide::Inside});
  b.circle(wall, c, n, r);
  b.circle(wall, c - depth * n, -n, r);
  const FaceId floor = b.plane(c - depth * n, n);
  b.circle(floor, c - depth * n, n, r);
  return {{wall}, {floor}};
}

inline FeatureFaces through_hole(ModelBuilder& b, FaceId entry, FaceId exit, const Point3& c, const Vec3& n, double r, double length) {
  b.circle(entry, c, -n, r);
  const FaceId wall = b.face(Cylinder{c, n, r, MaterialSide::Inside});
  b.circle(wall, c, n, r);
  b.circle(wall, c - length * n, -n, r);
  b.circle(exit, c - length * n, n, r);
  return {{wall}, {}};
}

}  // namespace taag
