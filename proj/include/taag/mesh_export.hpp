#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "taag/subgraph.hpp"

namespace taag {

using Rgb = std::array<std::uint8_t, 3>;

namespace colors {
inline constexpr Rgb convex{40, 90, 230};     // blue
inline constexpr Rgb concave{245, 200, 20};   // yellow
inline constexpr Rgb neutral{150, 150, 150};  // gray: unassigned or flagged
inline constexpr Rgb boundary{220, 30, 30};   // red
}  // namespace colors

/// Triangle soup with one color per vertex (every face owns its vertices),
/// plus red boundary polylines as line segments.
struct FeatureMesh {
  std::vector<Point3> positions;
  std::vector<Rgb> colors;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<std::array<std::uint32_t, 2>> segments;
  std::vector<FaceId> triangle_face;  // source face of each triangle
};

inline constexpr int kSegmentsPerTurn = 24;

namespace detail {

/// Points along an edge in the direction that keeps `face` on the left,
/// first and last point included (a closed edge repeats nothing).
inline std::vector<Point3> edge_polyline(const SolidModel& m, const Edge& e, bool reversed) {
  std::vector<Point3> pts;
  auto sweep = [&](const Point3& center, const Vec3& axis, const Point3& from, double angle) {
    const int n = std::max(1, static_cast<int>(std::ceil(angle / (2.0 * std::numbers::pi) * kSegmentsPerTurn - 1e-9)));
    const Vec3 r0 = from - center;
    const Vec3 r1 = axis.cross(r0);
    const int stop = std::holds_alternative<FullCircle>(e.curve) ? n - 1 : n;
    for (int k = 0; k <= stop; ++k) {
      const double t = angle * k / n;
      pts.push_back(center + std::cos(t) * r0 + std::sin(t) * r1);
    }
  };
  std::visit(Overloaded{
                 [&](const LineSegment&) {
                   pts.push_back(m.vertex(e.endpoints->first).position);
                   pts.push_back(m.vertex(e.endpoints->second).position);
                 },
                 [&](const CircularArc& a) {
                   const Point3& p0 = m.vertex(e.endpoints->first).position;
                   const Point3& p1 = m.vertex(e.endpoints->second).position;
                   sweep(a.center, a.axis, p0, ccw_angle(p0 - a.center, p1 - a.center, a.axis));
                 },
                 [&](const FullCircle& c) { sweep(c.center, c.axis, c.center + c.radius * any_perpendicular(c.axis), 2.0 * std::numbers::pi); },
             },
             e.curve);
  if (reversed) std::reverse(pts.begin(), pts.end());
  return pts;
}

struct FaceLoop {
  std::vector<Point3> points;
  bool from_circle = false;
};

/// Boundary loops of a face, each traversed with the face on the left.
inline std::vector<FaceLoop> face_loops(const SolidModel& m, const Face& f) {
  std::vector<FaceLoop> loops;
  struct Piece {
    std::uint32_t from;
    std::uint32_t to;
    std::vector<Point3> pts;
  };
  std::vector<Piece> pieces;
  for (EdgeId id : f.bounding_edges) {
    const Edge& e = m.edge(id);
    const bool reversed = e.left() != f.id;
    auto pts = edge_polyline(m, e, reversed);
    if (e.closed()) {
      loops.push_back({std::move(pts), true});
      continue;
    }
    auto [a, b] = *e.endpoints;
    if (reversed) std::swap(a, b);
    pieces.push_back({a.value, b.value, std::move(pts)});
  }
  std::vector<char> used(pieces.size(), 0);
  for (std::size_t start = 0; start < pieces.size(); ++start) {
    if (used[start]) continue;
    FaceLoop loop;
    std::size_t cur = start;
    while (true) {
      used[cur] = 1;
      const auto& p = pieces[cur];
      loop.points.insert(loop.points.end(), p.pts.begin(), p.pts.end() - 1);
      std::size_t next = pieces.size();
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (!used[j] && pieces[j].from == p.to) {
          next = j;
          break;
        }
      }
      if (next == pieces.size()) break;
      cur = next;
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

using P2 = std::array<double, 2>;

inline double cross2(const P2& o, const P2& a, const P2& b) { return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]); }

inline double signed_area(const std::vector<P2>& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * s;
}

inline bool segments_cross(const P2& a, const P2& b, const P2& c, const P2& d) {
  const double d1 = cross2(c, d, a), d2 = cross2(c, d, b), d3 = cross2(a, b, c), d4 = cross2(a, b, d);
  return ((d1 > 1e-12 && d2 < -1e-12) || (d1 < -1e-12 && d2 > 1e-12)) && ((d3 > 1e-12 && d4 < -1e-12) || (d3 < -1e-12 && d4 > 1e-12));
}

/// Ear clipping of a ccw polygon given as indices into `pts`.
inline std::vector<std::array<std::size_t, 3>> ear_clip(const std::vector<P2>& pts, std::vector<std::size_t> poly) {
  std::vector<std::array<std::size_t, 3>> tris;
  auto inside = [&](std::size_t p, std::size_t a, std::size_t b, std::size_t c) {
    const P2& q = pts[p];
    if (q == pts[a] || q == pts[b] || q == pts[c]) return false;
    return cross2(pts[a], pts[b], q) >= 0 && cross2(pts[b], pts[c], q) >= 0 && cross2(pts[c], pts[a], q) >= 0;
  };
  std::size_t guard = 0;
  while (poly.size() > 3 && guard < 4 * poly.size() * poly.size()) {
    bool clipped = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const std::size_t a = poly[(i + poly.size() - 1) % poly.size()], b = poly[i], c = poly[(i + 1) % poly.size()];
      if (cross2(pts[a], pts[b], pts[c]) <= 1e-14) continue;
      bool blocked = false;
      for (std::size_t p : poly) {
        if (p != a && p != b && p != c && inside(p, a, b, c)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tris.push_back({a, b, c});
      poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) break;
    ++guard;
  }
  // Degenerate leftovers (collinear runs) are fanned.
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    if (std::abs(cross2(pts[poly[0]], pts[poly[i]], pts[poly[i + 1]])) > 1e-14) tris.push_back({poly[0], poly[i], poly[i + 1]});
  }
  return tris;
}

/// Triangulates a 2D region: loops[0] is the outer loop (ccw), the rest
/// are holes (cw). Holes are bridged to the nearest visible vertex.
inline std::vector<std::array<std::size_t, 3>> triangulate_region(const std::vector<P2>& pts, std::vector<std::vector<std::size_t>> loops) {
  std::vector<std::size_t> outer = loops.front();
  std::vector<std::vector<std::size_t>> holes(loops.begin() + 1, loops.end());
  std::sort(holes.begin(), holes.end(), [&](const auto& a, const auto& b) {
    auto mx = [&](const auto& h) {
      double m = -1e300;
      for (auto i : h) m = std::max(m, pts[i][0]);
      return m;
    };
    return mx(a) > mx(b);
  });
  for (std::size_t h = 0; h < holes.size(); ++h) {
    auto& hole = holes[h];
    std::size_t mi = 0;
    for (std::size_t i = 1; i < hole.size(); ++i) {
      if (pts[hole[i]][0] > pts[hole[mi]][0]) mi = i;
    }
    const P2 M = pts[hole[mi]];
    auto visible = [&](const P2& P) {
      auto blocks = [&](const std::vector<std::size_t>& ring) {
        for (std::size_t i = 0; i < ring.size(); ++i) {
          if (segments_cross(M, P, pts[ring[i]], pts[ring[(i + 1) % ring.size()]])) return true;
        }
        return false;
      };
      if (blocks(outer)) return false;
      for (std::size_t k = h; k < holes.size(); ++k) {
        if (blocks(holes[k])) return false;
      }
      return true;
    };
    std::size_t best = outer.size();
    double best_d = 1e300;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      const P2& P = pts[outer[i]];
      const double d = std::hypot(P[0] - M[0], P[1] - M[1]);
      if (d < best_d && visible(P)) {
        best_d = d;
        best = i;
      }
    }
    if (best == outer.size()) best = 0;
    std::vector<std::size_t> merged(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(best) + 1);
    for (std::size_t k = 0; k <= hole.size(); ++k) merged.push_back(hole[(mi + k) % hole.size()]);
    merged.insert(merged.end(), outer.begin() + static_cast<std::ptrdiff_t>(best), outer.end());
    outer = std::move(merged);
  }
  return ear_clip(pts, outer);
}

/// Flattens a face point into parameter space: plane frame for planes,
/// (arc length at unit radius, height) for cylinders and cones.
inline P2 flatten(const SurfaceGeometry& s, const Point3& p, const Point3& ref) {
  return std::visit(Overloaded{
                        [&](const Plane& pl) {
                          const Vec3 u = any_perpendicular(pl.normal);
                          const Vec3 v = pl.normal.cross(u);
                          return P2{(p - pl.point).dot(u), (p - pl.point).dot(v)};
                        },
                        [&](const auto& rev) -> P2 {
                          Point3 origin;
                          Vec3 axis;
                          if constexpr (std::is_same_v<std::decay_t<decltype(rev)>, Cylinder>) {
                            origin = rev.axis_point;
                            axis = rev.axis_dir;
                          } else if constexpr (std::is_same_v<std::decay_t<decltype(rev)>, Cone>) {
                            origin = rev.apex;
                            axis = rev.axis_dir;
                          } else {
                            origin = ref;
                            axis = Vec3::UnitZ();
                          }
                          const Vec3 u = any_perpendicular(axis);
                          const Vec3 v = axis.cross(u);
                          auto angle = [&](const Point3& q) { return std::atan2((q - origin).dot(v), (q - origin).dot(u)); };
                          double t = angle(p) - angle(ref);
                          while (t > std::numbers::pi) t -= 2.0 * std::numbers::pi;
                          while (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
                          return P2{t, (p - origin).dot(axis)};
                        },
                    },
                    s);
}

}  // namespace detail

inline FeatureMesh build_feature_mesh(const SolidModel& model, const FeatureExtraction& fx) {
  FeatureMesh mesh;
  std::vector<Rgb> face_color(model.faces.size(), colors::neutral);
  for (const auto& s : fx.subgraphs) {
    for (FaceId f : s.faces) face_color[f.index()] = s.convexity == Convexity::Concave ? colors::concave : colors::convex;
  }
  for (const auto& d : fx.diagnostics) {
    if (d.kind != Diagnostic::Kind::UnresolvedConvexity) continue;
    for (auto id : d.ids) face_color.at(id) = colors::neutral;
  }

  for (const auto& face : model.faces) {
    auto loops = detail::face_loops(model, face);
    if (loops.empty()) continue;
    const auto base = static_cast<std::uint32_t>(mesh.positions.size());
    std::vector<Point3> pts3;
    std::vector<std::vector<std::size_t>> rings;
    for (const auto& l : loops) {
      std::vector<std::size_t> ring;
      for (const auto& p : l.points) {
        ring.push_back(pts3.size());
        pts3.push_back(p);
      }
      rings.push_back(std::move(ring));
    }

    std::vector<std::array<std::size_t, 3>> tris;
    const bool revolved = std::holds_alternative<Cylinder>(face.surface) || std::holds_alternative<Cone>(face.surface);
    if (revolved && loops.size() == 2 && loops[0].from_circle && loops[1].from_circle) {
      // band between two parallel circles; pair samples by angle
      const auto& a = rings[0];
      const auto& b = rings[1];
      const Point3 ca = std::accumulate(loops[0].points.begin(), loops[0].points.end(), Point3(Point3::Zero())) / double(a.size());
      const Point3 cb = std::accumulate(loops[1].points.begin(), loops[1].points.end(), Point3(Point3::Zero())) / double(b.size());
      const Vec3 axis = (cb - ca).normalized();
      const Vec3 u = any_perpendicular(axis), v = axis.cross(u);
      auto sorted = [&](const std::vector<std::size_t>& ring, const Point3& c) {
        std::vector<std::size_t> r = ring;
        std::sort(r.begin(), r.end(), [&](std::size_t i, std::size_t j) {
          return std::atan2((pts3[i] - c).dot(v), (pts3[i] - c).dot(u)) < std::atan2((pts3[j] - c).dot(v), (pts3[j] - c).dot(u));
        });
        return r;
      };
      const auto ra = sorted(a, ca);
      auto rb = sorted(b, cb);
      // start both rings at the same angle
      const Vec3 d0 = (pts3[ra[0]] - ca).normalized();
      std::size_t j0 = 0;
      for (std::size_t j = 1; j < rb.size(); ++j) {
        if ((pts3[rb[j]] - cb).normalized().dot(d0) > (pts3[rb[j0]] - cb).normalized().dot(d0)) j0 = j;
      }
      std::rotate(rb.begin(), rb.begin() + static_cast<std::ptrdiff_t>(j0), rb.end());
      const std::size_t n = std::min(ra.size(), rb.size());
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k1 = (k + 1) % n;
        tris.push_back({ra[k], ra[k1], rb[k1]});
        tris.push_back({ra[k], rb[k1], rb[k]});
      }
    } else {
      std::vector<detail::P2> flat;
      for (const auto& p : pts3) flat.push_back(detail::flatten(face.surface, p, face.representative_point));
      // outer loop first and ccw, holes cw
      std::size_t outer = 0;
      double best = -1.0;
      for (std::size_t i = 0; i < rings.size(); ++i) {
        std::vector<detail::P2> poly;
        for (auto k : rings[i]) poly.push_back(flat[k]);
        const double a = std::abs(detail::signed_area(poly));
        if (a > best) {
          best = a;
          outer = i;
        }
      }
      std::swap(rings[0], rings[outer]);
      for (std::size_t i = 0; i < rings.size(); ++i) {
        std::vector<detail::P2> poly;
        for (auto k : rings[i]) poly.push_back(flat[k]);
        const bool ccw = detail::signed_area(poly) > 0.0;
        if (ccw != (i == 0)) std::reverse(rings[i].begin(), rings[i].end());
      }
      tris = detail::triangulate_region(flat, rings);
    }

    for (const auto& p : pts3) {
      mesh.positions.push_back(p);
      mesh.colors.push_back(face_color[face.id.index()]);
    }
    for (auto t : tris) {
      const Vec3 n = (pts3[t[1]] - pts3[t[0]]).cross(pts3[t[2]] - pts3[t[0]]);
      const Point3 c = (pts3[t[0]] + pts3[t[1]] + pts3[t[2]]) / 3.0;
      try {
        if (n.dot(outward_normal_at(face.surface, project_onto(face.surface, c))) < 0.0) std::swap(t[1], t[2]);
      } catch (const GeometryError&) {
      }
      mesh.triangles.push_back({base + static_cast<std::uint32_t>(t[0]), base + static_cast<std::uint32_t>(t[1]),
                                base + static_cast<std::uint32_t>(t[2])});
      mesh.triangle_face.push_back(face.id);
    }
  }

  for (const auto& b : fx.boundaries()) {
    for (EdgeId id : b.edges) {
      const Edge& e = model.edge(id);
      auto pts = detail::edge_polyline(model, e, false);
      if (e.closed()) pts.push_back(pts.front());
      const auto base = static_cast<std::uint32_t>(mesh.positions.size());
      for (const auto& p : pts) {
        mesh.positions.push_back(p);
        mesh.colors.push_back(colors::boundary);
      }
      for (std::uint32_t k = 0; k + 1 < pts.size(); ++k) mesh.segments.push_back({base + k, base + k + 1});
    }
  }
  return mesh;
}

/// ASCII PLY with per-vertex colors, triangle faces and colored edges.
inline std::string to_ply(const FeatureMesh& mesh, const std::string& comment = {}) {
  std::ostringstream out;
  out << "ply\nformat ascii 1.0\n";
  if (!comment.empty()) out << "comment " << comment << "\n";
  out << "element vertex " << mesh.positions.size() << "\n"
      << "property float x\nproperty float y\nproperty float z\n"
      << "property uchar red\nproperty uchar green\nproperty uchar blue\n"
      << "element face " << mesh.triangles.size() << "\n"
      << "property list uchar int vertex_indices\n"
      << "element edge " << mesh.segments.size() << "\n"
      << "property int vertex1\nproperty int vertex2\n"
      << "property uchar red\nproperty uchar green\nproperty uchar blue\n"
      << "end_header\n";
  auto num = [](double v) {
    if (std::abs(v) < 5e-7) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
  };
  for (std::size_t i = 0; i < mesh.positions.size(); ++i) {
    const auto& p = mesh.positions[i];
    const auto& c = mesh.colors[i];
    out << num(p.x()) << ' ' << num(p.y()) << ' ' << num(p.z()) << ' ' << int(c[0]) << ' ' << int(c[1]) << ' ' << int(c[2]) << "\n";
  }
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
  for (const auto& s : mesh.segments) {
    out << s[0] << ' ' << s[1] << ' ' << int(colors::boundary[0]) << ' ' << int(colors::boundary[1]) << ' ' << int(colors::boundary[2])
        << "\n";
  }
  return out.str();
}

}  // namespace taag
