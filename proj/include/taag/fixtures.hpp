#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taag/builder.hpp"

namespace taag {

enum class FixtureKind {
  Cube,
  Block,
  Step,
  Slot,
  Pocket,
  BlindHole,
  ThroughRectHole,
  CylBoss,
  CylHole,
  ChamferedProtrusion,
  TwoBlockStep,
  CaseA,
  CaseB,
  Part1Composite,
  Part2Fixture,
  TaperedBoss,
  RoundedBlock,
};

inline constexpr std::array<std::pair<FixtureKind, std::string_view>, 17> kFixtureNames{{
    {FixtureKind::Cube, "cube"},
    {FixtureKind::Block, "block"},
    {FixtureKind::Step, "step"},
    {FixtureKind::Slot, "slot"},
    {FixtureKind::Pocket, "pocket"},
    {FixtureKind::BlindHole, "blind_hole"},
    {FixtureKind::ThroughRectHole, "through_rect_hole"},
    {FixtureKind::CylBoss, "cyl_boss"},
    {FixtureKind::CylHole, "cyl_hole"},
    {FixtureKind::ChamferedProtrusion, "chamfered_protrusion"},
    {FixtureKind::TwoBlockStep, "two_block_step"},
    {FixtureKind::CaseA, "case_a"},
    {FixtureKind::CaseB, "case_b"},
    {FixtureKind::Part1Composite, "part1"},
    {FixtureKind::Part2Fixture, "part2"},
    {FixtureKind::TaperedBoss, "tapered_boss"},
    {FixtureKind::RoundedBlock, "rounded_block"},
}};

inline std::string_view to_string(FixtureKind k) {
  for (const auto& [kind, name] : kFixtureNames) {
    if (kind == k) return name;
  }
  return "?";
}

inline std::optional<FixtureKind> fixture_kind(std::string_view name) {
  for (const auto& [kind, n] : kFixtureNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [_, n] : kFixtureNames) out.emplace_back(n);
  return out;
}

/// Named positive dimensions. Missing entries take the kind's defaults.
struct FixtureSpec {
  FixtureKind kind = FixtureKind::Cube;
  std::map<std::string, double> dims;
};

/// A built fixture plus named face groups (one per modelled feature, plus
/// the host body) for tests that check feature membership.
struct FixtureInfo {
  SolidModel model;
  std::map<std::string, std::vector<FaceId>> groups;
};

inline std::map<std::string, double> default_dimensions(FixtureKind k) {
  switch (k) {
    case FixtureKind::Cube: return {{"size", 1.0}};
    case FixtureKind::Block: return {{"length", 4.0}, {"width", 3.0}, {"height", 2.0}};
    case FixtureKind::Step:
      return {{"length", 4.0}, {"width", 3.0}, {"height", 2.0}, {"step_length", 2.0}, {"step_height", 1.0}};
    case FixtureKind::Slot:
      return {{"length", 6.0}, {"width", 3.0}, {"height", 2.0}, {"slot_width", 2.0}, {"slot_depth", 1.0}};
    case FixtureKind::Pocket:
      return {{"length", 6.0}, {"width", 4.0}, {"height", 3.0}, {"pocket_length", 2.0}, {"pocket_width", 1.5}, {"pocket_depth", 1.0}};
    case FixtureKind::BlindHole:
      return {{"length", 6.0}, {"width", 4.0}, {"height", 3.0}, {"radius", 1.0}, {"depth", 1.5}};
    case FixtureKind::ThroughRectHole:
      return {{"length", 6.0}, {"width", 4.0}, {"height", 3.0}, {"hole_length", 2.0}, {"hole_width", 1.6}};
    case FixtureKind::CylBoss:
      return {{"length", 6.0}, {"width", 4.0}, {"height", 2.0}, {"radius", 1.0}, {"boss_height", 1.5}};
    case FixtureKind::CylHole: return {{"length", 6.0}, {"width", 4.0}, {"height", 3.0}, {"radius", 1.0}};
    case FixtureKind::ChamferedProtrusion:
      return {{"length", 8.0},          {"width", 6.0},          {"height", 2.0}, {"protrusion_length", 4.0},
              {"protrusion_width", 3.0}, {"protrusion_height", 1.5}, {"chamfer", 0.5}};
    case FixtureKind::TwoBlockStep:
      return {{"length", 6.0}, {"width", 4.0}, {"height", 2.0}, {"upper_length", 3.0}, {"upper_width", 2.0}, {"upper_height", 1.5}};
    case FixtureKind::CaseA:
    case FixtureKind::CaseB:
    case FixtureKind::Part1Composite:
    case FixtureKind::Part2Fixture: return {{"scale", 1.0}};
    case FixtureKind::TaperedBoss:
      return {{"length", 6.0}, {"width", 4.0}, {"height", 2.0}, {"base_radius", 1.2}, {"top_radius", 0.7}, {"boss_height", 1.5}};
    case FixtureKind::RoundedBlock: return {{"length", 4.0}, {"width", 3.0}, {"height", 2.0}, {"radius", 0.5}};
  }
  return {};
}

namespace detail {

class Dims {
 public:
  Dims(FixtureKind kind, const std::map<std::string, double>& given) : kind_(kind), values_(default_dimensions(kind)) {
    for (const auto& [key, value] : given) {
      auto it = values_.find(key);
      if (it == values_.end()) fail("unknown dimension '" + key + "'");
      it->second = value;
    }
    for (const auto& [key, value] : values_) {
      if (!(value > 0.0) || !std::isfinite(value)) fail("dimension '" + key + "' must be positive");
    }
  }

  double operator()(const std::string& key) const { return values_.at(key); }

  void require(bool ok, const std::string& what) const {
    if (!ok) fail(what);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw GeometryError(GeometryKind::InvalidDimensions, std::string(to_string(kind_)) + ": " + what);
  }

  FixtureKind kind_;
  std::map<std::string, double> values_;
};

inline std::vector<FaceId> range_faces(std::size_t from, std::size_t to) {
  std::vector<FaceId> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(FaceId{static_cast<std::uint32_t>(i)});
  return out;
}

inline std::vector<FaceId> complement(std::size_t face_count, const std::map<std::string, std::vector<FaceId>>& groups) {
  std::vector<char> taken(face_count, 0);
  for (const auto& [_, faces] : groups) {
    for (FaceId f : faces) taken[f.index()] = 1;
  }
  std::vector<FaceId> out;
  for (std::size_t i = 0; i < face_count; ++i) {
    if (!taken[i]) out.push_back(FaceId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

inline FixtureInfo finish(const ModelBuilder& b, std::map<std::string, std::vector<FaceId>> groups, const std::string& host = "body") {
  FixtureInfo info{b.build(), {}};
  auto rest = complement(info.model.faces.size(), groups);
  for (auto& [_, faces] : groups) std::sort(faces.begin(), faces.end());
  if (!rest.empty()) groups.emplace(host, std::move(rest));
  info.groups = std::move(groups);
  return info;
}

inline Frame top_frame(const Point3& center) { return {center, Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()}; }

// Extruded (x, z) profile along +y.
inline Prism xz_prism(ModelBuilder& b, std::span<const std::pair<double, double>> xz, double width) {
  std::vector<Point3> pts;
  for (const auto& [x, z] : xz) pts.emplace_back(x, 0.0, z);
  return extrude(b, pts, Vec3::UnitY(), width);
}

inline FixtureInfo cube(const Dims& d) {
  ModelBuilder b("cube", 0);
  const double s = d("size");
  box(b, Point3::Zero(), Point3(s, s, s));
  return finish(b, {});
}

inline FixtureInfo block(const Dims& d) {
  ModelBuilder b("block", 0);
  box(b, Point3::Zero(), Point3(d("length"), d("width"), d("height")));
  return finish(b, {});
}

inline FixtureInfo step(const Dims& d) {
  const double l = d("length"), h = d("height"), sl = d("step_length"), sh = d("step_height");
  d.require(sl < l && sh < h, "step must be smaller than the block");
  ModelBuilder b("step", 0);
  const std::vector<std::pair<double, double>> xz{{0, 0}, {l, 0}, {l, h - sh}, {l - sl, h - sh}, {l - sl, h}, {0, h}};
  const Prism p = xz_prism(b, xz, d("width"));
  return finish(b, {{"step", {p.sides[2], p.sides[3]}}});
}

inline FixtureInfo slot(const Dims& d) {
  const double l = d("length"), h = d("height"), sw = d("slot_width"), sd = d("slot_depth");
  d.require(sw < l && sd < h, "slot must be smaller than the block");
  ModelBuilder b("slot", 0);
  const double a = 0.5 * (l - sw), c = 0.5 * (l + sw);
  const std::vector<std::pair<double, double>> xz{{0, 0}, {l, 0}, {l, h}, {c, h}, {c, h - sd}, {a, h - sd}, {a, h}, {0, h}};
  const Prism p = xz_prism(b, xz, d("width"));
  return finish(b, {{"slot", {p.sides[3], p.sides[4], p.sides[5]}}});
}

inline FixtureInfo pocket_fixture(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height");
  const double pl = d("pocket_length"), pw = d("pocket_width"), pd = d("pocket_depth");
  d.require(pl < l && pw < w && pd < h, "pocket must fit inside the block");
  ModelBuilder b("pocket", 0);
  const Prism body = box(b, Point3::Zero(), Point3(l, w, h));
  const auto fp = rect(-0.5 * pl, -0.5 * pw, 0.5 * pl, 0.5 * pw);
  const auto f = pocket(b, body.end_cap, top_frame({0.5 * l, 0.5 * w, h}), fp, pd);
  return finish(b, {{"pocket", f.all()}});
}

inline FixtureInfo blind_hole_fixture(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height"), r = d("radius"), depth = d("depth");
  d.require(2 * r < std::min(l, w) && depth < h, "hole must fit inside the block");
  ModelBuilder b("blind_hole", 0);
  const Prism body = box(b, Point3::Zero(), Point3(l, w, h));
  const auto f = blind_hole(b, body.end_cap, {0.5 * l, 0.5 * w, h}, Vec3::UnitZ(), r, depth);
  return finish(b, {{"blind_hole", f.all()}});
}

inline FixtureInfo through_rect_hole(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height"), hl = d("hole_length"), hw = d("hole_width");
  d.require(hl < l && hw < w, "hole must fit inside the block");
  ModelBuilder b("through_rect_hole", 1);
  const Prism body = box(b, Point3(-0.5 * l, -0.5 * w, 0.0), Point3(0.5 * l, 0.5 * w, h));
  const auto fp = rect(-0.5 * hl, -0.5 * hw, 0.5 * hl, 0.5 * hw);
  const auto f = through_cut(b, body.end_cap, body.start_cap, top_frame({0, 0, h}), fp, h);
  return finish(b, {{"hole", f.all()}});
}

inline FixtureInfo cyl_boss(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height"), r = d("radius");
  d.require(2 * r < std::min(l, w), "boss must fit on the block");
  ModelBuilder b("cyl_boss", 0);
  const Prism body = box(b, Point3::Zero(), Point3(l, w, h));
  const auto f = cylinder_boss(b, body.end_cap, {0.5 * l, 0.5 * w, h}, Vec3::UnitZ(), r, d("boss_height"));
  return finish(b, {{"boss", f.all()}});
}

inline FixtureInfo cyl_hole(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height"), r = d("radius");
  d.require(2 * r < std::min(l, w), "hole must fit inside the block");
  ModelBuilder b("cyl_hole", 1);
  const Prism body = box(b, Point3::Zero(), Point3(l, w, h));
  const auto f = through_hole(b, body.end_cap, body.start_cap, {0.5 * l, 0.5 * w, h}, Vec3::UnitZ(), r, h);
  return finish(b, {{"hole", f.all()}});
}

inline FixtureInfo tapered_boss_fixture(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height"), rb = d("base_radius"), rt = d("top_radius");
  d.require(2 * rb < std::min(l, w) && rt < rb, "taper must narrow and fit on the block");
  ModelBuilder b("tapered_boss", 0);
  const Prism body = box(b, Point3::Zero(), Point3(l, w, h));
  const auto f = tapered_boss(b, body.end_cap, {0.5 * l, 0.5 * w, h}, Vec3::UnitZ(), rb, rt, d("boss_height"));
  return finish(b, {{"boss", f.all()}});
}

// Octagonal protrusion on a base box. Faces are created in the order of the
// fifteen-face labelling F1..F15: F1 top, F2..F5 main walls, F6..F8 three of
// the chamfers, F9 the base top, F10 the fourth chamfer, F11..F15 the rest
// of the base.
inline FixtureInfo chamfered_protrusion(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height");
  const double pl = d("protrusion_length"), pw = d("protrusion_width"), ph = d("protrusion_height"), c = d("chamfer");
  d.require(pl < l && pw < w, "protrusion must fit on the base");
  d.require(2 * c < std::min(pl, pw), "chamfer too large");
  ModelBuilder b("chamfered_protrusion", 0);
  const double a = 0.5 * pl, e = 0.5 * pw;
  const std::vector<std::pair<double, double>> oct{{-a + c, -e}, {a - c, -e}, {a, -e + c}, {a, e - c},
                                                   {a - c, e},   {-a + c, e}, {-a, e - c}, {-a, -e + c}};
  std::vector<Point3> ring, crown;
  for (const auto& [x, y] : oct) {
    ring.emplace_back(x, y, 0.0);
    crown.emplace_back(x, y, ph);
  }
  auto wall_normal = [&](std::size_t i) {
    const Vec3 dir = (ring[(i + 1) % 8] - ring[i]).normalized();
    return Vec3(dir.cross(Vec3::UnitZ()));
  };
  const FaceId top = b.plane(crown[0], Vec3::UnitZ());
  std::array<FaceId, 8> walls{};
  for (std::size_t i : {0, 2, 4, 6}) walls[i] = b.plane(ring[i], wall_normal(i));
  for (std::size_t i : {1, 3, 5}) walls[i] = b.plane(ring[i], wall_normal(i));
  const FaceId base_top = b.plane(Point3(0, 0, 0), Vec3::UnitZ());
  walls[7] = b.plane(ring[7], wall_normal(7));
  const FaceId bottom = b.plane(Point3(0, 0, -h), -Vec3::UnitZ());
  const std::array<Point3, 4> lo{Point3(-0.5 * l, -0.5 * w, -h), Point3(0.5 * l, -0.5 * w, -h), Point3(0.5 * l, 0.5 * w, -h),
                                 Point3(-0.5 * l, 0.5 * w, -h)};
  std::array<Point3, 4> hi;
  for (std::size_t i = 0; i < 4; ++i) hi[i] = lo[i] + Vec3(0, 0, h);
  std::array<FaceId, 4> sides{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec3 dir = (lo[(i + 1) % 4] - lo[i]).normalized();
    sides[i] = b.plane(lo[i], dir.cross(Vec3::UnitZ()));
  }

  b.polygon(top, crown);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t j = (i + 1) % 8;
    b.polygon(walls[i], std::vector<Point3>{ring[i], ring[j], crown[j], crown[i]});
  }
  b.polygon(base_top, hi);
  b.polygon(base_top, ring, true);
  b.polygon(bottom, lo);
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = (i + 1) % 4;
    b.polygon(sides[i], std::vector<Point3>{lo[i], lo[j], hi[j], hi[i]});
  }
  std::vector<FaceId> protrusion{top};
  protrusion.insert(protrusion.end(), walls.begin(), walls.end());
  return finish(b, {{"protrusion", protrusion}}, "base");
}

inline FixtureInfo two_block_step(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height"), ul = d("upper_length"), uw = d("upper_width");
  d.require(ul < l && uw < w, "upper block must fit on the lower block");
  ModelBuilder b("two_block_step", 0);
  const Prism body = box(b, Point3(-0.5 * l, -0.5 * w, 0.0), Point3(0.5 * l, 0.5 * w, h));
  const auto fp = rect(-0.5 * ul, -0.5 * uw, 0.5 * ul, 0.5 * uw);
  const auto f = protrusion(b, body.end_cap, top_frame({0, 0, h}), fp, d("upper_height"));
  return finish(b, {{"upper", f.all()}}, "lower");
}

// Fig. 8(a) analogue: a block standing on a plate, braced front and back by
// triangular ramps. The concave edges (plate footprint plus ramp-to-block
// joints) form one leafless cluster touching eleven faces.
inline FixtureInfo case_a(const Dims& d) {
  const double s = d("scale");
  auto P = [s](double x, double y, double z) { return Point3(s * x, s * y, s * z); };
  ModelBuilder b("case_a", 0);
  const Prism plate = box(b, P(-3, -3, -1), P(3, 3, 0));
  const std::vector<Point3> footprint{P(-1.5, -0.5, 0), P(-0.5, -0.5, 0), P(-0.5, -1.5, 0), P(0.5, -1.5, 0),
                                      P(0.5, -0.5, 0),  P(1.5, -0.5, 0),  P(1.5, 0.5, 0),   P(0.5, 0.5, 0),
                                      P(0.5, 1.5, 0),   P(-0.5, 1.5, 0),  P(-0.5, 0.5, 0),  P(-1.5, 0.5, 0)};
  b.polygon(plate.end_cap, footprint, true);

  std::vector<FaceId> block_faces;
  const FaceId top = b.plane(P(0, 0, 2), Vec3::UnitZ());
  b.polygon(top, std::vector<Point3>{P(-1.5, -0.5, 2), P(1.5, -0.5, 2), P(1.5, 0.5, 2), P(-1.5, 0.5, 2)});
  block_faces.push_back(top);
  for (double sy : {-1.0, 1.0}) {
    const double y = 0.5 * sy;
    const FaceId f = b.plane(P(0, y, 0), Vec3(0, sy, 0));
    b.polygon(f, std::vector<Point3>{P(-1.5, y, 0), P(-0.5, y, 0), P(-0.5, y, 1), P(0.5, y, 1), P(0.5, y, 0), P(1.5, y, 0),
                                     P(1.5, y, 2), P(-1.5, y, 2)});
    block_faces.push_back(f);
  }
  for (double sx : {-1.0, 1.0}) {
    const double x = 1.5 * sx;
    const FaceId f = b.plane(P(x, 0, 0), Vec3(sx, 0, 0));
    b.polygon(f, std::vector<Point3>{P(x, -0.5, 0), P(x, 0.5, 0), P(x, 0.5, 2), P(x, -0.5, 2)});
    block_faces.push_back(f);
  }

  std::map<std::string, std::vector<FaceId>> groups{{"block", block_faces}};
  for (double sy : {-1.0, 1.0}) {
    std::vector<FaceId> ramp;
    const FaceId slope = b.plane(P(0, 1.5 * sy, 0), Vec3(0, sy, 1).normalized());
    b.polygon(slope, std::vector<Point3>{P(-0.5, 1.5 * sy, 0), P(0.5, 1.5 * sy, 0), P(0.5, 0.5 * sy, 1), P(-0.5, 0.5 * sy, 1)});
    ramp.push_back(slope);
    for (double sx : {-1.0, 1.0}) {
      const double x = 0.5 * sx;
      const FaceId f = b.plane(P(x, 0, 0), Vec3(sx, 0, 0));
      b.polygon(f, std::vector<Point3>{P(x, 0.5 * sy, 0), P(x, 1.5 * sy, 0), P(x, 0.5 * sy, 1)});
      ramp.push_back(f);
    }
    groups.emplace(sy < 0 ? "ramp_front" : "ramp_back", ramp);
  }
  return finish(b, std::move(groups), "plate");
}

// Fig. 8(b) analogue: a hexagonal pocket whose floor is two planes meeting
// in a convex ridge. The concave cluster is the six floor edges plus six
// vertical corner edges that hang off it as leaves.
inline FixtureInfo case_b(const Dims& d) {
  const double s = d("scale");
  auto P = [s](double x, double y, double z) { return Point3(s * x, s * y, s * z); };
  ModelBuilder b("case_b", 0);
  const Prism body = box(b, P(-4, -3, 0), P(4, 3, 4));
  const std::array<std::pair<double, double>, 6> hex{{{-2.5, 0}, {-1.2, 1.8}, {1.2, 1.8}, {2.5, 0}, {1.2, -1.8}, {-1.2, -1.8}}};
  auto floor_z = [](double y) { return 2.0 - 0.3 * std::abs(y); };
  std::vector<Point3> mouth, floor;
  for (const auto& [x, y] : hex) {
    mouth.push_back(P(x, y, 4));
    floor.push_back(P(x, y, floor_z(y)));
  }
  b.polygon(body.end_cap, mouth, true);
  std::vector<FaceId> pocket_faces;
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t j = (i + 1) % 6;
    Vec3 in = -(0.5 * (mouth[i] + mouth[j]) - P(0, 0, 4));
    const Vec3 along = (mouth[j] - mouth[i]).normalized();
    in -= in.dot(along) * along;
    const FaceId wall = b.plane(mouth[i], in.normalized());
    b.polygon(wall, std::vector<Point3>{mouth[i], mouth[j], floor[j], floor[i]});
    pocket_faces.push_back(wall);
  }
  const FaceId north = b.plane(floor[0], Vec3(0, 0.3, 1).normalized());
  b.polygon(north, std::vector<Point3>{floor[0], floor[1], floor[2], floor[3]});
  const FaceId south = b.plane(floor[0], Vec3(0, -0.3, 1).normalized());
  b.polygon(south, std::vector<Point3>{floor[3], floor[4], floor[5], floor[0]});
  pocket_faces.push_back(north);
  pocket_faces.push_back(south);
  return finish(b, {{"pocket", pocket_faces}}, "block");
}

// Test part with the seven basic feature types, each on its own face of an
// extruded body. The slot and the step come from the extrusion profile.
inline FixtureInfo part1(const Dims& d) {
  const double s = d("scale");
  ModelBuilder b("part1", 1);
  const std::vector<std::pair<double, double>> xz{{0, 0},  {5 * s, 0},      {5 * s, 1 * s},  {7 * s, 1 * s},  {7 * s, 0},
                                                  {12 * s, 0}, {12 * s, 4 * s}, {10 * s, 4 * s}, {10 * s, 6 * s}, {0, 6 * s}};
  const Prism body = xz_prism(b, xz, 8 * s);
  const auto& side = body.sides;
  std::map<std::string, std::vector<FaceId>> groups;
  groups["slot"] = {side[1], side[2], side[3]};
  groups["step"] = {side[6], side[7]};

  groups["boss"] = cylinder_boss(b, side[8], {3 * s, 4 * s, 6 * s}, Vec3::UnitZ(), 1.2 * s, 1.5 * s).all();
  groups["through_hole"] = through_hole(b, side[8], side[4], {8.5 * s, 4 * s, 6 * s}, Vec3::UnitZ(), 0.8 * s, 6 * s).all();

  const Frame front{Point3(0, 0, 0), Vec3::UnitX(), Vec3::UnitZ(), -Vec3::UnitY()};
  groups["pocket"] = pocket(b, body.start_cap, front, rect(1 * s, 2 * s, 4 * s, 4.5 * s), 1.5 * s).all();

  groups["blind_hole"] = blind_hole(b, body.end_cap, {3 * s, 8 * s, 3 * s}, Vec3::UnitY(), 1 * s, 2 * s).all();

  const Frame left{Point3(0, 0, 0), Vec3::UnitZ(), Vec3::UnitY(), -Vec3::UnitX()};
  groups["protrusion"] = protrusion(b, side[9], left, rect(1.5 * s, 2 * s, 4.5 * s, 6 * s), 1.5 * s).all();
  return finish(b, std::move(groups));
}

// Stand-in for the industrial fixture plate: an L-bracket with two bolt
// holes through the foot and one through the upright.
inline FixtureInfo part2(const Dims& d) {
  const double s = d("scale");
  ModelBuilder b("part2", 3);
  const std::vector<std::pair<double, double>> xz{{0, 0}, {8 * s, 0}, {8 * s, 1 * s}, {1 * s, 1 * s}, {1 * s, 5 * s}, {0, 5 * s}};
  const Prism body = xz_prism(b, xz, 4 * s);
  const auto& side = body.sides;
  std::map<std::string, std::vector<FaceId>> groups;
  groups["corner"] = {side[2], side[3]};
  groups["hole_1"] = through_hole(b, side[2], side[0], {3 * s, 2 * s, 1 * s}, Vec3::UnitZ(), 0.5 * s, 1 * s).all();
  groups["hole_2"] = through_hole(b, side[2], side[0], {6 * s, 2 * s, 1 * s}, Vec3::UnitZ(), 0.5 * s, 1 * s).all();
  groups["hole_3"] = through_hole(b, side[3], side[5], {1 * s, 2 * s, 3.5 * s}, Vec3::UnitX(), 0.5 * s, 1 * s).all();
  return finish(b, std::move(groups));
}

// Box with one edge rounded by a convex fillet that meets both neighbours
// tangentially.
inline FixtureInfo rounded_block(const Dims& d) {
  const double l = d("length"), w = d("width"), h = d("height"), r = d("radius");
  d.require(r < std::min(l, h), "fillet radius too large");
  ModelBuilder b("rounded_block", 0);
  auto V = [&](double x, double y, double z) { return b.vertex(Point3(x, y, z)); };
  const FaceId bottom = b.plane(Point3(0, 0, 0), -Vec3::UnitZ());
  b.polygon(bottom, std::vector<VertexId>{V(0, 0, 0), V(l, 0, 0), V(l, w, 0), V(0, w, 0)});
  const FaceId top = b.plane(Point3(0, 0, h), Vec3::UnitZ());
  b.polygon(top, std::vector<VertexId>{V(0, 0, h), V(l - r, 0, h), V(l - r, w, h), V(0, w, h)});
  const FaceId left = b.plane(Point3(0, 0, 0), -Vec3::UnitX());
  b.polygon(left, std::vector<VertexId>{V(0, 0, 0), V(0, w, 0), V(0, w, h), V(0, 0, h)});
  const FaceId right = b.plane(Point3(l, 0, 0), Vec3::UnitX());
  b.polygon(right, std::vector<VertexId>{V(l, 0, 0), V(l, w, 0), V(l, w, h - r), V(l, 0, h - r)});

  const Point3 c0(l - r, 0, h - r), c1(l - r, w, h - r);
  const FaceId front = b.plane(Point3(0, 0, 0), -Vec3::UnitY());
  b.line(front, V(0, 0, 0), V(l, 0, 0));
  b.line(front, V(l, 0, 0), V(l, 0, h - r));
  b.arc(front, V(l, 0, h - r), V(l - r, 0, h), c0, -Vec3::UnitY());
  b.line(front, V(l - r, 0, h), V(0, 0, h));
  b.line(front, V(0, 0, h), V(0, 0, 0));

  const FaceId back = b.plane(Point3(0, w, 0), Vec3::UnitY());
  b.line(back, V(0, w, 0), V(0, w, h));
  b.line(back, V(0, w, h), V(l - r, w, h));
  b.arc(back, V(l - r, w, h), V(l, w, h - r), c1, Vec3::UnitY());
  b.line(back, V(l, w, h - r), V(l, w, 0));
  b.line(back, V(l, w, 0), V(0, w, 0));

  const FaceId fillet = b.face(Cylinder{c0, Vec3::UnitY(), r, MaterialSide::Outside});
  b.arc(fillet, V(l - r, 0, h), V(l, 0, h - r), c0, Vec3::UnitY());
  b.line(fillet, V(l, 0, h - r), V(l, w, h - r));
  b.arc(fillet, V(l, w, h - r), V(l - r, w, h), c1, -Vec3::UnitY());
  b.line(fillet, V(l - r, w, h), V(l - r, 0, h));
  return finish(b, {{"fillet", {fillet}}});
}

}  // namespace detail

inline FixtureInfo build_fixture_info(const FixtureSpec& spec) {
  const detail::Dims d(spec.kind, spec.dims);
  switch (spec.kind) {
    case FixtureKind::Cube: return detail::cube(d);
    case FixtureKind::Block: return detail::block(d);
    case FixtureKind::Step: return detail::step(d);
    case FixtureKind::Slot: return detail::slot(d);
    case FixtureKind::Pocket: return detail::pocket_fixture(d);
    case FixtureKind::BlindHole: return detail::blind_hole_fixture(d);
    case FixtureKind::ThroughRectHole: return detail::through_rect_hole(d);
    case FixtureKind::CylBoss: return detail::cyl_boss(d);
    case FixtureKind::CylHole: return detail::cyl_hole(d);
    case FixtureKind::ChamferedProtrusion: return detail::chamfered_protrusion(d);
    case FixtureKind::TwoBlockStep: return detail::two_block_step(d);
    case FixtureKind::CaseA: return detail::case_a(d);
    case FixtureKind::CaseB: return detail::case_b(d);
    case FixtureKind::Part1Composite: return detail::part1(d);
    case FixtureKind::Part2Fixture: return detail::part2(d);
    case FixtureKind::TaperedBoss: return detail::tapered_boss_fixture(d);
    case FixtureKind::RoundedBlock: return detail::rounded_block(d);
  }
  throw GeometryError(GeometryKind::InvalidDimensions, "unknown fixture kind");
}

inline SolidModel build_fixture(const FixtureSpec& spec) { return build_fixture_info(spec).model; }

inline SolidModel build_fixture(FixtureKind kind) { return build_fixture({kind, {}}); }

inline std::vector<FixtureKind> all_fixture_kinds() {
  std::vector<FixtureKind> out;
  for (const auto& [k, _] : kFixtureNames) out.push_back(k);
  return out;
}

}  // namespace taag
