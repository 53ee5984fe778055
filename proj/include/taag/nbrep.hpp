#pragma once

// Reader and writer for the line-oriented neutral B-REP text format (.nbrep).
//
//   nbrep 1
//   solid <name> genus <g>
//   v <id> <x> <y> <z>
//   f <id> plane <px> <py> <pz> <nx> <ny> <nz>
//   f <id> cylinder <ax> <ay> <az> <dx> <dy> <dz> <radius> <outside|inside>
//   f <id> cone <apex xyz> <dir xyz> <half_angle_rad> <outside|inside>
//   f <id> saddle
//   e <id> <v1|-> <v2|-> <f_left> <f_right> <line|arc|circle> [curve params] m <mx> <my> <mz>
//
// arc and circle take <cx> <cy> <cz> <ax> <ay> <az> <radius>. '#' starts a
// comment. Ids are dense from 0 per kind but may appear in any order.

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "taag/brep.hpp"

namespace taag {

namespace nbrep_detail {

struct Token {
  std::string_view text;
  std::size_t col;  // 1-based
};

class LineCursor {
 public:
  LineCursor(std::size_t line_no, std::string_view line) : line_(line_no) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      tokens_.push_back({line.substr(start, i - start), start + 1});
    }
    end_col_ = line.size() + 1;
  }

  bool empty() const { return tokens_.empty(); }
  bool done() const { return pos_ >= tokens_.size(); }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t col = pos_ < tokens_.size() ? tokens_[pos_].col : end_col_;
    throw SyntaxError(line_, col, what);
  }

  std::string_view peek() const { return done() ? std::string_view{} : tokens_[pos_].text; }

  std::string_view word(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return tokens_[pos_++].text;
  }

  void expect(std::string_view keyword) {
    if (peek() != keyword) fail("expected '" + std::string(keyword) + "'");
    ++pos_;
  }

  double real(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    const auto t = tokens_[pos_].text;
    double v = 0.0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size() || !std::isfinite(v)) fail(std::string("invalid number for ") + what);
    ++pos_;
    return v;
  }

  std::uint32_t index(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    const auto t = tokens_[pos_].text;
    std::uint32_t v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) fail(std::string("invalid id for ") + what);
    ++pos_;
    return v;
  }

  Vec3 vec(const char* what) {
    const double x = real(what);
    const double y = real(what);
    const double z = real(what);
    return {x, y, z};
  }

  MaterialSide side() {
    const auto w = peek();
    if (w == "outside") {
      ++pos_;
      return MaterialSide::Outside;
    }
    if (w == "inside") {
      ++pos_;
      return MaterialSide::Inside;
    }
    fail("expected 'outside' or 'inside'");
  }

  void finish() {
    if (!done()) fail("unexpected trailing token");
  }

 private:
  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t end_col_ = 1;
};

template <class T>
std::vector<T> densify(std::map<std::uint32_t, T>& items, const char* kind) {
  std::vector<T> out;
  out.reserve(items.size());
  std::uint32_t expect = 0;
  for (auto& [id, item] : items) {
    if (id != expect) {
      throw ValidationError(ValidationKind::DanglingReference, std::string(kind) + " " + std::to_string(expect),
                            "ids must be dense from 0");
    }
    out.push_back(std::move(item));
    ++expect;
  }
  return out;
}

inline std::string num(double v) {
  if (v == 0.0) v = 0.0;  // fold -0
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline std::string num(const Vec3& v) { return num(v.x()) + " " + num(v.y()) + " " + num(v.z()); }

inline const char* side_word(MaterialSide s) { return s == MaterialSide::Outside ? "outside" : "inside"; }

}  // namespace nbrep_detail

/// Parses and validates a .nbrep document.
inline SolidModel parse_model(std::string_view text) {
  using nbrep_detail::LineCursor;
  SolidModel m;
  std::map<std::uint32_t, Vertex> vertices;
  std::map<std::uint32_t, Face> faces;
  std::map<std::uint32_t, Edge> edges;
  std::vector<std::pair<std::uint32_t, bool>> missing_face;  // edge id lists only one face

  int stage = 0;  // 0: need magic, 1: need solid, 2: body
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineCursor c(line_no, line);
    if (c.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (stage == 0) {
      c.expect("nbrep");
      if (c.index("format version") != 1) c.fail("unsupported format version");
      c.finish();
      stage = 1;
    } else if (stage == 1) {
      c.expect("solid");
      m.name = std::string(c.word("solid name"));
      c.expect("genus");
      m.genus = static_cast<int>(c.index("genus"));
      c.finish();
      stage = 2;
    } else {
      const auto kind = c.word("record type");
      if (kind == "v") {
        const auto id = c.index("vertex id");
        const Vec3 p = c.vec("vertex coordinate");
        c.finish();
        if (!vertices.emplace(id, Vertex{VertexId{id}, p}).second) throw SyntaxError(line_no, 1, "duplicate vertex id");
      } else if (kind == "f") {
        const auto id = c.index("face id");
        const auto type = c.word("surface type");
        SurfaceGeometry s;
        if (type == "plane") {
          const Vec3 p = c.vec("plane point");
          const Vec3 n = c.vec("plane normal");
          s = Plane{p, n};
        } else if (type == "cylinder") {
          const Vec3 a = c.vec("axis point");
          const Vec3 d = c.vec("axis direction");
          const double r = c.real("radius");
          s = Cylinder{a, d, r, c.side()};
        } else if (type == "cone") {
          const Vec3 a = c.vec("apex");
          const Vec3 d = c.vec("axis direction");
          const double h = c.real("half angle");
          s = Cone{a, d, h, c.side()};
        } else if (type == "saddle") {
          s = RuledSaddle{};
        } else {
          throw SyntaxError(line_no, 1, "unknown surface type '" + std::string(type) + "'");
        }
        c.finish();
        if (!faces.emplace(id, Face{FaceId{id}, s, {}, Point3::Zero()}).second) throw SyntaxError(line_no, 1, "duplicate face id");
      } else if (kind == "e") {
        const auto id = c.index("edge id");
        std::optional<std::pair<VertexId, VertexId>> ends;
        if (c.peek() == "-") {
          c.word("endpoint");
          c.expect("-");
        } else {
          const auto a = c.index("first endpoint");
          const auto b = c.index("second endpoint");
          ends = std::pair{VertexId{a}, VertexId{b}};
        }
        const auto fl = c.index("left face");
        bool one_face = false;
        std::uint32_t fr = fl;
        const auto next = c.peek();
        if (next == "-") {
          c.word("right face");
          one_face = true;
        } else if (next == "line" || next == "arc" || next == "circle") {
          one_face = true;
        } else {
          fr = c.index("right face");
        }
        const auto curve_kind = c.word("curve type");
        EdgeCurve curve;
        if (curve_kind == "line") {
          curve = LineSegment{};
        } else if (curve_kind == "arc" || curve_kind == "circle") {
          const Vec3 ctr = c.vec("curve center");
          const Vec3 ax = c.vec("curve axis");
          const double r = c.real("curve radius");
          if (curve_kind == "arc") {
            curve = CircularArc{ctr, ax, r};
          } else {
            curve = FullCircle{ctr, ax, r};
          }
        } else {
          throw SyntaxError(line_no, 1, "unknown curve type '" + std::string(curve_kind) + "'");
        }
        c.expect("m");
        const Vec3 mid = c.vec("midpoint");
        c.finish();
        Edge e{EdgeId{id}, ends, curve, {FaceId{fl}, FaceId{fr}}, mid};
        if (!edges.emplace(id, std::move(e)).second) throw SyntaxError(line_no, 1, "duplicate edge id");
        if (one_face) missing_face.emplace_back(id, true);
      } else {
        throw SyntaxError(line_no, 1, "unknown record type '" + std::string(kind) + "'");
      }
    }
    if (end == text.size()) break;
  }
  if (stage < 2) throw SyntaxError(line_no, 1, "missing header");
  if (!missing_face.empty()) {
    throw ValidationError(ValidationKind::NonManifoldEdge, "edge " + std::to_string(missing_face.front().first),
                          "edge lists only one adjacent face");
  }

  m.vertices = nbrep_detail::densify(vertices, "vertex");
  m.faces = nbrep_detail::densify(faces, "face");
  m.edges = nbrep_detail::densify(edges, "edge");
  derive_face_data(m);
  validate(m);
  return m;
}

/// Canonical text form: header, then vertices, faces and edges in id order,
/// numbers in shortest round-trip notation.
inline std::string serialize_model(const SolidModel& m) {
  using nbrep_detail::num;
  std::ostringstream out;
  std::string name = m.name.empty() ? "unnamed" : m.name;
  for (char& ch : name) {
    if (ch == ' ' || ch == '\t' || ch == '#') ch = '_';
  }
  out << "nbrep 1\n";
  out << "solid " << name << " genus " << m.genus << "\n";
  for (const auto& v : m.vertices) out << "v " << v.id.value << " " << num(v.position) << "\n";
  for (const auto& f : m.faces) {
    out << "f " << f.id.value << " ";
    std::visit(Overloaded{
                   [&](const Plane& p) { out << "plane " << num(p.point) << " " << num(p.normal); },
                   [&](const Cylinder& c) {
                     out << "cylinder " << num(c.axis_point) << " " << num(c.axis_dir) << " " << num(c.radius) << " "
                         << nbrep_detail::side_word(c.side);
                   },
                   [&](const Cone& c) {
                     out << "cone " << num(c.apex) << " " << num(c.axis_dir) << " " << num(c.half_angle) << " "
                         << nbrep_detail::side_word(c.side);
                   },
                   [&](const RuledSaddle&) { out << "saddle"; },
               },
               f.surface);
    out << "\n";
  }
  for (const auto& e : m.edges) {
    out << "e " << e.id.value << " ";
    if (e.endpoints) {
      out << e.endpoints->first.value << " " << e.endpoints->second.value;
    } else {
      out << "- -";
    }
    out << " " << e.faces.first.value << " " << e.faces.second.value << " ";
    std::visit(Overloaded{
                   [&](const LineSegment&) { out << "line"; },
                   [&](const CircularArc& a) { out << "arc " << num(a.center) << " " << num(a.axis) << " " << num(a.radius); },
                   [&](const FullCircle& a) { out << "circle " << num(a.center) << " " << num(a.axis) << " " << num(a.radius); },
               },
               e.curve);
    out << " m " << num(e.midpoint) << "\n";
  }
  return out.str();
}

}  // namespace taag
