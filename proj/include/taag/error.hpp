#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taag {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& what)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

enum class ValidationKind {
  NonManifoldEdge,
  DanglingReference,
  BadNormal,
  EulerMismatch,
  OffSurface,
  BadGeometry,
};

inline const char* to_string(ValidationKind k) {
  switch (k) {
    case ValidationKind::NonManifoldEdge: return "NonManifoldEdge";
    case ValidationKind::DanglingReference: return "DanglingReference";
    case ValidationKind::BadNormal: return "BadNormal";
    case ValidationKind::EulerMismatch: return "EulerMismatch";
    case ValidationKind::OffSurface: return "OffSurface";
    case ValidationKind::BadGeometry: return "BadGeometry";
  }
  return "?";
}

/// Raised when a model violates a B-REP invariant. `entity` names the
/// offending entity, e.g. "edge 7" or "face 2".
class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, std::string entity, const std::string& detail)
      : Error(std::string(to_string(kind)) + " (" + entity + "): " + detail),
        kind_(kind),
        entity_(std::move(entity)) {}

  ValidationKind kind() const noexcept { return kind_; }
  const std::string& entity() const noexcept { return entity_; }

 private:
  ValidationKind kind_;
  std::string entity_;
};

enum class GeometryKind {
  PointOffSurface,
  ApexSingularity,
  DegenerateNormals,
  IsolatedVertex,
  UnknownNode,
  UnknownEdge,
  InvalidDimensions,
};

inline const char* to_string(GeometryKind k) {
  switch (k) {
    case GeometryKind::PointOffSurface: return "PointOffSurface";
    case GeometryKind::ApexSingularity: return "ApexSingularity";
    case GeometryKind::DegenerateNormals: return "DegenerateNormals";
    case GeometryKind::IsolatedVertex: return "IsolatedVertex";
    case GeometryKind::UnknownNode: return "UnknownNode";
    case GeometryKind::UnknownEdge: return "UnknownEdge";
    case GeometryKind::InvalidDimensions: return "InvalidDimensions";
  }
  return "?";
}

class GeometryError : public Error {
 public:
  GeometryError(GeometryKind kind, const std::string& detail)
      : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  GeometryKind kind() const noexcept { return kind_; }

 private:
  GeometryKind kind_;
};

}  // namespace taag
