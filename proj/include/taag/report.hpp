#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "taag/subgraph.hpp"

namespace taag {

namespace detail {

template <class IdT>
nlohmann::ordered_json id_list(const std::vector<IdT>& ids) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& id : ids) out.push_back(id.value);
  return out;
}

inline nlohmann::ordered_json convexity_list(const std::vector<Convexity>& cs) {
  auto out = nlohmann::ordered_json::array();
  for (Convexity c : cs) out.push_back(to_string(c));
  return out;
}

}  // namespace detail

/// JSON projection of one pipeline run. Key order and array order are fixed,
/// so identical inputs give identical text. `timing_ms` is null unless a
/// measurement is supplied.
inline nlohmann::ordered_json make_report(const SolidModel& model, const FeatureExtraction& fx, double tolerance,
                                          std::optional<double> timing_ms = std::nullopt) {
  using nlohmann::ordered_json;
  ordered_json r;
  r["model_name"] = model.name;
  r["tolerance"] = tolerance;
  r["counts"] = {{"vertices", model.vertices.size()},
                 {"edges", model.edges.size()},
                 {"faces", model.faces.size()},
                 {"clusters", fx.stage.clusters.size()},
                 {"boundaries", fx.boundaries().size()},
                 {"components", fx.partition.components.size()},
                 {"subgraphs", fx.subgraphs.size()}};
  r["convexity"] = {{"vertices", detail::convexity_list(fx.conv.vertex_conv)},
                    {"edges", detail::convexity_list(fx.conv.edge_conv)},
                    {"faces", detail::convexity_list(fx.conv.face_conv)}};

  auto clusters = ordered_json::array();
  for (std::size_t i = 0; i < fx.stage.clusters.size(); ++i) {
    const auto& c = fx.stage.clusters[i];
    clusters.push_back({{"id", i},
                        {"convexity", to_string(c.convexity)},
                        {"edges", detail::id_list(c.edges)},
                        {"incident_vertices", detail::id_list(c.incident_vertices)},
                        {"loop", detail::id_list(fx.stage.loops[i].edges)},
                        {"pruned_leaves", detail::id_list(fx.stage.loops[i].pruned_leaves)},
                        {"division_edges", detail::id_list(fx.stage.division_edges[i])}});
  }
  r["clusters"] = std::move(clusters);

  auto boundaries = ordered_json::array();
  for (std::size_t i = 0; i < fx.boundaries().size(); ++i) {
    const auto& b = fx.boundaries()[i];
    boundaries.push_back({{"id", i},
                          {"convexity", to_string(b.convexity)},
                          {"cluster", b.cluster},
                          {"edges", detail::id_list(b.edges)},
                          {"adjacent_faces", detail::id_list(fx.neighborhoods[i].adjacent_faces)}});
  }
  r["boundaries"] = std::move(boundaries);

  auto components = ordered_json::array();
  for (const auto& c : fx.partition.components) components.push_back(detail::id_list(c));
  r["components"] = std::move(components);

  auto subgraphs = ordered_json::array();
  for (std::size_t i = 0; i < fx.subgraphs.size(); ++i) {
    const auto& s = fx.subgraphs[i];
    subgraphs.push_back({{"id", i},
                         {"convexity", to_string(s.convexity)},
                         {"inherited", s.inherited},
                         {"component", s.component},
                         {"faces", detail::id_list(s.faces)},
                         {"interior_edges", detail::id_list(s.interior_edges)},
                         {"bounding_boundaries", s.bounding}});
  }
  r["subgraphs"] = std::move(subgraphs);

  auto diagnostics = ordered_json::array();
  for (const auto& d : fx.diagnostics) {
    diagnostics.push_back({{"kind", to_string(d.kind)}, {"index", d.index}, {"ids", d.ids}, {"message", d.message}});
  }
  r["diagnostics"] = std::move(diagnostics);
  r["timing_ms"] = timing_ms ? ordered_json(*timing_ms) : ordered_json(nullptr);
  return r;
}

inline std::string report_text(const nlohmann::ordered_json& report) { return report.dump(2) + "\n"; }

}  // namespace taag
