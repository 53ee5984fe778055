#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <vector>

#include "taag/boundary.hpp"

namespace taag {

struct BoundaryNeighborhood {
  std::size_t boundary = 0;          // index into the boundary list
  std::vector<FaceId> adjacent_faces;  // ascending
};

struct PartitionedGraph {
  std::vector<std::vector<FaceId>> components;  // each ascending; ordered by smallest face
  std::vector<EdgeId> removed_links;            // ascending
  std::vector<std::size_t> component_of;        // face index -> component
};

struct FeatureSubgraph {
  std::vector<FaceId> faces;           // ascending
  std::vector<EdgeId> interior_edges;  // ascending
  Convexity convexity = Convexity::Convex;
  std::vector<std::size_t> bounding;   // boundary indices, ascending
  std::size_t component = 0;
  bool inherited = false;  // convexity came from the bounding boundaries
};

struct Diagnostic {
  enum class Kind { EmptyLoop, MixedLoop, AmbiguousConvexity, BoundaryNotSeparating, UnresolvedConvexity };
  Kind kind;
  std::size_t index = 0;        // cluster, component, boundary or subgraph index
  std::vector<std::uint32_t> ids;  // edge ids (or face ids for UnresolvedConvexity)
  std::string message;
};

inline const char* to_string(Diagnostic::Kind k) {
  switch (k) {
    case Diagnostic::Kind::EmptyLoop: return "EmptyLoop";
    case Diagnostic::Kind::MixedLoop: return "MixedLoop";
    case Diagnostic::Kind::AmbiguousConvexity: return "AmbiguousConvexity";
    case Diagnostic::Kind::BoundaryNotSeparating: return "BoundaryNotSeparating";
    case Diagnostic::Kind::UnresolvedConvexity: return "UnresolvedConvexity";
  }
  return "?";
}

inline BoundaryNeighborhood boundary_neighborhood(const FeatureBoundary& boundary, const Taag& taag,
                                                  std::size_t index = 0) {
  BoundaryNeighborhood n{index, {}};
  for (EdgeId e : boundary.edges) {
    const auto& l = taag.edge_face.link(e);
    n.adjacent_faces.push_back(l.endpoints.first);
    n.adjacent_faces.push_back(l.endpoints.second);
  }
  std::sort(n.adjacent_faces.begin(), n.adjacent_faces.end());
  n.adjacent_faces.erase(std::unique(n.adjacent_faces.begin(), n.adjacent_faces.end()), n.adjacent_faces.end());
  return n;
}

/// Connected components of the edge-face graph after deleting every
/// boundary link. Pruned leaf edges are not boundary members and stay.
inline PartitionedGraph partition_graph(const Taag& taag, const std::vector<FeatureBoundary>& boundaries) {
  const auto& g = taag.edge_face;
  PartitionedGraph p;
  for (const auto& b : boundaries) p.removed_links.insert(p.removed_links.end(), b.edges.begin(), b.edges.end());
  std::sort(p.removed_links.begin(), p.removed_links.end());
  p.removed_links.erase(std::unique(p.removed_links.begin(), p.removed_links.end()), p.removed_links.end());

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  p.component_of.assign(g.nodes().size(), none);
  for (std::size_t start = 0; start < g.nodes().size(); ++start) {
    if (p.component_of[start] != none) continue;
    const std::size_t idx = p.components.size();
    std::vector<FaceId> comp;
    std::deque<FaceId> queue{FaceId{static_cast<std::uint32_t>(start)}};
    p.component_of[start] = idx;
    while (!queue.empty()) {
      const FaceId f = queue.front();
      queue.pop_front();
      comp.push_back(f);
      for (const auto& [link, other] : g.neighbors(f)) {
        if (std::binary_search(p.removed_links.begin(), p.removed_links.end(), link->entity)) continue;
        if (p.component_of[other.index()] != none) continue;
        p.component_of[other.index()] = idx;
        queue.push_back(other);
      }
    }
    std::sort(comp.begin(), comp.end());
    p.components.push_back(std::move(comp));
  }
  return p;
}

namespace detail {

inline bool compatible(Convexity entity, Convexity target) {
  return entity == target || entity == Convexity::Transitory;
}

inline bool opposed(Convexity a, Convexity b) {
  return a != Convexity::Transitory && b != Convexity::Transitory && a != b;
}

}  // namespace detail

/// Splits each component into convexity-homogeneous subgraphs by growing
/// regions across compatible links: concave regions first, then convex,
/// then whatever is left (all-transitory) by plain connectivity. Faces of a
/// region are merged across links whose convexity equals the region's or is
/// transitory. Appends AmbiguousConvexity / UnresolvedConvexity diagnostics.
inline std::vector<FeatureSubgraph> group_feature_subgraphs(const PartitionedGraph& partition, const Taag& taag,
                                                            const ConvexityMap& conv,
                                                            const std::vector<FeatureBoundary>& boundaries,
                                                            const std::vector<BoundaryNeighborhood>& neighborhoods,
                                                            std::vector<Diagnostic>* diagnostics = nullptr) {
  const auto& g = taag.edge_face;
  auto removed = [&](EdgeId e) {
    return std::binary_search(partition.removed_links.begin(), partition.removed_links.end(), e);
  };
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(g.nodes().size(), none);
  std::vector<FeatureSubgraph> out;

  auto grow = [&](FaceId seed, std::size_t comp, Convexity c, bool transitory_only) {
    const std::size_t idx = out.size();
    FeatureSubgraph s;
    s.component = comp;
    s.convexity = c;
    std::deque<FaceId> queue{seed};
    owner[seed.index()] = idx;
    while (!queue.empty()) {
      const FaceId f = queue.front();
      queue.pop_front();
      s.faces.push_back(f);
      for (const auto& [link, other] : g.neighbors(f)) {
        if (removed(link->entity) || owner[other.index()] != none) continue;
        const bool ok = transitory_only
                            ? link->attr == Convexity::Transitory && conv.face(other) == Convexity::Transitory
                            : detail::compatible(link->attr, c) && detail::compatible(conv.face(other), c);
        if (!ok) continue;
        owner[other.index()] = idx;
        queue.push_back(other);
      }
    }
    std::sort(s.faces.begin(), s.faces.end());
    out.push_back(std::move(s));
  };

  for (std::size_t comp = 0; comp < partition.components.size(); ++comp) {
    const auto& faces = partition.components[comp];
    for (Convexity c : {Convexity::Concave, Convexity::Convex}) {
      for (FaceId f : faces) {
        if (owner[f.index()] != none || !detail::compatible(conv.face(f), c)) continue;
        bool seed = conv.face(f) == c;
        for (const auto& [link, other] : g.neighbors(f)) {
          if (seed) break;
          seed = !removed(link->entity) && link->attr == c && owner[other.index()] == none &&
                 detail::compatible(conv.face(other), c);
        }
        if (seed) grow(f, comp, c, false);
      }
    }
    for (FaceId f : faces) {
      if (owner[f.index()] == none) {
        grow(f, comp, Convexity::Convex, true);
        out.back().inherited = true;
      }
    }
    if (diagnostics) {
      for (FaceId f : faces) {
        for (const auto& [link, other] : g.neighbors(f)) {
          if (other < f || removed(link->entity)) continue;
          if (detail::opposed(conv.face(f), conv.face(other)) || detail::opposed(conv.face(f), link->attr) ||
              detail::opposed(conv.face(other), link->attr)) {
            diagnostics->push_back({Diagnostic::Kind::AmbiguousConvexity, comp, {link->entity.value},
                                    "opposite convexities meet across edge " + std::to_string(link->entity.value) +
                                        " with no separating boundary"});
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& s = out[i];
    for (FaceId f : s.faces) {
      for (const auto& [link, other] : g.neighbors(f)) {
        if (other < f || removed(link->entity) || owner[other.index()] != i) continue;
        if (!detail::compatible(link->attr, s.convexity)) continue;
        s.interior_edges.push_back(link->entity);
      }
    }
    std::sort(s.interior_edges.begin(), s.interior_edges.end());
    s.interior_edges.erase(std::unique(s.interior_edges.begin(), s.interior_edges.end()), s.interior_edges.end());

    for (const auto& n : neighborhoods) {
      const bool touches = std::any_of(n.adjacent_faces.begin(), n.adjacent_faces.end(),
                                       [&](FaceId f) { return owner[f.index()] == i; });
      if (touches) s.bounding.push_back(n.boundary);
    }
    if (s.inherited) {
      int concave = 0;
      int convex = 0;
      for (std::size_t b : s.bounding) (boundaries.at(b).convexity == Convexity::Concave ? concave : convex)++;
      if (concave != convex) {
        s.convexity = concave > convex ? Convexity::Concave : Convexity::Convex;
      }
      if (diagnostics && (concave == convex || (concave > 0 && convex > 0))) {
        std::vector<std::uint32_t> ids;
        for (FaceId f : s.faces) ids.push_back(f.value);
        diagnostics->push_back({Diagnostic::Kind::UnresolvedConvexity, i, ids,
                                "all-transitory subgraph bounded by " + std::to_string(concave) + " concave and " +
                                    std::to_string(convex) + " convex boundaries"});
      }
    }
  }

  // Renumber globally by smallest face so output order is independent of
  // the phase that created each subgraph.
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out[a].faces.front() < out[b].faces.front(); });
  std::vector<std::size_t> rank(out.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  if (diagnostics) {
    for (auto& d : *diagnostics) {
      if (d.kind == Diagnostic::Kind::UnresolvedConvexity) d.index = rank[d.index];
    }
  }
  std::vector<FeatureSubgraph> sorted;
  sorted.reserve(out.size());
  for (std::size_t idx : order) sorted.push_back(std::move(out[idx]));
  return sorted;
}

/// Full pipeline result: classification, graphs, boundary stage, partition
/// and feature subgraphs, plus diagnostics.
struct FeatureExtraction {
  ConvexityMap conv;
  Taag taag;
  BoundaryStage stage;
  std::vector<BoundaryNeighborhood> neighborhoods;
  PartitionedGraph partition;
  std::vector<FeatureSubgraph> subgraphs;
  std::vector<Diagnostic> diagnostics;

  const std::vector<FeatureBoundary>& boundaries() const { return stage.boundaries; }
  bool clean() const { return diagnostics.empty(); }
};

inline FeatureExtraction extract_features(const SolidModel& model, double tau = tol::convexity) {
  FeatureExtraction r;
  r.conv = classify_all(model, tau);
  r.taag = build_taag(model, r.conv);
  r.stage = run_boundary_stage(r.taag, r.conv);

  for (std::size_t i = 0; i < r.stage.clusters.size(); ++i) {
    const auto& loop = r.stage.loops[i];
    const auto& div = r.stage.division_edges[i];
    if (loop.edges.empty()) {
      std::vector<std::uint32_t> ids;
      for (EdgeId e : r.stage.clusters[i].edges) ids.push_back(e.value);
      r.diagnostics.push_back({Diagnostic::Kind::EmptyLoop, i, ids, "cluster prunes to an empty loop"});
    } else if (!div.empty() && div.size() != loop.edges.size()) {
      std::vector<std::uint32_t> ids;
      for (EdgeId e : loop.edges) {
        if (!std::binary_search(div.begin(), div.end(), e)) ids.push_back(e.value);
      }
      r.diagnostics.push_back({Diagnostic::Kind::MixedLoop, i, ids,
                               "loop has " + std::to_string(ids.size()) + " non-division edges; boundary keeps the rest"});
    }
  }

  for (std::size_t i = 0; i < r.stage.boundaries.size(); ++i) {
    r.neighborhoods.push_back(boundary_neighborhood(r.stage.boundaries[i], r.taag, i));
  }
  r.partition = partition_graph(r.taag, r.stage.boundaries);
  r.subgraphs = group_feature_subgraphs(r.partition, r.taag, r.conv, r.stage.boundaries, r.neighborhoods, &r.diagnostics);

  std::vector<std::size_t> owner(model.faces.size());
  for (std::size_t i = 0; i < r.subgraphs.size(); ++i) {
    for (FaceId f : r.subgraphs[i].faces) owner[f.index()] = i;
  }
  for (std::size_t b = 0; b < r.stage.boundaries.size(); ++b) {
    std::vector<std::uint32_t> ids;
    for (EdgeId e : r.stage.boundaries[b].edges) {
      const auto& l = r.taag.edge_face.link(e);
      if (owner[l.endpoints.first.index()] == owner[l.endpoints.second.index()]) ids.push_back(e.value);
    }
    if (!ids.empty()) {
      r.diagnostics.push_back({Diagnostic::Kind::BoundaryNotSeparating, b, ids,
                               "boundary edges with the same subgraph on both sides"});
    }
  }
  return r;
}

}  // namespace taag
