#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "taag/graph.hpp"

namespace taag {

struct EdgeCluster {
  std::vector<EdgeId> edges;  // ascending
  Convexity convexity = Convexity::Convex;
  std::vector<VertexId> incident_vertices;  // ascending
};

struct EdgeLoop {
  std::vector<EdgeId> edges;          // ascending
  std::vector<EdgeId> pruned_leaves;  // removal order
};

struct FeatureBoundary {
  std::vector<EdgeId> edges;  // ascending
  Convexity convexity = Convexity::Concave;
  std::size_t cluster = 0;    // index into the cluster list it came from
};

/// Maximal groups of equal-convexity edges connected through shared
/// vertices. Transitory edges never join; closed edges stand alone.
inline std::vector<EdgeCluster> find_edge_clusters(const Taag& taag) {
  const auto& ef = taag.edge_face;
  const auto& ve = taag.vertex_edge;
  std::size_t span = 0;
  for (const auto& l : ef.links()) span = std::max(span, l.entity.index() + 1);
  std::vector<char> seen(span, 0);

  std::vector<const AttrLink<FaceId>*> order = ef.links_of();
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->entity < b->entity; });

  std::vector<EdgeCluster> clusters;
  for (const auto* seed : order) {
    if (seed->attr == Convexity::Transitory || seen[seed->entity.index()]) continue;
    EdgeCluster c;
    c.convexity = seed->attr;
    seen[seed->entity.index()] = 1;
    if (!ve.has_link(seed->entity)) {
      c.edges.push_back(seed->entity);
      clusters.push_back(std::move(c));
      continue;
    }
    std::deque<EdgeId> queue{seed->entity};
    while (!queue.empty()) {
      const EdgeId e = queue.front();
      queue.pop_front();
      c.edges.push_back(e);
      const auto& link = ve.link(e);
      for (VertexId v : {link.endpoints.first, link.endpoints.second}) {
        c.incident_vertices.push_back(v);
        for (const auto& [next, _] : ve.neighbors(v)) {
          if (next->attr != c.convexity || seen[next->entity.index()]) continue;
          seen[next->entity.index()] = 1;
          queue.push_back(next->entity);
        }
      }
    }
    std::sort(c.edges.begin(), c.edges.end());
    std::sort(c.incident_vertices.begin(), c.incident_vertices.end());
    c.incident_vertices.erase(std::unique(c.incident_vertices.begin(), c.incident_vertices.end()),
                              c.incident_vertices.end());
    clusters.push_back(std::move(c));
  }
  return clusters;
}

/// Leaf pruning with an explicit visiting order for each sweep. Any order
/// reaches the same loop; only pruned_leaves ordering depends on it.
inline EdgeLoop prune_in_order(const EdgeCluster& cluster, const Taag& taag, std::span<const EdgeId> order) {
  EdgeLoop loop;
  const auto& ve = taag.vertex_edge;
  if (cluster.edges.size() == 1 && !ve.has_link(cluster.edges.front())) {
    loop.edges = cluster.edges;
    return loop;
  }
  std::vector<std::size_t> degree(ve.nodes().size(), 0);
  for (EdgeId e : cluster.edges) {
    const auto& l = ve.link(e);
    ++degree[l.endpoints.first.index()];
    ++degree[l.endpoints.second.index()];
  }
  std::vector<EdgeId> remaining(order.begin(), order.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<EdgeId> keep;
    keep.reserve(remaining.size());
    for (EdgeId e : remaining) {
      const auto& l = ve.link(e);
      auto& da = degree[l.endpoints.first.index()];
      auto& db = degree[l.endpoints.second.index()];
      if (da == 1 || db == 1) {
        --da;
        --db;
        loop.pruned_leaves.push_back(e);
        changed = true;
      } else {
        keep.push_back(e);
      }
    }
    remaining = std::move(keep);
  }
  std::sort(remaining.begin(), remaining.end());
  loop.edges = std::move(remaining);
  return loop;
}

inline EdgeLoop prune_to_loop(const EdgeCluster& cluster, const Taag& taag) {
  return prune_in_order(cluster, taag, cluster.edges);
}

/// A loop edge of convexity c divides features when opposite-convexity
/// edges flank it. Either test suffices:
///  - face test: each of its two faces is bounded by some edge of convexity -c;
///  - end test: each endpoint touches an edge of convexity -c. A closed edge
///    has no endpoints and instead needs one adjacent face that has
///    convexity -c itself or another bounding edge of convexity -c.
inline bool is_division_edge(EdgeId edge, const EdgeLoop& loop, const Taag& taag, const ConvexityMap& conv) {
  if (!std::binary_search(loop.edges.begin(), loop.edges.end(), edge)) {
    throw GeometryError(GeometryKind::UnknownEdge, "edge " + std::to_string(edge.value) + " is not in the loop");
  }
  const auto& link = taag.edge_face.link(edge);
  const Convexity want = opposite(conv.edge(edge));
  if (want == Convexity::Transitory) return false;

  auto face_has = [&](FaceId f) {
    for (const auto& [l, _] : taag.edge_face.neighbors(f)) {
      if (l->entity != edge && l->attr == want) return true;
    }
    return false;
  };
  if (face_has(link.endpoints.first) && face_has(link.endpoints.second)) return true;

  if (!taag.vertex_edge.has_link(edge)) {
    for (FaceId f : {link.endpoints.first, link.endpoints.second}) {
      if (conv.face(f) == want || face_has(f)) return true;
    }
    return false;
  }
  auto vertex_has = [&](VertexId v) {
    for (const auto& [l, _] : taag.vertex_edge.neighbors(v)) {
      if (l->entity != edge && l->attr == want) return true;
    }
    return false;
  };
  const auto& vl = taag.vertex_edge.link(edge);
  return vertex_has(vl.endpoints.first) && vertex_has(vl.endpoints.second);
}

/// Everything the boundary stage produces, index-aligned by cluster.
struct BoundaryStage {
  std::vector<EdgeCluster> clusters;
  std::vector<EdgeLoop> loops;
  std::vector<std::vector<EdgeId>> division_edges;  // per loop, ascending
  std::vector<FeatureBoundary> boundaries;
};

inline BoundaryStage run_boundary_stage(const Taag& taag, const ConvexityMap& conv) {
  BoundaryStage s;
  s.clusters = find_edge_clusters(taag);
  for (std::size_t i = 0; i < s.clusters.size(); ++i) {
    s.loops.push_back(prune_to_loop(s.clusters[i], taag));
    std::vector<EdgeId> div;
    for (EdgeId e : s.loops.back().edges) {
      if (is_division_edge(e, s.loops.back(), taag, conv)) div.push_back(e);
    }
    if (!div.empty()) s.boundaries.push_back({div, s.clusters[i].convexity, i});
    s.division_edges.push_back(std::move(div));
  }
  return s;
}

inline std::vector<FeatureBoundary> extract_boundaries(const Taag& taag, const ConvexityMap& conv) {
  return run_boundary_stage(taag, conv).boundaries;
}

}  // namespace taag
