#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "taag/convexity.hpp"

namespace taag {

template <class NodeId>
struct AttrNode {
  NodeId entity;
  Convexity attr;
};

template <class NodeId>
struct AttrLink {
  EdgeId entity;
  std::pair<NodeId, NodeId> endpoints;
  Convexity attr;

  NodeId other(NodeId n) const { return n == endpoints.first ? endpoints.second : endpoints.first; }
};

/// Attributed multigraph whose links are model edges. Node i carries entity
/// id i; incidence lists are sorted by link entity id.
template <class NodeId>
class AttrGraph {
 public:
  using Node = AttrNode<NodeId>;
  using Link = AttrLink<NodeId>;

  AttrGraph() = default;
  explicit AttrGraph(std::vector<Node> nodes) : nodes_(std::move(nodes)), incidence_(nodes_.size()) {}

  void add_link(Link link) {
    const std::size_t slot = links_.size();
    links_.push_back(link);
    incidence_.at(link.endpoints.first.index()).push_back(slot);
    incidence_.at(link.endpoints.second.index()).push_back(slot);
    if (link_slot_.size() <= link.entity.index()) link_slot_.resize(link.entity.index() + 1, npos);
    link_slot_[link.entity.index()] = slot;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const Node& node(NodeId id) const {
    check(id);
    return nodes_[id.index()];
  }

  bool has_link(EdgeId e) const { return e.index() < link_slot_.size() && link_slot_[e.index()] != npos; }
  const Link& link(EdgeId e) const {
    if (!has_link(e)) throw GeometryError(GeometryKind::UnknownEdge, "edge " + std::to_string(e.value) + " is not a link");
    return links_[link_slot_[e.index()]];
  }

  std::size_t degree(NodeId id) const {
    check(id);
    return incidence_[id.index()].size();
  }

  /// (link, opposite node) pairs in ascending link entity order.
  std::vector<std::pair<const Link*, NodeId>> neighbors(NodeId id) const {
    check(id);
    std::vector<std::pair<const Link*, NodeId>> out;
    out.reserve(incidence_[id.index()].size());
    for (std::size_t slot : incidence_[id.index()]) out.emplace_back(&links_[slot], links_[slot].other(id));
    return out;
  }

  /// Links, ascending by entity, optionally restricted to one convexity.
  std::vector<const Link*> links_of(std::optional<Convexity> filter = std::nullopt) const {
    std::vector<const Link*> out;
    for (const auto& l : links_) {
      if (!filter || l.attr == *filter) out.push_back(&l);
    }
    return out;
  }

  void finalize() {
    for (auto& inc : incidence_) {
      std::sort(inc.begin(), inc.end(), [&](std::size_t a, std::size_t b) { return links_[a].entity < links_[b].entity; });
    }
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void check(NodeId id) const {
    if (id.index() >= nodes_.size()) throw GeometryError(GeometryKind::UnknownNode, "node " + std::to_string(id.value));
  }

  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::size_t> link_slot_;
};

using VertexEdgeGraph = AttrGraph<VertexId>;
using EdgeFaceGraph = AttrGraph<FaceId>;

/// Two-level attributed adjacency graph over one solid.
struct Taag {
  VertexEdgeGraph vertex_edge;
  EdgeFaceGraph edge_face;
  std::vector<EdgeId> closed_edges;  // ascending; links only in edge_face
};

inline Taag build_taag(const SolidModel& model, const ConvexityMap& conv) {
  if (conv.face_conv.size() != model.faces.size() || conv.edge_conv.size() != model.edges.size() ||
      conv.vertex_conv.size() != model.vertices.size()) {
    throw Error("convexity map does not cover the model");
  }
  std::vector<AttrNode<VertexId>> vnodes;
  vnodes.reserve(model.vertices.size());
  for (const auto& v : model.vertices) vnodes.push_back({v.id, conv.vertex(v.id)});
  std::vector<AttrNode<FaceId>> fnodes;
  fnodes.reserve(model.faces.size());
  for (const auto& f : model.faces) fnodes.push_back({f.id, conv.face(f.id)});

  Taag t{VertexEdgeGraph(std::move(vnodes)), EdgeFaceGraph(std::move(fnodes)), {}};
  for (const auto& e : model.edges) {
    const Convexity c = conv.edge(e.id);
    t.edge_face.add_link({e.id, e.faces, c});
    if (e.endpoints) {
      t.vertex_edge.add_link({e.id, *e.endpoints, c});
    } else {
      t.closed_edges.push_back(e.id);
    }
  }
  t.vertex_edge.finalize();
  t.edge_face.finalize();
  return t;
}

}  // namespace taag
