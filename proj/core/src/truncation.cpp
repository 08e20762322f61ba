#include "td13/truncation.hpp"

#include <deque>
#include <stdexcept>

#include "td13/errors.hpp"

namespace td13 {

EdgeInfo edge_info(const VertexLabel& a, const VertexLabel& b, SConvention conv) {
  if (!is_tstar_edge(a, b)) {
    throw NotAnEdge("(" + a.bits() + ", " + b.bits() + ") is not an edge of T*");
  }
  const VertexLabel& shorter = a.size() < b.size() ? a : b;
  const VertexLabel& longer = a.size() < b.size() ? b : a;
  EdgeInfo info;
  if (longer.size() == 2) {
    return info;  // root edge
  }
  const HostNode host = host_node_of(longer);
  const auto corners = pi_corners(host.node);
  info.node = host.node;
  info.type = type_of(host.node, conv);
  if (host.corner == Corner::v2 && shorter == corners[1]) {
    info.role = EdgeRole::diagonal;
    info.apex = longer;
    info.other = shorter;
    return info;
  }
  const bool side_ok = host.corner == Corner::v2 ? shorter == corners[0]
                                                  : shorter == corners[1] || shorter == corners[2];
  if (!side_ok) {
    throw std::logic_error("edge (" + a.bits() + ", " + b.bits() +
                           ") does not match its host rhombus");
  }
  info.role = EdgeRole::side;
  return info;
}

std::vector<NodePath> enumerate_nodes(int depth) {
  std::vector<NodePath> out;
  std::deque<NodePath> queue{NodePath::root()};
  while (!queue.empty()) {
    NodePath n = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(n.depth()) < depth) {
      for (int arc = 0; arc < 3; ++arc) queue.push_back(n.child(arc));
    }
    out.push_back(std::move(n));
  }
  return out;
}

Truncation::Truncation(int depth, SConvention conv) : depth_(depth < 1 ? 1 : depth), conv_(conv) {
  add_vertex(VertexLabel::root_base());
  add_vertex(VertexLabel::root_tip());
  edges_.push_back(TruncatedEdge{0, 1, EdgeRole::side, TypeIndex{}});

  // Breadth first, carrying base-edge labels down instead of recomputing pi.
  struct Item {
    NodePath path;
    VertexLabel l0;
    VertexLabel l1;
    VertexLabel v2;
    char beta;
  };
  std::deque<Item> queue;
  queue.push_back(Item{NodePath::root(), VertexLabel::root_base(), VertexLabel::root_tip(),
                       VertexLabel::parse("010"), '0'});
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    const char beta = it.beta;
    const char flipped = beta == '0' ? '1' : '0';
    const VertexLabel& v2 = it.v2;
    const VertexLabel v3 = v2.appended(flipped);
    const TypeIndex type = type_of(it.path, conv_);
    const std::size_t i0 = index_.at(it.l0);
    const std::size_t i1 = index_.at(it.l1);
    const std::size_t i2 = add_vertex(v2);
    const std::size_t i3 = add_vertex(v3);
    edges_.push_back(TruncatedEdge{i0, i2, EdgeRole::side, type});
    edges_.push_back(TruncatedEdge{i2, i3, EdgeRole::side, type});
    edges_.push_back(TruncatedEdge{i1, i3, EdgeRole::side, type});
    edges_.push_back(TruncatedEdge{i1, i2, EdgeRole::diagonal, type});
    nodes_.push_back(TruncatedNode{it.path, {it.l0, it.l1, v2, v3}, type});
    if (static_cast<int>(it.path.depth()) < depth_) {
      queue.push_back(Item{it.path.child(0), it.l0, v2, v2.appended(beta), beta});
      queue.push_back(Item{it.path.child(1), v2, v3, v3.appended(beta), beta});
      queue.push_back(Item{it.path.child(2), it.l1, v3, v3.appended(flipped), flipped});
    }
  }
}

std::size_t Truncation::add_vertex(const VertexLabel& v) {
  auto [it, inserted] = index_.emplace(v, vertices_.size());
  if (!inserted) {
    throw std::logic_error("vertex " + v.bits() + " reached twice as a v2/v3 corner");
  }
  vertices_.push_back(v);
  return it->second;
}

}  // namespace td13
