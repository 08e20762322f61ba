#pragma once

// Finite truncations of T*: every H* node up to a path length, the T*
// vertices they touch and the rhombus edges they realise.

#include <array>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "td13/encoding.hpp"

namespace td13 {

/// Which rhombus edge a T* edge realises. The root edge (0,01) counts as a
/// side. Sides have length 1 under psi, diagonals |x_t - 1|.
enum class EdgeRole { side, diagonal };

struct EdgeInfo {
  EdgeRole role = EdgeRole::side;
  /// For a diagonal: the node it belongs to, its type, and the endpoint that
  /// is the node's v2 corner. For a side: the node it belongs to (root for the
  /// root edge).
  NodePath node = NodePath::root();
  TypeIndex type{};
  VertexLabel apex = VertexLabel::root_base();  // v2 corner (diagonals only)
  VertexLabel other = VertexLabel::root_base(); // v1 corner (diagonals only)
};

/// Classifies the T* edge {a, b} from host-node bookkeeping.
/// Throws NotAnEdge if {a, b} is not an edge of T*.
EdgeInfo edge_info(const VertexLabel& a, const VertexLabel& b, SConvention conv);

struct TruncatedNode {
  NodePath path;
  std::array<VertexLabel, 4> corners;
  TypeIndex type;
};

struct TruncatedEdge {
  std::size_t a;  // vertex indices
  std::size_t b;
  EdgeRole role;
  TypeIndex type;  // meaningful for diagonals
};

class Truncation {
 public:
  /// Nodes with path length <= max(depth, 1).
  Truncation(int depth, SConvention conv);

  int depth() const { return depth_; }
  SConvention convention() const { return conv_; }

  const std::vector<TruncatedNode>& nodes() const { return nodes_; }
  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<TruncatedEdge>& edges() const { return edges_; }

  std::size_t index_of(const VertexLabel& v) const { return index_.at(v); }
  bool contains(const VertexLabel& v) const { return index_.count(v) != 0; }

 private:
  std::size_t add_vertex(const VertexLabel& v);

  int depth_;
  SConvention conv_;
  std::vector<TruncatedNode> nodes_;
  std::vector<VertexLabel> vertices_;
  std::vector<TruncatedEdge> edges_;
  std::unordered_map<VertexLabel, std::size_t> index_;
};

/// Every node path of length 1..depth, breadth first.
std::vector<NodePath> enumerate_nodes(int depth);

}  // namespace td13
