#pragma once

// Names and bijections on the universal outerplanar graph T* and the rhombus
// tree H* that covers it.
//
// A T* vertex is a binary word 0, 01, 010, 010x... where every later bit says
// whether the new triangle was glued on the left (0) or right (1) edge of the
// previous one. An H* node is a ternary path from the root rhombus; arc 0 is
// the (v0,v2) edge, arc 1 the (v2,v3) edge and arc 2 the (v1,v3) edge.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace td13 {

class VertexLabel {
 public:
  /// Validates `bits` against the prefix rule 0, 01, 010.
  /// Throws MalformedLabel.
  static VertexLabel parse(std::string_view bits);

  static VertexLabel root_base() { return VertexLabel("0"); }
  static VertexLabel root_tip() { return VertexLabel("01"); }

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }

  VertexLabel appended(char bit) const { return parse(bits_ + bit); }

  auto operator<=>(const VertexLabel&) const = default;

 private:
  explicit VertexLabel(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

VertexLabel validate_vertex_label(std::string_view bits);

/// Path from the root of H*; always starts with the root trit 1.
class NodePath {
 public:
  /// Throws MalformedPath.
  static NodePath parse(std::string_view trits);
  static NodePath root() { return NodePath("1"); }

  const std::string& trits() const { return trits_; }
  std::size_t depth() const { return trits_.size(); }
  int last() const { return trits_.back() - '0'; }
  bool is_root() const { return trits_.size() == 1; }

  NodePath child(int arc) const;
  NodePath parent() const;

  auto operator<=>(const NodePath&) const = default;

 private:
  explicit NodePath(std::string trits) : trits_(std::move(trits)) {}
  std::string trits_;
};

enum class Corner { v0 = 0, v1 = 1, v2 = 2, v3 = 3 };

std::string_view to_string(Corner c);

/// QR encoding: forward-step counts between turns and the turn directions.
/// `q` holds q_1..q_{m+1} (the trailing entry may be zero); `rho` holds
/// rho_1..rho_m with 1 meaning a right turn.
struct QrCode {
  std::vector<std::uint32_t> q;
  std::vector<std::uint8_t> rho;

  std::size_t m() const { return rho.size(); }
  std::uint32_t q_at(std::size_t i) const;   // 1-based, 0 outside 1..m+1
  std::uint8_t rho_at(std::size_t i) const;  // 1-based, 0 outside 1..m

  /// Trailing q_{m+1} dropped when it is zero.
  std::vector<std::uint32_t> abridged_q() const;

  /// q_{m+1} = 0 and (q_m > 0 or m = 1).
  bool is_proper() const;

  /// "((2,1),(1,0))", abridged form.
  std::string to_string() const;

  bool operator==(const QrCode& other) const {
    return abridged_q() == other.abridged_q() && rho == other.rho;
  }
};

QrCode qr_encode(const NodePath& node);

/// Accepts q of length m or m+1. Throws MalformedPath on other shapes.
NodePath qr_decode(const QrCode& code);

/// Index into I = {0,1}^2 x {0,1,2}; 12 values.
struct TypeIndex {
  std::uint8_t q = 0;
  std::uint8_t r = 0;
  std::uint8_t s = 0;

  static constexpr int kCount = 12;

  int index() const { return q * 6 + r * 3 + s; }
  static TypeIndex from_index(int i);
  /// "q,r,s"
  std::string to_string() const;

  auto operator<=>(const TypeIndex&) const = default;
};

/// How the cyclic s-counter of the type function advances at turn j.
///  anchored: the first turn always advances; later turns advance when
///            q_{j-1} + rho_j > 0.
///  figure:   advances when q_j + rho_j > 0.
///  literal:  advances when q_{j-1} + rho_j > 0 with q_0 = 0.
enum class SConvention { anchored, figure, literal };

std::string_view to_string(SConvention c);
/// Throws std::invalid_argument.
SConvention parse_s_convention(std::string_view name);

/// Types of the prefix nodes N_0..N_m of a QR code, where N_i takes the first
/// i turns.
std::vector<TypeIndex> prefix_types(const QrCode& code, SConvention conv);

TypeIndex type_of(const QrCode& code, SConvention conv);
TypeIndex type_of(const NodePath& node, SConvention conv);

/// True iff one label is a strict prefix of the other and the remaining tail
/// has shape 0 1* or 1 0*.
bool is_tstar_edge(const VertexLabel& a, const VertexLabel& b);

/// The covering map, evaluated by unfolding its recursive definition.
VertexLabel pi(const NodePath& node, Corner corner);

/// All four corners at once; same values as pi().
std::array<VertexLabel, 4> pi_corners(const NodePath& node);

/// Direct word for v2 and v3. Each trit writes beta, !beta beta or
/// !beta !beta (the last one flips beta), starting from beta = 0; v3 appends
/// !beta. Other corners throw std::invalid_argument.
VertexLabel pi_closed_form(const NodePath& node, Corner corner);

struct HostNode {
  NodePath node;
  Corner corner;  // v2 or v3

  bool operator==(const HostNode&) const = default;
};

/// The unique node in which `v` is the v2 or v3 corner.
/// Throws RootEdgeVertex for "0" and "01".
HostNode host_node_of(const VertexLabel& v);

/// The unique node with a proper QR encoding whose base vertex is `v`.
NodePath proper_node_of(const VertexLabel& v);

}  // namespace td13

template <>
struct std::hash<td13::VertexLabel> {
  std::size_t operator()(const td13::VertexLabel& v) const noexcept {
    return std::hash<std::string>{}(v.bits());
  }
};

template <>
struct std::hash<td13::NodePath> {
  std::size_t operator()(const td13::NodePath& p) const noexcept {
    return std::hash<std::string>{}(p.trits());
  }
};
