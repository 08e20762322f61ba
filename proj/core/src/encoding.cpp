#include "td13/encoding.hpp"

#include <sstream>
#include <stdexcept>

#include "td13/errors.hpp"

namespace td13 {

VertexLabel VertexLabel::parse(std::string_view bits) {
  if (bits.empty()) {
    throw MalformedLabel("empty vertex label");
  }
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw MalformedLabel("vertex label '" + std::string(bits) + "' has a non-binary digit");
    }
  }
  static constexpr std::string_view kPrefix = "010";
  for (std::size_t i = 0; i < bits.size() && i < kPrefix.size(); ++i) {
    if (bits[i] != kPrefix[i]) {
      throw MalformedLabel("vertex label '" + std::string(bits) + "' must start with 010");
    }
  }
  return VertexLabel(std::string(bits));
}

VertexLabel validate_vertex_label(std::string_view bits) { return VertexLabel::parse(bits); }

NodePath NodePath::parse(std::string_view trits) {
  if (trits.empty() || trits.front() != '1') {
    throw MalformedPath("node path '" + std::string(trits) + "' must start with the root trit 1");
  }
  for (char c : trits) {
    if (c < '0' || c > '2') {
      throw MalformedPath("node path '" + std::string(trits) + "' has a non-ternary digit");
    }
  }
  return NodePath(std::string(trits));
}

NodePath NodePath::child(int arc) const {
  if (arc < 0 || arc > 2) {
    throw std::invalid_argument("arc label must be 0, 1 or 2");
  }
  return NodePath(trits_ + static_cast<char>('0' + arc));
}

NodePath NodePath::parent() const {
  if (is_root()) {
    throw std::invalid_argument("the root node has no parent");
  }
  return NodePath(trits_.substr(0, trits_.size() - 1));
}

std::string_view to_string(Corner c) {
  switch (c) {
    case Corner::v0: return "v0";
    case Corner::v1: return "v1";
    case Corner::v2: return "v2";
    case Corner::v3: return "v3";
  }
  return "?";
}

std::uint32_t QrCode::q_at(std::size_t i) const {
  if (i == 0 || i > q.size()) return 0;
  return q[i - 1];
}

std::uint8_t QrCode::rho_at(std::size_t i) const {
  if (i == 0 || i > rho.size()) return 0;
  return rho[i - 1];
}

std::vector<std::uint32_t> QrCode::abridged_q() const {
  std::vector<std::uint32_t> out = q;
  if (out.size() == rho.size() + 1 && out.back() == 0) {
    out.pop_back();
  }
  return out;
}

bool QrCode::is_proper() const {
  if (q.size() == rho.size() + 1 && q.back() != 0) return false;
  const std::size_t mm = m();
  if (mm == 1) return true;
  return mm > 0 && q_at(mm) > 0;
}

std::string QrCode::to_string() const {
  std::ostringstream os;
  os << "((";
  const auto aq = abridged_q();
  for (std::size_t i = 0; i < aq.size(); ++i) {
    os << (i ? "," : "") << aq[i];
  }
  os << "),(";
  for (std::size_t i = 0; i < rho.size(); ++i) {
    os << (i ? "," : "") << static_cast<int>(rho[i]);
  }
  os << "))";
  return os.str();
}

QrCode qr_encode(const NodePath& node) {
  QrCode code;
  code.q.push_back(0);
  const auto& t = node.trits();
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] == '1') {
      ++code.q.back();
    } else {
      code.rho.push_back(t[i] == '2' ? 1 : 0);
      code.q.push_back(0);
    }
  }
  return code;
}

NodePath qr_decode(const QrCode& code) {
  const std::size_t m = code.m();
  if (code.q.size() != m && code.q.size() != m + 1) {
    throw MalformedPath("QR code needs m or m+1 forward counts for m turns");
  }
  std::string trits = "1";
  for (std::size_t i = 0; i < m; ++i) {
    trits.append(code.q[i], '1');
    trits.push_back(code.rho[i] ? '2' : '0');
  }
  if (code.q.size() == m + 1) {
    trits.append(code.q[m], '1');
  }
  return NodePath::parse(trits);
}

TypeIndex TypeIndex::from_index(int i) {
  if (i < 0 || i >= kCount) {
    throw std::out_of_range("type index out of range");
  }
  return TypeIndex{static_cast<std::uint8_t>(i / 6), static_cast<std::uint8_t>((i / 3) % 2),
                   static_cast<std::uint8_t>(i % 3)};
}

std::string TypeIndex::to_string() const {
  return std::to_string(q) + "," + std::to_string(r) + "," + std::to_string(s);
}

std::string_view to_string(SConvention c) {
  switch (c) {
    case SConvention::anchored: return "anchored";
    case SConvention::figure: return "figure";
    case SConvention::literal: return "literal";
  }
  return "?";
}

SConvention parse_s_convention(std::string_view name) {
  if (name == "anchored") return SConvention::anchored;
  if (name == "figure") return SConvention::figure;
  if (name == "literal") return SConvention::literal;
  throw std::invalid_argument("unknown s-convention '" + std::string(name) + "'");
}

std::vector<TypeIndex> prefix_types(const QrCode& code, SConvention conv) {
  const std::size_t m = code.m();
  std::vector<TypeIndex> out;
  out.reserve(m + 1);
  out.push_back(TypeIndex{});
  unsigned s = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    bool advance = false;
    switch (conv) {
      case SConvention::figure:
        advance = code.q_at(j) + code.rho_at(j) > 0;
        break;
      case SConvention::literal:
        advance = code.q_at(j - 1) + code.rho_at(j) > 0;
        break;
      case SConvention::anchored:
        advance = j == 1 || code.q_at(j - 1) + code.rho_at(j) > 0;
        break;
    }
    s += advance ? 1 : 0;
    out.push_back(TypeIndex{static_cast<std::uint8_t>(code.q_at(j) % 2), code.rho_at(j),
                            static_cast<std::uint8_t>(s % 3)});
  }
  return out;
}

TypeIndex type_of(const QrCode& code, SConvention conv) { return prefix_types(code, conv).back(); }

TypeIndex type_of(const NodePath& node, SConvention conv) {
  return type_of(qr_encode(node), conv);
}

bool is_tstar_edge(const VertexLabel& a, const VertexLabel& b) {
  const std::string& s = a.size() <= b.size() ? a.bits() : b.bits();
  const std::string& l = a.size() <= b.size() ? b.bits() : a.bits();
  if (s.size() == l.size() || l.compare(0, s.size(), s) != 0) {
    return false;
  }
  const char first = l[s.size()];
  const char rest = first == '0' ? '1' : '0';
  for (std::size_t i = s.size() + 1; i < l.size(); ++i) {
    if (l[i] != rest) return false;
  }
  return true;
}

namespace {

char flip(char bit) { return bit == '0' ? '1' : '0'; }

}  // namespace

std::array<VertexLabel, 4> pi_corners(const NodePath& node) {
  // beta is the last bit of v2. Arc 2 is the only step that turns the walk
  // around, so it is the only one that flips beta.
  std::string l0 = "0";
  std::string l1 = "01";
  std::string v2 = "010";
  char beta = '0';
  const auto& t = node.trits();
  for (std::size_t i = 1; i < t.size(); ++i) {
    const std::string v3 = v2 + flip(beta);
    switch (t[i]) {
      case '0':
        l1 = v2;
        v2 += beta;
        break;
      case '1':
        l0 = v2;
        l1 = v3;
        v2 = v3 + beta;
        break;
      default:
        l0 = l1;
        l1 = v3;
        v2 = v3 + flip(beta);
        beta = flip(beta);
        break;
    }
  }
  return {VertexLabel::parse(l0), VertexLabel::parse(l1), VertexLabel::parse(v2),
          VertexLabel::parse(v2 + flip(beta))};
}

VertexLabel pi(const NodePath& node, Corner corner) {
  return pi_corners(node)[static_cast<int>(corner)];
}

VertexLabel pi_closed_form(const NodePath& node, Corner corner) {
  if (corner != Corner::v2 && corner != Corner::v3) {
    throw std::invalid_argument("closed form covers the v2 and v3 corners only");
  }
  std::string bits = "0";
  char beta = '0';
  for (char c : node.trits()) {
    switch (c) {
      case '0': bits += beta; break;
      case '1': bits += flip(beta); bits += beta; break;
      default:
        bits += flip(beta);
        bits += flip(beta);
        beta = flip(beta);
        break;
    }
  }
  if (corner == Corner::v3) bits += flip(beta);
  return VertexLabel::parse(bits);
}

HostNode host_node_of(const VertexLabel& v) {
  const std::string& b = v.bits();
  if (b.size() < 3) {
    throw RootEdgeVertex("vertex '" + b + "' lies on the root edge");
  }
  // Inverse of the closed form; a dangling flipped bit marks the v3 corner.
  std::string trits;
  char beta = '0';
  std::size_t i = 1;
  while (i < b.size()) {
    if (b[i] == beta) {
      trits += '0';
      ++i;
    } else if (i + 1 < b.size()) {
      if (b[i + 1] == beta) {
        trits += '1';
      } else {
        trits += '2';
        beta = flip(beta);
      }
      i += 2;
    } else {
      return HostNode{NodePath::parse(trits), Corner::v3};
    }
  }
  return HostNode{NodePath::parse(trits), Corner::v2};
}

NodePath proper_node_of(const VertexLabel& v) {
  if (v.bits() == "0") return NodePath::parse("10");
  if (v.bits() == "01") return NodePath::parse("12");
  const HostNode host = host_node_of(v);
  return host.node.child(1).child(host.corner == Corner::v2 ? 0 : 2);
}

}  // namespace td13
