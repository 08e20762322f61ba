#include "td13/oracle.hpp"

namespace td13 {

std::vector<std::complex<double>> GeometricOracle::evaluate_indexed(const TorusPoint& x) const {
  std::vector<std::complex<double>> z(t_.vertices().size());
  z[t_.index_of(VertexLabel::root_base())] = 0.0;
  z[t_.index_of(VertexLabel::root_tip())] = 1.0;
  // Parents precede children, so both base corners are placed already.
  for (const auto& node : t_.nodes()) {
    const auto a = z[t_.index_of(node.corners[0])];
    const auto b = z[t_.index_of(node.corners[1])];
    const auto turn = (b - a) * x.value(node.type);
    z[t_.index_of(node.corners[2])] = a + turn;
    z[t_.index_of(node.corners[3])] = b + turn;
  }
  return z;
}

std::unordered_map<VertexLabel, std::complex<double>> GeometricOracle::evaluate(
    const TorusPoint& x) const {
  const auto z = evaluate_indexed(x);
  std::unordered_map<VertexLabel, std::complex<double>> out;
  out.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out.emplace(t_.vertices()[i], z[i]);
  return out;
}

}  // namespace td13
