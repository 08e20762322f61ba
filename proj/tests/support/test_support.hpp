#pragma once

#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "td13/embedder.hpp"

namespace td13::testing {

/// Start from a triangle and glue each new vertex onto a uniformly chosen
/// outer edge.
inline PlaneGraphInput random_maximal_outerplanar(int n, std::mt19937_64& rng) {
  PlaneGraphInput g;
  g.n = n;
  if (n < 3) {
    for (int v = 0; v < n; ++v) g.outer_order.push_back(v);
    if (n == 2) g.edges.emplace_back(0, 1);
    return g;
  }
  std::vector<int> cycle{0, 1, 2};
  g.edges = {{0, 1}, {1, 2}, {0, 2}};
  for (int v = 3; v < n; ++v) {
    const std::size_t i = rng() % cycle.size();
    const int a = cycle[i];
    const int b = cycle[(i + 1) % cycle.size()];
    g.edges.emplace_back(a, v);
    g.edges.emplace_back(b, v);
    cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
  }
  g.outer_order = cycle;
  return g;
}

/// label -> canonical polynomial text, from a tab separated file.
inline std::vector<std::pair<std::string, std::string>> load_table(const std::string& name) {
  std::ifstream in(std::string(TD13_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("cannot open test data " + name);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("bad row: " + line);
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return rows;
}

}  // namespace td13::testing
