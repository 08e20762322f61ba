#include "td13/embedder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "td13/errors.hpp"
#include "td13/parallel.hpp"
#include "td13/psi.hpp"
#include "td13/validator.hpp"

namespace td13 {

namespace {

std::string edge_name(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Position of every vertex in the outer order.
std::vector<int> positions(const PlaneGraphInput& g) {
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[g.outer_order[i]] = i;
  return pos;
}

bool is_outer(int pa, int pb, int n) {
  const int d = std::abs(pa - pb);
  return d == 1 || (n > 2 && d == n - 1);
}

struct Chord {
  int lo, hi;  // outer positions, lo < hi
};

// Chords sorted by (lo asc, hi desc) with the parent of each in the laminar
// family; -1 is the whole polygon.
std::vector<int> chord_parents(const std::vector<Chord>& chords) {
  std::vector<int> parent(chords.size(), -1);
  std::vector<int> stack;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    while (!stack.empty() && chords[stack.back()].hi <= chords[i].lo) stack.pop_back();
    parent[i] = stack.empty() ? -1 : stack.back();
    stack.push_back(static_cast<int>(i));
  }
  return parent;
}

std::vector<Chord> sorted_chords(const PlaneGraphInput& g, const std::vector<int>& pos) {
  std::vector<Chord> chords;
  for (const auto& [a, b] : g.edges) {
    const int pa = pos[a], pb = pos[b];
    if (!is_outer(pa, pb, g.n)) chords.push_back({std::min(pa, pb), std::max(pa, pb)});
  }
  std::sort(chords.begin(), chords.end(), [](const Chord& x, const Chord& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi > y.hi);
  });
  return chords;
}

using Adjacency = std::vector<std::unordered_set<int>>;

Adjacency adjacency(const PlaneGraphInput& g) {
  Adjacency adj(g.n);
  for (const auto& [a, b] : g.edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  return adj;
}

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& e) {
  std::vector<Edge> out;
  out.reserve(e.size());
  for (const auto& [a, b] : e) out.emplace_back(a, b);
  return out;
}

Drawing finish(std::vector<VertexLabel> labels, std::vector<Edge> edges, const DrawOptions& opt) {
  if (!(opt.scale > 0.0 && opt.scale <= 1.0)) {
    throw InputError("scale must lie in (0, 1]");
  }
  std::vector<VertexPoly> psi(labels.size());
  parallel_for(labels.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) psi[i] = psi_of_vertex(labels[i], opt.conv);
  });

  Drawing d;
  d.labels = std::move(labels);
  d.edges = std::move(edges);
  d.scale = opt.scale;
  d.seed = opt.seed;
  d.conv = opt.conv;
  d.coords.resize(d.labels.size());

  std::uint64_t seed = opt.seed;
  std::string failing;
  double min_sep = 0.0;
  const int budget = std::max(1, opt.retries);
  for (int attempt = 1; attempt <= budget; ++attempt, seed = next_seed(seed)) {
    d.x = sample_torus(seed);
    d.attempts = attempt;
    parallel_for(psi.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) d.coords[i] = opt.scale * psi[i].evaluate(d.x);
    });
    if (opt.validate) {
      const auto vg = check_distinct_vertices(d.coords, opt.tol.vertex_gap);
      if (!vg.ok) {
        failing = "vertex_gap";
        min_sep = vg.gap;
        continue;
      }
      const auto eg = check_vertex_edge_separation(d.coords, d.edges, opt.tol.vertex_edge_gap);
      if (!eg.ok) {
        failing = "vertex_edge_gap";
        min_sep = eg.gap;
        continue;
      }
    }
    std::vector<double> lengths;
    lengths.reserve(d.edges.size());
    for (const auto& [u, w] : d.edges) lengths.push_back(std::abs(d.coords[u] - d.coords[w]));
    auto lc = count_length_classes(lengths, d.scale, d.x, opt.tol.length_cluster,
                                   opt.tol.length_match);
    d.classes = std::move(lc.classes);
    d.edge_class = std::move(lc.edge_class);
    return d;
  }
  throw RetryBudgetExhausted("no valid drawing after " + std::to_string(budget) +
                                 " attempts; last failing check " + failing,
                             failing, min_sep);
}

}  // namespace

PlaneGraphInput validate_input(const PlaneGraphInput& g) {
  if (g.n < 1) throw BadOrder("graph needs at least one vertex");
  if (static_cast<int>(g.outer_order.size()) != g.n) {
    throw BadOrder("outer_order must list all " + std::to_string(g.n) + " vertices");
  }
  std::vector<char> seen(g.n, 0);
  for (int v : g.outer_order) {
    if (v < 0 || v >= g.n || seen[v]) throw BadOrder("outer_order is not a permutation of 0..n-1");
    seen[v] = 1;
  }
  PlaneGraphInput out = g;
  std::set<std::pair<int, int>> unique;
  for (auto& [a, b] : out.edges) {
    if (a < 0 || a >= g.n || b < 0 || b >= g.n) {
      throw InputError("edge " + edge_name(a, b) + " has an endpoint out of range");
    }
    if (a == b) throw InputError("loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!unique.insert({a, b}).second) throw DuplicateEdge("duplicate edge " + edge_name(a, b));
  }
  std::sort(out.edges.begin(), out.edges.end());

  const auto pos = positions(out);
  const auto chords = sorted_chords(out, pos);
  std::vector<int> stack;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    while (!stack.empty() && chords[stack.back()].hi <= chords[i].lo) stack.pop_back();
    if (!stack.empty() && chords[stack.back()].hi < chords[i].hi) {
      const auto& o = chords[stack.back()];
      const auto& c = chords[i];
      throw CrossingChords("chords " + edge_name(g.outer_order[o.lo], g.outer_order[o.hi]) +
                               " and " + edge_name(g.outer_order[c.lo], g.outer_order[c.hi]) +
                               " cross",
                           g.outer_order[o.lo], g.outer_order[o.hi], g.outer_order[c.lo],
                           g.outer_order[c.hi]);
    }
    stack.push_back(static_cast<int>(i));
  }
  return out;
}

PlaneGraphInput triangulate(const PlaneGraphInput& input) {
  if (input.n < 3) throw TooSmall("triangulation needs at least 3 vertices");
  const PlaneGraphInput g = validate_input(input);
  const int n = g.n;
  const auto pos = positions(g);
  const auto chords = sorted_chords(g, pos);
  const auto parent = chord_parents(chords);

  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (int i = 0; i < n; ++i) add(g.outer_order[i], g.outer_order[(i + 1) % n]);

  // Maximal child chord starting at each position, per parent face.
  std::vector<std::vector<std::pair<int, int>>> children(chords.size() + 1);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    children[parent[i] + 1].push_back({chords[i].lo, chords[i].hi});
  }
  auto fan = [&](int lo, int hi, const std::vector<std::pair<int, int>>& kids) {
    std::vector<int> face;
    std::size_t k = 0;
    int p = lo;
    while (p < hi) {
      face.push_back(g.outer_order[p]);
      while (k < kids.size() && kids[k].first < p) ++k;
      if (k < kids.size() && kids[k].first == p) {
        p = kids[k].second;
        ++k;
      } else {
        ++p;
      }
    }
    face.push_back(g.outer_order[hi]);
    const auto apex_it = std::min_element(face.begin(), face.end());
    const std::size_t a = apex_it - face.begin();
    const std::size_t m = face.size();
    for (std::size_t j = 2; j + 1 < m; ++j) add(*apex_it, face[(a + j) % m]);
  };
  fan(0, n - 1, children[0]);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    fan(chords[i].lo, chords[i].hi, children[i + 1]);
  }

  PlaneGraphInput out = g;
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

std::vector<VertexLabel> map_to_tstar(const PlaneGraphInput& g, std::pair<int, int> base_edge) {
  const auto [b0, b1] = base_edge;
  if (b0 < 0 || b0 >= g.n || b1 < 0 || b1 >= g.n) {
    throw BaseEdgeNotOnOuterFace("base edge " + edge_name(b0, b1) + " is out of range");
  }
  const auto pos = positions(g);
  if (!is_outer(pos[b0], pos[b1], g.n)) {
    throw BaseEdgeNotOnOuterFace("base edge " + edge_name(b0, b1) + " is not on the outer face");
  }
  const Adjacency adj = adjacency(g);
  if (!adj[b0].count(b1)) {
    throw BaseEdgeNotOnOuterFace("base edge " + edge_name(b0, b1) + " is not an edge");
  }
  std::vector<std::optional<VertexLabel>> label(g.n);
  label[b0] = VertexLabel::root_base();
  label[b1] = VertexLabel::root_tip();

  // The apex across edge (a, b) other than `not_this`, if any.
  auto apex_across = [&](int a, int b, int not_this) -> int {
    const auto& small = adj[a].size() < adj[b].size() ? adj[a] : adj[b];
    const auto& large = adj[a].size() < adj[b].size() ? adj[b] : adj[a];
    for (int c : small) {
      if (c != not_this && large.count(c)) return c;
    }
    return -1;
  };

  struct Glue {
    int a, b, p;  // triangle on ordered edge (a, b) with apex p
  };
  std::vector<Glue> stack;
  const int root_apex = apex_across(b0, b1, -1);
  if (root_apex >= 0) {
    label[root_apex] = VertexLabel::parse("010");
    stack.push_back({b0, b1, root_apex});
  }
  while (!stack.empty()) {
    const Glue t = stack.back();
    stack.pop_back();
    const VertexLabel& lp = *label[t.p];
    // Right edge (p, b) then left edge (a, p); the stack pops left first.
    const std::pair<std::pair<int, int>, char> sides[] = {{{t.p, t.b}, '1'}, {{t.a, t.p}, '0'}};
    for (const auto& [e, bit] : sides) {
      const int other = e.first == t.p ? t.a : t.b;
      const int q = apex_across(e.first, e.second, other);
      if (q < 0) continue;
      if (label[q]) {
        throw InputError("graph is not maximal outerplanar around vertex " + std::to_string(q));
      }
      label[q] = lp.appended(bit);
      stack.push_back({e.first, e.second, q});
    }
  }
  std::vector<VertexLabel> out;
  out.reserve(g.n);
  for (int v = 0; v < g.n; ++v) {
    if (!label[v]) throw InputError("vertex " + std::to_string(v) + " is not connected to the base edge");
    out.push_back(*label[v]);
  }
  for (const auto& [a, b] : g.edges) {
    if (!is_tstar_edge(out[a], out[b])) {
      throw std::logic_error("edge " + edge_name(a, b) + " does not map to a T* edge");
    }
  }
  return out;
}

Drawing draw(const PlaneGraphInput& input, const DrawOptions& opt) {
  const PlaneGraphInput g = validate_input(input);
  const std::pair<int, int> base =
      opt.base_edge.value_or(std::make_pair(g.outer_order[0], g.outer_order[g.n > 1 ? 1 : 0]));
  if (g.n == 1) {
    auto d = finish({VertexLabel::root_base()}, {}, opt);
    d.base_edge = Edge(base.first, base.second);
    return d;
  }
  if (g.n == 2) {
    std::vector<VertexLabel> labels(2, VertexLabel::root_base());
    if (!((base.first == 0 && base.second == 1) || (base.first == 1 && base.second == 0))) {
      throw BaseEdgeNotOnOuterFace("base edge must join the two vertices");
    }
    labels[base.second] = VertexLabel::root_tip();
    auto d = finish(labels, to_edges(g.edges), opt);
    d.base_edge = Edge(base.first, base.second);
    return d;
  }
  const PlaneGraphInput full = triangulate(g);
  auto labels = map_to_tstar(full, base);
  auto d = finish(std::move(labels), to_edges(opt.keep_augmented ? full.edges : g.edges), opt);
  d.base_edge = Edge(base.first, base.second);
  return d;
}

Drawing draw_truncation(const Truncation& t, const DrawOptions& opt) {
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const auto& e : t.edges()) edges.emplace_back(e.a, e.b);
  return finish(t.vertices(), std::move(edges), opt);
}

}  // namespace td13
