#include "td13/validator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "td13/errors.hpp"
#include "td13/parallel.hpp"
#include "td13/psi.hpp"

namespace td13 {

namespace {

double segment_distance(std::complex<double> p, std::complex<double> a, std::complex<double> b) {
  const auto ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string LengthClass::name() const {
  return var ? "a|x[" + var->to_string() + "]-1|" : "a";
}

VertexGap check_distinct_vertices(const std::vector<std::complex<double>>& pts, double tol) {
  VertexGap r;
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return pts[i].real() < pts[j].real() || (pts[i].real() == pts[j].real() && i < j);
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& p = pts[order[i]];
      const auto& q = pts[order[j]];
      if (q.real() - p.real() >= r.gap) break;
      const double d = std::abs(p - q);
      if (d < r.gap) {
        r.gap = d;
        r.a = std::min(order[i], order[j]);
        r.b = std::max(order[i], order[j]);
      }
    }
  }
  r.ok = !(r.gap <= tol);
  return r;
}

VertexEdgeGap check_vertex_edge_separation(const std::vector<std::complex<double>>& pts,
                                           const std::vector<Edge>& edges, double tol) {
  std::vector<VertexEdgeGap> per(pts.size());
  parallel_for(pts.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      auto& best = per[v];
      best.v = v;
      for (const auto& [u, w] : edges) {
        if (u == v || w == v) continue;
        const double d = segment_distance(pts[v], pts[u], pts[w]);
        if (d < best.gap) {
          best.gap = d;
          best.u = u;
          best.w = w;
        }
      }
    }
  }, 16);
  VertexEdgeGap r;
  for (const auto& g : per) {
    if (g.gap < r.gap) r = g;
  }
  r.ok = !(r.gap <= tol);
  return r;
}

std::vector<LengthClass> predicted_lengths(double scale, const TorusPoint& x) {
  std::vector<LengthClass> out;
  out.push_back(LengthClass{scale, scale, std::nullopt, 0});
  for (int i = 0; i < TypeIndex::kCount; ++i) {
    const double len = scale * std::abs(x.value(i) - 1.0);
    out.push_back(LengthClass{len, len, TypeIndex::from_index(i), 0});
  }
  return out;
}

LengthClasses count_length_classes(const std::vector<double>& lengths, double scale,
                                   const TorusPoint& x, double cluster_tol, double match_tol) {
  const auto predicted = predicted_lengths(scale, x);
  std::vector<std::size_t> order(lengths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return lengths[i] < lengths[j]; });

  LengthClasses out;
  out.edge_class.assign(lengths.size(), -1);
  std::map<int, int> class_of_prediction;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && lengths[order[j]] - lengths[order[j - 1]] <= cluster_tol) ++j;
    const double lo = lengths[order[i]];
    const double hi = lengths[order[j - 1]];
    int best = -1;
    double best_err = 0.0;
    for (std::size_t p = 0; p < predicted.size(); ++p) {
      const double err = std::max(std::abs(lo - predicted[p].predicted),
                                  std::abs(hi - predicted[p].predicted));
      if (err <= match_tol && (best < 0 || err < best_err)) {
        best = static_cast<int>(p);
        best_err = err;
      }
    }
    if (best < 0) {
      throw UnexpectedLength("edge length " + fmt(lo) + " matches none of a, a|x_i - 1|", lo);
    }
    auto [it, fresh] = class_of_prediction.emplace(best, static_cast<int>(out.classes.size()));
    if (fresh) {
      LengthClass c = predicted[best];
      c.value = lo;
      out.classes.push_back(c);
    }
    auto& cls = out.classes[it->second];
    cls.value = std::min(cls.value, lo);
    cls.count += j - i;
    for (std::size_t k = i; k < j; ++k) out.edge_class[order[k]] = it->second;
    i = j;
  }
  return out;
}

ValidationReport validate_drawing(const Drawing& d, const Tolerances& tol) {
  ValidationReport rep;
  auto name = [&](std::size_t i) {
    return std::to_string(i) + (i < d.labels.size() ? " (" + d.labels[i].bits() + ")" : "");
  };

  for (std::size_t i = 0; i < d.coords.size() && i < d.labels.size(); ++i) {
    const auto expected = d.scale * psi_of_vertex(d.labels[i], d.conv).evaluate(d.x);
    const double err = std::abs(expected - d.coords[i]);
    if (!(err <= tol.coordinate)) {
      rep.failures.push_back({"coordinate", "vertex " + name(i) + " is " + fmt(err) +
                                                " away from a*psi(label)(x)"});
    }
  }
  if (d.labels.size() != d.coords.size()) {
    rep.failures.push_back({"labels", "label count differs from vertex count"});
  }
  for (const auto& [u, w] : d.edges) {
    if (u >= d.coords.size() || w >= d.coords.size()) {
      rep.failures.push_back({"edge", "edge endpoint out of range"});
      return rep;
    }
    if (u < d.labels.size() && w < d.labels.size() && !is_tstar_edge(d.labels[u], d.labels[w])) {
      rep.failures.push_back(
          {"tstar_edge", "edge (" + name(u) + ", " + name(w) + ") is not an edge of T*"});
    }
  }

  const VertexGap vg = check_distinct_vertices(d.coords, tol.vertex_gap);
  rep.min_vertex_gap = vg.gap;
  if (!vg.ok) {
    rep.failures.push_back({"vertex_gap", "vertices " + name(vg.a) + " and " + name(vg.b) +
                                              " are " + fmt(vg.gap) + " apart"});
  }
  const VertexEdgeGap eg = check_vertex_edge_separation(d.coords, d.edges, tol.vertex_edge_gap);
  rep.min_vertex_edge_gap = eg.gap;
  if (!eg.ok) {
    rep.failures.push_back({"vertex_edge_gap", "vertex " + name(eg.v) + " lies " + fmt(eg.gap) +
                                                   " from edge (" + name(eg.u) + ", " +
                                                   name(eg.w) + ")"});
  }

  std::vector<double> lengths;
  lengths.reserve(d.edges.size());
  for (const auto& [u, w] : d.edges) lengths.push_back(std::abs(d.coords[u] - d.coords[w]));
  try {
    const auto lc = count_length_classes(lengths, d.scale, d.x, tol.length_cluster,
                                         tol.length_match);
    rep.n_length_classes = static_cast<int>(lc.classes.size());
    for (const auto& c : lc.classes) rep.class_values.push_back(c.value);
    std::sort(rep.class_values.begin(), rep.class_values.end());
    if (rep.n_length_classes > 13) {
      rep.failures.push_back(
          {"length_classes", std::to_string(rep.n_length_classes) + " length classes"});
    }
  } catch (const UnexpectedLength& e) {
    rep.failures.push_back({"unexpected_length", e.what()});
  }
  return rep;
}

}  // namespace td13
