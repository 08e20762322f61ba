#include "td13/io.hpp"

#include <cmath>

#include <json.hpp>

#include "td13/errors.hpp"

namespace td13 {

using nlohmann::ordered_json;

namespace {

ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(); }

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

std::pair<int, int> int_pair(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a pair [a, b]");
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

}  // namespace

PlaneGraphInput graph_from_json(std::string_view text) {
  return guarded([&] {
    const auto j = ordered_json::parse(text);
    if (!j.is_object()) throw ParseError("graph JSON must be an object");
    PlaneGraphInput g;
    g.n = j.at("n").get<int>();
    g.outer_order = j.at("outer_order").get<std::vector<int>>();
    for (const auto& e : j.at("edges")) g.edges.push_back(int_pair(e));
    return g;
  });
}

std::string graph_to_json(const PlaneGraphInput& g) {
  ordered_json j;
  j["n"] = g.n;
  j["outer_order"] = g.outer_order;
  j["edges"] = ordered_json::array();
  for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  return j.dump(2);
}

std::string drawing_to_json(const Drawing& d) {
  ordered_json j;
  j["scale"] = d.scale;
  j["seed"] = d.seed;
  j["used_seed"] = d.x.seed;
  j["attempts"] = d.attempts;
  j["s_convention"] = std::string(to_string(d.conv));
  if (d.base_edge) {
    j["base_edge"] = {d.base_edge->first, d.base_edge->second};
  } else {
    j["base_edge"] = nullptr;
  }
  ordered_json x = ordered_json::object();
  for (int i = 0; i < TypeIndex::kCount; ++i) {
    x[TypeIndex::from_index(i).to_string()] = d.x.theta[i];
  }
  j["x"] = std::move(x);
  j["coords"] = ordered_json::array();
  for (const auto& c : d.coords) j["coords"].push_back({c.real(), c.imag()});
  j["labels"] = ordered_json::array();
  for (const auto& l : d.labels) j["labels"].push_back(l.bits());
  j["edges"] = ordered_json::array();
  for (const auto& [a, b] : d.edges) j["edges"].push_back({a, b});
  j["edge_classes"] = d.edge_class;
  j["classes"] = ordered_json::array();
  for (const auto& c : d.classes) {
    ordered_json cj;
    cj["name"] = c.name();
    cj["value"] = c.value;
    cj["predicted"] = c.predicted;
    cj["var"] = c.var ? ordered_json(c.var->to_string()) : ordered_json();
    cj["count"] = c.count;
    j["classes"].push_back(std::move(cj));
  }
  return j.dump(2);
}

namespace {

TypeIndex type_from_string(const std::string& text) {
  for (int i = 0; i < TypeIndex::kCount; ++i) {
    if (TypeIndex::from_index(i).to_string() == text) return TypeIndex::from_index(i);
  }
  throw ParseError("unknown type index '" + text + "'");
}

}  // namespace

Drawing drawing_from_json(std::string_view text) {
  return guarded([&] {
    const auto j = ordered_json::parse(text);
    if (!j.is_object()) throw ParseError("drawing JSON must be an object");
    Drawing d;
    d.scale = j.at("scale").get<double>();
    d.seed = j.value("seed", std::uint64_t{0});
    d.attempts = j.value("attempts", 1);
    try {
      d.conv = parse_s_convention(j.value("s_convention", std::string("anchored")));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (j.contains("base_edge") && !j.at("base_edge").is_null()) {
      const auto [a, b] = int_pair(j.at("base_edge"));
      d.base_edge = Edge(a, b);
    }
    const auto& x = j.at("x");
    for (int i = 0; i < TypeIndex::kCount; ++i) {
      d.x.theta[i] = x.at(TypeIndex::from_index(i).to_string()).get<double>();
    }
    d.x.seed = j.value("used_seed", d.seed);
    for (const auto& c : j.at("coords")) {
      if (!c.is_array() || c.size() != 2) throw ParseError("coordinate must be [re, im]");
      d.coords.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    }
    for (const auto& l : j.at("labels")) {
      try {
        d.labels.push_back(VertexLabel::parse(l.get<std::string>()));
      } catch (const MalformedLabel& e) {
        throw ParseError(e.what());
      }
    }
    for (const auto& e : j.at("edges")) {
      const auto [a, b] = int_pair(e);
      if (a < 0 || b < 0) throw ParseError("negative vertex index in edge");
      d.edges.emplace_back(a, b);
    }
    if (j.contains("edge_classes")) d.edge_class = j.at("edge_classes").get<std::vector<int>>();
    if (j.contains("classes")) {
      for (const auto& cj : j.at("classes")) {
        LengthClass c;
        c.value = cj.at("value").get<double>();
        c.predicted = cj.at("predicted").get<double>();
        c.count = cj.at("count").get<std::size_t>();
        if (!cj.at("var").is_null()) c.var = type_from_string(cj.at("var").get<std::string>());
        d.classes.push_back(c);
      }
    }
    return d;
  });
}

std::string report_to_json(const ValidationReport& r) {
  ordered_json j;
  j["ok"] = r.ok();
  j["min_vertex_gap"] = finite_or_null(r.min_vertex_gap);
  j["min_vertex_edge_gap"] = finite_or_null(r.min_vertex_edge_gap);
  j["n_length_classes"] = r.n_length_classes;
  j["class_values"] = r.class_values;
  j["failures"] = ordered_json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"check", f.check}, {"message", f.message}});
  return j.dump(2);
}

std::string certificate_to_json(const CertificateReport& r) {
  ordered_json j;
  j["ok"] = r.ok();
  j["depth"] = r.depth;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["pairs"] = r.pairs;
  j["non_real_ratio"] = r.non_real;
  j["integer_offset"] = r.integer_offsets;
  j["diagonal_offset"] = r.diagonal_offsets;
  j["real_non_lattice"] = r.real_non_lattice;
  j["numeric_checked"] = r.numeric_checked;
  j["numeric_failures"] = r.numeric_failures;
  j["witnessed_interior"] = r.witnessed_interior;
  j["examples"] = ordered_json::array();
  for (const auto& e : r.examples) {
    j["examples"].push_back({{"v", e.v.bits()},
                             {"u", e.u.bits()},
                             {"w", e.w.bits()},
                             {"verdict", e.verdict.to_string()},
                             {"interior_fraction", e.interior_fraction}});
  }
  return j.dump(2);
}

}  // namespace td13
