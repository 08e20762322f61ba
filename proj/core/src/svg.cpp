#include "td13/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>

namespace td13 {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
                          "#393b79", "#637939", "#8c6d31", "#843c39"};

}  // namespace

std::string render_svg(const Drawing& d) {
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (!d.coords.empty()) {
    minx = maxx = d.coords[0].real();
    miny = maxy = d.coords[0].imag();
    for (const auto& c : d.coords) {
      minx = std::min(minx, c.real());
      maxx = std::max(maxx, c.real());
      miny = std::min(miny, c.imag());
      maxy = std::max(maxy, c.imag());
    }
  }
  double w = maxx - minx, h = maxy - miny;
  const double span = std::max({w, h, 1e-9});
  const double margin = 0.05 * span;
  const double vx = minx - margin, vy = -maxy - margin;
  w += 2 * margin;
  h += 2 * margin;
  const double stroke = span / 400.0;
  const double dot = span / 150.0;

  // Legend rows, shortest length first.
  std::vector<std::size_t> order(d.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.classes[a].value < d.classes[b].value;
  });
  const double font = span / 40.0;
  const double legend_h = font * 1.4 * static_cast<double>(order.size() + 1);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(vx) + " " + num(vy) + " " +
         num(w) + " " + num(h + legend_h) + "\">\n";
  out += "<g fill=\"none\" stroke-width=\"" + num(stroke) + "\" stroke-linecap=\"round\">\n";
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto& a = d.coords[d.edges[i].first];
    const auto& b = d.coords[d.edges[i].second];
    const int cls = i < d.edge_class.size() ? d.edge_class[i] : -1;
    const char* colour = cls >= 0 ? kPalette[cls % 14] : "#000000";
    out += "<line x1=\"" + num(a.real()) + "\" y1=\"" + num(-a.imag()) + "\" x2=\"" +
           num(b.real()) + "\" y2=\"" + num(-b.imag()) + "\" stroke=\"" + colour + "\"/>\n";
  }
  out += "</g>\n<g fill=\"#000000\">\n";
  for (const auto& c : d.coords) {
    out += "<circle cx=\"" + num(c.real()) + "\" cy=\"" + num(-c.imag()) + "\" r=\"" + num(dot) +
           "\"/>\n";
  }
  out += "</g>\n<g font-family=\"monospace\" font-size=\"" + num(font) + "\">\n";
  double y = vy + h + font * 1.2;
  for (std::size_t k : order) {
    const auto& c = d.classes[k];
    out += "<text x=\"" + num(vx + margin) + "\" y=\"" + num(y) + "\" fill=\"" +
           kPalette[k % 14] + "\">" + c.name() + " = " + num(c.value) + " (" +
           std::to_string(c.count) + ")</text>\n";
    y += font * 1.4;
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace td13
