#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "td13/certificate.hpp"
#include "td13/embedder.hpp"
#include "td13/errors.hpp"
#include "td13/io.hpp"
#include "td13/psi.hpp"
#include "td13/svg.hpp"
#include "td13/truncation.hpp"
#include "td13/validator.hpp"

namespace td13::cli {

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  double scale = 0.5;
  int depth = 6;
  int retries = 5;
  int seeds = 5;
  Tolerances tol;
  std::string s_convention = "anchored";
  std::string base_edge;
  bool keep_augmented = false;
  std::string out;
  std::string input;
  std::optional<int> tstar_depth;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::pair<int, int> parse_base_edge(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const int a = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string rest = s.substr(comma + 1);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError("--base-edge expects u,v, got '" + s + "'");
  }
}

void check_depth(int depth) {
  if (depth < 0 || depth > kDepthCap) {
    throw InputError("depth must lie in 0.." + std::to_string(kDepthCap));
  }
}

SConvention conv_of(const RunConfig& c) {
  try {
    return parse_s_convention(c.s_convention);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void add_tolerances(CLI::App* app, RunConfig& c) {
  app->add_option("--tol-vertex", c.tol.vertex_gap, "minimum vertex separation");
  app->add_option("--tol-edge", c.tol.vertex_edge_gap, "minimum vertex to edge separation");
  app->add_option("--tol-length", c.tol.length_cluster, "length clustering radius");
  app->add_option("--tol-match", c.tol.length_match, "distance from a predicted length");
  app->add_option("--tol-coord", c.tol.coordinate, "coordinate versus a*psi(label)(x)");
}

int cmd_draw(const RunConfig& c, std::ostream& out) {
  DrawOptions opt;
  opt.seed = c.seed;
  opt.scale = c.scale;
  opt.retries = c.retries;
  opt.tol = c.tol;
  opt.conv = conv_of(c);
  opt.keep_augmented = c.keep_augmented;
  if (!c.base_edge.empty()) opt.base_edge = parse_base_edge(c.base_edge);

  Drawing d;
  if (c.tstar_depth) {
    check_depth(*c.tstar_depth);
    d = draw_truncation(Truncation(*c.tstar_depth, opt.conv), opt);
  } else {
    if (c.input.empty()) throw InputError("draw needs a graph file or --tstar-depth");
    d = draw(graph_from_json(read_file(c.input)), opt);
  }
  const std::string prefix = c.out.empty() ? "drawing" : c.out;
  write_file(prefix + ".json", drawing_to_json(d));
  write_file(prefix + ".svg", render_svg(d));
  out << "vertices " << d.coords.size() << ", edges " << d.edges.size() << ", classes "
      << d.classes.size() << ", attempts " << d.attempts << ", seed " << d.x.seed << "\n";
  out << "wrote " << prefix << ".json and " << prefix << ".svg\n";
  return kOk;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  check_depth(c.depth);
  const SConvention conv = conv_of(c);
  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) throw InputError("cannot write " + c.out);
    os = &file;
  }
  *os << "node\tqr\tproper\ttype\tv0\tv1\tv2\tv3\tpsi_v2\tpsi_v3\n";
  const Truncation t(c.depth, conv);
  for (const auto& n : t.nodes()) {
    const QrCode code = qr_encode(n.path);
    *os << n.path.trits() << '\t' << code.to_string() << '\t' << (code.is_proper() ? "yes" : "no")
        << '\t' << n.type.to_string();
    for (const auto& v : n.corners) *os << '\t' << v.bits();
    *os << '\t' << psi_of_vertex(n.corners[2], conv).to_polynomial().to_string() << '\t'
        << psi_of_vertex(n.corners[3], conv).to_polynomial().to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const Drawing d = drawing_from_json(read_file(c.input));
  const ValidationReport rep = validate_drawing(d, c.tol);
  out << report_to_json(rep) << "\n";
  return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  check_depth(c.depth);
  CertificateOptions opt;
  opt.conv = conv_of(c);
  opt.seed = c.seed;
  const CertificateReport rep = symbolic_certificate(c.depth, opt);
  out << certificate_to_json(rep) << "\n";
  return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  check_depth(c.depth);
  SelftestOptions opt;
  opt.depth = c.depth;
  opt.seeds = c.seeds;
  opt.seed = c.seed;
  opt.conv = conv_of(c);
  return selftest(opt, out) ? kOk : kSelftestFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Outerplanar drawings with at most 13 edge lengths", "td13"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto* draw_cmd = app.add_subcommand("draw", "draw a graph (or a T* truncation)");
  draw_cmd->add_option("graph", c.input, "graph JSON file");
  draw_cmd->add_option("--tstar-depth", c.tstar_depth, "draw the T* truncation of this depth");
  draw_cmd->add_option("--seed", c.seed, "torus sampling seed");
  draw_cmd->add_option("--scale", c.scale, "scale a in (0, 1]");
  draw_cmd->add_option("--retries", c.retries, "attempt budget");
  draw_cmd->add_option("--base-edge", c.base_edge, "outer edge u,v mapped to 0,01");
  draw_cmd->add_flag("--keep-augmented", c.keep_augmented, "draw the triangulation edges too");
  draw_cmd->add_option("--out", c.out, "output prefix (writes .json and .svg)");
  draw_cmd->add_option("--s-convention", c.s_convention, "anchored, figure or literal");
  add_tolerances(draw_cmd, c);

  auto* enum_cmd = app.add_subcommand("enumerate", "tabulate H* nodes up to a depth");
  enum_cmd->add_option("--depth", c.depth, "node path length bound");
  enum_cmd->add_option("--out", c.out, "output file (default stdout)");
  enum_cmd->add_option("--s-convention", c.s_convention, "anchored, figure or literal");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a drawing JSON file");
  verify_cmd->add_option("drawing", c.input, "drawing JSON file")->required();
  add_tolerances(verify_cmd, c);

  auto* cert_cmd = app.add_subcommand("certify", "classify every vertex/edge pair");
  cert_cmd->add_option("--depth", c.depth, "node path length bound");
  cert_cmd->add_option("--seed", c.seed, "seed for the numeric cross-check");
  cert_cmd->add_option("--s-convention", c.s_convention, "anchored, figure or literal");

  auto* self_cmd = app.add_subcommand("selftest", "run the property suites");
  self_cmd->add_option("--depth", c.depth, "node path length bound");
  self_cmd->add_option("--seeds", c.seeds, "torus samples per numeric suite");
  self_cmd->add_option("--seed", c.seed, "base seed");
  self_cmd->add_option("--s-convention", c.s_convention, "anchored, figure or literal");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*draw_cmd) return cmd_draw(c, out);
    if (*enum_cmd) return cmd_enumerate(c, out);
    if (*verify_cmd) return cmd_verify(c, out);
    if (*cert_cmd) return cmd_certify(c, out);
    if (*self_cmd) return cmd_selftest(c, out);
  } catch (const RetryBudgetExhausted& e) {
    err << "error: " << e.what() << " (minimum separation " << e.min_separation() << ")\n";
    return kRetryBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kInputError;
}

}  // namespace td13::cli
