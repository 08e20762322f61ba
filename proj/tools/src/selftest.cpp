#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cli.hpp"
#include "td13/ascending.hpp"
#include "td13/certificate.hpp"
#include "td13/incidence.hpp"
#include "td13/oracle.hpp"
#include "td13/palindrome.hpp"
#include "td13/psi.hpp"
#include "td13/realness.hpp"

namespace td13::cli {

namespace {

struct Row {
  std::string suite;
  bool pass = true;
  std::string detail;
};

// Vertex polynomials printed next to the vertices of the second-level rhombi.
const std::pair<const char*, const char*> kGoldens[] = {
    {"0", "0"},
    {"01", "1"},
    {"010", "x[0,0,0]"},
    {"0101", "x[0,0,0] + 1"},
    {"01010", "2*x[0,0,0]"},
    {"010101", "2*x[0,0,0] + 1"},
    {"010100", "x[0,0,0]*x[1,0,1] + x[0,0,0]"},
    {"0101001", "x[0,0,0]*x[1,0,1] + 2*x[0,0,0]"},
    {"010100101", "2*x[0,0,0]*x[1,0,1] + 2*x[0,0,0]"},
    {"010100100", "x[0,0,0]*x[1,0,1]*x[1,0,2] + x[0,0,0]*x[1,0,1] + x[0,0,0]"},
    {"0101001001", "x[0,0,0]*x[1,0,1]*x[1,0,2] + 2*x[0,0,0]*x[1,0,1] + x[0,0,0]"},
};

Row encoding_suite(int depth) {
  Row r{"encoding", true, {}};
  std::size_t checked = 0, bad = 0;
  std::unordered_set<NodePath> proper;
  for (const auto& n : enumerate_nodes(std::max(depth, 1))) {
    ++checked;
    if (qr_decode(qr_encode(n)) != n) ++bad;
    for (Corner c : {Corner::v2, Corner::v3}) {
      const VertexLabel v = pi(n, c);
      if (pi_closed_form(n, c) != v) ++bad;
      if (!(host_node_of(v) == HostNode{n, c})) ++bad;
      const NodePath p = proper_node_of(v);
      if (!qr_encode(p).is_proper() || pi(p, Corner::v0) != v) ++bad;
      if (!proper.insert(p).second) ++bad;
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(checked) + " nodes, " + std::to_string(bad) + " failures";
  return r;
}

Row golden_suite(SConvention conv) {
  Row r{"goldens", true, {}};
  std::size_t bad = 0;
  std::string first;
  for (const auto& [label, text] : kGoldens) {
    const auto got = psi_of_vertex(VertexLabel::parse(label), conv).to_polynomial();
    if (got != Polynomial::parse(text)) {
      if (first.empty()) first = std::string(label) + " -> " + got.to_string();
      ++bad;
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(std::size(kGoldens) - bad) + "/" +
             std::to_string(std::size(kGoldens)) + " match" +
             (first.empty() ? "" : "; first mismatch " + first);
  return r;
}

Row injectivity_suite(const Truncation& t, SConvention conv) {
  Row r{"injectivity", true, {}};
  std::set<std::string> seen;
  for (const auto& v : t.vertices()) seen.insert(psi_of_vertex(v, conv).to_polynomial().to_string());
  const std::size_t collisions = t.vertices().size() - seen.size();
  r.pass = collisions == 0;
  r.detail = std::to_string(t.vertices().size()) + " vertices, " + std::to_string(collisions) +
             " collisions";
  return r;
}

Row oracle_suite(const GeometricOracle& oracle, SConvention conv, int seeds, std::uint64_t seed) {
  Row r{"oracle", true, {}};
  const auto& verts = oracle.truncation().vertices();
  std::vector<VertexPoly> psi;
  for (const auto& v : verts) psi.push_back(psi_of_vertex(v, conv));
  double worst = 0.0;
  for (int s = 0; s < seeds; ++s, seed = next_seed(seed)) {
    const TorusPoint x = sample_torus(seed);
    const auto z = oracle.evaluate_indexed(x);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      worst = std::max(worst, std::abs(z[i] - psi[i].evaluate(x)));
    }
  }
  r.pass = worst <= 1e-9;
  std::ostringstream os;
  os << verts.size() << " vertices x " << seeds << " points, max deviation " << worst;
  r.detail = os.str();
  return r;
}

Row ascending_suite(const Truncation& t, SConvention conv) {
  Row r{"ascending", true, {}};
  std::size_t bad = 0;
  std::string first;
  for (const auto& v : t.vertices()) {
    if (!is_ascending(collapse(psi_of_vertex(v, conv)))) {
      if (first.empty()) first = v.bits();
      ++bad;
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(bad) + " of " + std::to_string(t.vertices().size()) + " fail" +
             (first.empty() ? "" : "; first " + first);
  return r;
}

Row edge_length_suite(const Truncation& t, SConvention conv) {
  Row r{"edge_lengths", true, {}};
  std::size_t bad = 0;
  for (const auto& e : t.edges()) {
    try {
      const auto var = symbolic_edge_length(t.vertices()[e.a], t.vertices()[e.b], conv);
      if ((e.role == EdgeRole::diagonal) != var.has_value()) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(t.edges().size()) + " edges, " + std::to_string(bad) + " off shape";
  return r;
}

// Random polynomial in x[0,0,0], x[0,0,1], x[0,0,2] that pairs its
// coefficients around `center` with the given sign, then is perturbed half
// of the time.
Polynomial paired_polynomial(std::mt19937_64& rng, const Monomial& center, int sign) {
  const TypeIndex vars[3] = {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}};
  Polynomial p;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < terms; ++k) {
    Monomial L;
    for (const auto& t : vars) {
      const int top = center.half_steps(t.index()) / 2;
      L = L * Monomial::var(t, static_cast<std::int32_t>(rng() % (top + 1)));
    }
    const auto c = static_cast<std::int64_t>(rng() % 5) - 2;
    const Monomial partner = center / L;
    if (partner == L) {
      if (sign > 0) p.add_term(L, 2 * c);
      continue;
    }
    p.add_term(L, c);
    p.add_term(partner, sign * c);
  }
  if (rng() % 2) {
    Monomial extra;
    for (const auto& t : vars) extra = extra * Monomial::var(t, static_cast<std::int32_t>(rng() % 3));
    p.add_term(extra, 1 + static_cast<std::int64_t>(rng() % 3));
  }
  return p;
}

Row palindrome_suite(std::uint64_t seed, int polys, int samples) {
  Row r{"palindrome", true, {}};
  std::mt19937_64 rng(seed);
  const TypeIndex vars[3] = {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}};
  RealnessOptions ro;
  ro.samples = samples;
  std::size_t disagree = 0, positives = 0;
  for (int i = 0; i < polys; ++i) {
    Monomial M;
    for (const auto& t : vars) M = M * Monomial::var(t, static_cast<std::int32_t>(rng() % 2));
    const Polynomial p = paired_polynomial(rng, M * M, 1);
    const bool exact = is_palindromic_over_monomial(p, M);
    positives += exact;
    ro.seed = rng();
    if (exact != numerically_real_over_monomial(p, M, ro)) ++disagree;

    const TypeIndex i1 = vars[rng() % 3];
    const Monomial Mb = M * Monomial::var(i1);
    const Polynomial q = paired_polynomial(rng, Mb * Mb / Monomial::var(i1), -1);
    const bool exact_b = is_antipalindromic_over_binomial(q, Mb, i1);
    positives += exact_b;
    ro.seed = rng();
    if (exact_b != numerically_real_over_binomial(q, Mb, i1, ro)) ++disagree;
  }
  r.pass = disagree == 0;
  r.detail = std::to_string(2 * polys) + " polynomials (" + std::to_string(positives) +
             " palindromic), " + std::to_string(disagree) + " disagreements";
  return r;
}

Row certificate_suite(int depth, SConvention conv, std::uint64_t seed) {
  Row r{"certificate", true, {}};
  CertificateOptions opt;
  opt.conv = conv;
  opt.seed = seed;
  opt.samples = 20;
  const auto rep = symbolic_certificate(depth, opt);
  r.pass = rep.ok();
  std::ostringstream os;
  os << rep.pairs << " pairs: " << rep.non_real << " non-real, " << rep.integer_offsets
     << " side offsets, " << rep.diagonal_offsets << " diagonal offsets, "
     << rep.real_non_lattice << " real non-lattice, " << rep.numeric_failures
     << " numeric failures";
  if (!rep.examples.empty()) {
    const auto& e = rep.examples.front();
    os << "; e.g. vertex " << e.v.bits() << " vs edge (" << e.u.bits() << ", " << e.w.bits()
       << ")";
  }
  r.detail = os.str();
  return r;
}

}  // namespace

bool selftest(const SelftestOptions& opt, std::ostream& out) {
  const int depth = std::max(opt.depth, 1);
  const GeometricOracle oracle(depth, opt.conv);
  const Truncation& t = oracle.truncation();
  std::vector<Row> rows;
  auto timed = [&](auto&& f) {
    const auto start = std::chrono::steady_clock::now();
    Row r = f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << dt.count();
    r.detail += " [" + os.str() + "s]";
    rows.push_back(std::move(r));
  };
  timed([&] { return encoding_suite(depth); });
  timed([&] { return golden_suite(opt.conv); });
  timed([&] { return injectivity_suite(t, opt.conv); });
  timed([&] { return oracle_suite(oracle, opt.conv, std::max(opt.seeds, 1), opt.seed); });
  timed([&] { return ascending_suite(t, opt.conv); });
  timed([&] { return edge_length_suite(t, opt.conv); });
  timed([&] { return palindrome_suite(opt.seed, 50, 200); });
  timed([&] { return certificate_suite(depth, opt.conv, opt.seed); });

  bool all = true;
  out << "selftest depth " << depth << ", s-convention " << to_string(opt.conv) << "\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(14) << r.suite << (r.pass ? "PASS  " : "FAIL  ") << r.detail
        << "\n";
    all = all && r.pass;
  }
  out << (all ? "all suites pass" : "some suites FAIL") << "\n";
  return all;
}

}  // namespace td13::cli
