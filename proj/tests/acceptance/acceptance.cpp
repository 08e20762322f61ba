// Acceptance suite. One line per criterion; exit status 0 iff every selected
// criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "td13/ascending.hpp"
#include "td13/certificate.hpp"
#include "td13/embedder.hpp"
#include "td13/errors.hpp"
#include "td13/oracle.hpp"
#include "td13/palindrome.hpp"
#include "td13/psi.hpp"
#include "td13/realness.hpp"
#include "td13/validator.hpp"
#include "test_support.hpp"

namespace {

using namespace td13;

constexpr SConvention kConv = SConvention::anchored;

// Pinned tolerances and limits.
constexpr double kLengthTol = 1e-9;
constexpr double kOracleTol = 1e-9;
constexpr double kGapTol = 1e-6;
constexpr double kRealTol = 1e-9;
constexpr int kDrawSeeds = 20;
constexpr int kFirstTryNeeded = 19;
constexpr int kRetryBudget = 5;
constexpr int kOraclePoints = 25;
constexpr int kPalindromePolys = 200;
constexpr int kRealSamples = 1000;
constexpr int kCertificateSamples = 100;
constexpr int kRandomGraphs = 100;
constexpr int kMaxGraphSize = 200;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 = no runtime limit
  std::function<Outcome()> run;
};

std::string str(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<VertexLabel> labels_up_to(std::size_t len) {
  std::vector<VertexLabel> out{VertexLabel::root_base(), VertexLabel::root_tip()};
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].size() >= len) continue;
    out.push_back(out[i].appended('0'));
    if (out[i].size() >= 3) out.push_back(out[i].appended('1'));
  }
  return out;
}

Outcome golden_vectors() {
  const auto rows = testing::load_table("goldens.tsv");
  std::size_t ok = 0;
  std::string first;
  for (const auto& [label, text] : rows) {
    const auto got = psi_of_vertex(VertexLabel::parse(label), kConv).to_polynomial();
    if (got == Polynomial::parse(text)) {
      ++ok;
    } else if (first.empty()) {
      first = "; " + label + " gave " + got.to_string();
    }
  }
  return {ok == rows.size() && rows.size() >= 9,
          std::to_string(ok) + "/" + std::to_string(rows.size()) + " labels match" + first};
}

Outcome thirteen_lengths() {
  const Truncation t(8, kConv);
  DrawOptions opt;
  opt.seed = 1;
  opt.validate = false;  // exact incidences exist at this depth; lengths only
  const Drawing d = draw_truncation(t, opt);
  const auto predicted = predicted_lengths(d.scale, d.x);
  double worst = 0.0;
  for (const auto& [u, w] : d.edges) {
    const double l = std::abs(d.coords[u] - d.coords[w]);
    double best = INFINITY;
    for (const auto& p : predicted) best = std::min(best, std::abs(l - p.predicted));
    worst = std::max(worst, best);
  }
  const bool pass = d.edges.size() >= 3000 && d.classes.size() <= 13 && worst <= kLengthTol;
  return {pass, std::to_string(d.edges.size()) + " edges, " + std::to_string(d.classes.size()) +
                    " classes, worst distance to a prediction " + str(worst)};
}

Outcome oracle_equivalence() {
  const GeometricOracle oracle(8, kConv);
  const auto& verts = oracle.truncation().vertices();
  std::vector<VertexPoly> psi(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) psi[i] = psi_of_vertex(verts[i], kConv);
  double worst = 0.0;
  std::uint64_t seed = 2024;
  for (int k = 0; k < kOraclePoints; ++k, seed = next_seed(seed)) {
    const TorusPoint x = sample_torus(seed);
    const auto z = oracle.evaluate_indexed(x);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      worst = std::max(worst, std::abs(z[i] - psi[i].evaluate(x)));
    }
  }
  return {worst <= kOracleTol, std::to_string(verts.size()) + " vertices x " +
                                   std::to_string(kOraclePoints) + " points, max deviation " +
                                   str(worst)};
}

Outcome drawing_validity() {
  const Truncation t(6, kConv);
  int first_try = 0, within = 0;
  std::string failed;
  for (int s = 1; s <= kDrawSeeds; ++s) {
    DrawOptions opt;
    opt.seed = static_cast<std::uint64_t>(s);
    opt.retries = kRetryBudget;
    opt.tol.vertex_gap = kGapTol;
    opt.tol.vertex_edge_gap = kGapTol;
    try {
      const Drawing d = draw_truncation(t, opt);
      ++within;
      if (d.attempts == 1) ++first_try;
    } catch (const RetryBudgetExhausted&) {
      failed += " " + std::to_string(s);
    }
  }
  return {within == kDrawSeeds && first_try >= kFirstTryNeeded,
          std::to_string(first_try) + "/" + std::to_string(kDrawSeeds) + " first try, " +
              std::to_string(within) + "/" + std::to_string(kDrawSeeds) + " within budget" +
              (failed.empty() ? "" : "; exhausted seeds" + failed)};
}

Outcome injectivity() {
  const auto labels = labels_up_to(8);
  std::vector<Polynomial> psi;
  for (const auto& v : labels) psi.push_back(psi_of_vertex(v, kConv).to_polynomial());
  std::size_t equal = 0, pairs = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = i + 1; j < psi.size(); ++j, ++pairs) equal += psi[i] == psi[j];
  }
  return {equal == 0, std::to_string(labels.size()) + " labels, " + std::to_string(pairs) +
                          " pairs, " + std::to_string(equal) + " equal"};
}

Outcome ascending() {
  const auto labels = labels_up_to(8);
  std::size_t bad = 0;
  std::string first;
  for (const auto& v : labels) {
    if (!is_ascending(collapse(psi_of_vertex(v, kConv)))) {
      if (first.empty()) first = "; first " + v.bits();
      ++bad;
    }
  }
  return {bad == 0, std::to_string(labels.size()) + " labels, " + std::to_string(bad) +
                        " not ascending" + first};
}

// Polynomial in three variables, degree <= 6, built from coefficient pairs
// around `square` (so the predicate holds) and sometimes one stray term.
Polynomial paired(std::mt19937_64& rng, const Monomial& square, int sign, bool stray) {
  static const TypeIndex vars[3] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}};
  Polynomial p;
  const int pairs = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < pairs; ++k) {
    Monomial L;
    for (const auto& t : vars) {
      const int top = square.half_steps(t.index()) / 2;
      L = L * Monomial::var(t, static_cast<std::int32_t>(rng() % (top + 1)));
    }
    const auto c = static_cast<std::int64_t>(rng() % 7) - 3;
    const Monomial partner = square / L;
    if (partner == L) {
      if (sign > 0) p.add_term(L, c);
      continue;
    }
    p.add_term(L, c);
    p.add_term(partner, sign * c);
  }
  if (stray) {
    Monomial e;
    int budget = 6;
    for (const auto& t : vars) {
      const int k = static_cast<int>(rng() % (std::min(budget, 3) + 1));
      budget -= k;
      e = e * Monomial::var(t, k);
    }
    p.add_term(e, 1 + static_cast<std::int64_t>(rng() % 3));
  }
  return p;
}

Outcome palindromicity() {
  static const TypeIndex vars[3] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}};
  std::mt19937_64 rng(77);
  RealnessOptions ro;
  ro.samples = kRealSamples;
  ro.tol = kRealTol;
  std::size_t disagree = 0, positives[2] = {0, 0}, degree_ok = 0;
  for (int i = 0; i < kPalindromePolys; ++i) {
    // Center M of total degree <= 3, so M^2 has degree <= 6.
    Monomial M;
    int budget = 3;
    for (const auto& t : vars) {
      const int k = static_cast<int>(rng() % (budget + 1));
      budget -= k;
      M = M * Monomial::var(t, k);
    }
    const Polynomial p = paired(rng, M * M, 1, rng() % 2);
    const bool exact = is_palindromic_over_monomial(p, M);
    positives[0] += exact;
    ro.seed = rng();
    disagree += exact != numerically_real_over_monomial(p, M, ro);

    const TypeIndex i1 = vars[rng() % 3];
    const Monomial Mb = M * Monomial::half(i1);
    const Polynomial q = paired(rng, Mb * Mb / Monomial::var(i1), -1, rng() % 2);
    const bool exact_b = is_antipalindromic_over_binomial(q, Mb, i1);
    positives[1] += exact_b;
    ro.seed = rng();
    disagree += exact_b != numerically_real_over_binomial(q, Mb, i1, ro);

    bool small = true;
    for (const auto* poly : {&p, &q}) {
      for (const auto& [m, c] : poly->terms()) small = small && m.is_ordinary() && m.degree() <= 6;
    }
    degree_ok += small;
  }
  const bool pass = disagree == 0 && degree_ok == static_cast<std::size_t>(kPalindromePolys) &&
                    positives[0] > 0 && positives[0] < kPalindromePolys && positives[1] > 0 &&
                    positives[1] < kPalindromePolys;
  return {pass, std::to_string(kPalindromePolys) + " polynomials per predicate (" +
                    std::to_string(positives[0]) + " and " + std::to_string(positives[1]) +
                    " palindromic) x " + std::to_string(kRealSamples) + " samples, " +
                    std::to_string(disagree) + " disagreements"};
}

Outcome certificate() {
  CertificateOptions opt;
  opt.conv = kConv;
  opt.samples = kCertificateSamples;
  opt.tol = kRealTol;
  const auto rep = symbolic_certificate(5, opt);
  std::ostringstream os;
  os << rep.pairs << " pairs, " << rep.non_real << " non-real, "
     << rep.integer_offsets + rep.diagonal_offsets << " offsets, " << rep.real_non_lattice
     << " real non-lattice (" << rep.witnessed_interior << " seen inside their edge), "
     << rep.numeric_failures << "/" << rep.numeric_checked << " numeric failures";
  if (!rep.examples.empty()) {
    const auto& e = rep.examples.front();
    os << "; e.g. " << e.v.bits() << " on (" << e.u.bits() << ", " << e.w.bits() << ")";
  }
  return {rep.ok(), os.str()};
}

Outcome bijections() {
  std::size_t nodes = 0, bad = 0;
  std::unordered_set<NodePath> proper;
  for (const auto& n : enumerate_nodes(10)) {
    ++nodes;
    bad += qr_decode(qr_encode(n)) != n;
    const auto corners = pi_corners(n);
    for (Corner c : {Corner::v2, Corner::v3}) {
      const VertexLabel& v = corners[static_cast<int>(c)];
      bad += pi(n, c) != v;
      bad += pi_closed_form(n, c) != v;
      bad += !(host_node_of(v) == HostNode{n, c});
      const NodePath p = proper_node_of(v);
      bad += !qr_encode(p).is_proper();
      bad += pi(p, Corner::v0) != v;
      bad += !proper.insert(p).second;
    }
  }
  return {bad == 0, std::to_string(nodes) + " nodes, " + std::to_string(proper.size()) +
                        " proper encodings, " + std::to_string(bad) + " failures"};
}

Outcome end_to_end() {
  std::mt19937_64 rng(7);
  int clean = 0;
  std::string failed;
  for (int i = 0; i < kRandomGraphs; ++i) {
    const int n = 3 + static_cast<int>(rng() % (kMaxGraphSize - 2));
    const auto g = testing::random_maximal_outerplanar(n, rng);
    DrawOptions opt;
    opt.seed = static_cast<std::uint64_t>(i + 1);
    try {
      const Drawing d = draw(g, opt);
      if (validate_drawing(d, opt.tol).ok()) {
        ++clean;
        continue;
      }
      failed += " #" + std::to_string(i) + "(verify)";
    } catch (const RetryBudgetExhausted& e) {
      failed += " #" + std::to_string(i) + "(n=" + std::to_string(n) + ", " + e.failing_check() + ")";
    }
  }
  return {clean == kRandomGraphs, std::to_string(clean) + "/" + std::to_string(kRandomGraphs) +
                                      " graphs drawn and verified" +
                                      (failed.empty() ? "" : "; failed" + failed)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "run only these criteria (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "golden vectors", 1.0, golden_vectors},
      {2, "at most 13 edge lengths at depth 8", 30.0, thirteen_lengths},
      {3, "oracle equivalence at depth 8", 0.0, oracle_equivalence},
      {4, "drawing validity at depth 6", 0.0, drawing_validity},
      {5, "symbolic injectivity, labels <= 8", 60.0, injectivity},
      {6, "ascending property, labels <= 8", 0.0, ascending},
      {7, "palindromicity oracles", 0.0, palindromicity},
      {8, "incidence certificate at depth 5", 0.0, certificate},
      {9, "encoding bijections to depth 10", 30.0, bijections},
      {10, "end-to-end random outerplanar graphs", 60.0, end_to_end},
  };

  bool ok = true;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += "; over the " + str(c.limit_s) + "s limit";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  "
              << c.title << ": " << o.detail << " [" << std::fixed << std::setprecision(2) << secs
              << "s]" << std::defaultfloat << std::endl;
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
