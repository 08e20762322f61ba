#include "td13/certificate.hpp"

#include <cmath>
#include <complex>

#include "td13/parallel.hpp"
#include "td13/psi.hpp"

namespace td13 {

namespace {

struct Tally {
  std::size_t non_real = 0, integer = 0, diagonal = 0, rnl = 0, checked = 0, numeric_fail = 0,
              witnessed = 0;
  std::vector<CertificateExample> examples;
};

}  // namespace

CertificateReport symbolic_certificate(int depth, const CertificateOptions& opt) {
  const Truncation t(depth, opt.conv);
  const auto& verts = t.vertices();
  const std::size_t nv = verts.size();

  std::vector<Polynomial> psi(nv);
  parallel_for(nv, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) psi[i] = psi_of_vertex(verts[i], opt.conv).to_polynomial();
  });
  std::vector<EdgeGeometry> geo(t.edges().size());
  std::vector<std::size_t> base_idx(geo.size()), tip_idx(geo.size());
  for (std::size_t i = 0; i < geo.size(); ++i) {
    const auto& e = t.edges()[i];
    geo[i] = edge_geometry(verts[e.a], verts[e.b], psi[e.a], psi[e.b], opt.conv);
    base_idx[i] = geo[i].base == verts[e.a] ? e.a : e.b;
    tip_idx[i] = base_idx[i] == e.a ? e.b : e.a;
  }

  // Values of every vertex at every sample.
  std::vector<TorusPoint> xs;
  std::uint64_t seed = opt.seed;
  for (int s = 0; s < opt.samples; ++s, seed = next_seed(seed)) xs.push_back(sample_torus(seed));
  std::vector<std::complex<double>> val(nv * xs.size());
  parallel_for(nv, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      for (std::size_t s = 0; s < xs.size(); ++s) val[i * xs.size() + s] = psi[i].evaluate(xs[s]);
    }
  });
  auto ratio = [&](std::size_t v, std::size_t edge, std::size_t s) {
    const std::size_t S = xs.size();
    const auto base = val[base_idx[edge] * S + s];
    return (val[v * S + s] - base) / (val[tip_idx[edge] * S + s] - base);
  };

  std::vector<Tally> per(nv);
  parallel_for(nv, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      Tally& tl = per[v];
      for (std::size_t i = 0; i < geo.size(); ++i) {
        const IncidenceVerdict verdict = classify(psi[v], geo[i]);
        switch (verdict.kind) {
          case VerdictKind::non_real_ratio: ++tl.non_real; continue;
          case VerdictKind::integer_offset: ++tl.integer; break;
          case VerdictKind::diagonal_offset: ++tl.diagonal; break;
          case VerdictKind::real_non_lattice: ++tl.rnl; break;
        }
        if (verdict.is_offset()) {
          for (std::size_t s = 0; s < xs.size(); ++s) {
            const auto f = ratio(v, i, s);
            ++tl.checked;
            const double k = static_cast<double>(verdict.k);
            if (!(std::abs(f - k) <= opt.tol * (1.0 + std::abs(k)))) ++tl.numeric_fail;
          }
          continue;
        }
        std::size_t inside = 0;
        for (std::size_t s = 0; s < xs.size(); ++s) {
          const auto f = ratio(v, i, s);
          if (std::abs(f.imag()) <= opt.tol * (1.0 + std::abs(f)) && f.real() > 0.0 &&
              f.real() < 1.0) {
            ++inside;
          }
        }
        if (inside > 0) ++tl.witnessed;
        if (tl.examples.size() < opt.max_examples) {
          const auto& edge = t.edges()[i];
          tl.examples.push_back({verts[v], verts[edge.a], verts[edge.b], verdict,
                                 xs.empty() ? 0.0 : double(inside) / double(xs.size())});
        }
      }
    }
  }, 8);

  CertificateReport rep;
  rep.depth = t.depth();
  rep.vertices = nv;
  rep.edges = geo.size();
  rep.pairs = nv * geo.size();
  for (auto& tl : per) {
    rep.non_real += tl.non_real;
    rep.integer_offsets += tl.integer;
    rep.diagonal_offsets += tl.diagonal;
    rep.real_non_lattice += tl.rnl;
    rep.numeric_checked += tl.checked;
    rep.numeric_failures += tl.numeric_fail;
    rep.witnessed_interior += tl.witnessed;
    for (auto& ex : tl.examples) {
      if (rep.examples.size() < opt.max_examples) rep.examples.push_back(std::move(ex));
    }
  }
  return rep;
}

}  // namespace td13
