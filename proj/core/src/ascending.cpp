#include "td13/ascending.hpp"

#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace td13 {

void TrivariatePoly::add_term(const Exponents& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(e, c);
  if (inserted) return;
  if (__builtin_add_overflow(it->second, c, &it->second)) {
    throw std::overflow_error("coefficient overflow");
  }
  if (it->second == 0) coeffs.erase(it);
}

std::string TrivariatePoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "y" + std::to_string(k);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += '-';
    const auto mag = c < 0 ? -c : c;
    if (mono.empty()) out += std::to_string(mag);
    else out += (mag == 1 ? "" : std::to_string(mag) + "*") + mono;
  }
  return out;
}

TrivariatePoly collapse(const Polynomial& p) {
  TrivariatePoly out;
  for (const auto& [m, c] : p.terms()) {
    TrivariatePoly::Exponents e{};
    for (int i = 0; i < Monomial::kVars; ++i) {
      const auto h = m.half_steps(i);
      if (h % 2 != 0) throw std::invalid_argument("collapse: half-step exponent");
      e[TypeIndex::from_index(i).s] += h / 2;
    }
    out.add_term(e, c);
  }
  return out;
}

TrivariatePoly collapse(const VertexPoly& p) { return collapse(p.to_polynomial()); }

namespace {

using Exp = TrivariatePoly::Exponents;

int degree(const Exp& e) { return e[0] + e[1] + e[2]; }

class AscendingSearch {
 public:
  // by_degree[d] is the (unique) monomial of total degree d, if any.
  AscendingSearch(std::vector<std::optional<std::pair<Exp, std::int64_t>>> by_degree)
      : by_(std::move(by_degree)), top_(static_cast<int>(by_.size()) - 1) {}

  bool run() {
    for (int r = 0; r < 3; ++r) {
      failed_.clear();
      if (block(1, r, 0, Exp{}, false)) return true;
    }
    return false;
  }

 private:
  std::int64_t coeff_at(int d, const Exp& expected, bool& mismatch) const {
    if (d < 0 || d > top_ || !by_[d]) return 0;
    if (by_[d]->first != expected) mismatch = true;
    return by_[d]->second;
  }

  bool empty_between(int lo, int hi) const {
    for (int d = lo; d < hi; ++d) {
      if (d >= 0 && d <= top_ && by_[d]) return false;
    }
    return true;
  }

  // Places block j, whose prefix has degree A and exponent vector E.
  // bprev is b_{j-1,1} > 0 (unused for j = 1).
  bool block(int j, int var, int A, const Exp& E, bool bprev) {
    if (j > 1 && A == top_) return bprev;
    const auto key = std::make_tuple(j == 1, var, A, E, bprev);
    if (failed_.count(key)) return false;

    // The first monomial this block may touch.
    const int start = j == 1 ? 0 : A + 1;
    int next = start;
    while (next <= top_ && !by_[next]) ++next;
    if (next > top_) {
      failed_.insert(key);
      return false;
    }
    std::set<int> candidates{1, next - A, next - A + 1};
    for (int a : candidates) {
      if (a < 1 || A + a > top_) continue;
      if (!empty_between(start, A + a - 1)) continue;
      bool mismatch = false;
      Exp e0 = E;
      e0[var] += a - 1;
      Exp e1 = E;
      e1[var] += a;
      // With a = 1 and j > 1, degree A belongs to the previous block.
      const std::int64_t b0 = (a == 1 && j > 1) ? 0 : coeff_at(A + a - 1, e0, mismatch);
      const std::int64_t b1 = coeff_at(A + a, e1, mismatch);
      if (mismatch) continue;
      if (j > 1 && (a == 1) != (bprev && b0 == 0)) continue;
      const bool last = A + a == top_;
      if (a > 1 && !last && b0 == 0) continue;
      if (block(j + 1, (var + 1) % 3, A + a, e1, b1 > 0)) return true;
    }
    failed_.insert(key);
    return false;
  }

  std::vector<std::optional<std::pair<Exp, std::int64_t>>> by_;
  int top_;
  std::set<std::tuple<bool, int, int, Exp, bool>> failed_;
};

// j with next/prev = y_j y_{j+1}^k, or -1.
int ratio_index(const Exp& prev, const Exp& next) {
  Exp d{};
  for (int i = 0; i < 3; ++i) d[i] = next[i] - prev[i];
  for (int j = 0; j < 3; ++j) {
    if (d[j] == 1 && d[(j + 1) % 3] >= 0 && d[(j + 2) % 3] == 0) return j;
  }
  return -1;
}

}  // namespace

bool is_ascending(const TrivariatePoly& p) {
  std::map<int, Exp> by_degree;
  for (const auto& [e, c] : p.coeffs) {
    if (c < 0) return false;
    for (auto v : e) {
      if (v < 0) return false;
    }
    if (!by_degree.emplace(degree(e), e).second) return false;
  }
  // j of the previous ratio, -1 before the second pair.
  int prev = -1;
  const Exp* last = nullptr;
  for (const auto& [d, e] : by_degree) {
    if (last != nullptr) {
      const int j = ratio_index(*last, e);
      if (j < 0 || (prev >= 0 && j != (prev + 1) % 3)) return false;
      prev = j;
    }
    last = &e;
  }
  return true;
}

bool admits_block_representation(const TrivariatePoly& p) {
  if (p.coeffs.empty()) return true;
  int top = 0;
  for (const auto& [e, c] : p.coeffs) {
    if (c < 0) return false;
    for (auto v : e) {
      if (v < 0) return false;
    }
    top = std::max(top, degree(e));
  }
  if (top == 0) return true;
  std::vector<std::optional<std::pair<Exp, std::int64_t>>> by(top + 1);
  for (const auto& [e, c] : p.coeffs) {
    auto& slot = by[degree(e)];
    if (slot) return false;
    slot = std::make_pair(e, c);
  }
  return AscendingSearch(std::move(by)).run();
}

}  // namespace td13
