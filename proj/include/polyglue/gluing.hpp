#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "polyglue/matrix.hpp"
#include "polyglue/permutation.hpp"

namespace polyglue::gluing {

/// One way of gluing the black 2k-gon to the white 2k-gon: the white trace
/// order (edge numbers as read along the white trace word) plus the spacing
/// sequences attached to the corner words.  All indices 0-based.
struct GluingDiagram {
  int k = 0;
  Permutation white_order;           // w_t = white_order.image(t)
  std::vector<int> black_spacings;   // n_i, one per black corner word
  std::vector<int> white_spacings;   // m_j, one per white corner word

  GluingDiagram() = default;
  GluingDiagram(Permutation w, std::vector<int> ns, std::vector<int> ms)
      : k(w.size()),
        white_order(std::move(w)),
        black_spacings(std::move(ns)),
        white_spacings(std::move(ms)) {
    if (static_cast<int>(black_spacings.size()) != k ||
        static_cast<int>(white_spacings.size()) != k)
      throw std::invalid_argument("GluingDiagram: spacing length mismatch");
    for (int v : black_spacings)
      if (v < 0) throw std::invalid_argument("GluingDiagram: negative spacing");
    for (int v : white_spacings)
      if (v < 0) throw std::invalid_argument("GluingDiagram: negative spacing");
  }

  static GluingDiagram zero_spacings(Permutation w) {
    int k = w.size();
    return GluingDiagram(std::move(w), std::vector<int>(k, 0),
                         std::vector<int>(k, 0));
  }
};

struct Corner {
  bool white;
  int index;  // corner-matrix number, 0-based

  friend bool operator==(const Corner& a, const Corner& b) {
    return a.white == b.white && a.index == b.index;
  }
};

/// Cyclic alternating sequence of corners around one vertex of the glued
/// surface, starting at its smallest black corner.
struct VertexMonodromy {
  std::vector<Corner> corners;

  int valence() const { return static_cast<int>(corners.size()); }
};

/// Vertices of the glued surface.  The corner-following successor map:
/// after black corner a comes white corner a+1 (the next black dotted edge's
/// partner), and after the white corner at white position t comes the black
/// corner numbered by the next white position.
inline std::vector<VertexMonodromy> vertex_cycles(const GluingDiagram& d) {
  int k = d.k;
  // corner ids: 0..k-1 black, k..2k-1 white
  std::vector<int> succ(2 * k);
  for (int a = 0; a < k; ++a) succ[a] = k + (a + 1) % k;
  for (int t = 0; t < k; ++t)
    succ[k + d.white_order.image(t)] = d.white_order.image((t + 1) % k);

  std::vector<bool> seen(2 * k, false);
  std::vector<VertexMonodromy> out;
  for (int s = 0; s < k; ++s) {  // orbits start at their least black corner
    if (seen[s]) continue;
    VertexMonodromy vm;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      vm.corners.push_back(Corner{cur >= k, cur % k});
      cur = succ[cur];
    }
    out.push_back(std::move(vm));
  }
  return out;
}

/// Genus from the Euler characteristic with two faces and k glued edges:
/// chi = V - k + 2 = 2 - 2g.
inline int genus(const GluingDiagram& d) {
  int V = static_cast<int>(vertex_cycles(d).size());
  int chi = V - d.k + 2;
  if ((2 - chi) % 2 != 0) throw std::logic_error("genus: odd Euler characteristic");
  int g = (2 - chi) / 2;
  if (g < 0) throw std::logic_error("genus: negative genus");
  return g;
}

/// Product over vertices of the trace of the alternating corner-matrix
/// product.
inline Rational evaluate_monodromies(const GluingDiagram& d,
                                     const std::vector<RationalMatrix>& B,
                                     const std::vector<RationalMatrix>& C) {
  if (static_cast<int>(B.size()) != d.k || static_cast<int>(C.size()) != d.k)
    throw std::invalid_argument("evaluate_monodromies: need k corner matrices");
  Rational total = 1;
  for (const auto& vm : vertex_cycles(d)) {
    int N = B[0].size();
    RationalMatrix prod = RationalMatrix::identity(N);
    for (const auto& c : vm.corners) prod = prod * (c.white ? C[c.index] : B[c.index]);
    total *= prod.trace();
  }
  return total;
}

/// Vacuum expectation of tr(phi^(1)dag B_1 ... phi^(k)dag B_k) times
/// tr(phi^(w_1) C_{w_1} ... phi^(w_k) C_{w_k}) by raw index summation with
/// the color-matching pairing rule.  Independent oracle for the monodromy
/// route; cost N^{2k}.
inline Rational brute_force_expectation(int k, const Permutation& white_order,
                                        const std::vector<RationalMatrix>& B,
                                        const std::vector<RationalMatrix>& C,
                                        int N) {
  if (k > 5) throw std::invalid_argument("brute_force_expectation: k too large");
  if (white_order.size() != k)
    throw std::invalid_argument("brute_force_expectation: order size mismatch");
  // white position of each color
  std::vector<int> pos_of(k);
  for (int t = 0; t < k; ++t) pos_of[white_order.image(t)] = t;

  std::vector<int> beta(2 * k, 0);
  std::vector<int> gamma(2 * k, 0);
  Rational total;
  auto run = [&](auto&& self, int p) -> void {
    if (p == 2 * k) {
      // pairing forces the white chain indices
      for (int a = 0; a < k; ++a) {
        int t = pos_of[a];
        gamma[2 * t] = beta[2 * a + 1];      // j' = j
        gamma[2 * t + 1] = beta[2 * a];      // i' = i
      }
      Rational v = 1;
      for (int a = 0; a < k && !v.is_zero(); ++a)
        v *= B[a](beta[2 * a + 1], beta[(2 * a + 2) % (2 * k)]);
      for (int t = 0; t < k && !v.is_zero(); ++t)
        v *= C[white_order.image(t)](gamma[2 * t + 1], gamma[(2 * t + 2) % (2 * k)]);
      total += v;
      return;
    }
    for (int i = 0; i < N; ++i) {
      beta[p] = i;
      self(self, p + 1);
    }
  };
  run(run, 0);
  return total;
}

/// Per-vertex spectrum: the cyclic sequence of spacing sums n_i + m_j over
/// the (black, white) corner pairs around the vertex, canonicalized to the
/// lexicographically minimal rotation.  Returned sorted, as a multiset.
inline std::vector<std::vector<int>> vertex_spectra(const GluingDiagram& d) {
  std::vector<std::vector<int>> out;
  for (const auto& vm : vertex_cycles(d)) {
    std::vector<int> spec;
    for (size_t a = 0; a < vm.corners.size(); a += 2) {
      const Corner& b = vm.corners[a];
      const Corner& w = vm.corners[a + 1];
      spec.push_back(d.black_spacings[b.index] + d.white_spacings[w.index]);
    }
    // minimal rotation
    std::vector<int> best = spec;
    for (size_t r = 1; r < spec.size(); ++r) {
      std::rotate(spec.begin(), spec.begin() + 1, spec.end());
      if (spec < best) best = spec;
    }
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Diagram of the reversed-order product: same pairing, with the spacings
/// pulled back one step along every vertex cycle (each corner inherits the
/// spacing of the next corner of its color around the vertex).  Spacing
/// sums are conserved and the vertex spectra are cyclically shifted.
inline GluingDiagram dual_diagram(const GluingDiagram& d) {
  GluingDiagram out = d;
  for (const auto& vm : vertex_cycles(d)) {
    int v = vm.valence() / 2;
    for (int a = 0; a < v; ++a) {
      const Corner& b = vm.corners[2 * a];
      const Corner& bn = vm.corners[2 * ((a + 1) % v)];
      out.black_spacings[b.index] = d.black_spacings[bn.index];
      const Corner& w = vm.corners[2 * a + 1];
      const Corner& wn = vm.corners[(2 * ((a + 1) % v)) + 1];
      out.white_spacings[w.index] = d.white_spacings[wn.index];
    }
  }
  return out;
}

}  // namespace polyglue::gluing
