#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "polyglue/fock.hpp"
#include "polyglue/permutation.hpp"

namespace polyglue::fock {

/// Expansion of a normal-ordered product :U::V: into normal-ordered terms,
/// split by the number k of contractions.  enumerated[k] counts the raw
/// (sample, sample, pairing) triples before canonical merging.
struct WickExpansion {
  std::vector<TraceWordOp> per_k;
  std::vector<long long> enumerated;

  TraceWordOp total() const {
    TraceWordOp t;
    for (const auto& q : per_k) {
      if (t.N == 0) {
        t.N = q.N;
        t.constants = q.constants;
      }
      for (const auto& [wp, c] : q.terms) t.add_term(wp, c);
    }
    return t;
  }
};

namespace detail {

struct FlatProduct {
  std::vector<Letter> letters;
  std::vector<int> succ, pred;
  std::vector<int> annih_slots, create_slots;
};

inline FlatProduct flatten(const WordProduct& left, const WordProduct& right) {
  FlatProduct f;
  auto add_words = [&](const WordProduct& wp, bool collect_annih) {
    for (const auto& w : wp) {
      int base = static_cast<int>(f.letters.size());
      int L = static_cast<int>(w.size());
      if (L == 1 && w[0].kind != LetterKind::Const)
        throw std::logic_error("wick: single-operator trace words unsupported");
      for (int i = 0; i < L; ++i) {
        f.letters.push_back(w[i]);
        f.succ.push_back(base + (i + 1) % L);
        f.pred.push_back(base + (i - 1 + L) % L);
        if (collect_annih && w[i].kind == LetterKind::Annih)
          f.annih_slots.push_back(base + i);
        if (!collect_annih && w[i].kind == LetterKind::Create)
          f.create_slots.push_back(base + i);
      }
    }
  };
  add_words(left, true);
  add_words(right, false);
  return f;
}

/// Contracts the chosen pairs and decomposes what remains into cyclic words.
inline WordProduct splice(const FlatProduct& f, const std::vector<int>& ann,
                          const std::vector<int>& cre) {
  std::vector<int> succ = f.succ, pred = f.pred;
  std::vector<char> removed(f.letters.size(), 0);
  for (size_t t = 0; t < ann.size(); ++t) {
    int a = ann[t], c = cre[t];
    int x = pred[a], y = succ[a];
    int u = pred[c], v = succ[c];
    if (x == c || v == a || u == a || y == c)
      throw std::logic_error("wick: degenerate adjacent contraction");
    succ[x] = v;
    pred[v] = x;
    succ[u] = y;
    pred[y] = u;
    removed[a] = removed[c] = 1;
  }
  WordProduct out;
  std::vector<char> seen(f.letters.size(), 0);
  for (size_t s = 0; s < f.letters.size(); ++s) {
    if (removed[s] || seen[s]) continue;
    TraceWord w;
    int cur = static_cast<int>(s);
    while (!seen[cur]) {
      seen[cur] = 1;
      w.push_back(f.letters[cur]);
      cur = succ[cur];
    }
    out.push_back(std::move(w));
  }
  return out;
}

inline void subsets(int n, int k, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& fn,
                    int start = 0) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    subsets(n, k, cur, fn, i + 1);
    cur.pop_back();
  }
}

}  // namespace detail

/// Wick expansion of the product of two normal-ordered operators: sum over
/// the number of couplings k, over samples of k annihilators in the left
/// factor and k creators in the right factor, and over the k! pairings.
/// Each pairing splices the trace words along the contracted pairs.
inline WickExpansion wick_expand_detailed(const TraceWordOp& left,
                                          const TraceWordOp& right) {
  if (!left.normal_ordered || !right.normal_ordered)
    throw std::invalid_argument("wick_expand: inputs must be normal ordered");

  WickExpansion result;
  TraceWordOp base;
  base.N = std::max(left.N, right.N);
  if (left.N > 0 && right.N > 0 && left.N != right.N)
    throw std::invalid_argument("wick_expand: dimension mismatch");
  if (left.constants.empty() != right.constants.empty())
    throw std::invalid_argument("wick_expand: cannot mix symbolic and concrete");

  base.constants = left.constants;
  // remap right-hand constant ids into the merged table
  std::vector<int> remap(right.constants.size());
  {
    TraceWordOp tmp = base;
    for (size_t i = 0; i < right.constants.size(); ++i)
      remap[i] = tmp.intern_constant(right.constants[i]);
    base.constants = tmp.constants;
  }
  bool symbolic = left.constants.empty() && right.constants.empty();

  for (const auto& [wpL, cL] : left.terms)
    for (const auto& [wpR0, cR] : right.terms) {
      WordProduct wpR = wpR0;
      if (!symbolic)
        for (auto& w : wpR)
          for (auto& l : w)
            if (l.kind == LetterKind::Const) l.matrix_id = remap[l.matrix_id];

      auto flat = detail::flatten(wpL, wpR);
      int maxk = static_cast<int>(
          std::min(flat.annih_slots.size(), flat.create_slots.size()));
      if (static_cast<int>(result.per_k.size()) < maxk + 1) {
        result.per_k.resize(maxk + 1);
        result.enumerated.resize(maxk + 1, 0);
        for (auto& q : result.per_k)
          if (q.N == 0) {
            q.N = base.N;
            q.constants = base.constants;
          }
      }
      Rational coeff = cL * cR;
      for (int k = 0; k <= maxk; ++k) {
        std::vector<int> scur;
        detail::subsets(
            static_cast<int>(flat.annih_slots.size()), k, scur,
            [&](const std::vector<int>& S) {
              std::vector<int> tcur;
              detail::subsets(
                  static_cast<int>(flat.create_slots.size()), k, tcur,
                  [&](const std::vector<int>& T) {
                    std::vector<int> ann(k), cre(k);
                    for (int i = 0; i < k; ++i) ann[i] = flat.annih_slots[S[i]];
                    for (const auto& sigma : all_permutations(k)) {
                      for (int i = 0; i < k; ++i)
                        cre[i] = flat.create_slots[T[sigma.image(i)]];
                      result.per_k[k].add_term(detail::splice(flat, ann, cre),
                                               coeff);
                      ++result.enumerated[k];
                    }
                  });
            });
      }
    }
  if (result.per_k.empty()) {
    result.per_k.resize(1);
    result.per_k[0].N = base.N;
    result.per_k[0].constants = base.constants;
    result.enumerated.resize(1, 0);
  }
  return result;
}

inline TraceWordOp wick_expand(const TraceWordOp& left, const TraceWordOp& right) {
  return wick_expand_detailed(left, right).total();
}

/// wick_expand(H_n, H_m) - wick_expand(H_m, H_n) with a single symbolic
/// constant letter.  The canonical-form sum must collapse to zero.
inline TraceWordOp symbolic_commutator(int n, int m) {
  TraceWordOp hn = build_H_symbolic(n);
  TraceWordOp hm = build_H_symbolic(m);
  return wick_expand(hn, hm) - wick_expand(hm, hn);
}

}  // namespace polyglue::fock
