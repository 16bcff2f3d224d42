#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyglue/matrix.hpp"
#include "polyglue/partition.hpp"
#include "polyglue/polynomial.hpp"

namespace polyglue::fock {

/// Vector in the bosonic Fock space over N^2 oscillators, realized as a
/// polynomial in the commuting variables x_{ij}; the vacuum is the constant 1.
/// Creation phi_{ij} multiplies by x_{ij}; annihilation phi^dag_{ij} acts as
/// d/dx_{ji} (the transpose pairing).
struct FockState {
  int N = 0;
  Polynomial poly;

  FockState() = default;
  FockState(int n, Polynomial p) : N(n), poly(std::move(p)) {}

  static FockState vacuum(int n) { return FockState(n, Polynomial(Rational(1))); }

  static int var(int N, int i, int j) { return i * N + j; }

  bool is_zero() const { return poly.is_zero(); }
  std::optional<int> homogeneous_degree() const { return poly.homogeneous_degree(); }

  FockState& operator+=(const FockState& o) {
    if (N != o.N) throw std::invalid_argument("FockState: dimension mismatch");
    poly += o.poly;
    return *this;
  }
  FockState& operator-=(const FockState& o) {
    if (N != o.N) throw std::invalid_argument("FockState: dimension mismatch");
    poly -= o.poly;
    return *this;
  }
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  FockState& scale(const Rational& c) {
    poly.scale(c);
    return *this;
  }
  friend bool operator==(const FockState& a, const FockState& b) {
    return a.N == b.N && a.poly == b.poly;
  }
};

enum class LetterKind : std::uint8_t { Annih = 0, Create = 1, Const = 2 };

struct Letter {
  LetterKind kind;
  int matrix_id = -1;  // meaningful for Const only

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.kind == b.kind && a.matrix_id == b.matrix_id;
  }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.matrix_id < b.matrix_id;
  }
};

inline Letter annih() { return {LetterKind::Annih, -1}; }
inline Letter create() { return {LetterKind::Create, -1}; }
inline Letter constant(int id) { return {LetterKind::Const, id}; }

/// Cyclic sequence of letters under a trace sign.  Stored in the
/// lexicographically minimal rotation so formal equality is decidable.
using TraceWord = std::vector<Letter>;

inline TraceWord canonical_rotation(TraceWord w) {
  if (w.size() <= 1) return w;
  size_t n = w.size(), best = 0;
  for (size_t s = 1; s < n; ++s) {
    for (size_t i = 0; i < n; ++i) {
      const Letter &a = w[(s + i) % n], &b = w[(best + i) % n];
      if (a < b) {
        best = s;
        break;
      }
      if (b < a) break;
    }
  }
  std::rotate(w.begin(), w.begin() + best, w.end());
  return w;
}

/// Product of trace words (sorted for canonical form).
using WordProduct = std::vector<TraceWord>;

inline WordProduct canonical_product(WordProduct wp) {
  for (auto& w : wp) w = canonical_rotation(std::move(w));
  std::sort(wp.begin(), wp.end());
  return wp;
}

/// Formal normal-ordered sum of products of cyclic trace words with exact
/// rational coefficients.  Const letters index into the constants table;
/// an op with an empty table is symbolic (it cannot be applied, only
/// manipulated formally).
struct TraceWordOp {
  int N = 0;  // 0 for symbolic ops
  std::vector<RationalMatrix> constants;
  std::map<WordProduct, Rational> terms;
  bool normal_ordered = true;

  void add_term(WordProduct wp, const Rational& c) {
    if (c.is_zero()) return;
    auto key = canonical_product(std::move(wp));
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(std::move(key), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool is_empty() const { return terms.empty(); }

  /// Index of an equal matrix in the table, appending when absent.
  int intern_constant(const RationalMatrix& m) {
    for (size_t i = 0; i < constants.size(); ++i)
      if (constants[i] == m) return static_cast<int>(i);
    constants.push_back(m);
    return static_cast<int>(constants.size()) - 1;
  }

  friend TraceWordOp operator-(const TraceWordOp& a, const TraceWordOp& b);

  std::string str(const std::vector<std::string>& names = {}) const {
    auto letter_str = [&](const Letter& l) -> std::string {
      switch (l.kind) {
        case LetterKind::Annih:
          return "an";
        case LetterKind::Create:
          return "cr";
        default:
          if (l.matrix_id < static_cast<int>(names.size()))
            return names[l.matrix_id];
          return "K" + std::to_string(l.matrix_id);
      }
    };
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [wp, c] : terms) {
      if (!s.empty()) s += " + ";
      s += c.str() + " * ";
      for (const auto& w : wp) {
        s += "tr(";
        for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + letter_str(w[i]);
        s += ")";
      }
    }
    return s;
  }
};

inline TraceWordOp operator-(const TraceWordOp& a, const TraceWordOp& b) {
  // requires compatible constant tables (same ids mean the same matrices)
  TraceWordOp r = a;
  for (const auto& [wp, c] : b.terms) r.add_term(wp, -c);
  return r;
}

// ---------------------------------------------------------------------------
// Constructors for the operator families
// ---------------------------------------------------------------------------

/// H_n(A): single cyclic word (annih create A)^n, normal ordered.
inline TraceWordOp build_H(int n, const RationalMatrix& A) {
  if (n < 1) throw std::invalid_argument("build_H: n must be positive");
  TraceWordOp op;
  op.N = A.size();
  int id = op.intern_constant(A);
  TraceWord w;
  for (int i = 0; i < n; ++i) {
    w.push_back(annih());
    w.push_back(create());
    w.push_back(constant(id));
  }
  op.add_term({w}, Rational(1));
  return op;
}

/// H_mu(A): jointly normal-ordered product of one trace word per part.
inline TraceWordOp build_H_mu(const Partition& mu, const RationalMatrix& A) {
  TraceWordOp op;
  op.N = A.size();
  int id = op.intern_constant(A);
  WordProduct wp;
  for (int part : mu.parts()) {
    TraceWord w;
    for (int i = 0; i < part; ++i) {
      w.push_back(annih());
      w.push_back(create());
      w.push_back(constant(id));
    }
    wp.push_back(std::move(w));
  }
  op.add_term(std::move(wp), Rational(1));
  return op;
}

/// h_n(a): cyclic word (a, (annih create)^n), normal ordered.
inline TraceWordOp build_h(int n, const RationalMatrix& a) {
  if (n < 1) throw std::invalid_argument("build_h: n must be positive");
  TraceWordOp op;
  op.N = a.size();
  int id = op.intern_constant(a);
  TraceWord w;
  w.push_back(constant(id));
  for (int i = 0; i < n; ++i) {
    w.push_back(annih());
    w.push_back(create());
  }
  op.add_term({w}, Rational(1));
  return op;
}

/// h_lambda(a): product form, jointly normal ordered.
inline TraceWordOp build_h_lambda(const Partition& lambda, const RationalMatrix& a) {
  TraceWordOp op;
  op.N = a.size();
  int id = op.intern_constant(a);
  WordProduct wp;
  for (int part : lambda.parts()) {
    TraceWord w;
    w.push_back(constant(id));
    for (int i = 0; i < part; ++i) {
      w.push_back(annih());
      w.push_back(create());
    }
    wp.push_back(std::move(w));
  }
  op.add_term(std::move(wp), Rational(1));
  return op;
}

/// H_n with a single symbolic constant letter (id 0, no matrix attached).
inline TraceWordOp build_H_symbolic(int n) {
  if (n < 1) throw std::invalid_argument("build_H_symbolic: n must be positive");
  TraceWordOp op;
  TraceWord w;
  for (int i = 0; i < n; ++i) {
    w.push_back(annih());
    w.push_back(create());
    w.push_back(constant(0));
  }
  op.add_term({w}, Rational(1));
  return op;
}

/// Product of creation traces prod_i tr((phi M)^{k_i}); applied to the vacuum
/// this is the state prod_i tr((xM)^{k_i}).
inline TraceWordOp creation_trace_product(const std::vector<int>& powers,
                                          const RationalMatrix& M) {
  TraceWordOp op;
  op.N = M.size();
  int id = op.intern_constant(M);
  WordProduct wp;
  for (int k : powers) {
    if (k < 1) throw std::invalid_argument("creation_trace_product: bad power");
    TraceWord w;
    for (int i = 0; i < k; ++i) {
      w.push_back(create());
      w.push_back(constant(id));
    }
    wp.push_back(std::move(w));
  }
  op.add_term(std::move(wp), Rational(1));
  return op;
}

// ---------------------------------------------------------------------------
// Application on states
// ---------------------------------------------------------------------------

namespace detail {

using TermVec = std::vector<std::pair<Monomial, Rational>>;

struct PreparedWord {
  // segments[k]: letters strictly after annih k up to the next annih,
  // expanded into a term vector for every (out,in) index pair u,v.
  std::vector<std::vector<TermVec>> segments;  // [k][u*N+v]
  int num_annih = 0;
};

struct PreparedTerm {
  std::vector<PreparedWord> words;  // only words containing annih letters
  TermVec fixed;                    // coeff times product of closed traces
  int total_annih = 0;
};

struct PreparedOp {
  int N = 0;
  std::vector<PreparedTerm> terms;
};

/// Matrix of variables: entry (i,j) = x_{ij}.
inline std::vector<Polynomial> segment_terms(const TraceWord& letters, int from,
                                             int count, int N,
                                             const std::vector<RationalMatrix>& consts,
                                             const std::vector<bool>& is_id, int u) {
  std::vector<Polynomial> cur(N);
  cur[u] = Polynomial(Rational(1));
  int n = static_cast<int>(letters.size());
  for (int s = 0; s < count; ++s) {
    const Letter& l = letters[(from + s) % n];
    if (l.kind == LetterKind::Const && is_id[l.matrix_id]) continue;
    std::vector<Polynomial> next(N);
    if (l.kind == LetterKind::Const) {
      const RationalMatrix& M = consts[l.matrix_id];
      for (int i = 0; i < N; ++i) {
        if (cur[i].is_zero()) continue;
        for (int j = 0; j < N; ++j) {
          if (M(i, j).is_zero()) continue;
          next[j] += M(i, j) * cur[i];
        }
      }
    } else if (l.kind == LetterKind::Create) {
      for (int i = 0; i < N; ++i) {
        if (cur[i].is_zero()) continue;
        for (int j = 0; j < N; ++j)
          next[j] += cur[i] * Polynomial::var(FockState::var(N, i, j));
      }
    } else {
      throw std::logic_error("segment_terms: unexpected annihilator");
    }
    cur = std::move(next);
  }
  return cur;
}

/// Closed trace of a word with no annihilators.
inline Polynomial closed_trace(const TraceWord& w, int N,
                               const std::vector<RationalMatrix>& consts,
                               const std::vector<bool>& is_id) {
  Polynomial total;
  for (int u = 0; u < N; ++u) {
    auto cur = segment_terms(w, 0, static_cast<int>(w.size()), N, consts, is_id, u);
    total += cur[u];
  }
  return total;
}

inline PreparedOp prepare(const TraceWordOp& op) {
  if (!op.normal_ordered)
    throw std::invalid_argument("apply: operator must be normal ordered");
  if (op.N <= 0)
    throw std::invalid_argument("apply: symbolic operator cannot be applied");
  int N = op.N;
  std::vector<bool> is_id(op.constants.size());
  for (size_t i = 0; i < op.constants.size(); ++i) {
    if (op.constants[i].size() != N)
      throw std::invalid_argument("apply: constant matrix of wrong size");
    is_id[i] = op.constants[i].is_identity();
  }

  PreparedOp prep;
  prep.N = N;
  for (const auto& [wp, coeff] : op.terms) {
    PreparedTerm term;
    Polynomial fixed(coeff);
    for (const auto& w : wp) {
      std::vector<int> annihs;
      for (size_t i = 0; i < w.size(); ++i)
        if (w[i].kind == LetterKind::Annih) annihs.push_back(static_cast<int>(i));
      if (annihs.empty()) {
        fixed *= closed_trace(w, N, op.constants, is_id);
        continue;
      }
      PreparedWord pw;
      pw.num_annih = static_cast<int>(annihs.size());
      int K = pw.num_annih, n = static_cast<int>(w.size());
      pw.segments.resize(K);
      for (int k = 0; k < K; ++k) {
        int from = annihs[k] + 1;
        int next = annihs[(k + 1) % K];
        // letters strictly between annih k and the next annih, cyclically
        int count = (next - annihs[k] - 1 + n) % n;
        pw.segments[k].resize(N * N);
        for (int u = 0; u < N; ++u) {
          auto cur = segment_terms(w, from % n, count, N, op.constants, is_id, u);
          for (int v = 0; v < N; ++v)
            pw.segments[k][u * N + v] = cur[v].sorted_terms();
        }
      }
      term.words.push_back(std::move(pw));
      term.total_annih += K;
    }
    if (fixed.is_zero()) continue;
    term.fixed = fixed.sorted_terms();
    prep.terms.push_back(std::move(term));
  }
  return prep;
}

/// Applies one prepared term to a single monomial, accumulating into out.
inline void apply_term(const PreparedTerm& term, int N, const Monomial& mono,
                       const Rational& coeff_in, Polynomial& out) {
  int nvars = N * N;
  int deg = mono.degree();
  if (term.total_annih > deg) return;

  std::vector<int> avail(nvars);
  std::vector<int> present;
  for (int v = 0; v < nvars; ++v) {
    avail[v] = mono.exp(v);
    if (avail[v] > 0) present.push_back(v);
  }

  // assignment of each annihilator occurrence to a variable of the monomial
  std::vector<int> assign(term.total_annih);

  // chosen term vectors for the final expansion: fixed part + one segment per
  // annihilator
  std::vector<const TermVec*> lists;
  lists.reserve(term.total_annih + 1);

  std::vector<std::uint8_t> scratch(nvars);

  auto expand = [&](auto&& self, size_t li, std::vector<std::uint8_t>& exps,
                    const Rational& c) -> void {
    if (li == lists.size()) {
      out.add_term(Monomial(exps), c);
      return;
    }
    for (const auto& [m, mc] : *lists[li]) {
      for (int v = 0; v < m.num_vars(); ++v)
        exps[v] = static_cast<std::uint8_t>(exps[v] + m.exp(v));
      self(self, li + 1, exps, c * mc);
      for (int v = 0; v < m.num_vars(); ++v)
        exps[v] = static_cast<std::uint8_t>(exps[v] - m.exp(v));
    }
  };

  auto emit = [&](const Rational& fall_coeff) {
    lists.clear();
    lists.push_back(&term.fixed);
    size_t occ = 0;
    for (const auto& pw : term.words) {
      for (int k = 0; k < pw.num_annih; ++k) {
        int vk = assign[occ + k];
        int vnext = assign[occ + (k + 1) % pw.num_annih];
        int u = vk / N;        // row of the differentiated variable
        int vin = vnext % N;   // column of the next annihilator's variable
        const TermVec& tv = pw.segments[k][u * N + vin];
        if (tv.empty()) return;  // segment vanishes for this index pair
        lists.push_back(&tv);
      }
      occ += pw.num_annih;
    }
    for (int v = 0; v < nvars; ++v) scratch[v] = static_cast<std::uint8_t>(avail[v]);
    Rational c = coeff_in * fall_coeff;
    expand(expand, 0, scratch, c);
  };

  auto rec = [&](auto&& self, size_t occ, const Rational& fall) -> void {
    if (occ == assign.size()) {
      emit(fall);
      return;
    }
    for (int v : present) {
      if (avail[v] == 0) continue;
      assign[occ] = v;
      Rational f2 = fall * Rational(avail[v]);
      --avail[v];
      self(self, occ + 1, f2);
      ++avail[v];
    }
  };
  rec(rec, 0, Rational(1));
}

inline void apply_prepared(const PreparedOp& prep, const Monomial& mono,
                           const Rational& coeff, Polynomial& out) {
  for (const auto& term : prep.terms) apply_term(term, prep.N, mono, coeff, out);
}

}  // namespace detail

/// Applies a normal-ordered operator to a state: all annihilators act first
/// (as derivatives), then constants weight the sums, then creators multiply.
inline FockState apply(const TraceWordOp& op, const FockState& s) {
  if (op.N != s.N) throw std::invalid_argument("apply: dimension mismatch");
  auto prep = detail::prepare(op);
  Polynomial out;
  for (const auto& [mono, c] : s.poly.terms())
    detail::apply_prepared(prep, mono, c, out);
  return FockState(s.N, std::move(out));
}

/// State obtained by acting on the vacuum: terms with any annihilator die,
/// the rest are products of closed traces.
inline FockState act_on_vacuum(const TraceWordOp& op) {
  if (op.N <= 0) throw std::invalid_argument("act_on_vacuum: symbolic operator");
  int N = op.N;
  std::vector<bool> is_id(op.constants.size());
  for (size_t i = 0; i < op.constants.size(); ++i)
    is_id[i] = op.constants[i].is_identity();
  Polynomial out;
  for (const auto& [wp, coeff] : op.terms) {
    bool has_annih = false;
    for (const auto& w : wp)
      for (const auto& l : w)
        if (l.kind == LetterKind::Annih) has_annih = true;
    if (has_annih) continue;
    Polynomial prod(coeff);
    for (const auto& w : wp)
      prod *= detail::closed_trace(w, N, op.constants, is_id);
    out += prod;
  }
  return FockState(N, std::move(out));
}

// ---------------------------------------------------------------------------
// Degree components and commutators
// ---------------------------------------------------------------------------

/// Monomial basis of the degree-d component over N^2 variables, in graded
/// lexicographic order (larger exponent on earlier variables first).
struct DegreeBasis {
  int N = 0, d = 0;
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, int, MonomialHash> index;

  int dim() const { return static_cast<int>(monomials.size()); }
};

inline DegreeBasis monomial_basis(int N, int d) {
  DegreeBasis b;
  b.N = N;
  b.d = d;
  int nvars = N * N;
  std::vector<std::uint8_t> exps(nvars, 0);
  auto rec = [&](auto&& self, int v, int rest) -> void {
    if (v == nvars - 1) {
      exps[v] = static_cast<std::uint8_t>(rest);
      b.monomials.emplace_back(exps);
      exps[v] = 0;
      return;
    }
    for (int e = rest; e >= 0; --e) {
      exps[v] = static_cast<std::uint8_t>(e);
      self(self, v + 1, rest - e);
    }
    exps[v] = 0;
  };
  rec(rec, 0, d);
  for (size_t i = 0; i < b.monomials.size(); ++i)
    b.index.emplace(b.monomials[i], static_cast<int>(i));
  return b;
}

/// Exact matrix of an operator on the degree-d component; columns are the
/// images of the basis monomials under sequential apply.
struct OperatorMatrix {
  DegreeBasis basis;
  // cols[j]: (row, value), sorted by row
  std::vector<std::vector<std::pair<int, Rational>>> cols;

  int dim() const { return basis.dim(); }

  Rational entry(int i, int j) const {
    for (const auto& [r, v] : cols[j])
      if (r == i) return v;
    return Rational(0);
  }

  bool is_zero() const {
    for (const auto& col : cols)
      if (!col.empty()) return false;
    return true;
  }

  /// First nonzero entry (row, col, value) if any.
  std::optional<std::tuple<int, int, Rational>> first_nonzero() const {
    for (size_t j = 0; j < cols.size(); ++j)
      if (!cols[j].empty())
        return std::tuple<int, int, Rational>(cols[j][0].first, static_cast<int>(j),
                                              cols[j][0].second);
    return std::nullopt;
  }
};

inline OperatorMatrix operator_matrix(const TraceWordOp& op, int d, int N) {
  if (op.N != N) throw std::invalid_argument("operator_matrix: dimension mismatch");
  OperatorMatrix m;
  m.basis = monomial_basis(N, d);
  auto prep = detail::prepare(op);
  m.cols.resize(m.basis.dim());
  Polynomial image;
  for (int j = 0; j < m.basis.dim(); ++j) {
    image = Polynomial();
    detail::apply_prepared(prep, m.basis.monomials[j], Rational(1), image);
    auto& col = m.cols[j];
    for (const auto& [mono, c] : image.terms()) {
      auto it = m.basis.index.find(mono);
      if (it == m.basis.index.end())
        throw std::logic_error("operator_matrix: image leaves the degree component");
      col.emplace_back(it->second, c);
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return m;
}

/// Matrix of op1 op2 - op2 op1 on the degree-d component.
inline OperatorMatrix commutator_matrix(const TraceWordOp& op1,
                                        const TraceWordOp& op2, int d, int N) {
  OperatorMatrix m1 = operator_matrix(op1, d, N);
  OperatorMatrix m2 = operator_matrix(op2, d, N);
  int D = m1.dim();
  OperatorMatrix r;
  r.basis = m1.basis;
  r.cols.resize(D);
  std::vector<Rational> acc(D);
  std::vector<int> touched;
  for (int j = 0; j < D; ++j) {
    touched.clear();
    auto scatter = [&](const OperatorMatrix& a, const OperatorMatrix& b, bool neg) {
      for (const auto& [i, c] : b.cols[j])
        for (const auto& [row, v] : a.cols[i]) {
          if (acc[row].is_zero()) touched.push_back(row);
          acc[row] += neg ? -(v * c) : v * c;
        }
    };
    scatter(m1, m2, false);
    scatter(m2, m1, true);
    auto& col = r.cols[j];
    std::sort(touched.begin(), touched.end());
    for (int row : touched) {
      if (!acc[row].is_zero()) col.emplace_back(row, acc[row]);
      acc[row] = Rational(0);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fast exact commutator check via integer scaling
// ---------------------------------------------------------------------------

namespace detail {

using I128 = __int128;
using U128 = unsigned __int128;

inline BigInt big_of_i128(I128 v) {
  bool neg = v < 0;
  U128 u = neg ? (U128)(-(v + 1)) + 1 : (U128)v;
  BigInt r = (std::uint64_t)(u >> 64);
  r <<= 64;
  r += (std::uint64_t)(u & 0xFFFFFFFFFFFFFFFFULL);
  return neg ? -r : r;
}

struct ScaledIntMatrix {
  bool ok = false;
  int D = 0;
  BigInt scale;  // integer matrix = scale * rational matrix
  U128 max_abs = 0;
  std::vector<std::vector<std::pair<int, I128>>> cols;
};

inline ScaledIntMatrix scale_to_integers(const OperatorMatrix& m) {
  ScaledIntMatrix s;
  s.D = m.dim();

  // fast path: every entry small, lcm of denominators fits 64 bits
  bool all_small = true;
  long long lcm64 = 1;
  for (const auto& col : m.cols) {
    for (const auto& [row, v] : col) {
      if (!v.is_small()) {
        all_small = false;
        break;
      }
      long long d = v.den64();
      long long g = std::gcd(lcm64, d);
      I128 l = (I128)(lcm64 / g) * d;
      if (l > INT64_MAX) {
        all_small = false;
        break;
      }
      lcm64 = (long long)l;
    }
    if (!all_small) break;
  }
  if (all_small) {
    s.scale = lcm64;
    s.cols.resize(m.cols.size());
    for (size_t j = 0; j < m.cols.size(); ++j) {
      s.cols[j].reserve(m.cols[j].size());
      for (const auto& [row, v] : m.cols[j]) {
        I128 scaled = (I128)v.num64() * (lcm64 / v.den64());
        U128 u = scaled < 0 ? (U128)(-scaled) : (U128)scaled;
        s.max_abs = std::max(s.max_abs, u);
        s.cols[j].emplace_back(row, scaled);
      }
    }
    s.ok = true;
    return s;
  }

  BigInt lcm = 1;
  for (const auto& col : m.cols)
    for (const auto& [row, v] : col) {
      BigInt den = boost::multiprecision::denominator(v.to_big());
      lcm = boost::multiprecision::lcm(lcm, den);
      if (lcm > (BigInt(1) << 100)) return s;  // give up, caller falls back
    }
  s.scale = lcm;
  BigInt limit = BigInt(1) << 120;
  s.cols.resize(m.cols.size());
  for (size_t j = 0; j < m.cols.size(); ++j) {
    for (const auto& [row, v] : m.cols[j]) {
      BigRational bv = v.to_big();
      BigInt scaled = boost::multiprecision::numerator(bv) *
                      (lcm / boost::multiprecision::denominator(bv));
      if (scaled >= limit || scaled <= -limit) return s;
      bool neg = scaled < 0;
      BigInt a = neg ? -scaled : scaled;
      U128 u = ((U128)(std::uint64_t)(a >> 64) << 64) |
               (U128)(std::uint64_t)(a & BigInt(0xFFFFFFFFFFFFFFFFULL));
      s.max_abs = std::max(s.max_abs, u);
      s.cols[j].emplace_back(row, neg ? -(I128)u : (I128)u);
    }
  }
  s.ok = true;
  return s;
}

}  // namespace detail

struct CommutatorCheck {
  bool zero = true;
  int row = -1, col = -1;
  Rational value;  // of the commutator of the *rational* matrices
};

/// Operator matrix plus its integer-scaled form, prepared once and reused
/// across several pairings.
struct CommutatorOperand {
  OperatorMatrix mat;
  detail::ScaledIntMatrix scaled;
};

inline CommutatorOperand prepare_commutator_operand(OperatorMatrix m) {
  CommutatorOperand op;
  op.scaled = detail::scale_to_integers(m);
  op.mat = std::move(m);
  return op;
}

/// Exact zero test of [m1, m2] using integer-scaled arithmetic when the
/// magnitudes provably fit; falls back to rational arithmetic otherwise.
inline CommutatorCheck commutator_zero_check(const CommutatorOperand& a,
                                             const CommutatorOperand& b) {
  const OperatorMatrix& m1 = a.mat;
  const OperatorMatrix& m2 = b.mat;
  int D = m1.dim();
  CommutatorCheck res;

  const auto& s1 = a.scaled;
  const auto& s2 = b.scaled;
  bool fits = s1.ok && s2.ok;
  if (fits) {
    // every accumulator is a sum of <= D products bounded by max1*max2
    BigInt bound = BigInt(D) * detail::big_of_i128((detail::I128)s1.max_abs) *
                   detail::big_of_i128((detail::I128)s2.max_abs);
    if (bound >= (BigInt(1) << 126)) fits = false;
  }

  if (fits) {
    std::vector<detail::I128> acc(D, 0);
    std::vector<int> touched;
    for (int j = 0; j < D; ++j) {
      touched.clear();
      for (const auto& [i, c] : s2.cols[j])
        for (const auto& [row, v] : s1.cols[i]) {
          if (acc[row] == 0) touched.push_back(row);
          acc[row] += v * c;
        }
      for (const auto& [i, c] : s1.cols[j])
        for (const auto& [row, v] : s2.cols[i]) {
          if (acc[row] == 0) touched.push_back(row);
          acc[row] -= v * c;
        }
      for (int row : touched) {
        if (acc[row] != 0 && res.zero) {
          res.zero = false;
          res.row = row;
          res.col = j;
          BigRational val(detail::big_of_i128(acc[row]), s1.scale * s2.scale);
          res.value = Rational(val);
        }
        acc[row] = 0;
      }
      if (!res.zero) return res;
    }
    return res;
  }

  // rational fallback
  std::vector<Rational> acc(D);
  std::vector<int> touched;
  for (int j = 0; j < D; ++j) {
    touched.clear();
    auto scatter = [&](const OperatorMatrix& a, const OperatorMatrix& b, bool neg) {
      for (const auto& [i, c] : b.cols[j])
        for (const auto& [row, v] : a.cols[i]) {
          if (acc[row].is_zero()) touched.push_back(row);
          acc[row] += neg ? -(v * c) : v * c;
        }
    };
    scatter(m1, m2, false);
    scatter(m2, m1, true);
    for (int row : touched) {
      if (!acc[row].is_zero() && res.zero) {
        res.zero = false;
        res.row = row;
        res.col = j;
        res.value = acc[row];
      }
      acc[row] = Rational(0);
    }
    if (!res.zero) return res;
  }
  return res;
}

inline CommutatorCheck commutator_zero_check(OperatorMatrix m1, OperatorMatrix m2) {
  return commutator_zero_check(prepare_commutator_operand(std::move(m1)),
                               prepare_commutator_operand(std::move(m2)));
}

inline CommutatorCheck commutator_is_zero(const TraceWordOp& op1,
                                          const TraceWordOp& op2, int d, int N) {
  OperatorMatrix m1 = operator_matrix(op1, d, N);
  OperatorMatrix m2 = operator_matrix(op2, d, N);
  return commutator_zero_check(std::move(m1), std::move(m2));
}

// ---------------------------------------------------------------------------
// Composition as printed (no normal ordering), for empirical probes
// ---------------------------------------------------------------------------

/// Applies a single-trace word as written, letters acting right to left with
/// no normal ordering: creation multiplies, annihilation differentiates, and
/// operator order is the textual order.
inline FockState apply_as_written(const TraceWordOp& op, const FockState& s) {
  if (op.N != s.N) throw std::invalid_argument("apply_as_written: dim mismatch");
  int N = op.N;
  Polynomial out;
  for (const auto& [wp, coeff] : op.terms) {
    if (wp.size() != 1)
      throw std::invalid_argument("apply_as_written: single-trace words only");
    const TraceWord& w = wp[0];
    int L = static_cast<int>(w.size());
    // enumerate the cyclic chain indices
    std::vector<int> idx(L, 0);
    auto run = [&](auto&& self, int pos) -> void {
      if (pos == L) {
        // operator factors in written order; rightmost acts first
        Polynomial cur = s.poly;
        Rational weight = coeff;
        for (int p = L - 1; p >= 0 && !weight.is_zero(); --p) {
          int a = idx[p], b = idx[(p + 1) % L];
          const Letter& l = w[p];
          if (l.kind == LetterKind::Const) {
            weight *= op.constants[l.matrix_id](a, b);
          } else if (l.kind == LetterKind::Create) {
            cur *= Polynomial::var(FockState::var(N, a, b));
          } else {  // derivative d/dx_{b,a}
            Polynomial next;
            int v = FockState::var(N, b, a);
            for (const auto& [mono, c] : cur.terms()) {
              int e = mono.exp(v);
              if (e == 0) continue;
              next.add_term(*mono.div_var(v), c * Rational(e));
            }
            cur = std::move(next);
          }
          if (cur.is_zero()) break;
        }
        if (!weight.is_zero() && !cur.is_zero()) {
          cur.scale(weight);
          out += cur;
        }
        return;
      }
      for (int v = 0; v < N; ++v) {
        idx[pos] = v;
        self(self, pos + 1);
      }
    };
    run(run, 0);
  }
  return FockState(N, std::move(out));
}

}  // namespace polyglue::fock
