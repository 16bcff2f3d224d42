#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyglue/rational.hpp"

namespace polyglue {

/// Partition of a nonnegative integer: weakly decreasing positive parts.
/// Trailing zeros are stripped on construction; the empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate();
  }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int part(int i) const {  // zero-padded beyond the length
    return i < length() ? parts_[i] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  /// Multiplicity of the part value v.
  int multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  /// Lexicographic on the part lists; partitions_of() yields descending order.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i)
      s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  /// Comma-joined parts, e.g. "3,1,1"; empty partition prints as "".
  std::string csv() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i)
      s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

  static Partition parse_csv(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      parts.push_back(std::stoi(text.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
  }

 private:
  void validate() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
  std::vector<int> parts_;
};

struct PartitionHash {
  size_t operator()(const Partition& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.parts()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// All partitions of d, in reverse-lexicographic order: (d) first, (1^d) last.
inline std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

/// Order of the centralizer of a permutation with cycle type delta:
/// prod_i i^{m_i} m_i!.  The conjugacy class size is d!/zeta.
inline long long centralizer_size(const Partition& delta) {
  long long z = 1;
  int prev = -1, run = 0;
  for (int v : delta.parts()) {
    if (v == prev) {
      ++run;
    } else {
      prev = v;
      run = 1;
    }
    z *= static_cast<long long>(v) * run;
  }
  return z;
}

/// dim(lambda)/d! via the factorial ratio formula, evaluated at a given
/// number of rows N >= length (the value does not depend on N).
inline Rational dimension_factor_at(const Partition& lambda, int N) {
  if (N < lambda.length())
    throw std::invalid_argument("dimension_factor: N below partition length");
  Rational num = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      num *= Rational(lambda.part(i) - lambda.part(j) - i + j);
  Rational den = 1;
  for (int i = 0; i < N; ++i) den *= factorial(lambda.part(i) - (i + 1) + N);
  return num / den;
}

inline Rational dimension_factor(const Partition& lambda) {
  return dimension_factor_at(lambda, std::max(1, lambda.length()));
}

/// dim(lambda) as an exact integer-valued rational.
inline Rational dimension(const Partition& lambda) {
  return dimension_factor(lambda) * factorial(lambda.weight());
}

}  // namespace polyglue
