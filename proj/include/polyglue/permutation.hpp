#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyglue/partition.hpp"

namespace polyglue {

/// Permutation of {0..k-1}; image(i) is where i is sent.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int k) {
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
  }

  /// (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
      throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> im(a.size());
    for (int i = 0; i < a.size(); ++i) im[i] = a.image(b.image(i));
    return Permutation(std::move(im));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

  Partition cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lens;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = images_[j];
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) s += (i ? " " : "") + std::to_string(images_[i]);
    return s + "]";
  }

 private:
  std::vector<int> images_;
};

/// All k! permutations of {0..k-1}, in lexicographic order of images.
inline std::vector<Permutation> all_permutations(int k) {
  std::vector<int> im(k);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

/// All permutations in S_d of a given cycle type.
inline std::vector<Permutation> class_elements(const Partition& type, int d) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(d))
    if (p.cycle_type() == type) out.push_back(p);
  return out;
}

}  // namespace polyglue
