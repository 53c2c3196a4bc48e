#pragma once

#include "polysym/common.hpp"

#include <compare>
#include <span>
#include <vector>

namespace polysym {

/// A permutation of {0..n-1} stored as its image array, p[i] = sigma(i).
///
/// Matrix convention: matrix() has a 1 in row sigma(j), column j, so column j
/// of Phi * matrix() is v_sigma(j), and (matrix() * x)_i = x_{sigma^-1(i)}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(Validation) unless `image` is a bijection of 0..n-1.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Product of disjoint-or-not cycles, applied right to left.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  Permutation inverse() const;
  Matrix matrix() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// A finite permutation group, stored as its full sorted element list.
class PermutationSet {
 public:
  PermutationSet() = default;
  /// Sorts and deduplicates; throws Error(NotAGroup) unless the elements
  /// contain the identity and are closed under composition and inverse.
  explicit PermutationSet(std::vector<Permutation> elements);

  static PermutationSet trivial(int degree);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const PermutationSet& a, const PermutationSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
};

}  // namespace polysym
