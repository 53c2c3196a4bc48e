#pragma once

#include "polysym/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace polysym::test {

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "triangle", "square",  "rectangle",  "hexagon",    "hexagon_stretched", "hexagon_perturbed",
      "simplex2", "simplex3", "simplex4",  "cube",       "octahedron",        "prism3",
      "cyclic_6_4"};
  return names;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(POLYSYM_FIXTURES_DIR) + "/" + name + ".json";
}

inline Polytope fixture(const std::string& name) { return load_polytope_file(fixture_path(name)); }

inline Matrix columns(std::initializer_list<std::initializer_list<double>> cols) {
  const auto d = static_cast<Eigen::Index>(cols.begin()->size());
  Matrix m(d, static_cast<Eigen::Index>(cols.size()));
  Eigen::Index j = 0;
  for (const auto& c : cols) {
    Eigen::Index i = 0;
    for (double x : c) m(i++, j) = x;
    ++j;
  }
  return m;
}

inline Matrix random_orthogonal(int d, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) a(i, k) = g(rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

// Q1 diag(s) Q2 with singular values in [1, 10], so cond <= 10.
inline Matrix random_invertible(int d, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(1.0, 10.0);
  Vector s(d);
  for (int i = 0; i < d; ++i) s(i) = u(rng);
  return random_orthogonal(d, rng) * s.asDiagonal() * random_orthogonal(d, rng);
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

// Column j of the result is v_sigma(j).
inline Polytope relabel(const Polytope& p, const Permutation& sigma) {
  Matrix v(p.dim(), p.size());
  for (int j = 0; j < p.size(); ++j) v.col(j) = p.vertex(sigma(j));
  return make_polytope(std::move(v), p.name);
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(image);
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Aut(G^c) straight from the definition, over all n! permutations.
inline std::vector<Permutation> brute_force_automorphisms(const LabeledGraph& lg) {
  const auto a = lg.colored_adjacency();
  std::vector<Permutation> out;
  for (const auto& s : all_permutations(lg.graph.order())) {
    bool ok = true;
    for (int i = 0; i < a.rows() && ok; ++i)
      for (int j = 0; j < a.cols() && ok; ++j) ok = a(s(i), s(j)) == a(i, j);
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace polysym::test
