#include "polysym/permutation.hpp"

#include <algorithm>
#include <set>

namespace polysym {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= size() || hit[x]) throw Error(ErrorKind::Validation, "not a permutation");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> image = identity(n).image_;
    const auto& cyc = *it;
    for (std::size_t k = 0; k < cyc.size(); ++k) image.at(cyc[k]) = cyc[(k + 1) % cyc.size()];
    result = Permutation(std::move(image)) * result;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

Matrix Permutation::matrix() const {
  Matrix m = Matrix::Zero(size(), size());
  for (int j = 0; j < size(); ++j) m(image_[j], j) = 1.0;
  return m;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DomainMismatch, "permutation sizes differ");
  Permutation p;
  p.image_.resize(a.image_.size());
  for (int i = 0; i < b.size(); ++i) p.image_[i] = a.image_[b.image_[i]];
  return p;
}

PermutationSet::PermutationSet(std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw Error(ErrorKind::NotAGroup, "empty permutation set");
  degree_ = elements.front().size();
  for (const auto& p : elements)
    if (p.size() != degree_) throw Error(ErrorKind::NotAGroup, "mixed permutation degrees");
  elements_ = std::move(elements);
  if (!contains(Permutation::identity(degree_)))
    throw Error(ErrorKind::NotAGroup, "identity missing");

  // S is a group iff S = <X> for some X inside S. Grow X greedily and
  // compare the generated closure against S.
  std::vector<Permutation> gens;
  std::set<Permutation> closure{Permutation::identity(degree_)};
  for (const auto& s : elements_) {
    if (closure.count(s)) continue;
    gens.push_back(s);
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          Permutation y = x * g;
          if (!contains(y)) throw Error(ErrorKind::NotAGroup, "not closed under composition");
          if (closure.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
  }
  if (static_cast<long>(closure.size()) != order())
    throw Error(ErrorKind::NotAGroup, "not closed under composition");
}

PermutationSet PermutationSet::trivial(int degree) {
  return PermutationSet({Permutation::identity(degree)});
}

bool PermutationSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

}  // namespace polysym
