#include "symwalk/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace symwalk {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation images must form a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images), Unchecked{});
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> out(b.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return Perm(std::move(out), Perm::Unchecked{});
}

Perm Perm::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(out), Unchecked{});
}

int Perm::fixed_points() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == static_cast<int>(i);
  return count;
}

CycleType Perm::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

int Perm::cycles() const {
  std::vector<char> seen(images_.size(), 0);
  int count = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) seen[i] = 1;
  }
  return count;
}

}  // namespace symwalk
