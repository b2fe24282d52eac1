// Permutations of {0, ..., n-1} as image arrays.
#pragma once

#include <cstdint>
#include <vector>

#include "symwalk/cycle_type.hpp"

namespace symwalk {

class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;

  int fixed_points() const;
  int cycles() const;
  int sign() const { return (size() - cycles()) % 2 == 0 ? 1 : -1; }
  CycleType cycle_type() const;

  bool operator==(const Perm&) const = default;

 private:
  struct Unchecked {};
  Perm(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
  std::vector<int> images_;
};

}  // namespace symwalk
