#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "quintic/errors.hpp"

namespace quintic {

using Point = uint32_t;

// A permutation of {0, ..., degree-1} stored as an image array.
// Products compose left to right: (a * b) maps x to b(a(x)), matching the
// exponent convention x^(ab) = (x^a)^b used throughout.
class Perm {
 public:
  Perm() = default;

  explicit Perm(size_t degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), Point{0});
  }

  explicit Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point x : img_) {
      if (x >= img_.size() || seen[x])
        throw argument_error("image array is not a bijection");
      seen[x] = true;
    }
  }

  // Build from disjoint-cycle notation, e.g. {{0,1,2},{3,4}} on `degree` points.
  static Perm from_cycles(size_t degree,
                          const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto& c : cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        Point from = c[i], to = c[(i + 1) % c.size()];
        if (from >= degree || to >= degree)
          throw argument_error("cycle entry out of range");
        img[from] = to;
      }
    }
    return Perm(std::move(img));
  }

  size_t degree() const { return img_.size(); }

  Point operator()(Point x) const { return img_[x]; }

  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (Point i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& o) const {
    if (degree() != o.degree())
      throw argument_error("degree mismatch in permutation product");
    std::vector<Point> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[i] = o.img_[img_[i]];
    Perm out;
    out.img_ = std::move(r);
    return out;
  }

  Perm inverse() const {
    std::vector<Point> r(img_.size());
    for (Point i = 0; i < img_.size(); ++i) r[img_[i]] = i;
    Perm out;
    out.img_ = std::move(r);
    return out;
  }

  Perm conjugate_by(const Perm& g) const {  // g^-1 * this * g
    if (degree() != g.degree())
      throw argument_error("degree mismatch in conjugation");
    std::vector<Point> r(img_.size());
    for (Point i = 0; i < img_.size(); ++i) r[g.img_[i]] = g.img_[img_[i]];
    Perm out;
    out.img_ = std::move(r);
    return out;
  }

  // lcm of cycle lengths.
  uint64_t order() const {
    std::vector<bool> seen(img_.size(), false);
    uint64_t ord = 1;
    for (Point i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      uint64_t len = 0;
      for (Point j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  Perm power(int64_t k) const {
    Perm base = k >= 0 ? *this : inverse();
    uint64_t e = k >= 0 ? uint64_t(k) : uint64_t(-k);
    Perm acc(degree());
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend auto operator<=>(const Perm&, const Perm&) = default;

  std::string to_cycle_string() const {
    std::string s;
    std::vector<bool> seen(img_.size(), false);
    for (Point i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      s += '(';
      bool first = true;
      for (Point j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (!first) s += ' ';
        s += std::to_string(j);
        first = false;
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

 private:
  std::vector<Point> img_;
};

}  // namespace quintic
