#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mckay {

// Element of the root lattice Z^I in the basis of simple roots.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t rank) : c_(rank, 0) {}
  explicit RootVector(std::vector<long> coords) : c_(std::move(coords)) {}
  RootVector(std::initializer_list<long> coords) : c_(coords) {}

  static RootVector simple(std::size_t rank, std::size_t i) {
    RootVector v(rank);
    v.c_[i] = 1;
    return v;
  }

  std::size_t size() const { return c_.size(); }
  long& operator[](std::size_t i) { return c_[i]; }
  long operator[](std::size_t i) const { return c_[i]; }
  const std::vector<long>& coords() const { return c_; }

  bool is_zero() const {
    for (long x : c_)
      if (x != 0) return false;
    return true;
  }

  RootVector& operator+=(const RootVector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  RootVector& operator-=(const RootVector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  RootVector& operator*=(long s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(long s, RootVector a) { return a *= s; }
  RootVector operator-() const { return (-1) * *this; }

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<long> c_;
};

}  // namespace mckay
