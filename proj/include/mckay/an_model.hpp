#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/rational.hpp"
#include "mckay/root_lattice.hpp"

namespace mckay {

// a delta + sum c_i e_i over Q, indices mod n.
struct AnVector {
  Rational delta;
  std::vector<Rational> e;

  AnVector() = default;
  explicit AnVector(std::size_t n) : delta(0), e(n, Rational(0)) {}
  AnVector& operator+=(const AnVector& o);
  AnVector& operator-=(const AnVector& o);
  friend AnVector operator+(AnVector a, const AnVector& b) { return a += b; }
  friend AnVector operator-(AnVector a, const AnVector& b) { return a -= b; }
  friend AnVector operator*(const Rational& s, AnVector a);
  friend bool operator==(const AnVector&, const AnVector&) = default;
  std::string to_string() const;
};

// Cycle of length n with roots e_i - e_j + a delta, a in (j - i)/n + Z, and
// simple roots a_i = e_i - e_{i+1} + delta/n.
class AnModel {
 public:
  explicit AnModel(std::size_t n);  // n even, n >= 2

  std::size_t n() const { return n_; }
  AnVector e(std::size_t i) const;
  AnVector delta() const;
  AnVector simple_root(std::size_t i) const;
  Rational inner(const AnVector& x, const AnVector& y) const;  // (e_i,e_j) = delta_ij, (v,delta) = 0
  AnVector reflect(std::size_t i, const AnVector& x) const;
  // C with the even reflections applied first.
  AnVector coxeter(const AnVector& x) const;

  AnVector embed(const RootVector& x) const;
  // Inverse of embed; throws Domain when x is not in the image of the lattice.
  RootVector pull_back(const AnVector& x) const;

  // Writes a root as e_i - e_j + a delta; throws NotReal otherwise.
  struct RootForm {
    std::size_t i = 0, j = 0;
    Rational a;
  };
  RootForm root_form(const AnVector& x) const;
  bool is_root(const AnVector& x) const;

 private:
  std::size_t n_;
};

enum class AnClass { Zero, Plus, Minus };  // Delta_0, Delta_+, Delta_-

// The parity table: i = j mod 2 gives Delta_0, (even, odd) Delta_+, (odd, even) Delta_-.
AnClass an_class(const AnModel::RootForm& r);

struct AnReport {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  bool ok() const { return failures.empty(); }
};

// Compares the model with the abstract lattice of the cycle of length n.
// graph must be the McKay graph of the binary cyclic group of order n.
AnReport verify_an_model(const McKayGraph& graph, long max_level);

}  // namespace mckay
