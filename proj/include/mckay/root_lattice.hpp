#pragma once

#include <cstddef>
#include <vector>

#include "mckay/mckay_graph.hpp"
#include "mckay/orientation.hpp"
#include "mckay/root_vector.hpp"

namespace mckay {

// (a_i, a_i) = 2, (a_i, a_j) = -n(i,j).
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(const Multiplicities& n);
  explicit BilinearForm(const McKayGraph& graph) : BilinearForm(graph.multiplicities()) {}

  std::size_t size() const { return gram_.size(); }
  long operator()(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const std::vector<std::vector<long>>& gram() const { return gram_; }
  long eval(const RootVector& x, const RootVector& y) const;
  long norm(const RootVector& x) const { return eval(x, x); }

 private:
  std::vector<std::vector<long>> gram_;
};

// x - (x, a_i) a_i
RootVector reflect(const BilinearForm& form, std::size_t i, const RootVector& x);

// Reflections applied in the order of word.sequence.
RootVector apply_word(const BilinearForm& form, const CoxeterWord& word, const RootVector& x);
RootVector apply_word(const BilinearForm& form, const std::vector<std::size_t>& word, const RootVector& x);

// Columns are images of the simple roots.
std::vector<RootVector> word_matrix(const BilinearForm& form, const std::vector<std::size_t>& word);

// Coefficient of delta in x = finite part + level * delta, read off the
// vertex where delta_0 = 1.
long delta_level(const RootVector& x);

bool is_positive(const RootVector& x);  // nonzero with nonnegative coordinates

struct Root {
  RootVector vector;
  bool real = true;
  long level = 0;
  friend bool operator==(const Root&, const Root&) = default;
};

// Roots of the finite diagram obtained by deleting vertex 0, embedded with
// coordinate 0 equal to zero; generated as the reflection orbit of the
// simple roots.
std::vector<RootVector> finite_roots(const BilinearForm& form);

// Real roots (norm 2) and imaginary roots (nonzero multiples of delta) with
// |level| <= max_level and every |coordinate| <= bound, sorted.
std::vector<Root> enumerate_roots(const BilinearForm& form, const RootVector& delta, long max_level, long bound);

// Positive real roots with 0 <= level <= max_level, sorted.
std::vector<RootVector> positive_real_roots(const BilinearForm& form, const RootVector& delta, long max_level);

}  // namespace mckay
