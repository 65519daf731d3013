#include "mckay/root_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "mckay/error.hpp"

namespace mckay {

BilinearForm::BilinearForm(const Multiplicities& n) : gram_(n.size(), std::vector<long>(n.size(), 0)) {
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j) gram_[i][j] = (i == j ? 2 : 0) - n[i][j];
}

long BilinearForm::eval(const RootVector& x, const RootVector& y) const {
  long s = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (x[i] == 0) continue;
    long row = 0;
    for (std::size_t j = 0; j < gram_.size(); ++j) row += gram_[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

RootVector reflect(const BilinearForm& form, std::size_t i, const RootVector& x) {
  long c = 0;
  for (std::size_t j = 0; j < form.size(); ++j) c += form(i, j) * x[j];
  RootVector out = x;
  out[i] -= c;
  return out;
}

RootVector apply_word(const BilinearForm& form, const std::vector<std::size_t>& word, const RootVector& x) {
  RootVector out = x;
  for (auto i : word) out = reflect(form, i, out);
  return out;
}

RootVector apply_word(const BilinearForm& form, const CoxeterWord& word, const RootVector& x) {
  return apply_word(form, word.sequence, x);
}

std::vector<RootVector> word_matrix(const BilinearForm& form, const std::vector<std::size_t>& word) {
  std::vector<RootVector> cols;
  for (std::size_t i = 0; i < form.size(); ++i) cols.push_back(apply_word(form, word, RootVector::simple(form.size(), i)));
  return cols;
}

long delta_level(const RootVector& x) { return x[0]; }

bool is_positive(const RootVector& x) {
  bool nonzero = false;
  for (long c : x.coords()) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

std::vector<RootVector> finite_roots(const BilinearForm& form) {
  const std::size_t n = form.size();
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (std::size_t i = 1; i < n; ++i) {
    auto a = RootVector::simple(n, i);
    seen.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& x : frontier)
      for (std::size_t i = 1; i < n; ++i) {
        auto y = reflect(form, i, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
    if (seen.size() > 100000) throw Error(ErrorKind::InternalError, "finite root system is not finite");
  }
  return {seen.begin(), seen.end()};
}

namespace {

bool in_box(const RootVector& x, long bound) {
  for (long c : x.coords())
    if (std::labs(c) > bound) return false;
  return true;
}

}  // namespace

std::vector<Root> enumerate_roots(const BilinearForm& form, const RootVector& delta, long max_level, long bound) {
  if (max_level < 0 || bound < 0) throw Error(ErrorKind::Domain, "root bounds must be nonnegative");
  if (delta[0] != 1) throw Error(ErrorKind::Domain, "delta must have coordinate 1 at vertex 0");
  std::vector<Root> out;
  const auto fin = finite_roots(form);
  for (long m = -max_level; m <= max_level; ++m) {
    for (const auto& b : fin) {
      RootVector x = b + m * delta;
      if (in_box(x, bound)) out.push_back({x, true, m});
    }
    if (m != 0) {
      RootVector x = m * delta;
      if (in_box(x, bound)) out.push_back({x, false, m});
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.vector < b.vector; });
  return out;
}

std::vector<RootVector> positive_real_roots(const BilinearForm& form, const RootVector& delta, long max_level) {
  std::vector<RootVector> out;
  const auto fin = finite_roots(form);
  for (long m = 0; m <= max_level; ++m)
    for (const auto& b : fin) {
      RootVector x = b + m * delta;
      if (is_positive(x)) out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mckay
