#include <doctest.h>

#include <random>
#include <set>

#include "mckay/error.hpp"
#include "mckay/root_lattice.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::test::all_groups;
using mckay::test::pipeline;

namespace {

// Every lattice vector of norm 0 or 2 in the box, by brute force.
std::set<RootVector> box_scan(const BilinearForm& form, long level, long bound) {
  const std::size_t n = form.size();
  std::set<RootVector> out;
  RootVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound;
  while (true) {
    long q = form.norm(x);
    if (!x.is_zero() && (q == 0 || q == 2) && std::labs(x[0]) <= level) out.insert(x);
    std::size_t k = 0;
    while (k < n && x[k] == bound) x[k++] = -bound;
    if (k == n) break;
    ++x[k];
  }
  return out;
}

}  // namespace

TEST_CASE("form examples") {
  BilinearForm a1(reference_diagram({AffineFamily::A, 1}));
  CHECK(a1.gram() == std::vector<std::vector<long>>{{2, -2}, {-2, 2}});
  const auto& g = pipeline("icosa").graph;
  BilinearForm f(g);
  CHECK(f.norm(g.delta()) == 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(f.norm(RootVector::simple(g.size(), i)) == 2);
    CHECK(f.eval(g.delta(), RootVector::simple(g.size(), i)) == 0);
  }
}

TEST_CASE("enumerate_roots agrees with a box scan") {
  struct Case {
    AffineType t;
    long level, bound;
  };
  for (auto c : {Case{{AffineFamily::A, 1}, 3, 4}, Case{{AffineFamily::A, 3}, 2, 3}, Case{{AffineFamily::D, 4}, 1, 3},
                 Case{{AffineFamily::E, 6}, 1, 2}}) {
    CAPTURE(c.t.to_string());
    auto ref = reference_diagram(c.t);
    BilinearForm form(ref);
    auto delta = imaginary_root(ref);
    std::set<RootVector> got;
    for (const auto& r : enumerate_roots(form, delta, c.level, c.bound)) {
      CHECK(form.norm(r.vector) == (r.real ? 2 : 0));
      CHECK(r.level == delta_level(r.vector));
      got.insert(r.vector);
    }
    CHECK(got == box_scan(form, c.level, c.bound));
  }
}

TEST_CASE("finite root counts and levels") {
  auto count = [](AffineType t) {
    return finite_roots(BilinearForm(reference_diagram(t))).size();
  };
  CHECK(count({AffineFamily::A, 1}) == 2);
  CHECK(count({AffineFamily::A, 3}) == 12);
  CHECK(count({AffineFamily::D, 4}) == 24);
  CHECK(count({AffineFamily::E, 6}) == 72);
  CHECK(count({AffineFamily::E, 7}) == 126);
  CHECK(count({AffineFamily::E, 8}) == 240);
  auto ref = reference_diagram({AffineFamily::A, 3});
  BilinearForm form(ref);
  auto delta = imaginary_root(ref);
  auto roots = enumerate_roots(form, delta, 2, 100);
  for (long m = -2; m <= 2; ++m) {
    std::size_t real = 0, imag = 0;
    for (const auto& r : roots)
      if (r.level == m) (r.real ? real : imag)++;
    CHECK(real == 12);
    CHECK(imag == (m == 0 ? 0u : 1u));
  }
}

TEST_CASE("delta is primitive") {
  for (const auto& s : all_groups()) {
    const auto& g = pipeline(s).graph;
    BilinearForm form(g);
    auto roots = enumerate_roots(form, g.delta(), 1, 20);
    for (const auto& r : roots) {
      RootVector twice = 2 * r.vector;
      CHECK_FALSE(twice == g.delta());
    }
  }
}

TEST_CASE("reflections preserve the form and are involutions") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> d(-4, 4);
  for (const auto& s : all_groups()) {
    const auto& g = pipeline(s).graph;
    BilinearForm form(g);
    for (int t = 0; t < 10; ++t) {
      RootVector x(g.size()), y(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        x[i] = d(rng);
        y[i] = d(rng);
      }
      for (std::size_t i = 0; i < g.size(); ++i) {
        auto rx = reflect(form, i, x);
        CHECK(reflect(form, i, rx) == x);
        CHECK(form.eval(rx, reflect(form, i, y)) == form.eval(x, y));
      }
      CHECK(reflect(form, 0, RootVector::simple(g.size(), 0)) == -RootVector::simple(g.size(), 0));
    }
  }
}

TEST_CASE("words and matrices") {
  const auto& g = pipeline("tetra").graph;
  BilinearForm form(g);
  auto w = coxeter_word(g, standard_height(g), Direction::Plus);
  auto m = word_matrix(form, w.sequence);
  REQUIRE(m.size() == g.size());
  RootVector x(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) x[i] = static_cast<long>(i) - 2;
  RootVector via(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) via += x[i] * m[i];
  CHECK(via == apply_word(form, w, x));
  CHECK(apply_word(form, w, g.delta()) == g.delta());
  CHECK(is_positive(g.delta()));
  CHECK_FALSE(is_positive(RootVector(g.size())));
  CHECK_FALSE(is_positive(RootVector::simple(g.size(), 1) - RootVector::simple(g.size(), 2)));
}

TEST_CASE("positive real roots") {
  const auto& g = pipeline("dihedral:2").graph;
  BilinearForm form(g);
  auto pr = positive_real_roots(form, g.delta(), 0);
  CHECK(pr.size() == 12);  // positive roots of D4
  auto pr1 = positive_real_roots(form, g.delta(), 1);
  CHECK(pr1.size() == 12 + 24);
  for (const auto& r : pr1) {
    CHECK(is_positive(r));
    CHECK(form.norm(r) == 2);
  }
  CHECK_THROWS_AS(enumerate_roots(form, g.delta(), -1, 3), Error);
}
