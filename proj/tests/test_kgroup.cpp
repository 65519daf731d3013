#include <doctest.h>

#include <random>

#include "mckay/error.hpp"
#include "mckay/kgroup.hpp"
#include "mckay/linalg.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::test::all_groups;
using mckay::test::pipeline;

namespace {

KClass random_class(const McKayGraph& g, std::mt19937& rng, long spread) {
  std::uniform_int_distribution<long> coef(-3, 3), lvl(-spread, spread);
  std::uniform_int_distribution<std::size_t> v(0, g.size() - 1);
  KClass x;
  for (int t = 0; t < 4; ++t) {
    std::size_t i = v(rng);
    long n = lvl(rng);
    if ((n - g.parity(i)) % 2 != 0) ++n;
    x.add({i, n}, coef(rng));
  }
  return x;
}

}  // namespace

TEST_CASE("class arithmetic") {
  auto a = KClass::symbol({0, 0}, 2) + KClass::symbol({1, 1});
  CHECK(a.coefficient({0, 0}) == 2);
  CHECK(a.coefficient({3, 3}) == 0);
  CHECK((a - a).is_zero());
  CHECK((3 * a).coefficient({1, 1}) == 3);
  CHECK(-a + a == KClass());
  CHECK(twist(a, 4).coefficient({0, 4}) == 2);
  CHECK(coxeter(a).coefficient({1, -1}) == 1);
  try {
    twist(a, 1);
    FAIL("odd twist accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parity);
  }
}

TEST_CASE("AR relations normalize to zero for every height") {
  for (const auto& s : all_groups()) {
    CAPTURE(s);
    const auto& p = pipeline(s);
    const auto& g = p.graph;
    std::mt19937 rng(31);
    for (int t = 0; t < 3; ++t) {
      auto h = random_height(g, standard_height(g), 10 * t, rng);
      for (long n = -6; n <= 6; ++n)
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!is_legal(g, {i, n})) continue;
          auto seq = ar_sequence(g, {i, n});
          CHECK(seq.left == KClass::symbol({i, n}));
          CHECK(seq.right == KClass::symbol({i, n + 2}));
          CHECK(k_normalize(g, seq.relation(), h) == KCoords(g.size(), 0));
          CHECK(rphi_direct(p.engine, h, seq.relation()).is_zero());
        }
    }
  }
}

TEST_CASE("normalization is linear and agrees with rphi") {
  for (const auto& s : {"cyclic:2", "dihedral:3", "tetra", "icosa"}) {
    const auto& p = pipeline(s);
    const auto& g = p.graph;
    std::mt19937 rng(41);
    auto h = random_height(g, standard_height(g), 12, rng);
    for (int t = 0; t < 25; ++t) {
      auto x = random_class(g, rng, 8), y = random_class(g, rng, 8);
      auto cx = k_normalize(g, x, h), cy = k_normalize(g, y, h), cxy = k_normalize(g, x + y, h);
      for (std::size_t i = 0; i < g.size(); ++i) CHECK(cxy[i] == cx[i] + cy[i]);
      CHECK(rphi(p.engine, h, x) == rphi_direct(p.engine, h, x));
      CHECK(k_normalize(g, from_coords(h, cx), h) == cx);
      // injectivity of rphi on K_0
      CHECK((rphi(p.engine, h, x) == rphi(p.engine, h, y)) == (cx == cy));
    }
  }
}

TEST_CASE("rphi images of the band are a basis") {
  for (const auto& s : all_groups()) {
    const auto& p = pipeline(s);
    const auto& g = p.graph;
    std::mt19937 rng(43);
    auto h = random_height(g, standard_height(g), 15, rng);
    auto cols = rphi_basis_images(p.engine, h);
    Matrix m(g.size(), g.size());
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) m(a, b) = cols[b][a];
    auto d = determinant(m);
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("Euler form") {
  for (const auto& s : {"cyclic:3", "dihedral:2", "octa"}) {
    const auto& p = pipeline(s);
    const auto& g = p.graph;
    BilinearForm f(g);
    std::mt19937 rng(47);
    auto h = standard_height(g);
    for (int t = 0; t < 15; ++t) {
      auto x = random_class(g, rng, 4), y = random_class(g, rng, 4);
      CHECK(sym_pair(p.engine, x, y) == f.eval(rphi(p.engine, h, x), rphi(p.engine, h, y)));
      CHECK(euler_pair(p.engine, x, y) == -euler_pair(p.engine, y, coxeter(x)));
      CHECK(euler_pair(p.engine, twist(x, 2), twist(y, 2)) == euler_pair(p.engine, x, y));
    }
  }
}

TEST_CASE("delta classes, rank and degree") {
  for (const auto& s : all_groups()) {
    CAPTURE(s);
    const auto& p = pipeline(s);
    const auto& g = p.graph;
    auto d = delta_classes(g);
    auto h = standard_height(g);
    CHECK(rphi(p.engine, h, d.delta) == g.delta());
    auto rd = rank_degree(p.engine, d.delta);
    CHECK(rd.rank == 0);
    CHECK(rd.degree == static_cast<long>(g.group_order() / 2));
    CHECK(rank_degree(p.engine, d.delta0).rank == static_cast<long>(g.group_order() / 2));
    CHECK(polarize(p.engine, d.delta) == Polarity::PositiveTorsion);
    CHECK(polarize(p.engine, -d.delta) == Polarity::NegativeTorsion);
    CHECK(polarize(p.engine, KClass()) == Polarity::Zero);
    CHECK(polarize(p.engine, KClass::symbol({0, 0})) == Polarity::PositiveFree);
    try {
      polarize(p.engine, ar_sequence(g, {0, 0}).relation());
      FAIL("AR relation classified");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Unclassifiable);
    }
  }
  CHECK(to_string(Polarity::PositiveFree) == "positive-free");
}

TEST_CASE("C^g acts as a translation") {
  for (const auto& s : all_groups()) {
    CAPTURE(s);
    const auto& p = pipeline(s);
    std::mt19937 rng(53);
    auto h = random_height(p.graph, standard_height(p.graph), 9, rng);
    auto rep = verify_cg(p.engine, h, 4);
    CHECK(rep.g == static_cast<long>(p.graph.group_order() / 2));
    CHECK(rep.checked > p.graph.size());
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());
  }
}
