#include <doctest.h>

#include "mckay/an_model.hpp"
#include "mckay/error.hpp"
#include "mckay/root_lattice.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::test::pipeline;

TEST_CASE("model verification for small cyclic groups") {
  for (const auto& s : {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6"}) {
    CAPTURE(s);
    auto r = verify_an_model(pipeline(s).graph, 2);
    for (const auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("model basics") {
  AnModel m(4);
  CHECK(m.inner(m.e(0), m.e(0)) == 1);
  CHECK(m.inner(m.e(0), m.e(1)) == 0);
  CHECK(m.inner(m.delta(), m.e(2)) == 0);
  AnVector sum(4);
  for (std::size_t i = 0; i < 4; ++i) sum += m.simple_root(i);
  CHECK(sum == m.delta());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(m.inner(m.simple_root(i), m.simple_root(i)) == 2);
    CHECK(m.reflect(i, m.simple_root(i)) == Rational(-1) * m.simple_root(i));
    CHECK(m.is_root(m.simple_root(i)));
    auto rf = m.root_form(m.simple_root(i));
    CHECK(rf.i != rf.j);
  }
  CHECK_FALSE(m.is_root(m.e(0)));
  CHECK_THROWS_AS(m.root_form(m.e(0)), Error);
  CHECK_THROWS_AS(AnModel(3), Error);
}

TEST_CASE("embedding round trip") {
  const auto& g = pipeline("cyclic:3").graph;  // A~5
  AnModel m(g.size());
  BilinearForm form(g);
  for (const auto& r : enumerate_roots(form, g.delta(), 2, 10)) {
    CHECK(m.pull_back(m.embed(r.vector)) == r.vector);
    if (r.real) {
      CHECK(m.is_root(m.embed(r.vector)));
      CHECK(m.inner(m.embed(r.vector), m.embed(r.vector)) == 2);
    }
  }
  AnVector half(g.size());
  half.e[0] = make_rational(1, 2);
  try {
    m.pull_back(half);
    FAIL("non-lattice vector pulled back");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("non-cyclic groups have no model") {
  try {
    verify_an_model(pipeline("dihedral:2").graph, 1);
    FAIL("model built for D~4");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedGroup);
  }
}
