#include <doctest.h>

#include "mckay/error.hpp"
#include "mckay/mesh.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::test::all_groups;
using mckay::test::pipeline;

namespace {

// Coefficients of num / prod (1 - t^d) up to degree top.
std::vector<long> series(std::vector<long> num, const std::vector<unsigned>& dens, std::size_t top) {
  num.resize(top + 1, 0);
  for (unsigned d : dens)
    for (std::size_t k = d; k <= top; ++k) num[k] += num[k - d];
  return num;
}

// Hilbert series of the invariant ring of C[x,y].
std::vector<long> molien(const GroupSpec& s, std::size_t top) {
  std::vector<long> one(1, 1);
  auto plus = [&](std::size_t deg) {
    std::vector<long> v(deg + 1, 0);
    v[0] = 1;
    v[deg] += 1;
    return v;
  };
  const unsigned n = s.param;
  switch (s.family) {
    case GroupFamily::BinaryCyclic: {
      // x^a y^b with a = b mod 2n
      std::vector<long> out(top + 1, 0);
      for (std::size_t k = 0; k <= top; ++k)
        for (std::size_t a = 0; a <= k; ++a)
          if ((static_cast<long>(2 * a) - static_cast<long>(k)) % static_cast<long>(2 * n) == 0) ++out[k];
      return out;
    }
    case GroupFamily::BinaryDihedral: return series(plus(2 * n + 2), {4, 2 * n}, top);
    case GroupFamily::BinaryTetrahedral: return series(plus(12), {6, 8}, top);
    case GroupFamily::BinaryOctahedral: return series(plus(18), {8, 12}, top);
    case GroupFamily::BinaryIcosahedral: return series(plus(30), {12, 20}, top);
  }
  return one;
}

}  // namespace

TEST_CASE("invariant dimensions follow the Molien series") {
  for (const auto& s : {"cyclic:1", "cyclic:3", "dihedral:2", "dihedral:5", "tetra", "octa", "icosa"}) {
    CAPTURE(s);
    const auto& p = pipeline(s);
    auto m = molien(p.spec, 64);
    for (long k = 0; k <= 64; k += 2) {
      CHECK(p.engine.hom_dim({0, 0}, {0, k}) == m[k]);
      CHECK(p.engine.hom_dim({0, 4}, {0, 4 + k}) == m[k]);
    }
    for (long k = 1; k <= 64; k += 2) CHECK(m[k] == 0);
  }
}

TEST_CASE("hom from the structure sheaf counts sym power multiplicities") {
  const auto& p = pipeline("icosa");
  for (unsigned k = 0; k <= 12; ++k) {
    auto chi = sym_power_character(p.table, k);
    for (std::size_t j = 0; j < p.graph.size(); ++j) {
      if (!is_legal(p.graph, {j, static_cast<long>(k)})) continue;
      CHECK(p.engine.hom_dim({0, 0}, {j, static_cast<long>(k)}) == mult(p.table, p.graph.irrep(j), chi));
    }
  }
}

TEST_CASE("legality and windows") {
  const auto& g = pipeline("tetra").graph;
  CHECK(is_legal(g, {0, 0}));
  CHECK_FALSE(is_legal(g, {0, 1}));
  try {
    require_legal(g, {0, 1});
    FAIL("illegal vertex accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parity);
  }
  auto w = ar_window(g, 0, 3);
  CHECK(w.vertices.size() == 2 * g.size());
  CHECK(is_connected(w));
  CHECK(w.contains({0, 2}));
  CHECK_FALSE(w.contains({0, 4}));
  CHECK(w.edges.size() == 3 * g.edge_count());
  CHECK_THROWS_AS(ar_window(g, 3, 0), Error);
  auto one = ar_window(g, 0, 0);
  CHECK_FALSE(is_connected(one));
}

TEST_CASE("mesh quotient dimensions equal hom dimensions") {
  for (const auto& s : all_groups()) {
    CAPTURE(s);
    const auto& p = pipeline(s);
    auto w = ar_window(p.graph, 0, 5);
    for (const auto& q : w.vertices)
      for (const auto& q2 : w.vertices) {
        auto m = mesh_quotient(p.graph, w, q, q2);
        CHECK(static_cast<long>(m.dimension()) == p.engine.hom_dim(q, q2));
        CHECK(m.relation_rank() + m.dimension() == m.paths().size());
      }
    CHECK_THROWS_AS(mesh_quotient(p.graph, w, {0, 0}, {0, 8}), Error);
  }
}

TEST_CASE("paths reduce to the basis") {
  const auto& p = pipeline("dihedral:2");
  MeshQuotient m(p.graph, 2, 2, 2);  // loops of length 2 at the center of D~4
  CHECK(m.paths().size() == 4);
  CHECK(m.dimension() == 3);
  for (std::size_t b = 0; b < m.dimension(); ++b) {
    std::vector<Rational> c(m.paths().size(), 0);
    c[m.basis()[b]] = 1;
    auto red = m.reduce(c);
    for (std::size_t k = 0; k < red.size(); ++k) CHECK(red[k] == (k == b ? 1 : 0));
  }
  // the mesh relation at the center: the sum of the four loops vanishes up to sign
  CHECK(m.find({0, 0}) != MeshQuotient::npos);
  CHECK(m.find({5, 5}) == MeshQuotient::npos);
  MeshQuotient leaf(p.graph, 0, 0, 2);
  CHECK(leaf.dimension() == 0);
}

TEST_CASE("precomposition respects composition counts") {
  const auto& p = pipeline("tetra");
  const auto& g = p.graph;
  auto es = edges(g);
  for (std::size_t k = 0; k < es.size(); ++k) {
    MeshQuotient from(g, es[k].v, 0, 4), to(g, es[k].u, 0, 5);
    auto a = precompose(g, from, to, k);
    CHECK(a.rows() == to.dimension());
    CHECK(a.cols() == from.dimension());
    // the relation ideal is closed under prepending an edge
    for (std::size_t c = 0; c < from.paths().size(); ++c) {
      std::vector<Rational> v(from.paths().size(), 0);
      v[c] = 1;
      auto x = from.reduce(v);
      EdgePath longer{k};
      longer.insert(longer.end(), from.paths()[c].begin(), from.paths()[c].end());
      std::vector<Rational> w(to.paths().size(), 0);
      w[to.find(longer)] = 1;
      auto y = to.reduce(w);
      for (std::size_t r = 0; r < y.size(); ++r) {
        Rational s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += a(r, j) * x[j];
        CHECK(s == y[r]);
      }
    }
  }
}

TEST_CASE("Serre duality and Euler form") {
  for (const auto& s : all_groups()) {
    const auto& e = pipeline(s).engine;
    const auto& g = pipeline(s).graph;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        for (long n = -4; n <= 4; ++n) {
          ARVertex q{i, static_cast<long>(g.parity(i))}, q2{j, n};
          if (!is_legal(g, q2)) continue;
          CHECK(e.ext_dim(q, {j, n - 2}) == e.hom_dim(q2, q));
          CHECK(e.euler(q, q2) == e.hom_dim(q, q2) - e.ext_dim(q, q2));
        }
  }
}

TEST_CASE("hom tables") {
  const auto& p = pipeline("cyclic:2");
  auto t = hom_table(p.engine, 0, 2);
  REQUIRE(t.hom.size() == t.window.vertices.size());
  for (std::size_t a = 0; a < t.hom.size(); ++a) {
    CHECK(t.hom[a][a] == 1);
    for (std::size_t b = 0; b < t.hom.size(); ++b) {
      CHECK(t.hom[a][b] == p.engine.hom_dim(t.window.vertices[a], t.window.vertices[b]));
      CHECK(t.ext1[a][b] == p.engine.ext_dim(t.window.vertices[a], t.window.vertices[b]));
    }
  }
}
