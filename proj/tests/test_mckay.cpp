#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mckay/error.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::test::all_groups;
using mckay::test::pipeline;

namespace {

std::vector<AffineType> all_types() {
  std::vector<AffineType> t;
  for (unsigned r = 1; r <= 9; ++r) t.push_back({AffineFamily::A, r});
  for (unsigned r = 4; r <= 9; ++r) t.push_back({AffineFamily::D, r});
  for (unsigned r = 6; r <= 8; ++r) t.push_back({AffineFamily::E, r});
  return t;
}

Multiplicities permuted(const Multiplicities& g, const std::vector<std::size_t>& perm) {
  Multiplicities out(g.size(), std::vector<int>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[perm[i]][perm[j]] = g[i][j];
  return out;
}

ErrorKind kind_of(const Multiplicities& g) {
  try {
    classify_affine(g);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("type names") {
  CHECK(AffineType{AffineFamily::A, 7}.to_string() == "A~7");
  CHECK(AffineType{AffineFamily::D, 4}.to_string() == "D~4");
  CHECK(AffineType{AffineFamily::E, 8}.to_string() == "E~8");
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937 rng(17);
  for (const auto& t : all_types()) {
    CAPTURE(t.to_string());
    auto ref = reference_diagram(t);
    std::vector<std::size_t> perm(ref.size());
    for (int trial = 0; trial < 8; ++trial) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto g = permuted(ref, perm);
      auto c = classify_affine(g);
      CHECK(c.type == t);
      for (std::size_t u = 0; u < g.size(); ++u) {
        CHECK(c.from_canonical[c.to_canonical[u]] == u);
        for (std::size_t v = 0; v < g.size(); ++v) CHECK(g[u][v] == ref[c.to_canonical[u]][c.to_canonical[v]]);
      }
    }
  }
}

TEST_CASE("imaginary roots of the reference diagrams") {
  for (const auto& t : all_types()) {
    auto ref = reference_diagram(t);
    auto d = imaginary_root(ref);
    CHECK(d[0] == 1);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      long s = 2 * d[i];
      for (std::size_t j = 0; j < ref.size(); ++j) s -= ref[i][j] * d[j];
      CHECK(s == 0);
    }
  }
  CHECK(imaginary_root(reference_diagram({AffineFamily::E, 8})).coords() ==
        std::vector<long>{1, 2, 3, 4, 5, 6, 4, 2, 3});
  CHECK(imaginary_root(reference_diagram({AffineFamily::E, 6})).coords() == std::vector<long>{1, 2, 3, 2, 1, 2, 1});
  CHECK(imaginary_root(reference_diagram({AffineFamily::D, 6})).coords() ==
        std::vector<long>{1, 1, 2, 2, 2, 1, 1});
  CHECK(imaginary_root(reference_diagram({AffineFamily::A, 1})).coords() == std::vector<long>{1, 1});
}

TEST_CASE("non-affine graphs are rejected") {
  // finite A3
  CHECK(kind_of({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}) == ErrorKind::NotAffine);
  // star with five leaves is indefinite
  Multiplicities star(6, std::vector<int>(6, 0));
  for (std::size_t v = 1; v < 6; ++v) star[0][v] = star[v][0] = 1;
  CHECK(kind_of(star) == ErrorKind::NotAffine);
  // triple edge
  CHECK(kind_of({{0, 3}, {3, 0}}) == ErrorKind::NotAffine);
  // disconnected union of two A~1
  CHECK(kind_of({{0, 2, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}}) == ErrorKind::NotAffine);
  // T(2,3,7) is hyperbolic
  CHECK_THROWS_AS(imaginary_root(reference_diagram({AffineFamily::E, 9})), Error);
  CHECK_THROWS_AS(reference_diagram({AffineFamily::D, 3}), Error);
}

TEST_CASE("McKay graphs of the binary polyhedral groups") {
  for (const auto& s : all_groups()) {
    CAPTURE(s);
    const auto& p = pipeline(s);
    const auto& g = p.graph;
    CHECK(g.affine_type() == expected_affine_type(p.spec));
    CHECK(g.dim(0) == 1);
    CHECK(g.parity(0) == 0);
    CHECK(p.table[g.irrep(0)].values == ClassFunction(p.table.num_classes(), CycloNum(1)));
    long sq = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(static_cast<long>(g.dim(i)) == g.delta()[i]);
      sq += static_cast<long>(g.dim(i)) * g.dim(i);
      long s2 = 0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        s2 += g.multiplicity(i, j) * static_cast<long>(g.dim(j));
        CHECK(g.multiplicity(i, j) == g.multiplicity(j, i));
        if (g.multiplicity(i, j) > 0) CHECK(g.parity(i) != g.parity(j));
      }
      CHECK(s2 == 2 * static_cast<long>(g.dim(i)));
      // edges agree with the tensor product decomposition
      auto vx = pointwise_product(p.table.tautological(), p.table[g.irrep(i)].values);
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(mult(p.table, g.irrep(j), vx) == g.multiplicity(i, j));
    }
    CHECK(sq == static_cast<long>(g.group_order()));
    CHECK(g.multiplicities() == reference_diagram(g.affine_type()));
  }
}

TEST_CASE("expected types") {
  CHECK(expected_affine_type(GroupSpec::parse("cyclic:4")) == AffineType{AffineFamily::A, 7});
  CHECK(expected_affine_type(GroupSpec::parse("dihedral:2")) == AffineType{AffineFamily::D, 4});
  CHECK(expected_affine_type(GroupSpec::parse("dihedral:5")) == AffineType{AffineFamily::D, 7});
  CHECK(expected_affine_type(GroupSpec::parse("tetra")) == AffineType{AffineFamily::E, 6});
  CHECK(expected_affine_type(GroupSpec::parse("octa")) == AffineType{AffineFamily::E, 7});
  CHECK(expected_affine_type(GroupSpec::parse("icosa")) == AffineType{AffineFamily::E, 8});
  CHECK(pipeline("icosa").graph.dims() == std::vector<unsigned>{1, 2, 3, 4, 5, 6, 4, 2, 3});
  CHECK(pipeline("cyclic:1").graph.edge_count() == 2);
  CHECK(pipeline("cyclic:3").graph.edge_count() == 6);
  CHECK(pipeline("icosa").graph.edge_count() == 8);
}
