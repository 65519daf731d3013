#include <doctest.h>

#include <random>

#include "mckay/error.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::test::all_groups;
using mckay::test::pipeline;

namespace {

ErrorKind parse_kind(const McKayGraph& g, const std::string& text) {
  try {
    parse_height(g, text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("standard height is the parity") {
  for (const auto& s : all_groups()) {
    const auto& g = pipeline(s).graph;
    auto h = standard_height(g);
    CHECK_NOTHROW(validate_height(g, h));
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(h[i] == g.parity(i));
      // height 0 vertices are sinks and height 1 vertices are sources
      CHECK(is_sink(g, h, i) == (h[i] == 0));
      CHECK(is_source(g, h, i) == (h[i] == 1));
    }
  }
}

TEST_CASE("parsing heights") {
  const auto& g = pipeline("dihedral:2").graph;  // D~4, center 2
  CHECK(parse_height(g, "std") == standard_height(g));
  CHECK(parse_height(g, "0,0,1,0,0").values == std::vector<long>{0, 0, 1, 0, 0});
  CHECK(parse_height(g, "i0=2,i1=0,i2=1,i3=0,i4=0").values == std::vector<long>{2, 0, 1, 0, 0});
  CHECK(parse_height(g, "i0=2,i1=0,i2=1,i3=0,i4=0").to_string() == "i0=2,i1=0,i2=1,i3=0,i4=0");
  CHECK(parse_kind(g, "0,0,1,0") == ErrorKind::Parse);
  CHECK(parse_kind(g, "0,0,2,0,0") == ErrorKind::Constraint);
  CHECK(parse_kind(g, "0,0,3,0,0") == ErrorKind::Constraint);
  CHECK(parse_kind(g, "0,0,x,0,0") == ErrorKind::Parse);
  CHECK(parse_kind(g, "i0=0,i0=0") == ErrorKind::Parse);
  CHECK(parse_kind(g, "") == ErrorKind::Parse);
}

TEST_CASE("arrows point down the height") {
  for (const auto& s : all_groups()) {
    const auto& g = pipeline(s).graph;
    std::mt19937 rng(1);
    auto h = random_height(g, standard_height(g), 30, rng);
    auto q = orient(g, h);
    auto es = edges(g);
    REQUIRE(q.arrows().size() == es.size());
    REQUIRE(es.size() == g.edge_count());
    for (std::size_t k = 0; k < es.size(); ++k) {
      const auto& a = q.arrow(k);
      CHECK(((a.source == es[k].u && a.target == es[k].v) || (a.source == es[k].v && a.target == es[k].u)));
      CHECK(h[a.target] == h[a.source] - 1);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(q.is_sink(i) == is_sink(g, h, i));
      CHECK(q.is_source(i) == is_source(g, h, i));
    }
    CHECK(q.same_orientation(orient(g, h.shifted(4))));
  }
}

TEST_CASE("reversal at sinks and sources") {
  const auto& g = pipeline("tetra").graph;
  auto h = standard_height(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (h[i] == 0) {
      auto r = reverse_at(g, h, i, Direction::Plus);
      CHECK(r[i] == 2);
      CHECK(is_source(g, r, i));
      CHECK(reverse_at(g, r, i, Direction::Minus) == h);
      CHECK_THROWS_AS(reverse_at(g, h, i, Direction::Minus), Error);
    } else {
      try {
        reverse_at(g, h, i, Direction::Plus);
        FAIL("reversed at a non-sink");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotASink);
      }
    }
  }
}

TEST_CASE("connect_heights reaches the target with minimal length") {
  for (const auto& s : all_groups()) {
    CAPTURE(s);
    const auto& g = pipeline(s).graph;
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
      auto a = random_height(g, standard_height(g), 25, rng);
      auto b = random_height(g, standard_height(g), 25, rng);
      auto steps = connect_heights(g, a, b);
      CHECK(static_cast<long>(steps.size()) * 2 == height_distance(a, b));
      auto cur = a;
      for (const auto& st : steps) cur = reverse_at(g, cur, st.vertex, st.dir);
      CHECK(cur == b);
    }
  }
}

TEST_CASE("Coxeter words") {
  for (const auto& s : all_groups()) {
    const auto& g = pipeline(s).graph;
    auto h = standard_height(g);
    auto w = coxeter_word(g, h, Direction::Plus);
    REQUIRE(w.sequence.size() == g.size());
    // standard word: all even vertices first, then the odd ones
    bool seen_odd = false;
    for (auto v : w.sequence) {
      if (g.parity(v) == 1) seen_odd = true;
      else CHECK_FALSE(seen_odd);
    }
    auto m = coxeter_word(g, h, Direction::Minus);
    CHECK(m.direction == Direction::Minus);
    CHECK(m.sequence.size() == g.size());
    CHECK(to_char(w.direction) == '+');
  }
}
