#include "mckay/verify.hpp"

#include <algorithm>

#include "mckay/an_model.hpp"
#include "mckay/error.hpp"
#include "mckay/kgroup.hpp"
#include "mckay/linalg.hpp"
#include "mckay/mesh.hpp"
#include "mckay/root_lattice.hpp"

namespace mckay {

Pipeline::Pipeline(const GroupSpec& s, std::size_t max_order)
    : spec(s),
      group(build_group(s, max_order)),
      table(character_table(group)),
      graph(mckay_graph(table)),
      engine(graph, table) {}

std::unique_ptr<Pipeline> make_pipeline(const std::string& spec) {
  return std::make_unique<Pipeline>(GroupSpec::parse(spec));
}

HeightFunction random_height(const McKayGraph& graph, const HeightFunction& h, std::size_t steps, std::mt19937& rng) {
  HeightFunction cur = h;
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<Reversal> moves;
    for (std::size_t i = 0; i < graph.size(); ++i) {
      if (is_sink(graph, cur, i)) moves.push_back({i, Direction::Plus});
      if (is_source(graph, cur, i)) moves.push_back({i, Direction::Minus});
    }
    const auto m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    cur = reverse_at(graph, cur, m.vertex, m.dir);
  }
  return cur;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"characters", "mckay", "mesh", "ktheory", "coxeter", "cg", "an"};
  return names;
}

namespace {

std::string vtx(std::size_t i) { return std::to_string(i); }

void suite_characters(const Pipeline& p, SuiteReport& r) {
  const auto& t = p.table;
  const auto orth = check_orthogonality(t);
  r.check(orth.rows, "row orthogonality");
  r.check(orth.columns, "column orthogonality");
  r.check(orth.dimension_sum, "sum of squared dimensions equals |G|");
  r.check(t.size() == p.group.classes().size(), "number of irreducibles equals number of classes");
  r.check(t.group_order() == p.spec.expected_order(), "group order");
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& c = t[i];
    const long sign = c.parity ? -1 : 1;
    r.check(c.values[t.minus_one_class()] == CycloNum(sign * static_cast<long>(c.dim)),
            "chi(-I) = (-1)^p dim for irreducible " + vtx(i));
  }
  r.check(t.tautological()[t.minus_one_class()] == CycloNum(-2), "chi_V(-I) = -2");
  r.check(sym_power_character(t, 1) == t.tautological(), "V_1 = V");
  for (unsigned k = 0; k <= 6; ++k) {
    const auto chi = sym_power_character(t, k);
    r.check(chi[0] == CycloNum(static_cast<long>(k + 1)), "dim V_" + std::to_string(k));
    for (std::size_t i = 0; i < t.size(); ++i) {
      try {
        mult(t, i, chi);
        r.check(true, "");
      } catch (const Error&) {
        r.check(false, "V_" + std::to_string(k) + " is not a character");
      }
    }
  }
}

void suite_mckay(const Pipeline& p, SuiteReport& r) {
  const auto& g = p.graph;
  r.check(g.affine_type() == expected_affine_type(p.spec),
          "type " + g.affine_type().to_string() + " != " + expected_affine_type(p.spec).to_string());
  r.check(g.size() == p.group.classes().size(), "vertex count equals class count");
  for (std::size_t i = 0; i < g.size(); ++i) {
    r.check(g.delta()[i] == static_cast<long>(g.dim(i)), "delta_i = d_i at " + vtx(i));
    long s = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      s += g.multiplicity(i, j) * static_cast<long>(g.dim(j));
      r.check(g.multiplicity(i, j) == g.multiplicity(j, i), "symmetry at " + vtx(i) + "," + vtx(j));
      if (g.multiplicity(i, j)) r.check(g.parity(i) != g.parity(j), "edge " + vtx(i) + "-" + vtx(j) + " within a parity class");
    }
    r.check(2 * static_cast<long>(g.dim(i)) == s, "2 d_i = sum n(i,j) d_j at " + vtx(i));
  }
  r.check(g.dim(0) == 1 && g.parity(0) == 0, "vertex 0 is the trivial representation");
  BilinearForm f(g);
  r.check(f.eval(g.delta(), g.delta()) == 0, "(delta, delta) = 0");
  try {
    r.check(imaginary_root(g.multiplicities()) == g.delta(), "imaginary root recomputed");
  } catch (const Error& e) {
    r.check(false, e.what());
  }
}

void suite_mesh(const Pipeline& p, SuiteReport& r) {
  const auto& g = p.graph;
  const auto& e = p.engine;
  const auto w = ar_window(g, 0, 6);
  r.check(is_connected(w), "window [0,6] of Q^ is connected");
  for (const auto& q : w.vertices)
    for (const auto& q2 : w.vertices) {
      const auto m = mesh_quotient(g, w, q, q2);
      r.check(static_cast<long>(m.dimension()) == e.hom_dim(q, q2), "mesh dimension at " + q.to_string() + q2.to_string());
      if (q2.n < q.n) r.check(e.hom_dim(q, q2) == 0, "hom vanishes downward at " + q.to_string() + q2.to_string());
      if (q2.n >= q.n - 1) r.check(e.ext_dim(q, q2) == 0, "ext vanishes at " + q.to_string() + q2.to_string());
      // Serre duality: ext(F, G(-2)) = hom(G, F)
      r.check(e.ext_dim(q, {q2.i, q2.n - 2}) == e.hom_dim(q2, q), "Serre duality at " + q.to_string() + q2.to_string());
    }
  for (const auto& ed : w.edges) {
    r.check(e.hom_dim(ed.from, ed.to) == ed.multiplicity, "edge count at " + ed.from.to_string() + ed.to.to_string());
    r.check(e.hom_dim(ed.from, ed.to) == e.hom_dim(ed.to, {ed.from.i, ed.from.n + 2}),
            "pairing duality at " + ed.from.to_string() + ed.to.to_string());
  }
  // AR mesh recursion
  for (const auto& q : w.vertices)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (long n = q.n; n <= q.n + 4; ++n) {
        if (!is_legal(g, {i, n})) continue;
        long mid = 0;
        for (std::size_t j = 0; j < g.size(); ++j)
          if (g.multiplicity(i, j)) mid += g.multiplicity(i, j) * e.hom_dim(q, {j, n + 1});
        r.check(e.hom_dim(q, {i, n + 2}) == mid - e.hom_dim(q, {i, n}), "mesh recursion at " + q.to_string());
      }
}

std::vector<HeightFunction> sample_heights(const McKayGraph& g, std::size_t extra, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<HeightFunction> hs{standard_height(g)};
  for (std::size_t k = 0; k < extra; ++k) hs.push_back(random_height(g, hs[0], 5 + 3 * k, rng));
  return hs;
}

void suite_ktheory(const Pipeline& p, SuiteReport& r) {
  const auto& g = p.graph;
  const auto& e = p.engine;
  const std::size_t n = g.size();
  BilinearForm f(g);
  for (const auto& h : sample_heights(g, 3, 7)) {
    const std::string tag = " [h=" + h.to_string() + "]";
    for (long lvl = -5; lvl <= 4; ++lvl)
      for (std::size_t i = 0; i < n; ++i) {
        if (!is_legal(g, {i, lvl})) continue;
        const auto rel = ar_sequence(g, {i, lvl}).relation();
        r.check(k_normalize(g, rel, h) == KCoords(n, 0), "AR relation at (" + vtx(i) + "," + std::to_string(lvl) + ")" + tag);
        const auto x = KClass::symbol({i, lvl});
        const auto c = k_normalize(g, x, h);
        r.check(k_normalize(g, from_coords(h, c), h) == c, "normalization is idempotent" + tag);
        r.check(rphi(e, h, x) == rphi_direct(e, h, x), "rphi routes agree at (" + vtx(i) + "," + std::to_string(lvl) + ")" + tag);
      }
    const auto cols = rphi_basis_images(e, h);
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = cols[b][a];
    const Rational det = determinant(m);
    r.check(det == 1 || det == -1, "rphi basis matrix is unimodular" + tag);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto x = KClass::symbol({a, h[a]}), y = KClass::symbol({b, h[b]});
        r.check(sym_pair(e, x, y) == f.eval(rphi(e, h, x), rphi(e, h, y)), "Euler form matches the Cartan form" + tag);
        r.check(euler_pair(e, x, y) == -euler_pair(e, y, coxeter(x)), "<x,y> = -<y,Cx>" + tag);
        r.check(e.ext_dim({a, h[a]}, {b, h[b]}) == 0, "ext vanishes on the band" + tag);
      }
  }
  const auto h = standard_height(g);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ai = RootVector::simple(n, i);
    if (g.parity(i) == 0) {
      r.check(rphi(e, h, KClass::symbol({i, 0})) == ai, "[X_i] -> a_i at " + vtx(i));
    } else {
      RootVector img = ai;
      for (std::size_t j = 0; j < n; ++j) img[j] += g.multiplicity(i, j);
      r.check(rphi(e, h, KClass::symbol({i, 1})) == img, "[X_i(1)] image at " + vtx(i));
      r.check(rphi(e, h, KClass::symbol({i, -1})) == -ai, "[X_i(-1)] -> -a_i at " + vtx(i));
    }
  }
  const auto d = delta_classes(g);
  r.check(rphi(e, h, d.delta) == g.delta(), "rphi(delta) = delta");
  r.check(k_normalize(g, twist(d.delta, -2), h) == k_normalize(g, d.delta, h), "C delta = delta");
  r.check(k_normalize(g, twist(d.delta0, -2), h) == k_normalize(g, d.delta0 - 2 * d.delta, h), "C delta0 = delta0 - 2 delta");
  const auto rd = rank_degree(e, d.delta);
  r.check(rd.rank == 0 && rd.degree == static_cast<long>(g.group_order() / 2), "rk delta = 0, deg delta = |G|/2");
  r.check(polarize(e, d.delta) == Polarity::PositiveTorsion, "delta is positive torsion");
  for (long lvl = -3; lvl <= 3; ++lvl)
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_legal(g, {i, lvl})) continue;
      const auto x = KClass::symbol({i, lvl});
      r.check(polarize(e, x) == Polarity::PositiveFree, "[X_q] is positive free");
      r.check(polarize(e, -x) == Polarity::NegativeFree, "-[X_q] is negative free");
      r.check(sym_pair(e, d.delta, x) == 0, "(delta, x) = 0");
      r.check(rank_degree(e, x).rank == static_cast<long>(g.dim(i)), "rk [X_q] = d_i");
      r.check(rank_degree(e, ar_sequence(g, {i, lvl}).relation()).rank == 0 &&
                  rank_degree(e, ar_sequence(g, {i, lvl}).relation()).degree == 0,
              "rank and degree vanish on AR relations");
    }
}

void suite_coxeter(const Pipeline& p, SuiteReport& r) {
  const auto& g = p.graph;
  const auto& e = p.engine;
  const std::size_t n = g.size();
  BilinearForm f(g);
  std::mt19937 rng(11);
  auto hs = sample_heights(g, 3, 13);
  for (const auto& h : hs) {
    const std::string tag = " [h=" + h.to_string() + "]";
    const auto wp = coxeter_word(g, h, Direction::Plus);
    const auto wm = coxeter_word(g, h, Direction::Minus);
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = KClass::symbol({i, h[i]});
      r.check(rphi(e, h, twist(x, -2)) == apply_word(f, wp, rphi(e, h, x)), "Coxeter square at " + vtx(i) + tag);
      const auto a = RootVector::simple(n, i);
      r.check(apply_word(f, wm, apply_word(f, wp, a)) == a, "C^- inverts C^+ at " + vtx(i) + tag);
    }
    // any reordering of commuting steps gives the same map
    auto alt = wp.sequence;
    std::shuffle(alt.begin(), alt.end(), rng);
    HeightFunction cur = h;
    bool valid = true;
    for (auto v : alt) {
      if (!is_sink(g, cur, v)) {
        valid = false;
        break;
      }
      cur = reverse_at(g, cur, v, Direction::Plus);
    }
    if (valid) r.check(word_matrix(f, alt) == word_matrix(f, wp.sequence), "Coxeter element depends only on h" + tag);
  }
  // reflection intertwining over a random walk
  HeightFunction cur = standard_height(g);
  for (std::size_t step = 0; step < 20; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      Direction d;
      if (is_sink(g, cur, i)) d = Direction::Plus;
      else if (is_source(g, cur, i)) d = Direction::Minus;
      else continue;
      const auto h2 = reverse_at(g, cur, i, d);
      for (std::size_t j = 0; j < n; ++j) {
        const auto x = KClass::symbol({j, cur[j]});
        r.check(rphi(e, h2, x) == reflect(f, i, rphi(e, cur, x)), "reflection intertwining at " + vtx(i));
      }
    }
    cur = random_height(g, cur, 1, rng);
  }
  for (std::size_t k = 0; k < 20; ++k) {
    const auto a = random_height(g, standard_height(g), 4 + k, rng);
    const auto b = random_height(g, standard_height(g), 9 + k, rng);
    const auto steps = connect_heights(g, a, b);
    r.check(2 * static_cast<long>(steps.size()) == height_distance(a, b), "connect_heights length");
    HeightFunction c = a;
    for (const auto& s : steps) c = reverse_at(g, c, s.vertex, s.dir);
    r.check(c == b, "connect_heights reaches the target");
  }
}

void suite_cg(const Pipeline& p, SuiteReport& r) {
  for (const auto& h : sample_heights(p.graph, 1, 17)) {
    const auto rep = verify_cg(p.engine, h, 4);
    r.checks += rep.checked;
    for (const auto& f : rep.failures) r.failures.push_back(f + " [h=" + h.to_string() + "]");
  }
  // rank vanishes exactly on the imaginary direction and C^g fixes it
  const auto d = delta_classes(p.graph);
  r.check(rank_degree(p.engine, d.delta).rank == 0, "rk delta = 0");
}

void suite_an(const Pipeline& p, SuiteReport& r) {
  const auto rep = verify_an_model(p.graph, 2);
  r.checks += rep.checks;
  r.failures.insert(r.failures.end(), rep.failures.begin(), rep.failures.end());
}

}  // namespace

SuiteReport run_suite(const Pipeline& p, const std::string& suite, bool skip_unsupported) {
  SuiteReport r;
  r.suite = suite;
  try {
    if (suite == "characters") suite_characters(p, r);
    else if (suite == "mckay") suite_mckay(p, r);
    else if (suite == "mesh") suite_mesh(p, r);
    else if (suite == "ktheory") suite_ktheory(p, r);
    else if (suite == "coxeter") suite_coxeter(p, r);
    else if (suite == "cg") suite_cg(p, r);
    else if (suite == "an") {
      if (p.spec.family != GroupFamily::BinaryCyclic) {
        if (!skip_unsupported) throw Error(ErrorKind::UnsupportedGroup, "the an suite needs a binary cyclic group");
        r.skipped = true;
        r.note = "not a binary cyclic group";
      } else {
        suite_an(p, r);
      }
    } else {
      throw Error(ErrorKind::Parse, "unknown suite '" + suite + "'");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::UnsupportedGroup) throw;
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  return r;
}

}  // namespace mckay
