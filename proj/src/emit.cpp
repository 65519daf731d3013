#include "mckay/emit.hpp"

#include <sstream>

namespace mckay {

Json cyclo_json(const CycloNum& x) {
  Json j;
  j["conductor"] = x.conductor();
  Json c = Json::object();
  const auto& co = x.coeffs();
  for (std::size_t k = 0; k < co.size(); ++k)
    if (sgn(co[k]) != 0) c[std::to_string(k)] = to_string(co[k]);
  j["coeffs"] = c;
  return j;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json root_json(const RootVector& v) { return Json(v.coords()); }

namespace {

Json element_json(const GroupElement& g) {
  Json j = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) row.push_back(cyclo_json(g(r, c)));
    j.push_back(row);
  }
  return j;
}

Json height_json(const HeightFunction& h) { return Json(h.values); }

}  // namespace

Json group_json(const FiniteSubgroup& group, const CharacterTable& table) {
  Json j;
  j["schema"] = 1;
  j["group"] = group.spec().to_string();
  j["order"] = group.order();
  j["conductor"] = group.conductor();
  j["exponent"] = group.exponent();
  Json classes = Json::array();
  for (std::size_t k = 0; k < group.classes().size(); ++k) {
    const auto& c = group.classes()[k];
    Json cj;
    cj["size"] = c.members.size();
    cj["element_order"] = group.element_order(c.representative);
    cj["representative"] = element_json(group.elements()[c.representative]);
    classes.push_back(cj);
  }
  j["classes"] = classes;
  j["minus_one_class"] = table.minus_one_class();
  Json chars = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    Json cj;
    cj["dim"] = table[i].dim;
    cj["parity"] = table[i].parity;
    Json vals = Json::array();
    for (const auto& v : table[i].values) vals.push_back(cyclo_json(v));
    cj["values"] = vals;
    chars.push_back(cj);
  }
  j["characters"] = chars;
  Json taut = Json::array();
  for (const auto& v : table.tautological()) taut.push_back(cyclo_json(v));
  j["tautological"] = taut;
  return j;
}

Json mckay_json(const McKayGraph& graph) {
  Json j;
  j["schema"] = 1;
  j["group"] = graph.spec().to_string();
  j["type"] = graph.affine_type().to_string();
  j["dims"] = graph.dims();
  j["parity"] = graph.parities();
  j["irreps"] = graph.irreps();
  j["multiplicities"] = graph.multiplicities();
  j["delta"] = root_json(graph.delta());
  return j;
}

Json roots_json(const McKayGraph& graph, const std::vector<Root>& roots, long max_level, long bound) {
  Json j;
  j["schema"] = 1;
  j["group"] = graph.spec().to_string();
  j["level"] = max_level;
  j["bound"] = bound;
  Json list = Json::array();
  for (const auto& r : roots) {
    Json rj;
    rj["root"] = root_json(r.vector);
    rj["tag"] = r.real ? "real" : "imaginary";
    rj["level"] = r.level;
    list.push_back(rj);
  }
  j["roots"] = list;
  return j;
}

Json heights_json(const HeightFunction& from, const HeightFunction& to, const std::vector<Reversal>& steps) {
  Json j;
  j["schema"] = 1;
  j["from"] = height_json(from);
  j["to"] = height_json(to);
  j["distance"] = height_distance(from, to);
  Json s = Json::array();
  for (const auto& st : steps) s.push_back({{"vertex", st.vertex}, {"dir", std::string(1, to_char(st.dir))}});
  j["steps"] = s;
  return j;
}

Json hom_table_json(const HomTable& t) {
  Json j;
  j["schema"] = 1;
  j["window"] = {t.window.n_min, t.window.n_max};
  Json vs = Json::array();
  for (const auto& q : t.window.vertices) vs.push_back({q.i, q.n});
  j["vertices"] = vs;
  j["hom"] = t.hom;
  j["ext1"] = t.ext1;
  return j;
}

Json rphi_json(const HeightFunction& h, const std::vector<RootVector>& images) {
  Json j;
  j["schema"] = 1;
  j["height"] = height_json(h);
  Json cols = Json::array();
  for (std::size_t i = 0; i < images.size(); ++i)
    cols.push_back({{"basis", {i, h[i]}}, {"image", root_json(images[i])}});
  j["images"] = cols;
  // matrix with the images as columns
  Json m = Json::array();
  for (std::size_t r = 0; r < images.size(); ++r) {
    Json row = Json::array();
    for (const auto& img : images) row.push_back(img[r]);
    m.push_back(row);
  }
  j["matrix"] = m;
  return j;
}

Json rep_json(const QuiverRep& m) {
  Json j;
  j["schema"] = 1;
  j["height"] = height_json(m.quiver().height());
  j["dims"] = m.dims();
  Json arrows = Json::array();
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const auto& a = m.quiver().arrow(k);
    arrows.push_back({{"source", a.source}, {"target", a.target}, {"matrix", matrix_json(m.map(k))}});
  }
  j["arrows"] = arrows;
  return j;
}

Json report_json(const GroupSpec& spec, const std::vector<SuiteReport>& reports) {
  Json j;
  j["schema"] = 1;
  j["group"] = spec.to_string();
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    Json rj;
    rj["suite"] = r.suite;
    rj["status"] = r.skipped ? "skipped" : r.ok() ? "pass" : "fail";
    rj["checks"] = r.checks;
    if (!r.note.empty()) rj["note"] = r.note;
    Json f = Json::array();
    for (std::size_t k = 0; k < r.failures.size() && k < 20; ++k) f.push_back(r.failures[k]);
    rj["failures"] = f;
    rj["failure_count"] = r.failures.size();
    list.push_back(rj);
  }
  j["suites"] = list;
  j["pass"] = ok;
  return j;
}

std::string mckay_dot(const McKayGraph& graph) {
  std::ostringstream os;
  os << "graph mckay {\n";
  os << "  label=\"" << graph.spec().to_string() << " " << graph.affine_type().to_string() << "\";\n";
  for (std::size_t i = 0; i < graph.size(); ++i)
    os << "  v" << i << " [label=\"" << i << "\\nd=" << graph.dim(i) << "\\np=" << graph.parity(i) << "\"];\n";
  for (std::size_t i = 0; i < graph.size(); ++i)
    for (std::size_t j = i + 1; j < graph.size(); ++j)
      for (int k = 0; k < graph.multiplicity(i, j); ++k) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string ar_window_dot(const ARWindow& w) {
  std::ostringstream os;
  auto name = [](const ARVertex& q) {
    return "x" + std::to_string(q.i) + "_" + (q.n < 0 ? "m" + std::to_string(-q.n) : std::to_string(q.n));
  };
  os << "digraph arquiver {\n  rankdir=LR;\n";
  for (long n = w.n_min; n <= w.n_max; ++n) {
    os << "  subgraph cluster_level_" << (n < 0 ? "m" + std::to_string(-n) : std::to_string(n)) << " {\n    rank=same;\n";
    for (const auto& q : w.vertices)
      if (q.n == n) os << "    " << name(q) << " [label=\"X" << q.i << "(" << q.n << ")\"];\n";
    os << "  }\n";
  }
  for (const auto& e : w.edges)
    for (int k = 0; k < e.multiplicity; ++k) os << "  " << name(e.from) << " -> " << name(e.to) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mckay
