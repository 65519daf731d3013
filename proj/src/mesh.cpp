#include "mckay/mesh.hpp"

#include <set>

#include "mckay/error.hpp"

namespace mckay {

namespace {

std::size_t other_end(const Edge& e, std::size_t v) { return e.u == v ? e.v : e.u; }

void extend(const std::vector<Edge>& es, const std::vector<std::vector<std::size_t>>& incident, std::size_t at,
            std::size_t target, long remaining, EdgePath& cur, std::vector<EdgePath>& out) {
  if (remaining == 0) {
    if (at == target) out.push_back(cur);
    return;
  }
  for (auto k : incident[at]) {
    cur.push_back(k);
    extend(es, incident, other_end(es[k], at), target, remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MeshQuotient::MeshQuotient(const McKayGraph& graph, std::size_t source, std::size_t target, long length)
    : source_(source), target_(target), length_(length) {
  if (source >= graph.size() || target >= graph.size()) throw Error(ErrorKind::Domain, "vertex out of range");
  if (length >= 0) {
    const auto es = edges(graph);
    std::vector<std::vector<std::size_t>> incident(graph.size());
    for (std::size_t k = 0; k < es.size(); ++k) {
      incident[es[k].u].push_back(k);
      incident[es[k].v].push_back(k);
    }
    EdgePath cur;
    extend(es, incident, source, target, length, cur, paths_);
    for (std::size_t p = 0; p < paths_.size(); ++p) index_[paths_[p]] = p;

    // A generator u theta_p w is fixed by the prefix w, the suffix u and the
    // split position; each one has a term with a back-and-forth step there.
    std::set<std::pair<std::size_t, std::pair<EdgePath, EdgePath>>> gens;
    for (const auto& path : paths_)
      for (std::size_t m = 0; m + 1 < path.size(); ++m)
        if (path[m] == path[m + 1])
          gens.insert({m, {EdgePath(path.begin(), path.begin() + m), EdgePath(path.begin() + m + 2, path.end())}});

    Matrix rel(gens.size(), paths_.size());
    std::size_t r = 0;
    for (const auto& [m, wu] : gens) {
      const auto& [w, u] = wu;
      std::size_t p = source;
      for (auto k : w) p = other_end(es[k], p);
      for (auto k : incident[p]) {
        EdgePath full = w;
        full.push_back(k);
        full.push_back(k);
        full.insert(full.end(), u.begin(), u.end());
        rel(r, index_.at(full)) += es[k].u == p ? 1 : -1;
      }
      ++r;
    }
    relations_ = rref(std::move(rel));
    std::vector<bool> pivot(paths_.size(), false);
    for (auto c : relations_.pivots) pivot[c] = true;
    for (std::size_t c = 0; c < paths_.size(); ++c)
      if (!pivot[c]) basis_.push_back(c);
  }
}

std::size_t MeshQuotient::find(const EdgePath& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

std::vector<Rational> MeshQuotient::reduce(std::vector<Rational> v) const {
  if (v.size() != paths_.size()) throw Error(ErrorKind::Domain, "coefficient vector has the wrong length");
  for (std::size_t r = 0; r < relations_.pivots.size(); ++r) {
    const auto c = relations_.pivots[r];
    if (sgn(v[c]) == 0) continue;
    Rational f = v[c];
    for (std::size_t k = 0; k < paths_.size(); ++k)
      if (sgn(relations_.reduced(r, k)) != 0) v[k] -= f * relations_.reduced(r, k);
  }
  std::vector<Rational> out;
  out.reserve(basis_.size());
  for (auto b : basis_) out.push_back(v[b]);
  return out;
}

MeshQuotient mesh_quotient(const McKayGraph& graph, const ARWindow& window, const ARVertex& q, const ARVertex& q2) {
  require_legal(graph, q);
  require_legal(graph, q2);
  if (!window.contains(q) || !window.contains(q2))
    throw Error(ErrorKind::Window, "window [" + std::to_string(window.n_min) + "," + std::to_string(window.n_max) +
                                       "] does not contain " + q.to_string() + " and " + q2.to_string());
  return MeshQuotient(graph, q.i, q2.i, q2.n - q.n);
}

Matrix precompose(const McKayGraph& graph, const MeshQuotient& from, const MeshQuotient& to, std::size_t edge) {
  const auto es = edges(graph);
  if (edge >= es.size()) throw Error(ErrorKind::Domain, "edge out of range");
  const auto& e = es[edge];
  if (from.target() != to.target() || to.length() != from.length() + 1 || other_end(e, to.source()) != from.source() ||
      (e.u != to.source() && e.v != to.source()))
    throw Error(ErrorKind::Domain, "spaces do not match the edge");
  Matrix m(to.dimension(), from.dimension());
  for (std::size_t c = 0; c < from.dimension(); ++c) {
    EdgePath p{edge};
    const auto& tail = from.paths()[from.basis()[c]];
    p.insert(p.end(), tail.begin(), tail.end());
    std::vector<Rational> v(to.paths().size(), Rational(0));
    v[to.find(p)] = 1;
    auto coords = to.reduce(std::move(v));
    for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
  }
  return m;
}

}  // namespace mckay
