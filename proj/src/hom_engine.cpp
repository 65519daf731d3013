#include "mckay/ar_quiver.hpp"

#include <algorithm>
#include <queue>

#include "mckay/error.hpp"

namespace mckay {

bool is_legal(const McKayGraph& graph, const ARVertex& q) {
  return q.i < graph.size() && ((q.n + graph.parity(q.i)) % 2 + 2) % 2 == 0;
}

void require_legal(const McKayGraph& graph, const ARVertex& q) {
  if (q.i >= graph.size()) throw Error(ErrorKind::Domain, "vertex " + std::to_string(q.i) + " out of range");
  if (!is_legal(graph, q)) throw Error(ErrorKind::Parity, q.to_string() + " violates n + p(i) even");
}

bool ARWindow::contains(const ARVertex& q) const {
  return std::binary_search(vertices.begin(), vertices.end(), q);
}

ARWindow ar_window(const McKayGraph& graph, long n_min, long n_max) {
  if (n_max < n_min) throw Error(ErrorKind::Window, "empty window");
  ARWindow w;
  w.n_min = n_min;
  w.n_max = n_max;
  for (long n = n_min; n <= n_max; ++n)
    for (std::size_t i = 0; i < graph.size(); ++i)
      if (is_legal(graph, {i, n})) w.vertices.push_back({i, n});
  for (const auto& q : w.vertices) {
    if (q.n == n_max) continue;
    for (std::size_t j = 0; j < graph.size(); ++j)
      if (graph.multiplicity(q.i, j) > 0) w.edges.push_back({q, {j, q.n + 1}, graph.multiplicity(q.i, j)});
  }
  return w;
}

bool is_connected(const ARWindow& window) {
  if (window.vertices.empty()) return false;
  std::map<ARVertex, std::vector<ARVertex>> adj;
  for (const auto& e : window.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::map<ARVertex, bool> seen;
  std::queue<ARVertex> q;
  q.push(window.vertices[0]);
  seen[window.vertices[0]] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (const auto& w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == window.vertices.size();
}

HomEngine::HomEngine(const McKayGraph& graph, const CharacterTable& table)
    : graph_(&graph), table_(&table), n_(graph.size()), fusion_(n_ * n_ * n_, 0), dual_(n_, 0) {
  if (table.size() != n_) throw Error(ErrorKind::Domain, "character table does not match the graph");
  for (std::size_t a = 0; a < n_; ++a) {
    const auto& ca = table[graph.irrep(a)].values;
    auto conj_a = conj(ca);
    for (std::size_t d = 0; d < n_; ++d)
      if (table[graph.irrep(d)].values == conj_a) dual_[a] = d;
    for (std::size_t b = 0; b < n_; ++b) {
      auto prod = pointwise_product(ca, table[graph.irrep(b)].values);
      for (std::size_t c = 0; c < n_; ++c) fusion_[(a * n_ + b) * n_ + c] = mult(table, graph.irrep(c), prod);
    }
  }
  for (std::size_t a = 0; a < n_; ++a)
    if (table[graph.irrep(dual_[a])].values != conj(table[graph.irrep(a)].values))
      throw Error(ErrorKind::InternalError, "dual character not found");
}

const std::vector<long>& HomEngine::sym_power(unsigned l) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = sym_.find(l);
  if (it != sym_.end()) return it->second;
  auto chi = sym_power_character(*table_, l);
  std::vector<long> c(n_);
  for (std::size_t v = 0; v < n_; ++v) c[v] = mult(*table_, graph_->irrep(v), chi);
  return sym_.emplace(l, std::move(c)).first->second;
}

long HomEngine::hom_dim(const ARVertex& q, const ARVertex& q2) const {
  require_legal(*graph_, q);
  require_legal(*graph_, q2);
  if (q2.n < q.n) return 0;
  const auto& c = sym_power(static_cast<unsigned>(q2.n - q.n));
  long s = 0;
  for (std::size_t v = 0; v < n_; ++v)
    if (c[v]) s += c[v] * fusion(v, q2.i, q.i);
  return s;
}

long HomEngine::ext_dim(const ARVertex& q, const ARVertex& q2) const {
  require_legal(*graph_, q);
  require_legal(*graph_, q2);
  if (q2.n >= q.n - 1) return 0;
  // conj(chi_{V_l}) = sum_v c_v conj(chi_v) = sum_v c_v chi_{v*}
  const auto& c = sym_power(static_cast<unsigned>(q.n - q2.n - 2));
  long s = 0;
  for (std::size_t v = 0; v < n_; ++v)
    if (c[v]) s += c[v] * fusion(dual_[v], q2.i, q.i);
  return s;
}

HomTable hom_table(const HomEngine& engine, long n_min, long n_max) {
  HomTable t;
  t.window = ar_window(engine.graph(), n_min, n_max);
  const std::size_t m = t.window.vertices.size();
  t.hom.assign(m, std::vector<long>(m, 0));
  t.ext1.assign(m, std::vector<long>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      t.hom[a][b] = engine.hom_dim(t.window.vertices[a], t.window.vertices[b]);
      t.ext1[a][b] = engine.ext_dim(t.window.vertices[a], t.window.vertices[b]);
    }
  return t;
}

}  // namespace mckay
