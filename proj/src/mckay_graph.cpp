#include "mckay/mckay_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "mckay/error.hpp"
#include "mckay/linalg.hpp"

namespace mckay {

std::string AffineType::to_string() const {
  const char* f = family == AffineFamily::A ? "A" : family == AffineFamily::D ? "D" : "E";
  return std::string(f) + "~" + std::to_string(rank);
}

Multiplicities reference_diagram(const AffineType& type) {
  const std::size_t n = type.rank + 1;
  Multiplicities m(n, std::vector<int>(n, 0));
  auto edge = [&](std::size_t a, std::size_t b) { m[a][b] = m[b][a] = 1; };
  switch (type.family) {
    case AffineFamily::A:
      if (n == 2) {
        m[0][1] = m[1][0] = 2;
      } else {
        for (std::size_t i = 0; i < n; ++i) edge(i, (i + 1) % n);
      }
      break;
    case AffineFamily::D: {
      const std::size_t k = type.rank;
      if (k < 4) throw Error(ErrorKind::NotAffine, "D~" + std::to_string(k) + " does not exist");
      if (k == 4) {
        for (std::size_t v : {0, 1, 3, 4}) edge(2, v);
        break;
      }
      edge(0, 2);
      edge(1, 2);
      for (std::size_t i = 2; i + 2 < k; ++i) edge(i, i + 1);
      edge(k - 2, k - 1);
      edge(k - 2, k);
      break;
    }
    case AffineFamily::E: {
      // arm lengths: first (long) arm, then the others
      std::vector<std::size_t> arms;
      if (type.rank == 6) arms = {2, 2, 2};
      else if (type.rank == 7) arms = {3, 3, 1};
      else if (type.rank == 8) arms = {5, 2, 1};
      else throw Error(ErrorKind::NotAffine, "E~" + std::to_string(type.rank) + " does not exist");
      const std::size_t center = arms[0];
      for (std::size_t i = 0; i < center; ++i) edge(i, i + 1);
      std::size_t next = center + 1;
      for (std::size_t a = 1; a < arms.size(); ++a) {
        std::size_t prev = center;
        for (std::size_t s = 0; s < arms[a]; ++s) {
          edge(prev, next);
          prev = next++;
        }
      }
      break;
    }
  }
  return m;
}

namespace {

std::vector<std::vector<std::size_t>> adjacency_lists(const Multiplicities& g) {
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[i][j] > 0) adj[i].push_back(j);
  return adj;
}

bool connected(const Multiplicities& g) {
  if (g.empty()) return false;
  auto adj = adjacency_lists(g);
  std::vector<bool> seen(g.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == g.size();
}

[[noreturn]] void not_affine(const std::string& why) { throw Error(ErrorKind::NotAffine, why); }

// Walk from `from` through `start` until a vertex of degree != 2 or a leaf.
std::vector<std::size_t> walk_arm(const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
                                  std::size_t start) {
  std::vector<std::size_t> arm{start};
  std::size_t prev = from, cur = start;
  while (adj[cur].size() == 2) {
    std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    arm.push_back(cur);
  }
  return arm;
}

}  // namespace

AffineClassification classify_affine(const Multiplicities& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i].size() != n) not_affine("adjacency matrix is not square");
    if (g[i][i] != 0) not_affine("loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (g[i][j] != g[j][i]) not_affine("adjacency matrix is not symmetric");
      if (g[i][j] < 0) not_affine("negative multiplicity");
    }
  }
  if (!connected(g)) not_affine("graph is not connected");

  AffineClassification out;
  out.to_canonical.assign(n, 0);
  std::vector<std::size_t> order;  // order[c] = vertex with reference label c

  if (n == 2) {
    if (g[0][1] != 2) not_affine("two vertices without a double edge");
    out.type = {AffineFamily::A, 1};
    order = {0, 1};
  } else {
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (g[i][j] > 1) not_affine("multiple edge between " + std::to_string(i) + " and " + std::to_string(j));
        edges += static_cast<std::size_t>(g[i][j]);
      }
    auto adj = adjacency_lists(g);
    std::vector<std::size_t> branch, leaves;
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[v].size() >= 3) branch.push_back(v);
      if (adj[v].size() == 1) leaves.push_back(v);
    }

    if (edges == n) {
      // connected with one cycle: affine only if every degree is 2
      if (!branch.empty()) not_affine("cycle with a branch");
      out.type = {AffineFamily::A, static_cast<unsigned>(n - 1)};
      order.push_back(0);
      std::size_t prev = 0, cur = std::min(adj[0][0], adj[0][1]);
      while (cur != 0) {
        order.push_back(cur);
        std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
      }
    } else if (edges == n - 1) {
      if (branch.size() == 1 && adj[branch[0]].size() == 4) {
        if (n != 5) not_affine("degree-4 vertex in a tree that is not D~4");
        const std::size_t c = branch[0];
        out.type = {AffineFamily::D, 4};
        auto ls = adj[c];
        std::sort(ls.begin(), ls.end());
        order = {ls[0], ls[1], c, ls[2], ls[3]};
      } else if (branch.size() == 2 && adj[branch[0]].size() == 3 && adj[branch[1]].size() == 3) {
        // both branch vertices must carry two leaves
        auto leaf_nbrs = [&](std::size_t b) {
          std::vector<std::size_t> ls;
          for (auto w : adj[b])
            if (adj[w].size() == 1) ls.push_back(w);
          std::sort(ls.begin(), ls.end());
          return ls;
        };
        auto l0 = leaf_nbrs(branch[0]), l1 = leaf_nbrs(branch[1]);
        if (l0.size() != 2 || l1.size() != 2) not_affine("tree with two branch points that is not D~");
        std::size_t b0 = branch[0], b1 = branch[1];
        if (l1[0] < l0[0]) {
          std::swap(b0, b1);
          std::swap(l0, l1);
        }
        // path from b0 to b1
        std::size_t start = 0;
        for (auto w : adj[b0])
          if (adj[w].size() != 1) start = w;
        std::vector<std::size_t> path{b0};
        if (start == b1) {
          path.push_back(b1);
        } else {
          auto rest = walk_arm(adj, b0, start);
          if (rest.back() != b1) not_affine("tree with two branch points that is not D~");
          path.insert(path.end(), rest.begin(), rest.end());
        }
        out.type = {AffineFamily::D, static_cast<unsigned>(n - 1)};
        order = {l0[0], l0[1]};
        order.insert(order.end(), path.begin(), path.end());
        order.push_back(l1[0]);
        order.push_back(l1[1]);
      } else if (branch.size() == 1 && adj[branch[0]].size() == 3) {
        const std::size_t c = branch[0];
        std::vector<std::vector<std::size_t>> arms;
        for (auto w : adj[c]) arms.push_back(walk_arm(adj, c, w));
        std::vector<std::size_t> len;
        for (auto& a : arms) len.push_back(a.size());
        auto sorted = len;
        std::sort(sorted.begin(), sorted.end());
        unsigned rank = 0;
        if (sorted == std::vector<std::size_t>{2, 2, 2}) rank = 6;
        else if (sorted == std::vector<std::size_t>{1, 3, 3}) rank = 7;
        else if (sorted == std::vector<std::size_t>{1, 2, 5}) rank = 8;
        else not_affine("star with arm lengths that is not affine");
        out.type = {AffineFamily::E, rank};
        // longest first, ties by tip index
        std::vector<std::size_t> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
          if (len[a] != len[b]) return len[a] > len[b];
          return arms[a].back() < arms[b].back();
        });
        auto& first = arms[idx[0]];
        order.assign(first.rbegin(), first.rend());
        order.push_back(c);
        for (std::size_t t = 1; t < 3; ++t)
          order.insert(order.end(), arms[idx[t]].begin(), arms[idx[t]].end());
      } else {
        not_affine("tree that is not an affine Dynkin diagram");
      }
    } else {
      not_affine("too many cycles");
    }
  }

  out.from_canonical = order;
  for (std::size_t c = 0; c < n; ++c) out.to_canonical[order[c]] = c;

  auto ref = reference_diagram(out.type);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ref[out.to_canonical[i]][out.to_canonical[j]] != g[i][j])
        throw Error(ErrorKind::InternalError, "classification is not an isomorphism onto " + out.type.to_string());
  return out;
}

RootVector imaginary_root(const Multiplicities& g) {
  const std::size_t n = g.size();
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form(i, j) = (i == j ? 2 : 0) - g[i][j];
  Matrix ker = kernel(form);
  if (ker.cols() != 1)
    throw Error(ErrorKind::NotAffine, "radical has rank " + std::to_string(ker.cols()));
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ker(i, 0).get_den_mpz_t());
  std::vector<BigInt> v(n);
  BigInt gcd = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = ker(i, 0) * den;
    v[i] = x.get_num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v[i].get_mpz_t());
  }
  int sign = sgn(v[0]) < 0 ? -1 : 1;
  RootVector delta(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt q = v[i] / gcd * sign;
    if (sgn(q) <= 0) throw Error(ErrorKind::NotAffine, "radical vector is not positive");
    delta[i] = q.get_si();
  }
  // Positive radical vector plus positive definiteness off one vertex gives
  // semidefiniteness with radical Q delta.
  Matrix sub(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) sub(i - 1, j - 1) = form(i, j);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(sub(k, k)) <= 0) throw Error(ErrorKind::NotAffine, "form is not positive semidefinite");
    for (std::size_t i = k + 1; i + 1 < n; ++i) {
      if (sgn(sub(i, k)) == 0) continue;
      Rational f = sub(i, k) / sub(k, k);
      for (std::size_t j = k; j + 1 < n; ++j) sub(i, j) -= f * sub(k, j);
    }
  }
  return delta;
}

McKayGraph::McKayGraph(GroupSpec spec, Multiplicities n, std::vector<unsigned> dims, std::vector<int> parity,
                       std::vector<std::size_t> irreps, std::size_t group_order)
    : spec_(spec),
      n_(std::move(n)),
      dims_(std::move(dims)),
      parity_(std::move(parity)),
      irreps_(std::move(irreps)),
      group_order_(group_order) {
  const std::size_t sz = n_.size();
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j)
      if (n_[i][j] != 0 && parity_[i] == parity_[j])
        throw Error(ErrorKind::NotMcKay, "edge " + std::to_string(i) + "-" + std::to_string(j) + " joins vertices of equal parity");
  try {
    classification_ = classify_affine(n_);
    delta_ = imaginary_root(n_);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotMcKay, e.what());
  }
  for (std::size_t i = 0; i < sz; ++i)
    if (delta_[i] != static_cast<long>(dims_[i]))
      throw Error(ErrorKind::NotMcKay, "imaginary root differs from dimensions at vertex " + std::to_string(i));
}

std::vector<std::size_t> McKayGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_.size(); ++j)
    for (int k = 0; k < n_[i][j]; ++k) out.push_back(j);
  return out;
}

std::size_t McKayGraph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < n_.size(); ++i)
    for (std::size_t j = i + 1; j < n_.size(); ++j) e += static_cast<std::size_t>(n_[i][j]);
  return e;
}

McKayGraph mckay_graph(const CharacterTable& table) {
  const std::size_t n = table.size();
  Multiplicities raw(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    auto prod = pointwise_product(table.tautological(), table[j].values);
    for (std::size_t i = 0; i < n; ++i) raw[i][j] = static_cast<int>(mult(table, i, prod));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i][i] != 0) throw Error(ErrorKind::NotMcKay, "loop at irreducible " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (raw[i][j] != raw[j][i]) throw Error(ErrorKind::NotMcKay, "multiplicities are not symmetric");
      if (raw[i][j] != 0 && table[i].parity == table[j].parity)
        throw Error(ErrorKind::NotMcKay, "graph is not bipartite");
    }
  }
  if (!connected(raw)) throw Error(ErrorKind::NotMcKay, "graph is not connected");
  AffineClassification cls;
  try {
    cls = classify_affine(raw);
    imaginary_root(raw);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotMcKay, e.what());
  }
  Multiplicities m(n, std::vector<int>(n, 0));
  std::vector<unsigned> dims(n);
  std::vector<int> parity(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t v = cls.from_canonical[c];
    dims[c] = table[v].dim;
    parity[c] = table[v].parity;
    for (std::size_t d = 0; d < n; ++d) m[c][d] = raw[v][cls.from_canonical[d]];
  }
  McKayGraph g(table.spec(), std::move(m), std::move(dims), std::move(parity), cls.from_canonical,
               table.group_order());
  for (std::size_t c = 0; c < n; ++c)
    if (g.classification().to_canonical[c] != c)
      throw Error(ErrorKind::InternalError, "reference labeling is not stable");
  return g;
}

AffineType expected_affine_type(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::BinaryCyclic: return {AffineFamily::A, 2 * spec.param - 1};
    case GroupFamily::BinaryDihedral: return {AffineFamily::D, spec.param + 2};
    case GroupFamily::BinaryTetrahedral: return {AffineFamily::E, 6};
    case GroupFamily::BinaryOctahedral: return {AffineFamily::E, 7};
    case GroupFamily::BinaryIcosahedral: return {AffineFamily::E, 8};
  }
  return {};
}

}  // namespace mckay
