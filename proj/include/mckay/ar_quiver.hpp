#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "mckay/characters.hpp"
#include "mckay/mckay_graph.hpp"

namespace mckay {

// (i, n) standing for X_i(n); legal iff n + p(i) is even.
struct ARVertex {
  std::size_t i = 0;
  long n = 0;

  friend bool operator==(const ARVertex&, const ARVertex&) = default;
  // ordered by level, then vertex
  friend auto operator<=>(const ARVertex& a, const ARVertex& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.i <=> b.i;
  }
  std::string to_string() const { return "(" + std::to_string(i) + "," + std::to_string(n) + ")"; }
};

bool is_legal(const McKayGraph& graph, const ARVertex& q);
void require_legal(const McKayGraph& graph, const ARVertex& q);  // throws Parity

struct AREdge {
  ARVertex from, to;  // to.n = from.n + 1
  int multiplicity = 0;
};

// Full subquiver of Q^ on levels n_min..n_max.
struct ARWindow {
  long n_min = 0, n_max = 0;
  std::vector<ARVertex> vertices;  // sorted
  std::vector<AREdge> edges;       // sorted by (from, to)

  bool contains(const ARVertex& q) const;
};

ARWindow ar_window(const McKayGraph& graph, long n_min, long n_max);
bool is_connected(const ARWindow& window);

// Hom and Ext^1 dimensions between the X_q from characters:
//   hom((i,n),(j,k)) = mult(i, chi_{V_{k-n}} chi_j) for k >= n, else 0
//   ext((i,n),(j,k)) = mult(i, conj(chi_{V_{n-k-2}}) chi_j) for k <= n-2, else 0
// Vertex indices are McKay-graph labels. Symmetric-power decompositions are
// computed on demand and cached; the cache is guarded, so one engine can be
// shared between threads.
class HomEngine {
 public:
  HomEngine(const McKayGraph& graph, const CharacterTable& table);

  const McKayGraph& graph() const { return *graph_; }
  long hom_dim(const ARVertex& q, const ARVertex& q2) const;
  long ext_dim(const ARVertex& q, const ARVertex& q2) const;
  long euler(const ARVertex& q, const ARVertex& q2) const { return hom_dim(q, q2) - ext_dim(q, q2); }

  // mult(v, chi_{V_l})
  const std::vector<long>& sym_power(unsigned l) const;
  // mult(c, chi_a chi_b)
  long fusion(std::size_t a, std::size_t b, std::size_t c) const { return fusion_[(a * n_ + b) * n_ + c]; }
  std::size_t dual(std::size_t v) const { return dual_[v]; }

 private:
  const McKayGraph* graph_;
  const CharacterTable* table_;
  std::size_t n_;
  std::vector<long> fusion_;
  std::vector<std::size_t> dual_;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, std::vector<long>> sym_;
};

struct HomTable {
  ARWindow window;
  std::vector<std::vector<long>> hom;   // indexed by window.vertices
  std::vector<std::vector<long>> ext1;
};

HomTable hom_table(const HomEngine& engine, long n_min, long n_max);

}  // namespace mckay
