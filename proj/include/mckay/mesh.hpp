#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mckay/ar_quiver.hpp"
#include "mckay/linalg.hpp"
#include "mckay/orientation.hpp"

namespace mckay {

// A path in Q^ from (source, n) climbing one level per step; each step is
// an index into edges(graph), which determines the next vertex.
using EdgePath = std::vector<std::size_t>;

// Degree-(k-n) piece of the mesh algebra between (i,n) and (j,k): directed
// paths modulo the ideal generated by theta_p = sum_a eps(a) abar a, with
// eps(a) = +1 when a leaves the smaller endpoint of its edge.
class MeshQuotient {
 public:
  MeshQuotient(const McKayGraph& graph, std::size_t source, std::size_t target, long length);

  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }
  long length() const { return length_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<EdgePath>& paths() const { return paths_; }
  // Paths not hit by a pivot of the relations; they represent a basis.
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t relation_rank() const { return relations_.pivots.size(); }

  // Index of a path, or npos.
  std::size_t find(const EdgePath& p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  // Coordinates on basis() of the class of a combination of paths.
  std::vector<Rational> reduce(std::vector<Rational> path_coeffs) const;

 private:
  std::size_t source_, target_;
  long length_;
  std::vector<EdgePath> paths_;
  std::map<EdgePath, std::size_t> index_;
  RowEchelon relations_;
  std::vector<std::size_t> basis_;
};

// Checks q, q2 lie in window.
MeshQuotient mesh_quotient(const McKayGraph& graph, const ARWindow& window, const ARVertex& q, const ARVertex& q2);

// Precomposition with the Q^ edge `edge` from (j, n-1) to (i, n):
// Pi((i,n), q) -> Pi((j,n-1), q), written in the chosen bases.
Matrix precompose(const McKayGraph& graph, const MeshQuotient& from, const MeshQuotient& to, std::size_t edge);

}  // namespace mckay
