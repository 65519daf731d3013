#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mckay/ar_quiver.hpp"
#include "mckay/linalg.hpp"
#include "mckay/orientation.hpp"
#include "mckay/root_lattice.hpp"

namespace mckay {

// Representation of Q_h: a space of dimension dims[v] at each vertex and a
// (target x source) matrix for each arrow, arrows indexed as in Q_h.
class QuiverRep {
 public:
  QuiverRep() = default;
  QuiverRep(OrientedQuiver quiver, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  const OrientedQuiver& quiver() const { return quiver_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

 private:
  OrientedQuiver quiver_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

QuiverRep zero_rep(const OrientedQuiver& quiver);
QuiverRep simple_rep(const OrientedQuiver& quiver, std::size_t i);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);
RootVector dim_vector(const QuiverRep& m);

// BGP functors. reflect_plus at a sink i: the new space at i is the kernel
// of the sum map into M_i. reflect_minus at a source i: the new space is the
// cokernel of M_i into the sum. Both return representations of the
// reoriented quiver.
QuiverRep reflect_plus(const McKayGraph& graph, const QuiverRep& m, std::size_t i);
QuiverRep reflect_minus(const McKayGraph& graph, const QuiverRep& m, std::size_t i);

struct EndDims {
  std::size_t end = 0;
  std::size_t rad = 0;  // radical of the trace form on End
};

// Exact solution of phi_t M_a = M_a phi_s for all arrows a: s -> t.
EndDims end_dims(const QuiverRep& m);
// dim End - dim rad End = 1. A one-dimensional End modulo a large prime is
// accepted as a certificate (scalars always lie in End); otherwise the exact
// computation decides.
bool is_indecomposable(const QuiverRep& m);

// Realizes the indecomposable representation of Q_h with dimension vector
// beta, a positive real root. Representations found along the way are kept,
// so one instance should be reused across many roots.
class RootRealizer {
 public:
  explicit RootRealizer(const McKayGraph& graph);

  QuiverRep realize(const HeightFunction& h, const RootVector& beta);
  std::size_t glued() const { return glued_; }  // roots built as extensions

 private:
  QuiverRep build(const HeightFunction& h, const RootVector& beta, std::size_t budget);
  QuiverRep glue(const HeightFunction& h, const RootVector& beta, std::size_t budget);

  const McKayGraph* graph_;
  BilinearForm form_;
  std::map<std::pair<std::vector<long>, RootVector>, QuiverRep> memo_;
  std::size_t glued_ = 0;
};

QuiverRep realize_root(const McKayGraph& graph, const HeightFunction& h, const RootVector& beta);

// Phi_h(X_q): Pi((i,h_i), q) at vertex i; for an arrow i -> j the map is
// precomposition with the Q^ edge (j,h_j) -> (i,h_i). Requires q at or above
// the h-band.
QuiverRep phi_object(const McKayGraph& graph, const HeightFunction& h, const ARVertex& q);

}  // namespace mckay
