#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/characters.hpp"
#include "mckay/root_vector.hpp"

namespace mckay {

using Multiplicities = std::vector<std::vector<int>>;

enum class AffineFamily { A, D, E };

struct AffineType {
  AffineFamily family = AffineFamily::A;
  unsigned rank = 1;  // number of vertices minus one

  std::string to_string() const;  // "A~7", "D~4", "E~8"
  friend bool operator==(const AffineType&, const AffineType&) = default;
};

// Isomorphism onto the reference diagram of the type. Reference labelings:
//   A~k  cycle 0-1-...-k-0 (k = 1: double edge 0=1)
//   D~k  leaves 0,1 on 2; path 2..k-2; leaves k-1,k on k-2 (D~4: center 2)
//   E~k  a longest arm from its tip to the branch vertex, then the
//        remaining arms outward from the branch vertex, longer first
struct AffineClassification {
  AffineType type;
  std::vector<std::size_t> to_canonical;    // vertex -> reference label
  std::vector<std::size_t> from_canonical;  // reference label -> vertex
};

// Adjacency of the reference diagram, in reference labels.
Multiplicities reference_diagram(const AffineType& type);

AffineClassification classify_affine(const Multiplicities& graph);

// Primitive positive generator of the radical of 2I - n; throws NotAffine
// unless the form is positive semidefinite with one-dimensional radical.
RootVector imaginary_root(const Multiplicities& graph);

class McKayGraph {
 public:
  McKayGraph() = default;
  // Data in reference labels; irreps[v] is the character-table index of vertex v.
  McKayGraph(GroupSpec spec, Multiplicities n, std::vector<unsigned> dims, std::vector<int> parity,
             std::vector<std::size_t> irreps, std::size_t group_order);

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return n_.size(); }
  int multiplicity(std::size_t i, std::size_t j) const { return n_[i][j]; }
  const Multiplicities& multiplicities() const { return n_; }
  unsigned dim(std::size_t i) const { return dims_[i]; }
  const std::vector<unsigned>& dims() const { return dims_; }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  std::size_t group_order() const { return group_order_; }
  std::size_t irrep(std::size_t v) const { return irreps_[v]; }
  const std::vector<std::size_t>& irreps() const { return irreps_; }

  // Neighbors of i listed once per edge, ascending.
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::size_t edge_count() const;

  const AffineClassification& classification() const { return classification_; }
  const AffineType& affine_type() const { return classification_.type; }
  const RootVector& delta() const { return delta_; }

 private:
  GroupSpec spec_;
  Multiplicities n_;
  std::vector<unsigned> dims_;
  std::vector<int> parity_;
  std::vector<std::size_t> irreps_;
  std::size_t group_order_ = 0;
  AffineClassification classification_;
  RootVector delta_;
};

// n(i,j) = mult(i, chi_V chi_j); verifies symmetry, bipartiteness,
// connectivity and the affine form, then classifies. Vertices of the result
// carry reference labels, so the trivial representation is vertex 0.
McKayGraph mckay_graph(const CharacterTable& table);

// Expected type for a group family, used by acceptance checks.
AffineType expected_affine_type(const GroupSpec& spec);

}  // namespace mckay
