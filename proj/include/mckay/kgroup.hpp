#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mckay/ar_quiver.hpp"
#include "mckay/orientation.hpp"
#include "mckay/root_lattice.hpp"

namespace mckay {

// Finite integer combination of symbols [X_i(n)].
class KClass {
 public:
  KClass() = default;
  static KClass symbol(const ARVertex& q, long c = 1);

  const std::map<ARVertex, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long coefficient(const ARVertex& q) const;
  void add(const ARVertex& q, long c);

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(long s, const KClass& a);
  KClass operator-() const { return (-1) * *this; }
  friend bool operator==(const KClass&, const KClass&) = default;
  std::string to_string() const;

 private:
  std::map<ARVertex, long> terms_;  // no zero coefficients
};

// Coordinates over the basis [X_i(h_i)], indexed by i.
using KCoords = std::vector<long>;

// Rewrites symbols above the h-band top-down with
//   [X_i(n)] = sum_j n(i,j) [X_j(n-1)] - [X_i(n-2)]
// and symbols below it bottom-up with the mirrored relation.
KCoords k_normalize(const McKayGraph& graph, const KClass& x, const HeightFunction& h);

KClass from_coords(const HeightFunction& h, const KCoords& c);

struct ARSequence {
  KClass left, middle, right;
  KClass relation() const { return left - middle + right; }
};

ARSequence ar_sequence(const McKayGraph& graph, const ARVertex& q);

// [X_j(k)] -> sum_i (hom - ext)((i,h_i), (j,k)) a_i, from characters
RootVector rphi_symbol(const HomEngine& engine, const HeightFunction& h, const ARVertex& q);
// Linear extension over the normalized representation.
RootVector rphi(const HomEngine& engine, const HeightFunction& h, const KClass& x);
// Linear extension over raw symbols; agrees with rphi.
RootVector rphi_direct(const HomEngine& engine, const HeightFunction& h, const KClass& x);
// Columns are images of the basis [X_i(h_i)].
std::vector<RootVector> rphi_basis_images(const HomEngine& engine, const HeightFunction& h);

// [X_i(n)] -> [X_i(n+m)], m even.
KClass twist(const KClass& x, long m);
// C = twist(-2)
inline KClass coxeter(const KClass& x) { return twist(x, -2); }

struct DeltaClasses {
  KClass delta0, delta1, delta;
};
// delta0 = sum_{I_0} d_i [X_i], delta1 = sum_{I_1} d_i [X_i(-1)], delta = delta0 - delta1
DeltaClasses delta_classes(const McKayGraph& graph);

struct RankDegree {
  long rank = 0;
  long degree = 0;
};
// rk [X_i(n)] = d_i, deg [X_i(n)] = n d_i. Also asserts
// (x, delta0) = (x, delta1) = 2 rk(x).
RankDegree rank_degree(const HomEngine& engine, const KClass& x);

// <x, y> = sum of (hom - ext) over raw symbols.
long euler_pair(const HomEngine& engine, const KClass& x, const KClass& y);
inline long sym_pair(const HomEngine& engine, const KClass& x, const KClass& y) {
  return euler_pair(engine, x, y) + euler_pair(engine, y, x);
}

enum class Polarity { PositiveFree, NegativeFree, PositiveTorsion, NegativeTorsion, Zero };
std::string to_string(Polarity p);
Polarity polarize(const HomEngine& engine, const KClass& x);

struct CgReport {
  long g = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// C^g x = x - 2 rk(x) delta in normalized coordinates, g = |G|/2, for every
// basis class, every symbol [X_q] within `bound` levels of the band, and delta.
CgReport verify_cg(const HomEngine& engine, const HeightFunction& h, long bound);

}  // namespace mckay
