#include "mckay/kgroup.hpp"

#include "mckay/error.hpp"

namespace mckay {

namespace {

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::InternalError, "K-class coefficient overflow");
  return r;
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InternalError, "K-class coefficient overflow");
  return r;
}

}  // namespace

KClass KClass::symbol(const ARVertex& q, long c) {
  KClass k;
  k.add(q, c);
  return k;
}

long KClass::coefficient(const ARVertex& q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? 0 : it->second;
}

void KClass::add(const ARVertex& q, long c) {
  if (c == 0) return;
  long& v = terms_[q];
  v = checked_add(v, c);
  if (v == 0) terms_.erase(q);
}

KClass& KClass::operator+=(const KClass& o) {
  for (const auto& [q, c] : o.terms_) add(q, c);
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  for (const auto& [q, c] : o.terms_) add(q, checked_mul(-1, c));
  return *this;
}

KClass operator*(long s, const KClass& a) {
  KClass out;
  for (const auto& [q, c] : a.terms_) out.add(q, checked_mul(s, c));
  return out;
}

std::string KClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [q, c] : terms_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += "[X" + std::to_string(q.i) + "(" + std::to_string(q.n) + ")]";
  }
  return s;
}

KCoords k_normalize(const McKayGraph& graph, const KClass& x, const HeightFunction& h) {
  validate_height(graph, h);
  const std::size_t r = graph.size();
  std::map<ARVertex, long> above, below;  // keyed by (n, i)
  KCoords out(r, 0);
  auto place = [&](const ARVertex& q, long c) {
    require_legal(graph, q);
    if (c == 0) return;
    if (q.n == h[q.i]) out[q.i] = checked_add(out[q.i], c);
    else if (q.n > h[q.i]) above[q] = checked_add(above[q], c);
    else below[q] = checked_add(below[q], c);
  };
  for (const auto& [q, c] : x.terms()) place(q, c);
  while (!above.empty()) {
    auto it = std::prev(above.end());
    auto [q, c] = *it;
    above.erase(it);
    for (std::size_t j = 0; j < r; ++j)
      if (graph.multiplicity(q.i, j)) place({j, q.n - 1}, checked_mul(c, graph.multiplicity(q.i, j)));
    place({q.i, q.n - 2}, checked_mul(-1, c));
  }
  while (!below.empty()) {
    auto it = below.begin();
    auto [q, c] = *it;
    below.erase(it);
    for (std::size_t j = 0; j < r; ++j)
      if (graph.multiplicity(q.i, j)) place({j, q.n + 1}, checked_mul(c, graph.multiplicity(q.i, j)));
    place({q.i, q.n + 2}, checked_mul(-1, c));
  }
  return out;
}

KClass from_coords(const HeightFunction& h, const KCoords& c) {
  KClass x;
  for (std::size_t i = 0; i < c.size(); ++i) x.add({i, h[i]}, c[i]);
  return x;
}

ARSequence ar_sequence(const McKayGraph& graph, const ARVertex& q) {
  require_legal(graph, q);
  ARSequence s;
  s.left = KClass::symbol(q);
  for (std::size_t j = 0; j < graph.size(); ++j)
    if (graph.multiplicity(q.i, j)) s.middle.add({j, q.n + 1}, graph.multiplicity(q.i, j));
  s.right = KClass::symbol({q.i, q.n + 2});
  return s;
}

RootVector rphi_symbol(const HomEngine& engine, const HeightFunction& h, const ARVertex& q) {
  const std::size_t r = engine.graph().size();
  RootVector out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = engine.euler({i, h[i]}, q);
  return out;
}

std::vector<RootVector> rphi_basis_images(const HomEngine& engine, const HeightFunction& h) {
  std::vector<RootVector> cols;
  for (std::size_t i = 0; i < engine.graph().size(); ++i) cols.push_back(rphi_symbol(engine, h, {i, h[i]}));
  return cols;
}

RootVector rphi(const HomEngine& engine, const HeightFunction& h, const KClass& x) {
  const auto coords = k_normalize(engine.graph(), x, h);
  const auto cols = rphi_basis_images(engine, h);
  RootVector out(engine.graph().size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) out += coords[i] * cols[i];
  return out;
}

RootVector rphi_direct(const HomEngine& engine, const HeightFunction& h, const KClass& x) {
  RootVector out(engine.graph().size());
  for (const auto& [q, c] : x.terms()) out += c * rphi_symbol(engine, h, q);
  return out;
}

KClass twist(const KClass& x, long m) {
  if (m % 2 != 0) throw Error(ErrorKind::Parity, "twist by an odd amount");
  KClass out;
  for (const auto& [q, c] : x.terms()) out.add({q.i, q.n + m}, c);
  return out;
}

DeltaClasses delta_classes(const McKayGraph& graph) {
  DeltaClasses d;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.parity(i) == 0) d.delta0.add({i, 0}, graph.dim(i));
    else d.delta1.add({i, -1}, graph.dim(i));
  }
  d.delta = d.delta0 - d.delta1;
  return d;
}

long euler_pair(const HomEngine& engine, const KClass& x, const KClass& y) {
  long s = 0;
  for (const auto& [q, c] : x.terms())
    for (const auto& [q2, c2] : y.terms()) s = checked_add(s, checked_mul(checked_mul(c, c2), engine.euler(q, q2)));
  return s;
}

RankDegree rank_degree(const HomEngine& engine, const KClass& x) {
  const auto& graph = engine.graph();
  RankDegree rd;
  for (const auto& [q, c] : x.terms()) {
    require_legal(graph, q);
    rd.rank = checked_add(rd.rank, checked_mul(c, graph.dim(q.i)));
    rd.degree = checked_add(rd.degree, checked_mul(checked_mul(c, q.n), graph.dim(q.i)));
  }
  const auto d = delta_classes(graph);
  const long p0 = sym_pair(engine, x, d.delta0), p1 = sym_pair(engine, x, d.delta1);
  if (p0 != 2 * rd.rank || p1 != 2 * rd.rank)
    throw Error(ErrorKind::InternalError, "rank differs from the pairing with delta0/delta1 for " + x.to_string());
  return rd;
}

std::string to_string(Polarity p) {
  switch (p) {
    case Polarity::PositiveFree: return "positive-free";
    case Polarity::NegativeFree: return "negative-free";
    case Polarity::PositiveTorsion: return "positive-torsion";
    case Polarity::NegativeTorsion: return "negative-torsion";
    case Polarity::Zero: return "zero";
  }
  return "?";
}

Polarity polarize(const HomEngine& engine, const KClass& x) {
  if (x.is_zero()) return Polarity::Zero;
  auto rd = rank_degree(engine, x);
  if (rd.rank > 0) return Polarity::PositiveFree;
  if (rd.rank < 0) return Polarity::NegativeFree;
  if (rd.degree > 0) return Polarity::PositiveTorsion;
  if (rd.degree < 0) return Polarity::NegativeTorsion;
  throw Error(ErrorKind::Unclassifiable, x.to_string() + " has rank 0 and degree 0");
}

CgReport verify_cg(const HomEngine& engine, const HeightFunction& h, long bound) {
  const auto& graph = engine.graph();
  CgReport rep;
  rep.g = static_cast<long>(graph.group_order() / 2);
  const auto dc = delta_classes(graph);
  const auto delta_coords = k_normalize(graph, dc.delta, h);
  std::vector<KClass> samples;
  for (std::size_t i = 0; i < graph.size(); ++i)
    for (long n = h[i] - 2 * (bound / 2); n <= h[i] + 2 * (bound / 2); n += 2) samples.push_back(KClass::symbol({i, n}));
  samples.push_back(dc.delta);
  samples.push_back(dc.delta0);
  samples.push_back(dc.delta1);
  for (const auto& x : samples) {
    ++rep.checked;
    const auto lhs = k_normalize(graph, twist(x, -2 * rep.g), h);
    const long rk = rank_degree(engine, x).rank;
    auto rhs = k_normalize(graph, x, h);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= 2 * rk * delta_coords[i];
    if (lhs != rhs) rep.failures.push_back("C^g fails on " + x.to_string());
    // defect: the translation coefficient of C^g is -2 rk
    const auto diff = rphi(engine, h, twist(x, -2 * rep.g)) - rphi(engine, h, x);
    if (!(diff == (-2 * rk) * graph.delta())) rep.failures.push_back("defect mismatch on " + x.to_string());
  }
  return rep;
}

}  // namespace mckay
