#include "mckay/quiver_rep.hpp"

#include <cstdint>

#include "mckay/error.hpp"
#include "mckay/mesh.hpp"

namespace mckay {

QuiverRep::QuiverRep(OrientedQuiver quiver, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_.num_vertices()) throw Error(ErrorKind::Constraint, "one dimension per vertex expected");
  if (maps_.size() != quiver_.arrows().size()) throw Error(ErrorKind::Constraint, "one matrix per arrow expected");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& a = quiver_.arrow(k);
    if (maps_[k].rows() != dims_[a.target] || maps_[k].cols() != dims_[a.source])
      throw Error(ErrorKind::Constraint, "matrix of arrow " + std::to_string(k) + " has the wrong shape");
  }
}

std::size_t QuiverRep::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

QuiverRep zero_rep(const OrientedQuiver& quiver) {
  std::vector<Matrix> maps(quiver.arrows().size(), Matrix(0, 0));
  return QuiverRep(quiver, std::vector<std::size_t>(quiver.num_vertices(), 0), std::move(maps));
}

QuiverRep simple_rep(const OrientedQuiver& quiver, std::size_t i) {
  if (i >= quiver.num_vertices()) throw Error(ErrorKind::Domain, "vertex out of range");
  std::vector<std::size_t> dims(quiver.num_vertices(), 0);
  dims[i] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : quiver.arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  return QuiverRep(quiver, std::move(dims), std::move(maps));
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (!a.quiver().same_orientation(b.quiver())) throw Error(ErrorKind::Orientation, "direct sum over different quivers");
  std::vector<std::size_t> dims(a.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) {
    const auto& x = a.map(k);
    const auto& y = b.map(k);
    Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) m(x.rows() + r, x.cols() + c) = y(r, c);
    maps.push_back(std::move(m));
  }
  return QuiverRep(a.quiver(), std::move(dims), std::move(maps));
}

RootVector dim_vector(const QuiverRep& m) {
  RootVector v(m.dims().size());
  for (std::size_t i = 0; i < m.dims().size(); ++i) v[i] = static_cast<long>(m.dim(i));
  return v;
}

QuiverRep reflect_plus(const McKayGraph& graph, const QuiverRep& m, std::size_t i) {
  const auto& q = m.quiver();
  if (!q.is_sink(i)) throw Error(ErrorKind::Orientation, "vertex " + std::to_string(i) + " is not a sink");
  OrientedQuiver nq = orient(graph, reverse_at(graph, q.height(), i, Direction::Plus));
  const auto in = q.arrows_into(i);
  std::size_t total = 0;
  for (auto k : in) total += m.dim(q.arrow(k).source);
  Matrix sum(m.dim(i), total);
  std::size_t off = 0;
  for (auto k : in) {
    const auto& a = m.map(k);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) sum(r, off + c) = a(r, c);
    off += a.cols();
  }
  Matrix ker = kernel(sum);
  auto dims = m.dims();
  dims[i] = ker.cols();
  auto maps = m.maps();
  off = 0;
  for (auto k : in) {
    const std::size_t dj = m.dim(q.arrow(k).source);
    maps[k] = ker.block(off, 0, dj, ker.cols());
    off += dj;
  }
  return QuiverRep(std::move(nq), std::move(dims), std::move(maps));
}

QuiverRep reflect_minus(const McKayGraph& graph, const QuiverRep& m, std::size_t i) {
  const auto& q = m.quiver();
  if (!q.is_source(i)) throw Error(ErrorKind::Orientation, "vertex " + std::to_string(i) + " is not a source");
  OrientedQuiver nq = orient(graph, reverse_at(graph, q.height(), i, Direction::Minus));
  const auto out = q.arrows_out_of(i);
  std::size_t total = 0;
  for (auto k : out) total += m.dim(q.arrow(k).target);
  Matrix stack(total, m.dim(i));
  std::size_t off = 0;
  for (auto k : out) {
    const auto& a = m.map(k);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) stack(off + r, c) = a(r, c);
    off += a.rows();
  }
  Matrix coker = left_kernel(stack);  // rows: functionals vanishing on the image
  const std::size_t nd = m.dim(i) == 0 ? total : coker.rows();
  if (m.dim(i) == 0) coker = Matrix::identity(total);
  auto dims = m.dims();
  dims[i] = nd;
  auto maps = m.maps();
  off = 0;
  for (auto k : out) {
    const std::size_t dj = m.dim(q.arrow(k).target);
    maps[k] = coker.block(0, off, nd, dj);
    off += dj;
  }
  return QuiverRep(std::move(nq), std::move(dims), std::move(maps));
}

namespace {

// Unknown phi_v(r, c) sits at offset[v] + r d_v + c.
std::vector<std::size_t> unknown_offsets(const QuiverRep& m, std::size_t& total) {
  std::vector<std::size_t> off(m.dims().size());
  total = 0;
  for (std::size_t v = 0; v < off.size(); ++v) {
    off[v] = total;
    total += m.dim(v) * m.dim(v);
  }
  return off;
}

Matrix intertwiner_system(const QuiverRep& m) {
  std::size_t unknowns = 0;
  const auto off = unknown_offsets(m, unknowns);
  std::size_t eqs = 0;
  for (const auto& a : m.quiver().arrows()) eqs += m.dim(a.target) * m.dim(a.source);
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const auto& a = m.quiver().arrow(k);
    const auto& ma = m.map(k);
    const std::size_t ds = m.dim(a.source), dt = m.dim(a.target);
    for (std::size_t r = 0; r < dt; ++r)
      for (std::size_t c = 0; c < ds; ++c, ++row) {
        // (M_a phi_s)(r,c) - (phi_t M_a)(r,c)
        for (std::size_t x = 0; x < ds; ++x)
          if (sgn(ma(r, x)) != 0) sys(row, off[a.source] + x * ds + c) += ma(r, x);
        for (std::size_t x = 0; x < dt; ++x)
          if (sgn(ma(x, c)) != 0) sys(row, off[a.target] + r * dt + x) -= ma(x, c);
      }
  }
  return sys;
}

constexpr std::uint64_t kPrime = 2147483629ULL;  // prime below 2^31

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

// Value mod p, or false if the denominator vanishes mod p.
bool reduce_mod(const Rational& x, std::uint64_t& out) {
  BigInt n = x.get_num() % static_cast<unsigned long>(kPrime);
  if (sgn(n) < 0) n += static_cast<unsigned long>(kPrime);
  BigInt d = x.get_den() % static_cast<unsigned long>(kPrime);
  if (sgn(d) == 0) return false;
  out = n.get_ui() * pow_mod(d.get_ui(), kPrime - 2) % kPrime;
  return true;
}

// dim End mod p, or npos if some entry does not reduce.
std::size_t modular_end_dim(const QuiverRep& m) {
  std::size_t unknowns = 0;
  const auto off = unknown_offsets(m, unknowns);
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const auto& a = m.quiver().arrow(k);
    const auto& ma = m.map(k);
    const std::size_t ds = m.dim(a.source), dt = m.dim(a.target);
    std::vector<std::vector<std::uint64_t>> mm(dt, std::vector<std::uint64_t>(ds, 0));
    for (std::size_t r = 0; r < dt; ++r)
      for (std::size_t c = 0; c < ds; ++c)
        if (!reduce_mod(ma(r, c), mm[r][c])) return static_cast<std::size_t>(-1);
    for (std::size_t r = 0; r < dt; ++r)
      for (std::size_t c = 0; c < ds; ++c) {
        std::vector<std::uint64_t> row(unknowns, 0);
        for (std::size_t x = 0; x < ds; ++x) {
          auto& e = row[off[a.source] + x * ds + c];
          e = (e + mm[r][x]) % kPrime;
        }
        for (std::size_t x = 0; x < dt; ++x) {
          auto& e = row[off[a.target] + r * dt + x];
          e = (e + kPrime - mm[x][c]) % kPrime;
        }
        rows.push_back(std::move(row));
      }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < unknowns && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = pow_mod(rows[rank][c], kPrime - 2);
    for (std::size_t k = c; k < unknowns; ++k) rows[rank][k] = rows[rank][k] * inv % kPrime;
    std::vector<std::size_t> nz;
    for (std::size_t k = c; k < unknowns; ++k)
      if (rows[rank][k]) nz.push_back(k);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t f = rows[r][c];
      if (!f) continue;
      for (auto k : nz) rows[r][k] = (rows[r][k] + (kPrime - f) * rows[rank][k]) % kPrime;
    }
    ++rank;
  }
  return unknowns - rank;
}

}  // namespace

EndDims end_dims(const QuiverRep& m) {
  std::size_t unknowns = 0;
  const auto off = unknown_offsets(m, unknowns);
  Matrix basis = kernel(intertwiner_system(m));
  EndDims out;
  out.end = basis.cols();
  Matrix gram(out.end, out.end);
  for (std::size_t a = 0; a < out.end; ++a)
    for (std::size_t b = a; b < out.end; ++b) {
      Rational t = 0;
      for (std::size_t v = 0; v < m.dims().size(); ++v) {
        const std::size_t d = m.dim(v);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t x = 0; x < d; ++x) {
            const Rational& p = basis(off[v] + r * d + x, a);
            if (sgn(p) == 0) continue;
            t += p * basis(off[v] + x * d + r, b);
          }
      }
      gram(a, b) = t;
      gram(b, a) = t;
    }
  out.rad = out.end - rank(gram);
  return out;
}

bool is_indecomposable(const QuiverRep& m) {
  if (m.is_zero()) throw Error(ErrorKind::Domain, "the zero representation");
  if (modular_end_dim(m) == 1) return true;
  const auto e = end_dims(m);
  return e.end - e.rad == 1;
}

QuiverRep phi_object(const McKayGraph& graph, const HeightFunction& h, const ARVertex& q) {
  require_legal(graph, q);
  validate_height(graph, h);
  if (q.n < h[q.i])
    throw Error(ErrorKind::Domain, q.to_string() + " lies below the band of h; only the derived functor is defined there");
  OrientedQuiver quiver = orient(graph, h);
  std::vector<MeshQuotient> spaces;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    spaces.emplace_back(graph, i, q.i, q.n - h[i]);
    dims.push_back(spaces.back().dimension());
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < quiver.arrows().size(); ++k) {
    const auto& a = quiver.arrow(k);
    maps.push_back(precompose(graph, spaces[a.source], spaces[a.target], k));
  }
  return QuiverRep(std::move(quiver), std::move(dims), std::move(maps));
}

}  // namespace mckay
