#include <algorithm>

#include "mckay/error.hpp"
#include "mckay/quiver_rep.hpp"

namespace mckay {

namespace {

std::vector<long> orientation_key(const HeightFunction& h) {
  std::vector<long> k = h.values;
  const long base = k.empty() ? 0 : k[0];
  for (auto& v : k) v -= base;
  return k;
}

// <a, b> = sum a_v b_v - sum over arrows s -> t of a_s b_t
long quiver_euler(const OrientedQuiver& q, const RootVector& a, const RootVector& b) {
  long s = 0;
  for (std::size_t v = 0; v < a.size(); ++v) s += a[v] * b[v];
  for (const auto& ar : q.arrows()) s -= a[ar.source] * b[ar.target];
  return s;
}

std::size_t simple_index(const RootVector& beta) {
  std::size_t found = beta.size();
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    if (beta[i] != 1 || found != beta.size()) return beta.size();
    found = i;
  }
  return found;
}

// Representatives of Ext^1(b, a) as arrow families c_a : b_s -> a_t.
std::vector<std::vector<Matrix>> extension_classes(const QuiverRep& a, const QuiverRep& b) {
  const auto& q = a.quiver();
  const std::size_t nv = a.dims().size();
  std::vector<std::size_t> voff(nv);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    voff[v] = cols;
    cols += a.dim(v) * b.dim(v);
  }
  std::vector<std::size_t> aoff(q.arrows().size());
  std::size_t rows = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    aoff[k] = rows;
    rows += a.dim(q.arrow(k).target) * b.dim(q.arrow(k).source);
  }
  // d(f)_k = A_k f_s - f_t B_k, f_v stored row-major (a_v x b_v)
  Matrix d(rows, cols);
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& ar = q.arrow(k);
    const std::size_t as = a.dim(ar.source), at = a.dim(ar.target);
    const std::size_t bs = b.dim(ar.source), bt = b.dim(ar.target);
    const auto& A = a.map(k);
    const auto& B = b.map(k);
    for (std::size_t r = 0; r < at; ++r)
      for (std::size_t c = 0; c < bs; ++c) {
        const std::size_t row = aoff[k] + r * bs + c;
        for (std::size_t x = 0; x < as; ++x)
          if (sgn(A(r, x)) != 0) d(row, voff[ar.source] + x * bs + c) += A(r, x);
        for (std::size_t x = 0; x < bt; ++x)
          if (sgn(B(x, c)) != 0) d(row, voff[ar.target] + r * bt + x) -= B(x, c);
      }
  }
  Matrix aug = Matrix::hstack({d, Matrix::identity(rows)}, rows);
  auto e = rref(aug);
  std::vector<std::size_t> fresh;
  for (auto p : e.pivots)
    if (p >= cols) fresh.push_back(p - cols);
  std::vector<std::vector<Matrix>> out;
  auto family_of = [&](const std::vector<Rational>& vec) {
    std::vector<Matrix> fam;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      const auto& ar = q.arrow(k);
      const std::size_t at = a.dim(ar.target), bs = b.dim(ar.source);
      Matrix c(at, bs);
      for (std::size_t r = 0; r < at; ++r)
        for (std::size_t x = 0; x < bs; ++x) c(r, x) = vec[aoff[k] + r * bs + x];
      fam.push_back(std::move(c));
    }
    return fam;
  };
  std::vector<Rational> all(rows, Rational(0));
  for (auto r : fresh) {
    std::vector<Rational> v(rows, Rational(0));
    v[r] = 1;
    all[r] = 1;
    out.push_back(family_of(v));
  }
  if (fresh.size() > 1) out.push_back(family_of(all));
  return out;
}

QuiverRep extension(const QuiverRep& a, const QuiverRep& b, const std::vector<Matrix>& c) {
  const auto& q = a.quiver();
  std::vector<std::size_t> dims(a.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& ar = q.arrow(k);
    Matrix m(dims[ar.target], dims[ar.source]);
    const auto& A = a.map(k);
    const auto& B = b.map(k);
    const std::size_t at = a.dim(ar.target), as = a.dim(ar.source);
    for (std::size_t r = 0; r < A.rows(); ++r)
      for (std::size_t x = 0; x < A.cols(); ++x) m(r, x) = A(r, x);
    for (std::size_t r = 0; r < c[k].rows(); ++r)
      for (std::size_t x = 0; x < c[k].cols(); ++x) m(r, as + x) = c[k](r, x);
    for (std::size_t r = 0; r < B.rows(); ++r)
      for (std::size_t x = 0; x < B.cols(); ++x) m(at + r, as + x) = B(r, x);
    maps.push_back(std::move(m));
  }
  return QuiverRep(q, std::move(dims), std::move(maps));
}

}  // namespace

RootRealizer::RootRealizer(const McKayGraph& graph) : graph_(&graph), form_(graph) {}

QuiverRep RootRealizer::realize(const HeightFunction& h, const RootVector& beta) {
  validate_height(*graph_, h);
  if (beta.size() != graph_->size()) throw Error(ErrorKind::Domain, "root has the wrong length");
  const long nrm = form_.norm(beta);
  if (nrm == 0) throw Error(ErrorKind::NotReal, beta.to_string() + " is imaginary");
  if (nrm != 2) throw Error(ErrorKind::NotReal, beta.to_string() + " is not a root");
  if (!is_positive(beta)) throw Error(ErrorKind::Sign, beta.to_string() + " is not positive");
  const std::size_t budget = 10 * graph_->size() * static_cast<std::size_t>(std::max(0L, delta_level(beta)) + 1);
  QuiverRep m = build(h, beta, budget);
  if (!(dim_vector(m) == beta) || !is_indecomposable(m))
    throw Error(ErrorKind::InternalError, "realization of " + beta.to_string() + " failed its check");
  return m;
}

QuiverRep RootRealizer::build(const HeightFunction& h, const RootVector& beta, std::size_t budget) {
  auto key = std::make_pair(orientation_key(h), beta);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (budget == 0) throw Error(ErrorKind::Window, "reflection word for " + beta.to_string() + " exceeds the step bound");
  const auto& g = *graph_;
  QuiverRep out;
  bool done = false;
  if (auto s = simple_index(beta); s < beta.size()) {
    out = simple_rep(orient(g, h), s);
    done = true;
  }
  for (std::size_t j = 0; j < g.size() && !done; ++j) {
    long c = 0;
    for (std::size_t k = 0; k < g.size(); ++k) c += form_(j, k) * beta[k];
    if (c <= 0) continue;
    if (is_sink(g, h, j)) {
      auto hp = reverse_at(g, h, j, Direction::Plus);
      out = reflect_minus(g, build(hp, reflect(form_, j, beta), budget - 1), j);
      done = true;
    } else if (is_source(g, h, j)) {
      auto hp = reverse_at(g, h, j, Direction::Minus);
      out = reflect_plus(g, build(hp, reflect(form_, j, beta), budget - 1), j);
      done = true;
    }
  }
  if (!done) out = glue(h, beta, budget - 1);
  if (!(dim_vector(out) == beta)) throw Error(ErrorKind::InternalError, "dimension vector drifted at " + beta.to_string());
  memo_.emplace(std::move(key), out);
  return out;
}

QuiverRep RootRealizer::glue(const HeightFunction& h, const RootVector& beta, std::size_t budget) {
  // 0 -> M_b1 -> E -> M_b2 -> 0 with b1 + b2 = beta and Ext^1(M_b2, M_b1) != 0
  const auto quiver = orient(*graph_, h);
  struct Split {
    long euler;
    RootVector b1, b2;
  };
  std::vector<Split> splits;
  for (const auto& b1 : positive_real_roots(form_, graph_->delta(), delta_level(beta))) {
    bool below = true;
    for (std::size_t v = 0; v < beta.size(); ++v)
      if (b1[v] > beta[v]) below = false;
    if (!below || b1 == beta) continue;
    RootVector b2 = beta - b1;
    if (form_.norm(b2) != 2) continue;
    long e = quiver_euler(quiver, b2, b1);
    if (e < 0) splits.push_back({e, b1, b2});
  }
  std::stable_sort(splits.begin(), splits.end(), [](const Split& x, const Split& y) { return x.euler > y.euler; });
  for (const auto& s : splits) {
    QuiverRep a = build(h, s.b1, budget);
    QuiverRep b = build(h, s.b2, budget);
    for (const auto& c : extension_classes(a, b)) {
      QuiverRep e = extension(a, b, c);
      if (is_indecomposable(e)) {
        ++glued_;
        return e;
      }
    }
  }
  throw Error(ErrorKind::Window, "no extension realizes " + beta.to_string());
}

QuiverRep realize_root(const McKayGraph& graph, const HeightFunction& h, const RootVector& beta) {
  RootRealizer r(graph);
  return r.realize(h, beta);
}

}  // namespace mckay
