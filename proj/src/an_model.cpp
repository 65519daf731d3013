#include "mckay/an_model.hpp"

#include "mckay/error.hpp"

namespace mckay {

AnVector& AnVector::operator+=(const AnVector& o) {
  delta += o.delta;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
  return *this;
}

AnVector& AnVector::operator-=(const AnVector& o) {
  delta -= o.delta;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
  return *this;
}

AnVector operator*(const Rational& s, AnVector a) {
  a.delta *= s;
  for (auto& c : a.e) c *= s;
  return a;
}

std::string AnVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (sgn(e[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    s += mckay::to_string(e[i]) + "*e" + std::to_string(i);
  }
  if (sgn(delta) != 0 || s.empty()) {
    if (!s.empty()) s += " + ";
    s += mckay::to_string(delta) + "*delta";
  }
  return s;
}

AnModel::AnModel(std::size_t n) : n_(n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::UnsupportedGroup, "cycle model needs an even n >= 2");
}

AnVector AnModel::e(std::size_t i) const {
  AnVector v(n_);
  v.e[i % n_] = 1;
  return v;
}

AnVector AnModel::delta() const {
  AnVector v(n_);
  v.delta = 1;
  return v;
}

AnVector AnModel::simple_root(std::size_t i) const {
  AnVector v = e(i) - e(i + 1);
  v.delta = make_rational(1, static_cast<long>(n_));
  return v;
}

Rational AnModel::inner(const AnVector& x, const AnVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += x.e[i] * y.e[i];
  return s;
}

AnVector AnModel::reflect(std::size_t i, const AnVector& x) const {
  AnVector a = simple_root(i);
  return x - inner(x, a) * a;
}

AnVector AnModel::coxeter(const AnVector& x) const {
  AnVector y = x;
  for (std::size_t i = 0; i < n_; i += 2) y = reflect(i, y);
  for (std::size_t i = 1; i < n_; i += 2) y = reflect(i, y);
  return y;
}

AnVector AnModel::embed(const RootVector& x) const {
  AnVector v(n_);
  for (std::size_t i = 0; i < n_; ++i) v += Rational(x[i]) * simple_root(i);
  return v;
}

RootVector AnModel::pull_back(const AnVector& v) const {
  // c_i = x_i - x_{i-1}, a = sum x_i / n
  Rational esum = 0;
  for (auto& c : v.e) esum += c;
  if (sgn(esum) != 0) throw Error(ErrorKind::Domain, "vector is not in the root lattice");
  std::vector<Rational> x(n_);
  Rational partial = 0, total = 0;
  for (std::size_t i = 1; i < n_; ++i) {
    partial += v.e[i];
    total += partial;
  }
  x[0] = v.delta - total / Rational(static_cast<long>(n_));
  for (std::size_t i = 1; i < n_; ++i) x[i] = x[i - 1] + v.e[i];
  RootVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!is_integer(x[i])) throw Error(ErrorKind::Domain, "vector is not in the root lattice");
    out[i] = to_long(x[i]);
  }
  if (!(embed(out) == v)) throw Error(ErrorKind::InternalError, "lattice pull-back failed");
  return out;
}

AnModel::RootForm AnModel::root_form(const AnVector& x) const {
  std::size_t plus = n_, minus = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x.e[i] == 1 && plus == n_) plus = i;
    else if (x.e[i] == -1 && minus == n_) minus = i;
    else if (sgn(x.e[i]) != 0) throw Error(ErrorKind::NotReal, "not of the form e_i - e_j + a delta");
  }
  if (plus == n_ || minus == n_) throw Error(ErrorKind::NotReal, "not of the form e_i - e_j + a delta");
  return {plus, minus, x.delta};
}

bool AnModel::is_root(const AnVector& x) const {
  try {
    auto r = root_form(x);
    Rational shift = x.delta - make_rational(static_cast<long>(r.j) - static_cast<long>(r.i), static_cast<long>(n_));
    return is_integer(shift);
  } catch (const Error&) {
    return false;
  }
}

AnClass an_class(const AnModel::RootForm& r) {
  if (r.i % 2 == r.j % 2) return AnClass::Zero;
  return r.i % 2 == 0 ? AnClass::Plus : AnClass::Minus;
}

AnReport verify_an_model(const McKayGraph& graph, long max_level) {
  AnReport rep;
  const std::size_t n = graph.size();
  if (graph.spec().family != GroupFamily::BinaryCyclic || graph.affine_type().family != AffineFamily::A)
    throw Error(ErrorKind::UnsupportedGroup, "cycle model needs a binary cyclic group");
  AnModel model(n);
  BilinearForm form(graph);
  auto check = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back(what);
  };
  const Rational inv_n = make_rational(1, static_cast<long>(n));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      check(model.inner(model.simple_root(i), model.simple_root(j)) == Rational(form(i, j)),
            "form differs at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  AnVector sum(n);
  for (std::size_t i = 0; i < n; ++i) sum += model.simple_root(i);
  check(sum == model.delta(), "simple roots do not sum to delta");
  check(model.embed(graph.delta()) == model.delta(), "delta does not embed to delta");

  for (std::size_t i = 0; i < n; ++i) {
    check(model.reflect(i, model.e(i)) == model.e(i + 1) - inv_n * model.delta(), "s_i(e_i) at " + std::to_string(i));
    check(model.reflect(i, model.e(i + 1)) == model.e(i) + inv_n * model.delta(),
          "s_i(e_{i+1}) at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && j != (i + 1) % n)
        check(model.reflect(i, model.e(j)) == model.e(j), "s_i(e_j) at " + std::to_string(i) + "," + std::to_string(j));
    for (std::size_t j = 0; j < n; ++j) {
      auto a = RootVector::simple(n, j);
      check(model.embed(reflect(form, i, a)) == model.reflect(i, model.embed(a)),
            "reflection does not intertwine at " + std::to_string(i) + "," + std::to_string(j));
    }
  }

  auto word = coxeter_word(graph, standard_height(graph), Direction::Plus);
  const Rational two_n = make_rational(2, static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    AnVector expect = i % 2 == 0 ? model.e(i + 2) - two_n * model.delta() : model.e(i + n - 2) + two_n * model.delta();
    check(model.coxeter(model.e(i)) == expect, "C(e_i) at " + std::to_string(i));
    AnVector y = model.e(i);
    for (std::size_t k = 0; k < n / 2; ++k) y = model.coxeter(y);
    AnVector expect_pow = i % 2 == 0 ? model.e(i) - model.delta() : model.e(i) + model.delta();
    check(y == expect_pow, "C^{n/2}(e_i) at " + std::to_string(i));
    auto a = RootVector::simple(n, i);
    check(model.embed(apply_word(form, word, a)) == model.coxeter(model.embed(a)),
          "Coxeter word differs from the model at " + std::to_string(i));
  }

  // rank functional (x, sum over even vertices of a_i)
  RootVector eps(n);
  for (std::size_t i = 0; i < n; i += 2) eps[i] = 1;
  for (const auto& r : enumerate_roots(form, graph.delta(), max_level, max_level * 2 + 2)) {
    if (!r.real) continue;
    AnVector v = model.embed(r.vector);
    check(model.is_root(v), "lattice root " + r.vector.to_string() + " is not a model root");
    auto f = model.root_form(v);
    AnClass cls = an_class(f);
    long rk = form.eval(r.vector, eps);
    AnClass by_rank = rk == 0 ? AnClass::Zero : rk > 0 ? AnClass::Plus : AnClass::Minus;
    check(cls == by_rank, "parity class disagrees with rank at " + r.vector.to_string());
    RootVector y = r.vector;
    for (std::size_t k = 0; k < n / 2; ++k) y = apply_word(form, word, y);
    long shift = cls == AnClass::Zero ? 0 : cls == AnClass::Plus ? -2 : 2;
    check(y == r.vector + shift * graph.delta(), "C^{n/2} table at " + r.vector.to_string());
    check(model.embed(y) == v - Rational(form.eval(r.vector, eps)) * model.delta(),
          "C^{n/2}(a) = a - (a, eps) delta at " + r.vector.to_string());
  }
  // model roots pull back to lattice roots
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (long m = -max_level; m <= max_level; ++m) {
        AnVector v = model.e(i) - model.e(j);
        v.delta = make_rational(static_cast<long>(j) - static_cast<long>(i), static_cast<long>(n)) + Rational(m);
        RootVector x = model.pull_back(v);
        check(form.norm(x) == 2, "model root " + v.to_string() + " has norm != 2");
      }
    }
  return rep;
}

}  // namespace mckay
