#include "mckay/cyclotomic.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mckay/error.hpp"
#include "mckay/linalg.hpp"

namespace mckay {

struct CyclotomicField {
  unsigned m = 1;
  unsigned phi = 1;
  std::vector<long> minpoly;                  // monic, degree phi
  std::vector<std::vector<Rational>> powers;  // zeta^k reduced, k in [0, m)
};

namespace {

std::atomic<unsigned> g_max_conductor{720};

using Poly = std::vector<long>;

// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  return quot;
}

void reduce_in_place(std::vector<Rational>& p, const std::vector<long>& minpoly) {
  const std::size_t deg = minpoly.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (sgn(p[k]) == 0) continue;
    Rational c = p[k];
    for (std::size_t t = 0; t < deg; ++t)
      if (minpoly[t] != 0) p[k - deg + t] -= c * minpoly[t];
    p[k] = 0;
  }
  p.resize(deg);
}

std::unique_ptr<CyclotomicField> build_field(unsigned m) {
  auto f = std::make_unique<CyclotomicField>();
  f->m = m;
  f->minpoly = cyclotomic_polynomial(m);
  f->phi = static_cast<unsigned>(f->minpoly.size() - 1);
  f->powers.reserve(m);
  for (unsigned k = 0; k < m; ++k) {
    std::vector<Rational> p(std::max<std::size_t>(k + 1, f->phi));
    p[k] = 1;
    reduce_in_place(p, f->minpoly);
    f->powers.push_back(std::move(p));
  }
  return f;
}

const CyclotomicField* field_for(unsigned m) {
  if (m == 0) throw Error(ErrorKind::Constraint, "conductor must be positive");
  if (m > g_max_conductor.load())
    throw Error(ErrorKind::ConductorOverflow,
                "conductor " + std::to_string(m) + " exceeds bound " +
                    std::to_string(g_max_conductor.load()));
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[m];
  if (!slot) slot = build_field(m);
  return slot.get();
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

unsigned max_conductor() { return g_max_conductor.load(); }
void set_max_conductor(unsigned m) { g_max_conductor.store(m); }

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> cyclotomic_polynomial(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by every Phi_d with d | m, d < m.
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  cache[m] = p;
  return p;
}

CycloNum::CycloNum() : CycloNum(Rational(0), 1) {}

CycloNum::CycloNum(long value) : CycloNum(Rational(value), 1) {}

CycloNum::CycloNum(const Rational& value, unsigned conductor)
    : field_(field_for(conductor)) {
  coeffs_.resize(field_->phi);
  coeffs_[0] = value;
}

CycloNum CycloNum::zero(unsigned conductor) { return CycloNum(Rational(0), conductor); }

CycloNum::CycloNum(const CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CycloNum CycloNum::zeta(unsigned conductor, long power) {
  const CyclotomicField* f = field_for(conductor);
  long m = static_cast<long>(conductor);
  long k = ((power % m) + m) % m;
  return CycloNum(f, f->powers[static_cast<std::size_t>(k)]);
}

unsigned CycloNum::conductor() const { return field_->m; }

CycloNum CycloNum::promoted(unsigned m) const {
  if (m == field_->m) return *this;
  if (m % field_->m != 0)
    throw Error(ErrorKind::Constraint, "promotion target must be a multiple of the conductor");
  const CyclotomicField* target = field_for(m);
  const unsigned step = m / field_->m;
  std::vector<Rational> out(target->phi);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const auto& pw = target->powers[(k * step) % m];
    for (std::size_t t = 0; t < out.size(); ++t)
      if (sgn(pw[t]) != 0) out[t] += coeffs_[k] * pw[t];
  }
  return CycloNum(target, std::move(out));
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

CycloNum CycloNum::conj() const {
  const unsigned m = field_->m;
  std::vector<Rational> out(field_->phi);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const auto& pw = field_->powers[(m - k % m) % m];
    for (std::size_t t = 0; t < out.size(); ++t)
      if (sgn(pw[t]) != 0) out[t] += coeffs_[k] * pw[t];
  }
  return CycloNum(field_, std::move(out));
}

std::optional<Rational> CycloNum::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return std::nullopt;
  return coeffs_[0];
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (rhs.field_ != field_) {
    unsigned m = lcm_conductor(field_->m, rhs.field_->m);
    *this = promoted(m);
    return *this += rhs.promoted(m);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  if (rhs.field_ != field_) {
    unsigned m = lcm_conductor(field_->m, rhs.field_->m);
    *this = promoted(m);
    return *this *= rhs.promoted(m);
  }
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t a = 0; a < n; ++a) {
    if (sgn(coeffs_[a]) == 0) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (sgn(rhs.coeffs_[b]) != 0) prod[a + b] += coeffs_[a] * rhs.coeffs_[b];
  }
  reduce_in_place(prod, field_->minpoly);
  coeffs_ = std::move(prod);
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero cyclotomic");
  if (auto r = as_rational()) return CycloNum(1 / *r, field_->m);
  // Column k of the multiplication matrix is (this * zeta^k).
  const std::size_t n = coeffs_.size();
  Matrix mult(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    CycloNum col = *this * CycloNum(field_, field_->powers[k]);
    for (std::size_t r = 0; r < n; ++r) mult(r, k) = col.coeffs_[r];
  }
  std::vector<Rational> unit(n);
  unit[0] = 1;
  return CycloNum(field_, solve(mult, unit));
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "cyclotomic division by zero");
  return *this *= rhs.inverse();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  unsigned m = lcm_conductor(a.field_->m, b.field_->m);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::strong_ordering lex_compare(const CycloNum& a, const CycloNum& b) {
  if (a.field_->m != b.field_->m) return a.field_->m <=> b.field_->m;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "E(" << field_->m << ")";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op) {
  switch (op) {
    case CycloOp::Add: return a + b;
    case CycloOp::Sub: return a - b;
    case CycloOp::Mul: return a * b;
    case CycloOp::Div: return a / b;
  }
  throw Error(ErrorKind::InternalError, "unknown cyclotomic operation");
}

}  // namespace mckay
