#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

struct CyclotomicField;

// Largest conductor the arithmetic accepts; promotions beyond it throw
// ConductorOverflow.
unsigned max_conductor();
void set_max_conductor(unsigned m);

// Element of Q(zeta_m), stored in the power basis 1, zeta, ..., zeta^(phi(m)-1)
// reduced modulo the m-th cyclotomic polynomial. The representation is unique
// for a fixed conductor.
class CycloNum {
 public:
  CycloNum();  // zero in Q
  CycloNum(int value) : CycloNum(static_cast<long>(value)) {}  // NOLINT
  CycloNum(long value);                                        // NOLINT
  CycloNum(const Rational& value, unsigned conductor = 1);

  static CycloNum zero(unsigned conductor);

  static CycloNum zeta(unsigned conductor, long power = 1);

  unsigned conductor() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Same value viewed in Q(zeta_m); m must be a multiple of conductor().
  CycloNum promoted(unsigned m) const;

  bool is_zero() const;
  CycloNum conj() const;
  std::optional<Rational> as_rational() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator/=(const CycloNum& rhs);
  CycloNum inverse() const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

  // Values are compared after promotion to a common conductor.
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  // Total order used for containers and deterministic sorting; only
  // meaningful between elements of the same conductor.
  friend std::strong_ordering lex_compare(const CycloNum& a, const CycloNum& b);
  friend bool operator<(const CycloNum& a, const CycloNum& b) { return lex_compare(a, b) < 0; }

  std::string to_string() const;

 private:
  CycloNum(const CyclotomicField* field, std::vector<Rational> coeffs);

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

enum class CycloOp { Add, Sub, Mul, Div };

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op);
inline CycloNum cyclo_conj(const CycloNum& a) { return a.conj(); }
inline std::optional<Rational> cyclo_as_rational(const CycloNum& a) { return a.as_rational(); }

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

}  // namespace mckay
