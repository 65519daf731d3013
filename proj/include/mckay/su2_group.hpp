#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mckay/cyclotomic.hpp"

namespace mckay {

enum class GroupFamily {
  BinaryCyclic,
  BinaryDihedral,
  BinaryTetrahedral,
  BinaryOctahedral,
  BinaryIcosahedral,
};

// "cyclic:n" (order 2n), "dihedral:n" (order 4n), "tetra", "octa", "icosa".
struct GroupSpec {
  GroupFamily family = GroupFamily::BinaryCyclic;
  unsigned param = 1;

  static GroupSpec parse(const std::string& text);
  std::string to_string() const;
  std::size_t expected_order() const;
  unsigned conductor() const;
};

// 2x2 matrix over a cyclotomic field.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(CycloNum a, CycloNum b, CycloNum c, CycloNum d) : e_{{a, b, c, d}} {}

  static GroupElement identity(unsigned conductor);

  const CycloNum& operator()(int r, int c) const { return e_[2 * r + c]; }

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement adjoint() const;  // conjugate transpose
  CycloNum determinant() const;
  CycloNum trace() const;
  GroupElement promoted(unsigned m) const;

  bool is_special_unitary() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  std::string to_string() const;

 private:
  std::array<CycloNum, 4> e_;
};

struct ConjugacyClass {
  std::vector<std::size_t> members;  // element indices, ascending
  std::size_t representative = 0;    // smallest member
};

class FiniteSubgroup {
 public:
  const GroupSpec& spec() const { return spec_; }
  unsigned conductor() const { return conductor_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t g_bar_order() const { return elements_.size() / 2; }
  std::size_t identity_index() const { return 0; }
  std::size_t minus_one_index() const { return minus_one_; }
  std::size_t exponent() const { return exponent_; }

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const { return element_order_[a]; }

  // Class containing g^power for g a representative of class k.
  std::size_t power_class(std::size_t k, long power) const;

  friend FiniteSubgroup build_group(const GroupSpec& spec, std::size_t max_order);

 private:
  GroupSpec spec_;
  unsigned conductor_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::size_t minus_one_ = 0;
  std::size_t exponent_ = 1;
};

// Cap on closure size: MCKAY_LAB_MAX_ORDER, or 240 when unset.
std::size_t default_max_order();

std::vector<GroupElement> generators(const GroupSpec& spec);

FiniteSubgroup build_group(const GroupSpec& spec, std::size_t max_order = default_max_order());

}  // namespace mckay
