#pragma once

#include <cstddef>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/su2_group.hpp"

namespace mckay {

// Values of a class function, one per conjugacy class.
using ClassFunction = std::vector<CycloNum>;

struct Character {
  unsigned dim = 0;
  ClassFunction values;
  int parity = 0;  // chi(-I) = (-1)^parity * dim
};

class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(GroupSpec spec, std::size_t group_order, std::vector<std::size_t> class_sizes,
                 std::size_t minus_one_class, unsigned conductor, std::vector<Character> characters,
                 ClassFunction tautological);

  const GroupSpec& spec() const { return spec_; }
  std::size_t group_order() const { return group_order_; }
  std::size_t num_classes() const { return class_sizes_.size(); }
  std::size_t size() const { return characters_.size(); }
  const std::vector<std::size_t>& class_sizes() const { return class_sizes_; }
  std::size_t minus_one_class() const { return minus_one_class_; }
  unsigned conductor() const { return conductor_; }

  const Character& operator[](std::size_t i) const { return characters_[i]; }
  const std::vector<Character>& characters() const { return characters_; }
  const ClassFunction& tautological() const { return tautological_; }

  std::vector<unsigned> dims() const;
  std::vector<int> parities() const;

  // (1/|G|) sum_g conj(f(g)) k(g)
  CycloNum inner_product(const ClassFunction& f, const ClassFunction& k) const;

 private:
  GroupSpec spec_;
  std::size_t group_order_ = 0;
  std::vector<std::size_t> class_sizes_;
  std::size_t minus_one_class_ = 0;
  unsigned conductor_ = 1;
  std::vector<Character> characters_;
  ClassFunction tautological_;
};

// Irreducible characters by Dixon's method: simultaneous eigenvectors of the
// class-multiplication matrices over F_p, lifted to exact cyclotomic values
// through eigenvalue multiplicities. The result is verified for exact
// orthogonality before it is returned.
CharacterTable character_table(const FiniteSubgroup& group);

// Prime used for the modular stage: smallest p = 1 (mod conductor) above
// 2 sqrt(|G|) max|C|.
unsigned long dixon_prime(std::size_t group_order, std::size_t max_class_size, unsigned conductor);

ClassFunction sym_power_character(const CharacterTable& table, unsigned k);

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);
ClassFunction conj(const ClassFunction& f);

// Multiplicity of irreducible i in the character f; throws NotACharacter if
// the inner product is not a nonnegative integer.
long mult(const CharacterTable& table, std::size_t i, const ClassFunction& f);

struct OrthogonalityReport {
  bool rows = false;
  bool columns = false;
  bool dimension_sum = false;
  bool ok() const { return rows && columns && dimension_sum; }
};

OrthogonalityReport check_orthogonality(const CharacterTable& table);

}  // namespace mckay
