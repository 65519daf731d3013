#include "mckay/su2_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>

#include "mckay/error.hpp"

namespace mckay {

namespace {

unsigned parse_unsigned(const std::string& text, const std::string& whole) {
  if (text.empty()) throw Error(ErrorKind::Parse, "missing parameter in group spec '" + whole + "'");
  unsigned long v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorKind::Parse, "bad parameter in group spec '" + whole + "'");
    v = v * 10 + static_cast<unsigned long>(c - '0');
    if (v > 100000) throw Error(ErrorKind::Parse, "parameter too large in '" + whole + "'");
  }
  return static_cast<unsigned>(v);
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  GroupSpec spec;
  if (head == "cyclic" || head == "dihedral") {
    spec.family = head == "cyclic" ? GroupFamily::BinaryCyclic : GroupFamily::BinaryDihedral;
    spec.param = parse_unsigned(tail, text);
    if (spec.param == 0) throw Error(ErrorKind::Parse, "parameter must be >= 1 in '" + text + "'");
    if (spec.family == GroupFamily::BinaryDihedral && spec.param < 2)
      throw Error(ErrorKind::UnsupportedGroup,
                  "dihedral:1 is the cyclic group of order 4; use cyclic:2");
    return spec;
  }
  if (colon != std::string::npos) throw Error(ErrorKind::Parse, "unexpected parameter in '" + text + "'");
  spec.param = 1;
  if (head == "tetra") spec.family = GroupFamily::BinaryTetrahedral;
  else if (head == "octa") spec.family = GroupFamily::BinaryOctahedral;
  else if (head == "icosa") spec.family = GroupFamily::BinaryIcosahedral;
  else throw Error(ErrorKind::Parse, "unknown group '" + text + "'");
  return spec;
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case GroupFamily::BinaryCyclic: return "cyclic:" + std::to_string(param);
    case GroupFamily::BinaryDihedral: return "dihedral:" + std::to_string(param);
    case GroupFamily::BinaryTetrahedral: return "tetra";
    case GroupFamily::BinaryOctahedral: return "octa";
    case GroupFamily::BinaryIcosahedral: return "icosa";
  }
  return "?";
}

std::size_t GroupSpec::expected_order() const {
  switch (family) {
    case GroupFamily::BinaryCyclic: return 2 * param;
    case GroupFamily::BinaryDihedral: return 4 * param;
    case GroupFamily::BinaryTetrahedral: return 24;
    case GroupFamily::BinaryOctahedral: return 48;
    case GroupFamily::BinaryIcosahedral: return 120;
  }
  return 0;
}

unsigned GroupSpec::conductor() const {
  switch (family) {
    case GroupFamily::BinaryCyclic: return 2 * param;
    case GroupFamily::BinaryDihedral: return std::lcm(4u, 2 * param);
    case GroupFamily::BinaryTetrahedral:
    case GroupFamily::BinaryOctahedral: return 24;
    case GroupFamily::BinaryIcosahedral: return 60;
  }
  return 1;
}

GroupElement GroupElement::identity(unsigned conductor) {
  CycloNum one(Rational(1), conductor);
  CycloNum zero = CycloNum::zero(conductor);
  return GroupElement(one, zero, zero, one);
}

GroupElement GroupElement::operator*(const GroupElement& r) const {
  const GroupElement& l = *this;
  return GroupElement(l(0, 0) * r(0, 0) + l(0, 1) * r(1, 0), l(0, 0) * r(0, 1) + l(0, 1) * r(1, 1),
                      l(1, 0) * r(0, 0) + l(1, 1) * r(1, 0), l(1, 0) * r(0, 1) + l(1, 1) * r(1, 1));
}

GroupElement GroupElement::adjoint() const {
  return GroupElement(e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj());
}

CycloNum GroupElement::determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

CycloNum GroupElement::trace() const { return e_[0] + e_[3]; }

GroupElement GroupElement::promoted(unsigned m) const {
  return GroupElement(e_[0].promoted(m), e_[1].promoted(m), e_[2].promoted(m), e_[3].promoted(m));
}

bool GroupElement::is_special_unitary() const {
  unsigned m = e_[0].conductor();
  if (!(determinant() == CycloNum(1))) return false;
  return adjoint() * *this == identity(m);
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  for (std::size_t k = 0; k < 4; ++k) {
    auto c = lex_compare(a.e_[k], b.e_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string GroupElement::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
         e_[3].to_string() + "]]";
}

std::size_t FiniteSubgroup::power_class(std::size_t k, long power) const {
  std::size_t g = classes_[k].representative;
  long o = static_cast<long>(element_order_[g]);
  long p = ((power % o) + o) % o;
  std::size_t x = identity_index();
  for (long t = 0; t < p; ++t) x = product(x, g);
  return class_of_[x];
}

std::size_t default_max_order() {
  if (const char* env = std::getenv("MCKAY_LAB_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 240;
}

std::vector<GroupElement> generators(const GroupSpec& spec) {
  const unsigned m = spec.conductor();
  auto z = [m](unsigned n, long k) { return CycloNum::zeta(n, k).promoted(m); };
  auto q = [m](long num, long den = 1) { return CycloNum(make_rational(num, den), m); };
  const CycloNum zero = q(0);
  const GroupElement J(zero, q(1), q(-1), zero);
  switch (spec.family) {
    case GroupFamily::BinaryCyclic:
      return {GroupElement(z(2 * spec.param, 1), zero, zero, z(2 * spec.param, -1))};
    case GroupFamily::BinaryDihedral:
      return {GroupElement(z(2 * spec.param, 1), zero, zero, z(2 * spec.param, -1)), J};
    case GroupFamily::BinaryTetrahedral:
    case GroupFamily::BinaryOctahedral: {
      const CycloNum i = z(4, 1);
      const CycloNum half = q(1, 2);
      std::vector<GroupElement> gens{
          GroupElement(i, zero, zero, -i), J,
          GroupElement(half * (q(1) + i), half * (q(-1) + i), half * (q(1) + i), half * (q(1) - i))};
      // (1+i)/sqrt(2) is zeta_8.
      if (spec.family == GroupFamily::BinaryOctahedral)
        gens.emplace_back(z(8, 1), zero, zero, z(8, -1));
      return gens;
    }
    case GroupFamily::BinaryIcosahedral: {
      const CycloNum e1 = z(5, 1), e2 = z(5, 2), e3 = z(5, 3), e4 = z(5, 4);
      const CycloNum s = (e2 - e3).inverse();
      const CycloNum a = e1 + e4;
      return {GroupElement(-e3, zero, zero, -e2), GroupElement(s * a, s, s, -(s * a))};
    }
  }
  throw Error(ErrorKind::UnsupportedGroup, "unknown family");
}

FiniteSubgroup build_group(const GroupSpec& spec, std::size_t max_order) {
  FiniteSubgroup g;
  g.spec_ = spec;
  g.conductor_ = spec.conductor();
  const std::size_t expected = spec.expected_order();
  if (expected > max_order)
    throw Error(ErrorKind::UnsupportedGroup, spec.to_string() + " has order " + std::to_string(expected) +
                                                 ", above the cap of " + std::to_string(max_order));
  const std::size_t bound = std::min(2 * expected, max_order);

  const std::vector<GroupElement> gens = generators(spec);
  for (const auto& x : gens)
    if (!x.is_special_unitary())
      throw Error(ErrorKind::ConstructionBug, "generator " + x.to_string() + " is not in SU(2)");

  std::map<GroupElement, std::size_t> index;
  auto add = [&](const GroupElement& x) {
    auto [it, inserted] = index.emplace(x, g.elements_.size());
    if (inserted) {
      g.elements_.push_back(x);
      if (g.elements_.size() > bound)
        throw Error(ErrorKind::ConstructionBug,
                    "closure of " + spec.to_string() + " exceeded " + std::to_string(bound) + " elements");
    }
    return std::pair{it->second, inserted};
  };
  // Right Cayley graph; every element remembers the generator word reaching it.
  std::vector<std::vector<std::size_t>> right;
  std::vector<std::size_t> parent{0}, via{0};
  add(GroupElement::identity(g.conductor_));
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    right.emplace_back();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto [idx, inserted] = add(g.elements_[head] * gens[s]);
      if (inserted) {
        parent.push_back(head);
        via.push_back(s);
      }
      right[head].push_back(idx);
    }
  }
  const std::size_t n = g.elements_.size();
  if (n != expected)
    throw Error(ErrorKind::ConstructionBug, spec.to_string() + " closed at order " + std::to_string(n) +
                                                ", expected " + std::to_string(expected));

  std::vector<std::vector<std::size_t>> words(n);
  for (std::size_t x = 1; x < n; ++x) {
    words[x] = words[parent[x]];
    words[x].push_back(via[x]);
  }
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a;
      for (std::size_t s : words[b]) x = right[x][s];
      g.table_[a * n + b] = x;
    }
  }
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0) g.inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (g.inverse_[a] == n) throw Error(ErrorKind::ConstructionBug, "element without inverse");

  g.element_order_.assign(n, 0);
  std::size_t exponent = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t x = a, o = 1;
    while (x != 0) {
      x = g.table_[x * n + a];
      ++o;
    }
    g.element_order_[a] = o;
    exponent = std::lcm(exponent, o);
  }
  g.exponent_ = exponent;

  const GroupElement minus_one(CycloNum(Rational(-1), g.conductor_), CycloNum::zero(g.conductor_),
                               CycloNum::zero(g.conductor_), CycloNum(Rational(-1), g.conductor_));
  auto mi = index.find(minus_one);
  if (mi == index.end()) throw Error(ErrorKind::UnsupportedGroup, spec.to_string() + " does not contain -I");
  g.minus_one_ = mi->second;

  g.class_of_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (g.class_of_[a] != n) continue;
    ConjugacyClass cls;
    const std::size_t id = g.classes_.size();
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t c = g.table_[g.table_[x * n + a] * n + g.inverse_[x]];
      if (g.class_of_[c] == n) {
        g.class_of_[c] = id;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    g.classes_.push_back(std::move(cls));
  }
  if (g.classes_[g.class_of_[g.minus_one_]].members.size() != 1)
    throw Error(ErrorKind::ConstructionBug, "-I is not central");
  return g;
}

}  // namespace mckay
