#include "mckay/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "mckay/error.hpp"

namespace mckay {

namespace {

using u64 = std::uint64_t;
using ModVec = std::vector<u64>;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 n = p - 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : factors)
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error(ErrorKind::InternalError, "no primitive root");
}

// Basis of {x : a x = 0} for an r x c matrix over F_p given by rows.
std::vector<ModVec> kernel_mod(std::vector<ModVec> a, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < a.size(); ++c) {
    std::size_t piv = lead;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[lead]);
    u64 inv = inv_mod(a[lead][c], p);
    for (auto& x : a[lead]) x = mul_mod(x, inv, p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == lead || a[r][c] == 0) continue;
      u64 f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = (a[r][k] + p - mul_mod(f, a[lead][k], p)) % p;
    }
    pivots.push_back(c);
    ++lead;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ModVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ModVec v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_trivial(const Character& c) {
  if (c.dim != 1) return false;
  for (const auto& v : c.values)
    if (!(v == CycloNum(1))) return false;
  return true;
}

bool character_less(const Character& a, const Character& b) {
  bool ta = is_trivial(a), tb = is_trivial(b);
  if (ta != tb) return ta;
  if (a.dim != b.dim) return a.dim < b.dim;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    auto c = lex_compare(a.values[k], b.values[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

CharacterTable::CharacterTable(GroupSpec spec, std::size_t group_order, std::vector<std::size_t> class_sizes,
                               std::size_t minus_one_class, unsigned conductor,
                               std::vector<Character> characters, ClassFunction tautological)
    : spec_(spec),
      group_order_(group_order),
      class_sizes_(std::move(class_sizes)),
      minus_one_class_(minus_one_class),
      conductor_(conductor),
      characters_(std::move(characters)),
      tautological_(std::move(tautological)) {}

std::vector<unsigned> CharacterTable::dims() const {
  std::vector<unsigned> d;
  for (const auto& c : characters_) d.push_back(c.dim);
  return d;
}

std::vector<int> CharacterTable::parities() const {
  std::vector<int> p;
  for (const auto& c : characters_) p.push_back(c.parity);
  return p;
}

CycloNum CharacterTable::inner_product(const ClassFunction& f, const ClassFunction& k) const {
  CycloNum sum = CycloNum::zero(conductor_);
  for (std::size_t c = 0; c < class_sizes_.size(); ++c) {
    if (f[c].is_zero() || k[c].is_zero()) continue;
    sum += CycloNum(Rational(static_cast<long>(class_sizes_[c]))) * f[c].conj() * k[c];
  }
  return sum * CycloNum(make_rational(1, static_cast<long>(group_order_)));
}

unsigned long dixon_prime(std::size_t group_order, std::size_t max_class_size, unsigned conductor) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(group_order)) * static_cast<double>(max_class_size);
  for (u64 p = conductor + 1;; p += conductor)
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

CharacterTable character_table(const FiniteSubgroup& group) {
  const std::size_t n = group.order();
  const std::size_t r = group.classes().size();
  const unsigned m = group.conductor();
  if (m % group.exponent() != 0)
    throw Error(ErrorKind::ConstructionBug, "conductor does not contain the group exponent");

  std::vector<std::size_t> sizes(r);
  std::size_t max_size = 0;
  for (std::size_t k = 0; k < r; ++k) {
    sizes[k] = group.classes()[k].members.size();
    max_size = std::max(max_size, sizes[k]);
  }
  const u64 p = dixon_prime(n, max_size, m);

  // coeff[j][k][l] = #{x in C_j : x^{-1} z_l in C_k}, z_l the representative of C_l.
  std::vector<std::vector<std::vector<u64>>> coeff(r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t x : group.classes()[j].members)
      for (std::size_t l = 0; l < r; ++l) {
        std::size_t y = group.product(group.inverse(x), group.classes()[l].representative);
        coeff[j][group.class_of(y)][l] += 1;
      }

  // Split F_p^r into the common eigenlines of the matrices (M_j)_{kl} = coeff[j][k][l].
  std::vector<std::vector<ModVec>> spaces;
  {
    std::vector<ModVec> full;
    for (std::size_t k = 0; k < r; ++k) {
      ModVec e(r, 0);
      e[k] = 1;
      full.push_back(e);
    }
    spaces.push_back(full);
  }
  for (std::size_t j = 1; j < r; ++j) {
    bool all_lines = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (all_lines) break;
    std::vector<std::vector<ModVec>> next;
    for (const auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(basis);
        continue;
      }
      // image[t] = M_j * basis[t]
      std::vector<ModVec> image(d, ModVec(r, 0));
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t k = 0; k < r; ++k) {
          u64 acc = 0;
          for (std::size_t l = 0; l < r; ++l) acc = (acc + mul_mod(coeff[j][k][l] % p, basis[t][l], p)) % p;
          image[t][k] = acc;
        }
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        // rows of (M_j - lambda) B, as an r x d system in the coordinates of B
        std::vector<ModVec> sys(r, ModVec(d, 0));
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t t = 0; t < d; ++t)
            sys[k][t] = (image[t][k] + p - mul_mod(lambda, basis[t][k], p)) % p;
        auto ker = kernel_mod(std::move(sys), d, p);
        if (ker.empty()) continue;
        std::vector<ModVec> sub;
        for (const auto& x : ker) {
          ModVec v(r, 0);
          for (std::size_t t = 0; t < d; ++t)
            for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + mul_mod(x[t], basis[t][k], p)) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw Error(ErrorKind::InternalError, "class matrix not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error(ErrorKind::InternalError, "eigenspaces did not split into lines");

  const u64 z = pow_mod(primitive_root(p), (p - 1) / m, p);
  std::vector<CycloNum> roots;
  for (unsigned s = 0; s < m; ++s) roots.push_back(CycloNum::zeta(m, s));

  // power_cls[k][l] = class of g_k^l
  std::vector<std::vector<std::size_t>> power_cls(r, std::vector<std::size_t>(m));
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t g = group.classes()[k].representative, x = group.identity_index();
    for (unsigned l = 0; l < m; ++l) {
      power_cls[k][l] = group.class_of(x);
      x = group.product(x, g);
    }
  }

  const std::size_t id_class = group.class_of(group.identity_index());
  const std::size_t minus_class = group.class_of(group.minus_one_index());
  std::vector<Character> chars;
  for (const auto& line : spaces) {
    ModVec w = line.front();
    if (w[id_class] == 0) throw Error(ErrorKind::InternalError, "eigenvector vanishes at identity");
    u64 s = inv_mod(w[id_class], p);
    for (auto& x : w) x = mul_mod(x, s, p);

    u64 norm = 0;
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t kinv = group.class_of(group.inverse(group.classes()[k].representative));
      norm = (norm + mul_mod(mul_mod(w[k], w[kinv], p), inv_mod(sizes[k] % p, p), p)) % p;
    }
    u64 d2 = mul_mod(n % p, inv_mod(norm, p), p);
    unsigned dim = 0;
    for (unsigned d = 1; d * d <= n; ++d)
      if ((static_cast<u64>(d) * d) % p == d2) dim = d;
    if (dim == 0) throw Error(ErrorKind::InternalError, "degree not recovered mod p");

    ModVec chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = mul_mod(mul_mod(dim, w[k], p), inv_mod(sizes[k] % p, p), p);

    Character c;
    c.dim = dim;
    c.values.reserve(r);
    const u64 m_inv = inv_mod(m % p, p);
    for (std::size_t k = 0; k < r; ++k) {
      CycloNum value = CycloNum::zero(m);
      u64 total = 0;
      for (unsigned e = 0; e < m; ++e) {
        u64 acc = 0;
        u64 step = pow_mod(inv_mod(z, p), e, p);  // z^{-e}
        u64 zpow = 1;
        for (unsigned l = 0; l < m; ++l) {
          acc = (acc + mul_mod(chi[power_cls[k][l]], zpow, p)) % p;
          zpow = mul_mod(zpow, step, p);
        }
        u64 mu = mul_mod(acc, m_inv, p);
        if (mu > dim) throw Error(ErrorKind::InternalError, "eigenvalue multiplicity out of range");
        total += mu;
        if (mu) value += CycloNum(Rational(static_cast<long>(mu))) * roots[e];
      }
      if (total != dim) throw Error(ErrorKind::InternalError, "eigenvalue multiplicities do not sum to degree");
      c.values.push_back(value.promoted(m));
    }
    auto at_minus = c.values[minus_class].as_rational();
    if (at_minus && *at_minus == static_cast<long>(dim)) c.parity = 0;
    else if (at_minus && *at_minus == -static_cast<long>(dim)) c.parity = 1;
    else throw Error(ErrorKind::InternalError, "-I does not act by a scalar");
    chars.push_back(std::move(c));
  }
  std::sort(chars.begin(), chars.end(), character_less);

  ClassFunction taut;
  for (std::size_t k = 0; k < r; ++k)
    taut.push_back(group.elements()[group.classes()[k].representative].trace().promoted(m));

  CharacterTable table(group.spec(), n, sizes, minus_class, m, std::move(chars), std::move(taut));
  if (!check_orthogonality(table).ok())
    throw Error(ErrorKind::InternalError, "lifted character table failed exact orthogonality");
  auto vm = table.tautological()[minus_class].as_rational();
  if (!vm || *vm != -2) throw Error(ErrorKind::InternalError, "tautological representation is not odd");
  return table;
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] * b[k]);
  return out;
}

ClassFunction conj(const ClassFunction& f) {
  ClassFunction out;
  out.reserve(f.size());
  for (const auto& v : f) out.push_back(v.conj());
  return out;
}

ClassFunction sym_power_character(const CharacterTable& table, unsigned k) {
  const std::size_t r = table.num_classes();
  ClassFunction prev(r, CycloNum(Rational(1), table.conductor()));
  if (k == 0) return prev;
  ClassFunction cur = table.tautological();
  for (unsigned t = 2; t <= k; ++t) {
    ClassFunction next(r);
    for (std::size_t c = 0; c < r; ++c) next[c] = table.tautological()[c] * cur[c] - prev[c];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

long mult(const CharacterTable& table, std::size_t i, const ClassFunction& f) {
  auto v = table.inner_product(table[i].values, f).as_rational();
  if (!v || !is_integer(*v) || sgn(*v) < 0)
    throw Error(ErrorKind::NotACharacter, "inner product with irreducible " + std::to_string(i) +
                                              " is not a nonnegative integer");
  return to_long(*v);
}

OrthogonalityReport check_orthogonality(const CharacterTable& table) {
  OrthogonalityReport rep;
  const std::size_t r = table.size();
  rep.rows = r == table.num_classes();
  for (std::size_t i = 0; i < r && rep.rows; ++i)
    for (std::size_t j = 0; j < r && rep.rows; ++j) {
      CycloNum ip = table.inner_product(table[i].values, table[j].values);
      rep.rows = ip == CycloNum(i == j ? 1 : 0);
    }
  rep.columns = rep.rows;
  for (std::size_t a = 0; a < table.num_classes() && rep.columns; ++a)
    for (std::size_t b = 0; b < table.num_classes() && rep.columns; ++b) {
      CycloNum sum = CycloNum::zero(table.conductor());
      for (std::size_t i = 0; i < r; ++i) sum += table[i].values[a].conj() * table[i].values[b];
      Rational expect = a == b ? make_rational(static_cast<long>(table.group_order()),
                                               static_cast<long>(table.class_sizes()[a]))
                               : Rational(0);
      rep.columns = sum == CycloNum(expect);
    }
  unsigned long dsum = 0;
  for (const auto& c : table.characters()) dsum += static_cast<unsigned long>(c.dim) * c.dim;
  rep.dimension_sum = dsum == table.group_order();
  return rep;
}

}  // namespace mckay
