#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "quasi/cyclotomic.hpp"
#include "quasi/group.hpp"

namespace quasi {

// Exact irreducible characters of a finite group.
//
// Rows are sorted by degree, then by value vector under display_order, so the trivial
// character is always row 0 and, for a cyclic group, row j is g^k -> E(n)^(jk).
class CharacterTable {
 public:
  const GroupPtr& group() const { return group_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(Elem x) const { return class_of_[x]; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t num_irreps() const { return chars_.size(); }

  const std::vector<Cyc>& row(std::size_t irrep) const { return chars_[irrep]; }
  const Cyc& value(std::size_t irrep, Elem x) const { return chars_[irrep][class_of_[x]]; }
  unsigned degree(std::size_t irrep) const { return degrees_[irrep]; }
  // Index of the complex-conjugate irreducible.
  std::size_t dual(std::size_t irrep) const { return dual_[irrep]; }
  std::size_t inverse_class(std::size_t cls) const { return inverse_class_[cls]; }

 private:
  friend std::shared_ptr<const CharacterTable> character_table(GroupPtr, std::size_t);
  GroupPtr group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
  std::vector<std::vector<Cyc>> chars_;
  std::vector<unsigned> degrees_;
  std::vector<std::size_t> dual_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Dixon-Schneider over a prime field, lifted to cyclotomic values.
// Throws Error(size_limit) when |G| > max_order.
TablePtr character_table(GroupPtr g, std::size_t max_order = 48);

// A class function: one value per conjugacy class of the table's group.
struct ClassFunction {
  TablePtr table;
  std::vector<Cyc> values;

  const Cyc& at(Elem x) const { return values[table->class_of(x)]; }
  Cyc degree() const { return values[0]; }

  static ClassFunction zero(TablePtr t);
  static ClassFunction irreducible(TablePtr t, std::size_t irrep);
  static ClassFunction regular(TablePtr t);
  // Permutation character of the defining action; throws unless built from permutations.
  static ClassFunction permutation(TablePtr t);

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction conj() const;
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(long k, ClassFunction a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.table == b.table && a.values == b.values;
  }
};

// (1/|G|) sum_g chi(g) conj(psi(g)); throws Error(table_mismatch) for different tables.
Cyc inner_product(const ClassFunction& chi, const ClassFunction& psi);

// Multiplicity of each irreducible (by index), zeros omitted, ascending by index.
using RepDecomposition = std::vector<std::pair<std::size_t, unsigned long>>;

// Throws Error(virtual_character) unless every multiplicity is a non-negative integer.
RepDecomposition decompose(const ClassFunction& chi);
ClassFunction reassemble(TablePtr t, const RepDecomposition& d);

// m with chi_irrep(z) / chi_irrep(e) = E(l)^m, 0 < m <= l.
// Throws Error(non_central) when z does not act as a scalar, or invalid_argument when the
// scalar is not an l-th root of unity.
unsigned central_scalar(const CharacterTable& t, std::size_t irrep, Elem z, unsigned l);

// Pullback of chi along phi: H -> G, where source is the character table of H.
ClassFunction restrict_character(const ClassFunction& chi, const Homomorphism& phi, TablePtr source);

// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2): +1, 0 or -1.
int fs_indicator(const CharacterTable& t, std::size_t irrep);

}  // namespace quasi
