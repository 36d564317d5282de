#pragma once

#include <cstddef>
#include <vector>

#include "quasi/cyclotomic.hpp"

namespace quasi {

using IntMatrix = std::vector<std::vector<Integer>>;

// left * a * right == diagonal, left and right unimodular, diagonal entries d_0 | d_1 | ...
// positive on the first `rank` positions and zero after.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t rows, std::size_t cols);

// Column-style Hermite form of a square nonsingular matrix: a * W for unimodular W,
// lower triangular with positive diagonal. Throws Error(invalid_argument) if singular.
IntMatrix lower_hermite_form(IntMatrix a);

// Solves a * t == b (mod modulus), componentwise, for real vectors t.
//
// The matrix is fixed at construction and factored once; right-hand sides vary. When the
// homogeneous solution set has positive dimension only solvability can be asked; otherwise
// every solution with t in [0, 1)^n is enumerated exactly.
class CongruenceSolver {
 public:
  CongruenceSolver(IntMatrix a, std::size_t cols, Integer modulus);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return smith_.rank; }
  std::size_t free_dimension() const { return cols_ - smith_.rank; }

  bool solvable(const std::vector<Integer>& b) const;
  std::vector<std::vector<Rational>> solutions_in_unit_cube(const std::vector<Integer>& b) const;

 private:
  std::vector<Integer> transformed(const std::vector<Integer>& b) const;

  std::size_t rows_;
  std::size_t cols_;
  Integer modulus_;
  SmithForm smith_;
  Integer scale_;       // lcm of the invariant factors
  IntMatrix lattice_;   // Hermite basis of scale_ * {t : a t in modulus Z^r}
};

}  // namespace quasi
