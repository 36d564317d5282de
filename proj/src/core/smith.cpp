#include "quasi/smith.hpp"

#include <algorithm>
#include <utility>

#include "quasi/error.hpp"

namespace quasi {

namespace {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t rows, std::size_t cols) {
  SmithForm s;
  s.diagonal = a;
  s.diagonal.resize(rows, std::vector<Integer>(cols, Integer(0)));
  s.left = identity_matrix(rows);
  s.right = identity_matrix(cols);
  IntMatrix& d = s.diagonal;

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto bring_min_to_pivot = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (bi == rows || abs(d[i][j]) < abs(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return false;
      std::swap(d[t], d[bi]);
      std::swap(s.left[t], s.left[bi]);
      swap_cols(d, t, bj);
      swap_cols(s.right, t, bj);
      return true;
    };
    if (!bring_min_to_pivot()) break;

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        Integer q = floor_div(d[i][t], d[t][t]);
        row_axpy(d, i, t, q);
        row_axpy(s.left, i, t, q);
        dirty = dirty || d[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        Integer q = floor_div(d[t][j], d[t][t]);
        col_axpy(d, j, t, q);
        col_axpy(s.right, j, t, q);
        dirty = dirty || d[t][j] != 0;
      }
      if (dirty) {
        // A smaller remainder sits in row or column t; restart from the new minimum.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d[i][t] != 0 && abs(d[i][t]) < abs(d[bi][bj])) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[t][j] != 0 && abs(d[t][j]) < abs(d[bi][bj])) { bi = t; bj = j; }
        std::swap(d[t], d[bi]);
        std::swap(s.left[t], s.left[bi]);
        swap_cols(d, t, bj);
        swap_cols(s.right, t, bj);
        continue;
      }
      // Divisibility: fold in any row whose entries the pivot does not divide.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_axpy(d, t, bad, Integer(-1));
      row_axpy(s.left, t, bad, Integer(-1));
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.left[t]) x = -x;
    }
  }
  s.rank = t;
  return s;
}

IntMatrix lower_hermite_form(IntMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j] == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a[i][i].get_mpz_t(), a[i][j].get_mpz_t());
      Integer p = a[i][i] / g, q = a[i][j] / g;
      for (std::size_t r = 0; r < n; ++r) {
        Integer ci = a[r][i], cj = a[r][j];
        a[r][i] = x * ci + y * cj;
        a[r][j] = -q * ci + p * cj;
      }
    }
    if (a[i][i] == 0) throw Error(Errc::invalid_argument, "singular lattice basis");
    if (a[i][i] < 0)
      for (std::size_t r = 0; r < n; ++r) a[r][i] = -a[r][i];
  }
  return a;
}

CongruenceSolver::CongruenceSolver(IntMatrix a, std::size_t cols, Integer modulus)
    : rows_(a.size()), cols_(cols), modulus_(std::move(modulus)) {
  if (modulus_ <= 0) throw Error(Errc::invalid_argument, "congruence modulus must be positive");
  smith_ = smith_normal_form(a, rows_, cols_);
  if (free_dimension() > 0) return;
  scale_ = 1;
  for (std::size_t k = 0; k < cols_; ++k) mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), smith_.diagonal[k][k].get_mpz_t());
  // Solutions of the homogeneous system: t = right * diag(modulus / d_k) * z.
  IntMatrix basis(cols_, std::vector<Integer>(cols_, Integer(0)));
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      basis[i][k] = smith_.right[i][k] * (scale_ * modulus_ / smith_.diagonal[k][k]);
  lattice_ = lower_hermite_form(std::move(basis));
}

std::vector<Integer> CongruenceSolver::transformed(const std::vector<Integer>& b) const {
  if (b.size() != rows_) throw Error(Errc::invalid_argument, "right-hand side has the wrong length");
  std::vector<Integer> out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) out[i] += smith_.left[i][j] * b[j];
  return out;
}

bool CongruenceSolver::solvable(const std::vector<Integer>& b) const {
  auto tb = transformed(b);
  for (std::size_t k = smith_.rank; k < rows_; ++k)
    if (tb[k] % modulus_ != 0) return false;
  return true;
}

std::vector<std::vector<Rational>> CongruenceSolver::solutions_in_unit_cube(const std::vector<Integer>& b) const {
  if (free_dimension() > 0)
    throw Error(Errc::invalid_argument, "solution set is positive dimensional");
  std::vector<std::vector<Rational>> out;
  if (!solvable(b)) return out;
  auto tb = transformed(b);
  // Particular solution scaled by scale_: right * (scale_ * tb_k / d_k).
  std::vector<Integer> origin(cols_, Integer(0));
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      origin[i] += smith_.right[i][k] * (scale_ / smith_.diagonal[k][k]) * tb[k];

  // Enumerate origin + lattice * c inside [0, scale_)^n, one coordinate at a time.
  std::vector<Integer> c(cols_, Integer(0));
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == cols_) {
      std::vector<Rational> t(cols_);
      for (std::size_t r = 0; r < cols_; ++r) {
        Integer v = origin[r];
        for (std::size_t k = 0; k <= r; ++k) v += lattice_[r][k] * c[k];
        t[r] = Rational(v, scale_);
        t[r].canonicalize();
      }
      out.push_back(std::move(t));
      return;
    }
    Integer rest = origin[i];
    for (std::size_t k = 0; k < i; ++k) rest += lattice_[i][k] * c[k];
    const Integer& step = lattice_[i][i];
    Integer lo = ceil_div(-rest, step);
    Integer hi = ceil_div(scale_ - rest, step);
    for (Integer v = lo; v < hi; ++v) {
      c[i] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quasi
