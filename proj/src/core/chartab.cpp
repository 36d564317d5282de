#include "quasi/chartab.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "quasi/error.hpp"

namespace quasi {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  return 1;  // p == 2
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // row-major

// Basis of the null space of a (rows x cols) matrix over F_p.
std::vector<Vec> nullspace(Mat a, u64 p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && a[k][c] == 0) ++k;
    if (k == rows) continue;
    std::swap(a[k], a[r]);
    u64 s = invmod(a[r][c], p);
    for (auto& x : a[r]) x = mulmod(x, s, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Vec> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - a[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of y in the basis (columns) b; the system is known to be consistent.
Vec coordinates(const std::vector<Vec>& b, const Vec& y, u64 p) {
  const std::size_t h = y.size(), s = b.size();
  Mat aug(h, Vec(s + 1));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < s; ++j) aug[i][j] = b[j][i];
    aug[i][s] = y[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t k = r;
    while (k < h && aug[k][c] == 0) ++k;
    if (k == h) throw Error(Errc::internal, "degenerate eigenspace basis");
    std::swap(aug[k], aug[r]);
    u64 inv = invmod(aug[r][c], p);
    for (auto& x : aug[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < h; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      u64 f = aug[i][c];
      for (std::size_t j = 0; j <= s; ++j) aug[i][j] = (aug[i][j] + p - mulmod(f, aug[r][j], p)) % p;
    }
    piv.push_back(c);
    ++r;
  }
  Vec x(s);
  for (std::size_t c = 0; c < s; ++c) x[c] = aug[c][s];
  return x;
}

}  // namespace

TablePtr character_table(GroupPtr g, std::size_t max_order) {
  if (!g) throw Error(Errc::invalid_argument, "null group");
  const std::size_t order = g->order();
  if (order > max_order)
    throw Error(Errc::size_limit, "character tables are capped at order " + std::to_string(max_order));

  auto table = std::make_shared<CharacterTable>();
  table->group_ = g;
  table->classes_ = conjugacy_classes(*g);
  const std::size_t h = table->classes_.size();
  table->class_of_.assign(order, 0);
  for (std::size_t c = 0; c < h; ++c)
    for (Elem x : table->classes_[c].members) table->class_of_[x] = c;
  table->inverse_class_.resize(h);
  for (std::size_t c = 0; c < h; ++c)
    table->inverse_class_[c] = table->class_of_[g->inv(table->classes_[c].representative)];

  const u64 e = g->exponent();
  u64 p = e + 1;
  while (!is_prime(p) || p * p <= 4 * order) p += e;
  const u64 z = powmod(primitive_root(p), (p - 1) / e, p);

  // coeff[j][i][k]: number of (x, y) in K_j x K_i with x y = rep(K_k).
  std::vector<Mat> coeff(h, Mat(h, Vec(h, 0)));
  for (std::size_t k = 0; k < h; ++k) {
    Elem gk = table->classes_[k].representative;
    for (Elem x = 0; x < order; ++x) {
      Elem y = g->mul(g->inv(x), gk);
      ++coeff[table->class_of_[x]][table->class_of_[y]][k];
    }
  }

  // Simultaneous eigenspaces of the class multiplication matrices.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < h; ++i) {
      Vec v(h, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < h; ++j) {
    bool split_done = std::all_of(spaces.begin(), spaces.end(), [](auto& s) { return s.size() == 1; });
    if (split_done) break;
    std::vector<std::vector<Vec>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const std::size_t s = basis.size();
      Mat x(s, Vec(s));  // restricted action, column c = coords of M_j b_c
      for (std::size_t c = 0; c < s; ++c) {
        Vec y(h, 0);
        for (std::size_t i = 0; i < h; ++i) {
          u64 acc = 0;
          for (std::size_t k = 0; k < h; ++k) acc = (acc + mulmod(coeff[j][i][k] % p, basis[c][k], p)) % p;
          y[i] = acc;
        }
        Vec co = coordinates(basis, y, p);
        for (std::size_t r = 0; r < s; ++r) x[r][c] = co[r];
      }
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < s; ++lambda) {
        Mat shifted = x;
        for (std::size_t r = 0; r < s; ++r) shifted[r][r] = (shifted[r][r] + p - lambda) % p;
        auto ns = nullspace(std::move(shifted), p);
        if (ns.empty()) continue;
        std::vector<Vec> sub;
        for (const auto& v : ns) {
          Vec w(h, 0);
          for (std::size_t c = 0; c < s; ++c)
            for (std::size_t i = 0; i < h; ++i) w[i] = (w[i] + mulmod(v[c], basis[c][i], p)) % p;
          sub.push_back(std::move(w));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != s) throw Error(Errc::internal, "class matrix is not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != h) throw Error(Errc::internal, "failed to separate all irreducible characters");

  std::vector<std::vector<Cyc>> rows;
  for (auto& sp : spaces) {
    Vec w = sp[0];
    if (w[0] == 0) throw Error(Errc::internal, "central character vanishes at identity");
    u64 s0 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, s0, p);
    // sum_i w_i w_{i'} / |K_i| = |G| / d^2
    u64 acc = 0;
    for (std::size_t i = 0; i < h; ++i) {
      u64 term = mulmod(w[i], w[table->inverse_class_[i]], p);
      acc = (acc + mulmod(term, invmod(table->classes_[i].members.size() % p, p), p)) % p;
    }
    u64 d2 = mulmod(order % p, invmod(acc, p), p);
    u64 d = 0;
    for (u64 c = 1; c * c <= order; ++c)
      if ((c * c) % p == d2) d = c;
    if (d == 0) throw Error(Errc::internal, "could not recover a character degree");
    Vec chi(h);
    for (std::size_t i = 0; i < h; ++i)
      chi[i] = mulmod(mulmod(d, w[i], p), invmod(table->classes_[i].members.size() % p, p), p);

    std::vector<Cyc> row(h);
    const u64 einv = invmod(e % p, p);
    for (std::size_t i = 0; i < h; ++i) {
      Elem x = table->classes_[i].representative;
      std::vector<u64> pw(e);
      Elem acc_elem = g->identity();
      for (u64 j = 0; j < e; ++j) {
        pw[j] = chi[table->class_of_[acc_elem]];
        acc_elem = g->mul(acc_elem, x);
      }
      std::vector<Rational> mult(e, Rational(0));
      for (u64 k = 0; k < e; ++k) {
        u64 sum = 0;
        for (u64 j = 0; j < e; ++j) sum = (sum + mulmod(pw[j], powmod(z, (e - (j * k) % e) % e, p), p)) % p;
        u64 m = mulmod(sum, einv, p);
        if (m > d) throw Error(Errc::internal, "eigenvalue multiplicity out of range");
        mult[k] = Rational(static_cast<unsigned long>(m));
      }
      row[i] = Cyc::from_powers(static_cast<unsigned>(e), mult);
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
    const Rational& da = a[0].rational();
    const Rational& db = b[0].rational();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto c = display_order(a[i], b[i]);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    }
    return false;
  });
  table->chars_ = std::move(rows);
  for (const auto& r : table->chars_)
    table->degrees_.push_back(static_cast<unsigned>(r[0].rational().get_num().get_ui()));

  table->dual_.resize(h);
  for (std::size_t a = 0; a < h; ++a) {
    std::vector<Cyc> conj_row;
    for (const auto& v : table->chars_[a]) conj_row.push_back(v.conj());
    auto it = std::find(table->chars_.begin(), table->chars_.end(), conj_row);
    if (it == table->chars_.end()) throw Error(Errc::internal, "conjugate character missing");
    table->dual_[a] = static_cast<std::size_t>(it - table->chars_.begin());
  }

  // Row orthogonality as a final consistency check.
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = a; b < h; ++b) {
      Cyc s;
      for (std::size_t i = 0; i < h; ++i)
        s += table->chars_[a][i] * table->chars_[b][i].conj() *
             Cyc(static_cast<long>(table->classes_[i].members.size()));
      if (!(s == Cyc(a == b ? static_cast<long>(order) : 0L)))
        throw Error(Errc::internal, "character table failed row orthogonality");
    }
  return table;
}

// ---------------------------------------------------------------------------

ClassFunction ClassFunction::zero(TablePtr t) {
  ClassFunction f{t, std::vector<Cyc>(t->num_classes())};
  return f;
}

ClassFunction ClassFunction::irreducible(TablePtr t, std::size_t irrep) {
  if (irrep >= t->num_irreps()) throw Error(Errc::invalid_argument, "irreducible index out of range");
  ClassFunction f{t, t->row(irrep)};
  return f;
}

ClassFunction ClassFunction::regular(TablePtr t) {
  ClassFunction f = zero(t);
  f.values[t->class_of(t->group()->identity())] = Cyc(static_cast<long>(t->group()->order()));
  return f;
}

ClassFunction ClassFunction::permutation(TablePtr t) {
  const auto& perms = t->group()->permutations();
  if (perms.empty()) throw Error(Errc::invalid_argument, "group was not built from permutations");
  ClassFunction f = zero(t);
  for (std::size_t c = 0; c < t->num_classes(); ++c) {
    const Permutation& pm = perms[t->classes()[c].representative];
    long fixed = 0;
    for (std::size_t i = 0; i < pm.degree(); ++i) fixed += pm.images[i] == i;
    f.values[c] = Cyc(fixed);
  }
  return f;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (table != o.table) throw Error(Errc::table_mismatch, "class functions live on different tables");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction f = *this;
  for (auto& v : f.values) v = v.conj();
  return f;
}

ClassFunction operator*(long k, ClassFunction a) {
  for (auto& v : a.values) v *= Cyc(k);
  return a;
}

Cyc inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (!chi.table || chi.table != psi.table)
    throw Error(Errc::table_mismatch, "inner product of class functions on different tables");
  const auto& t = *chi.table;
  Cyc s;
  for (std::size_t i = 0; i < t.num_classes(); ++i)
    s += chi.values[i] * psi.values[i].conj() * Cyc(static_cast<long>(t.classes()[i].members.size()));
  return s * Cyc(Rational(1, static_cast<unsigned long>(t.group()->order())));
}

RepDecomposition decompose(const ClassFunction& chi) {
  RepDecomposition out;
  for (std::size_t i = 0; i < chi.table->num_irreps(); ++i) {
    Cyc m = inner_product(chi, ClassFunction::irreducible(chi.table, i));
    if (!m.is_rational() || m.rational().get_den() != 1 || m.rational() < 0)
      throw Error(Errc::virtual_character,
                  "multiplicity " + m.to_string() + " of irreducible " + std::to_string(i) +
                      " is not a non-negative integer");
    unsigned long k = m.rational().get_num().get_ui();
    if (k) out.emplace_back(i, k);
  }
  return out;
}

ClassFunction reassemble(TablePtr t, const RepDecomposition& d) {
  ClassFunction f = ClassFunction::zero(t);
  for (auto [i, k] : d) f += static_cast<long>(k) * ClassFunction::irreducible(t, i);
  return f;
}

unsigned central_scalar(const CharacterTable& t, std::size_t irrep, Elem z, unsigned l) {
  const Cyc& v = t.value(irrep, z);
  const long d = t.degree(irrep);
  if (!(v.abs2() == Cyc(static_cast<long>(d * d))))
    throw Error(Errc::non_central, "element " + t.group()->label(z) + " does not act as a scalar");
  auto m = as_root_of_unity(v * Cyc(Rational(1, d)), l);
  if (!m)
    throw Error(Errc::invalid_argument,
                "scalar of " + t.group()->label(z) + " is not a root of unity of order dividing " +
                    std::to_string(l));
  return *m;
}

ClassFunction restrict_character(const ClassFunction& chi, const Homomorphism& phi, TablePtr source) {
  if (phi.map().size() != source->group()->order())
    throw Error(Errc::not_homomorphism, "homomorphism does not match the source group");
  ClassFunction f = ClassFunction::zero(source);
  for (std::size_t c = 0; c < source->num_classes(); ++c) {
    Elem img = phi(source->classes()[c].representative);
    if (img >= chi.table->group()->order())
      throw Error(Errc::not_homomorphism, "image outside the target group");
    f.values[c] = chi.at(img);
  }
  return f;
}

int fs_indicator(const CharacterTable& t, std::size_t irrep) {
  const auto& g = *t.group();
  Cyc s;
  for (Elem x = 0; x < g.order(); ++x) s += t.value(irrep, g.mul(x, x));
  Rational v = s.rational() / static_cast<unsigned long>(g.order());
  if (v == 1) return 1;
  if (v == -1) return -1;
  if (v == 0) return 0;
  throw Error(Errc::internal, "indicator out of range");
}

}  // namespace quasi
