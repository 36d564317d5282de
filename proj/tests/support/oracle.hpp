// Brute-force reference computations used only by tests. Nothing here calls the
// solver, the tuple enumerator or the subgroup search of the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "quasi/builtin.hpp"
#include "quasi/chartab.hpp"
#include "quasi/group.hpp"
#include "quasi/lambda.hpp"

namespace oracle {

using quasi::Elem;
using quasi::GroupPtr;
using quasi::GroupTable;

inline GroupPtr share(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }

struct Named {
  const char* name;
  GroupPtr group;
};

// The groups used across the suites.
inline std::vector<Named> test_groups() {
  std::vector<Named> out;
  for (unsigned k = 1; k <= 6; ++k) out.push_back({"cyclic", share(quasi::cyclic_group(k))});
  out.push_back({"S3", share(quasi::symmetric_group(3))});
  out.push_back({"D4", share(quasi::dihedral_group(4))});
  out.push_back({"Q8", share(quasi::quaternion_group())});
  out.push_back({"A4", share(quasi::alternating_group(4))});
  out.push_back({"S4", share(quasi::symmetric_group(4))});
  return out;
}

// Commuting n-tuples and their simultaneous-conjugation orbits by exhaustive listing.
struct TupleCount {
  std::size_t tuples = 0;
  std::size_t orbits = 0;
  std::vector<std::vector<Elem>> representatives;  // lexicographic minimum of each orbit
};

inline TupleCount commuting_tuples(const GroupTable& g, unsigned n) {
  const std::size_t order = g.order();
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= order;
  std::set<std::vector<Elem>> reps;
  TupleCount out;
  std::vector<Elem> t(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      t[n - 1 - i] = static_cast<Elem>(c % order);
      c /= order;
    }
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i)
      for (unsigned j = i + 1; j < n && ok; ++j) ok = g.mul(t[i], t[j]) == g.mul(t[j], t[i]);
    if (!ok) continue;
    ++out.tuples;
    std::vector<Elem> best = t;
    for (Elem b = 0; b < order; ++b) {
      std::vector<Elem> c2(n);
      for (unsigned i = 0; i < n; ++i) c2[i] = g.mul(g.mul(g.inv(b), t[i]), b);
      best = std::min(best, c2);
    }
    reps.insert(best);
  }
  out.orbits = reps.size();
  out.representatives.assign(reps.begin(), reps.end());
  return out;
}

inline std::vector<std::size_t> class_sizes(const GroupTable& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> sizes;
  for (Elem a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::set<Elem> cls;
    for (Elem b = 0; b < g.order(); ++b) cls.insert(g.mul(g.mul(g.inv(b), a), b));
    for (Elem x : cls) seen[x] = true;
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::vector<Elem> centralizer(const GroupTable& g, const std::vector<Elem>& sigma) {
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a)
    if (std::all_of(sigma.begin(), sigma.end(), [&](Elem s) { return g.mul(a, s) == g.mul(s, a); }))
      out.push_back(a);
  return out;
}

inline bool is_closed(const GroupTable& g, const std::vector<Elem>& s) {
  std::vector<bool> in(g.order(), false);
  for (Elem x : s) in[x] = true;
  if (s.empty() || !in[g.identity()]) return false;
  for (Elem x : s)
    for (Elem y : s)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

// Every subset of a group of order <= 16 tested for closure.
inline std::vector<std::vector<Elem>> subgroups(const GroupTable& g) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = g.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Elem> s;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1u) s.push_back(x);
    if (is_closed(g, s)) out.push_back(std::move(s));
  }
  return out;
}

inline bool conjugate_inside(const GroupTable& g, const std::vector<Elem>& gamma, const std::vector<Elem>& h) {
  for (Elem b = 0; b < g.order(); ++b) {
    bool inside = true;
    for (Elem x : gamma) inside = inside && std::binary_search(h.begin(), h.end(), g.mul(g.mul(g.inv(b), x), b));
    if (inside) return true;
  }
  return false;
}

inline std::vector<Elem> closure(const GroupTable& g, const std::vector<Elem>& gens) {
  std::set<Elem> s{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem x : cur)
      for (Elem y : gens)
        if (s.insert(g.mul(x, y)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Kernel of a Lambda-representation on a rational grid.

inline long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
inline long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

struct KernelOracle {
  bool torus = false;
  long long grid = 1;  // t ranges over (1/grid) Z^n
  std::vector<quasi::LambdaPoint> points;  // non-identity kernel points on the grid (t = 0 only if torus)
};

// For each element a of C and each component j, the angle beta in [0,1) with
// chi_j(a) = deg_j * exp(2 pi i beta), found by trying every root of unity of order exp(C).
inline std::vector<std::vector<std::optional<long long>>> scalar_angles(const quasi::LambdaRep& r, long long e) {
  const auto& d = *r.desc();
  const auto& t = *d.centralizer_table;
  const auto& comps = r.components();
  const std::size_t order = d.centralizer_group.table->order();
  std::vector<std::vector<std::optional<long long>>> out(order, std::vector<std::optional<long long>>(comps.size()));
  for (std::size_t j = 0; j < comps.size(); ++j) {
    std::size_t irr = comps[j].rep.irrep;
    for (Elem a = 0; a < order; ++a) {
      const quasi::Cyc& v = t.value(irr, a);
      for (long long k = 0; k < e; ++k)
        if (v == quasi::Cyc(static_cast<long>(t.degree(irr))) * quasi::Cyc::root(static_cast<unsigned>(e), k)) {
          out[a][j] = k;  // beta = k / e
          break;
        }
    }
  }
  return out;
}

// Exhaustive search over a grid fine enough to hold every finite kernel point (n <= 2).
// A torus shows up as the point count growing when the grid is refined.
inline KernelOracle kernel(const quasi::LambdaRep& r) {
  const auto& d = *r.desc();
  const std::size_t n = d.n();
  const auto& comps = r.components();
  const long long e = d.centralizer_group.table->exponent();
  long long L = 1;
  for (const auto& c : comps)
    for (const auto& w : c.rep.weight) L = lcm_ll(L, w.get_den().get_si());
  std::vector<std::vector<long long>> W(comps.size(), std::vector<long long>(n));
  for (std::size_t j = 0; j < comps.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      quasi::Rational x = comps[j].rep.weight[i] * quasi::Rational(static_cast<long>(L));
      W[j][i] = x.get_num().get_si();
    }

  // L W t lies in (1/e) Z^n on the kernel, so t lies in (1/(e |det B|)) Z^n for any
  // nonsingular n x n row block B of L W.
  long long det_bound = 0;
  if (n == 1) {
    for (const auto& row : W)
      if (row[0] != 0 && (det_bound == 0 || std::llabs(row[0]) < det_bound)) det_bound = std::llabs(row[0]);
  } else if (n == 2) {
    for (std::size_t a = 0; a < W.size(); ++a)
      for (std::size_t b = a + 1; b < W.size(); ++b) {
        long long det = std::llabs(W[a][0] * W[b][1] - W[a][1] * W[b][0]);
        if (det != 0 && (det_bound == 0 || det < det_bound)) det_bound = det;
      }
  }
  KernelOracle out;
  out.grid = e * (det_bound == 0 ? 1 : det_bound);
  auto angles = scalar_angles(r, e);

  // Counts the kernel points on the grid of size D; collects them when asked.
  auto scan = [&](long long D, std::vector<quasi::LambdaPoint>* sink) {
    std::size_t count = 0;
    std::vector<long long> k(n, 0);
    const long long mod = L * D * e;
    const std::size_t order = d.centralizer_group.table->order();
    for (;;) {
      for (Elem a = 0; a < order; ++a) {
        bool ok = true;
        for (std::size_t j = 0; j < comps.size() && ok; ++j) {
          if (!angles[a][j]) {
            ok = false;
            break;
          }
          // w.t + beta = (W_j . k) / (L D) + beta_k / e, scaled by L D e.
          long long s = 0;
          for (std::size_t i = 0; i < n; ++i) s += W[j][i] * k[i] * e;
          s += *angles[a][j] * L * D;
          ok = ((s % mod) + mod) % mod == 0;
        }
        if (!ok) continue;
        ++count;
        if (sink) {
          quasi::WeightVec t(n);
          for (std::size_t i = 0; i < n; ++i) {
            t[i] = quasi::Rational(static_cast<long>(k[i]), static_cast<long>(D));
            t[i].canonicalize();
          }
          sink->push_back({d.centralizer_group.embedding[a], std::move(t)});
        }
      }
      std::size_t i = 0;
      while (i < n && ++k[i] == D) k[i++] = 0;
      if (i == n) break;
    }
    return count;
  };

  if (comps.empty()) {
    out.torus = true;
    return out;
  }
  std::size_t base = scan(out.grid, nullptr);
  std::size_t doubled = scan(2 * out.grid, nullptr);
  out.torus = doubled > base;
  std::vector<quasi::LambdaPoint> all;
  scan(out.grid, &all);
  for (auto& p : all) {
    bool origin = std::all_of(p.t.begin(), p.t.end(), [](const quasi::Rational& x) { return x == 0; });
    if (origin && p.element == d.group->identity()) continue;
    if (out.torus && !origin) continue;
    out.points.push_back(std::move(p));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// A random representation over Lambda_G(sigma): basis elements with random integer
// weight shifts and small multiplicities.
inline quasi::LambdaRep random_rep(quasi::DescPtr d, std::mt19937& rng, int max_terms = 3) {
  quasi::LambdaRep r(d);
  const std::size_t irreps = d->centralizer_table->num_irreps();
  std::uniform_int_distribution<std::size_t> pick(0, irreps - 1);
  std::uniform_int_distribution<int> terms(1, max_terms), shift(-1, 1), mult(1, 2);
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    std::size_t irr = pick(rng);
    quasi::WeightVec w = d->basis_weight(irr);
    for (auto& x : w) x += shift(rng);
    r.add({irr, std::move(w)}, mult(rng));
  }
  return r;
}

}  // namespace oracle
