#include "quasi/lambda.hpp"

#include <algorithm>
#include <numeric>

#include "quasi/error.hpp"
#include "quasi/smith.hpp"

namespace quasi {

std::string format_weight(const WeightVec& w) {
  std::string s = "q^(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += to_string(w[i]);
  }
  return s + ")";
}

namespace {

void merge_into(std::vector<LambdaComponent>& comps, TwistedIrrep rep, unsigned long mult) {
  auto it = std::lower_bound(comps.begin(), comps.end(), rep,
                             [](const LambdaComponent& c, const TwistedIrrep& r) { return c.rep < r; });
  if (it != comps.end() && it->rep == rep)
    it->mult += mult;
  else
    comps.insert(it, LambdaComponent{std::move(rep), mult});
}

ClassFunction restrict_to_centralizer(const ClassFunction& chi_v, const LambdaDesc& d) {
  if (!chi_v.table || chi_v.table->group() != d.group)
    throw Error(Errc::table_mismatch, "character does not belong to the group of this Lambda");
  const auto& t = d.centralizer_table;
  ClassFunction f = ClassFunction::zero(t);
  for (std::size_t c = 0; c < t->num_classes(); ++c)
    f.values[c] = chi_v.at(d.centralizer_group.embedding[t->classes()[c].representative]);
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// LambdaDesc

Elem LambdaDesc::local(Elem g) const {
  auto l = centralizer_group.local(g);
  if (!l) throw Error(Errc::invalid_argument, "element " + group->label(g) + " is not in the centralizer");
  return *l;
}

bool LambdaDesc::is_trivial_tuple() const {
  return std::all_of(sigma.entries.begin(), sigma.entries.end(),
                     [&](Elem e) { return e == group->identity(); });
}

WeightVec LambdaDesc::basis_weight(std::size_t irrep) const {
  WeightVec w(n());
  for (std::size_t i = 0; i < n(); ++i) {
    w[i] = Rational(twist[irrep][i], orders[i]);
    w[i].canonicalize();
  }
  return w;
}

DescPtr lambda_desc(GroupPtr g, const CommTuple& sigma, std::size_t max_chartab_order) {
  if (sigma.entries.empty()) throw Error(Errc::invalid_argument, "tuple must have at least one entry");
  for (Elem e : sigma.entries)
    if (e >= g->order()) throw Error(Errc::invalid_argument, "tuple entry outside the group");
  if (!is_commuting(*g, sigma.entries))
    throw Error(Errc::non_commuting, "tuple entries do not commute pairwise");

  auto d = std::make_shared<LambdaDesc>();
  d->group = g;
  d->sigma = sigma;
  d->centralizer = centralizer(*g, sigma.entries);
  d->centralizer_group = subgroup_table(*g, d->centralizer);
  d->centralizer_table = character_table(d->centralizer_group.table, max_chartab_order);
  d->orders = sigma.orders(*g);
  const auto& t = *d->centralizer_table;
  d->twist.assign(t.num_irreps(), std::vector<unsigned>(sigma.size()));
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    Elem z = d->local(sigma.entries[i]);
    for (Elem c = 0; c < d->centralizer_group.table->order(); ++c)
      if (!d->centralizer_group.table->commute(z, c))
        throw Error(Errc::internal, "tuple entry is not central in its centralizer");
    for (std::size_t irr = 0; irr < t.num_irreps(); ++irr)
      d->twist[irr][i] = central_scalar(t, irr, z, d->orders[i]);
  }
  return d;
}

bool same_lambda(const LambdaDesc& a, const LambdaDesc& b) {
  return a.group == b.group && a.sigma == b.sigma;
}

// ---------------------------------------------------------------------------
// LambdaRep

void LambdaRep::add(TwistedIrrep rep, unsigned long mult) {
  if (mult == 0) return;
  const LambdaDesc& d = *desc_;
  if (rep.irrep >= d.centralizer_table->num_irreps())
    throw Error(Errc::invalid_argument, "irreducible index out of range");
  if (rep.weight.size() != d.n()) throw Error(Errc::invalid_argument, "weight has the wrong length");
  for (std::size_t i = 0; i < d.n(); ++i) {
    Rational base(d.twist[rep.irrep][i], d.orders[i]);
    base.canonicalize();
    if (frac(rep.weight[i] - base) != 0)
      throw Error(Errc::invalid_argument, "weight " + format_weight(rep.weight) +
                                              " is incompatible with the central scalars of irreducible " +
                                              std::to_string(rep.irrep));
  }
  merge_into(components_, std::move(rep), mult);
}

unsigned long LambdaRep::dimension() const {
  unsigned long dim = 0;
  for (const auto& c : components_) dim += c.mult * desc_->centralizer_table->degree(c.rep.irrep);
  return dim;
}

LambdaRep& LambdaRep::operator+=(const LambdaRep& o) {
  if (!same_lambda(*desc_, *o.desc_))
    throw Error(Errc::invalid_argument, "direct sum of representations of different groups");
  for (const auto& c : o.components_) merge_into(components_, c.rep, c.mult);
  return *this;
}

bool operator==(const LambdaRep& a, const LambdaRep& b) {
  return same_lambda(*a.desc_, *b.desc_) && a.components_ == b.components_;
}

// ---------------------------------------------------------------------------
// Constructions

std::vector<TwistedIrrep> lambda_basis(const LambdaDesc& d) {
  std::vector<TwistedIrrep> basis;
  for (std::size_t irr = 0; irr < d.centralizer_table->num_irreps(); ++irr)
    basis.push_back({irr, d.basis_weight(irr)});
  return basis;
}

LambdaRep v_sigma(const ClassFunction& chi_v, DescPtr d) {
  LambdaRep r(d);
  for (auto [irr, mult] : decompose(restrict_to_centralizer(chi_v, *d))) r.add({irr, d->basis_weight(irr)}, mult);
  return r;
}

LambdaRep q_twist(const LambdaRep& r, std::span<const long> k) {
  if (k.size() != r.desc()->n()) throw Error(Errc::invalid_argument, "twist vector has the wrong length");
  LambdaRep out(r.desc());
  for (const auto& c : r.components()) {
    WeightVec w = c.rep.weight;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += k[i];
    out.add({c.rep.irrep, std::move(w)}, c.mult);
  }
  return out;
}

LambdaRep dual(const LambdaRep& r) {
  LambdaRep out(r.desc());
  for (const auto& c : r.components()) {
    WeightVec w = c.rep.weight;
    for (auto& x : w) x = -x;
    out.add({r.desc()->centralizer_table->dual(c.rep.irrep), std::move(w)}, c.mult);
  }
  return out;
}

LambdaRep fixed_part_rep(const ClassFunction& chi_v, DescPtr d) {
  LambdaRep r(d);
  for (auto [irr, mult] : decompose(restrict_to_centralizer(chi_v, *d))) {
    bool fixed = true;
    for (std::size_t i = 0; i < d->n(); ++i) fixed = fixed && d->twist[irr][i] == d->orders[i];
    if (fixed) r.add({irr, WeightVec(d->n(), Rational(0))}, mult);
  }
  return r;
}

LambdaRep twisted_pair(const ClassFunction& chi_v, DescPtr d) {
  LambdaRep v = v_sigma(chi_v, d);
  LambdaRep out = v;
  for (std::size_t i = 0; i < d->n(); ++i) {
    std::vector<long> k(d->n(), 0);
    k[i] = -1;
    out += q_twist(v, k);
  }
  return out;
}

LambdaRep with_fixed_part(const ClassFunction& chi_v, DescPtr d) {
  return v_sigma(chi_v, d) + fixed_part_rep(chi_v, d);
}

// ---------------------------------------------------------------------------
// Kernel

bool acts_trivially(const LambdaRep& r, Elem a, const WeightVec& t) {
  const LambdaDesc& d = *r.desc();
  if (t.size() != d.n()) throw Error(Errc::invalid_argument, "point has the wrong dimension");
  Elem la = d.local(a);
  const auto& table = *d.centralizer_table;
  for (const auto& c : r.components()) {
    Rational phase = 0;
    for (std::size_t i = 0; i < d.n(); ++i) phase += c.rep.weight[i] * t[i];
    phase = frac(phase);
    Cyc rotation = Cyc::root(static_cast<unsigned>(phase.get_den().get_ui()),
                             static_cast<long long>(phase.get_num().get_si()));
    if (!(table.value(c.rep.irrep, la) * rotation == Cyc(static_cast<long>(table.degree(c.rep.irrep)))))
      return false;
  }
  return true;
}

KernelDescription kernel(const LambdaRep& r) {
  const LambdaDesc& d = *r.desc();
  const std::size_t n = d.n();
  KernelDescription out;
  if (r.empty()) {
    out.torus_rank = n;
    out.full_group = true;
    return out;
  }
  const auto& table = *d.centralizer_table;
  const auto& cgroup = *d.centralizer_group.table;
  const auto& comps = r.components();
  const std::size_t rows = comps.size();

  Integer modulus = cgroup.exponent();
  for (const auto& c : comps)
    for (const auto& w : c.rep.weight) mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), w.get_den_mpz_t());

  IntMatrix a(rows, std::vector<Integer>(n));
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Rational scaled = comps[j].rep.weight[i] * Rational(modulus);
      a[j][i] = scaled.get_num();  // denominators divide the modulus
    }
  CongruenceSolver solver(std::move(a), n, modulus);
  out.torus_rank = solver.free_dimension();

  for (Elem la = 0; la < cgroup.order(); ++la) {
    // a must act as a scalar exp(2 pi i alpha_j) on every component.
    std::vector<Integer> rhs(rows);
    bool admissible = true;
    bool all_zero = true;
    for (std::size_t j = 0; j < rows && admissible; ++j) {
      const Cyc& v = table.value(comps[j].rep.irrep, la);
      const long deg = table.degree(comps[j].rep.irrep);
      if (!(v.abs2() == Cyc(deg * deg))) {
        admissible = false;
        break;
      }
      auto angle = (v * Cyc(Rational(1, deg))).root_angle();
      if (!angle) throw Error(Errc::internal, "scalar action is not a root of unity");
      Rational scaled = -*angle * Rational(modulus);
      rhs[j] = scaled.get_num();
      all_zero = all_zero && *angle == 0;
    }
    if (!admissible) continue;
    const Elem a_elem = d.centralizer_group.embedding[la];
    const bool is_identity = a_elem == d.group->identity();
    if (out.torus_rank > 0) {
      if (all_zero && !is_identity) out.finite_points.push_back({a_elem, WeightVec(n, Rational(0))});
      continue;
    }
    for (auto& t : solver.solutions_in_unit_cube(rhs)) {
      bool origin = std::all_of(t.begin(), t.end(), [](const Rational& x) { return x == 0; });
      if (is_identity && origin) continue;
      out.finite_points.push_back({a_elem, std::move(t)});
    }
  }
  std::sort(out.finite_points.begin(), out.finite_points.end());
  return out;
}

bool is_faithful(const LambdaRep& r) { return kernel(r).faithful(); }

// ---------------------------------------------------------------------------
// Sums and restrictions

LambdaRep external_sum(const LambdaRep& r_sigma, const LambdaRep& r_tau, DescPtr product) {
  const LambdaDesc& ds = *r_sigma.desc();
  const LambdaDesc& dt = *r_tau.desc();
  if (ds.n() != dt.n()) throw Error(Errc::invalid_argument, "tuples have different lengths");
  const std::size_t nh = dt.group->order();
  if (product->group->order() != ds.group->order() * nh || product->n() != ds.n())
    throw Error(Errc::invalid_argument, "product Lambda does not match the factors");
  for (std::size_t i = 0; i < ds.n(); ++i)
    if (product->sigma.entries[i] != ds.sigma.entries[i] * nh + dt.sigma.entries[i])
      throw Error(Errc::invalid_argument, "product tuple is not (sigma, tau)");

  const auto& ptable = product->centralizer_table;
  auto lift = [&](const LambdaDesc& factor, std::size_t irrep, bool first) {
    ClassFunction f = ClassFunction::zero(ptable);
    for (std::size_t c = 0; c < ptable->num_classes(); ++c) {
      Elem x = product->centralizer_group.embedding[ptable->classes()[c].representative];
      Elem part = first ? static_cast<Elem>(x / nh) : static_cast<Elem>(x % nh);
      f.values[c] = factor.centralizer_table->value(irrep, factor.local(part));
    }
    auto dec = decompose(f);
    if (dec.size() != 1 || dec[0].second != 1)
      throw Error(Errc::internal, "outer product with the trivial character is not irreducible");
    return dec[0].first;
  };

  LambdaRep out(product);
  for (const auto& c : r_sigma.components()) out.add({lift(ds, c.rep.irrep, true), c.rep.weight}, c.mult);
  for (const auto& c : r_tau.components()) out.add({lift(dt, c.rep.irrep, false), c.rep.weight}, c.mult);
  return out;
}

RestrictionCheck restrict_lambda(GroupPtr h, GroupPtr g, const Homomorphism& phi, const CommTuple& tau,
                                 const ClassFunction& chi_v, std::size_t max_chartab_order) {
  if (phi.map().size() != h->order()) throw Error(Errc::not_homomorphism, "homomorphism source mismatch");
  CommTuple image;
  for (Elem e : tau.entries) image.entries.push_back(phi(e));
  if (!is_commuting(*g, image.entries)) throw Error(Errc::non_commuting, "phi(tau) does not commute");

  DescPtr dg = lambda_desc(g, image, max_chartab_order);
  DescPtr dh = lambda_desc(h, tau, max_chartab_order);
  LambdaRep upstairs = v_sigma(chi_v, dg);

  LambdaRep pulled(dh);
  const auto& htable = dh->centralizer_table;
  for (const auto& c : upstairs.components()) {
    ClassFunction f = ClassFunction::zero(htable);
    for (std::size_t k = 0; k < htable->num_classes(); ++k) {
      Elem x = dh->centralizer_group.embedding[htable->classes()[k].representative];
      f.values[k] = dg->centralizer_table->value(c.rep.irrep, dg->local(phi(x)));
    }
    for (auto [mu, mult] : decompose(f)) pulled.add({mu, c.rep.weight}, mult * c.mult);
  }

  ClassFunction pulled_char = restrict_character(chi_v, phi, character_table(h, max_chartab_order));
  LambdaRep direct = v_sigma(pulled_char, dh);
  bool eq = pulled == direct;
  return {std::move(pulled), std::move(direct), eq};
}

// ---------------------------------------------------------------------------
// Real representations

void check_realizable(const ClassFunction& chi_v) {
  if (!(chi_v == chi_v.conj())) throw Error(Errc::not_realizable, "character is not self-dual");
  for (auto [irr, mult] : decompose(chi_v)) {
    if (fs_indicator(*chi_v.table, irr) == -1 && mult % 2 != 0)
      throw Error(Errc::not_realizable,
                  "quaternionic irreducible " + std::to_string(irr) + " occurs with odd multiplicity");
  }
}

LambdaRep real_v_sigma(const ClassFunction& chi_v, DescPtr d) {
  check_realizable(chi_v);
  LambdaRep v = v_sigma(chi_v, d);
  return v + dual(v);
}

std::vector<RealBasisEntry> real_basis(const LambdaDesc& d) {
  const auto& t = *d.centralizer_table;
  std::vector<RealBasisEntry> out;
  std::vector<bool> used(t.num_irreps(), false);
  const bool trivial = d.is_trivial_tuple();
  for (std::size_t irr = 0; irr < t.num_irreps(); ++irr) {
    if (used[irr]) continue;
    RealBasisEntry e;
    switch (fs_indicator(t, irr)) {
      case 1:
        e.type = RealType::real;
        e.complexification = {irr};
        break;
      case 0:
        e.type = RealType::complex;
        e.complexification = {irr, t.dual(irr)};
        used[t.dual(irr)] = true;
        break;
      default:
        e.type = RealType::quaternionic;
        e.complexification = {irr, irr};
        break;
    }
    used[irr] = true;
    unsigned long dim = 0;
    for (std::size_t mu : e.complexification) {
      dim += t.degree(mu);
      if (trivial) {
        merge_into(e.components, {mu, WeightVec(d.n(), Rational(0))}, 1);
      } else {
        WeightVec w = d.basis_weight(mu);
        merge_into(e.components, {mu, w}, 1);
        for (auto& x : w) x = -x;
        merge_into(e.components, {t.dual(mu), std::move(w)}, 1);
      }
    }
    e.complex_dimension = trivial ? dim : 2 * dim;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace quasi
