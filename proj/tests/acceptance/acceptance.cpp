// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "quasi/builtin.hpp"
#include "quasi/chartab.hpp"
#include "quasi/error.hpp"
#include "quasi/lambda.hpp"
#include "quasi/quasi_table.hpp"
#include "support/oracle.hpp"

using namespace quasi;
using oracle::share;
using Clock = std::chrono::steady_clock;

namespace {

// Collects failed checks; the first few are printed under the verdict line.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<oracle::Named> table_groups() {
  std::vector<oracle::Named> out;
  for (unsigned k = 1; k <= 12; ++k) out.push_back({"cyclic", share(cyclic_group(k))});
  out.push_back({"S3", share(symmetric_group(3))});
  out.push_back({"S4", share(symmetric_group(4))});
  out.push_back({"A4", share(alternating_group(4))});
  out.push_back({"D4", share(dihedral_group(4))});
  out.push_back({"Q8", share(quaternion_group())});
  return out;
}

std::string tuple_name(const GroupTable& g, const CommTuple& t) {
  std::string s = g.name() + " (";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + g.label(t.entries[i]);
  return s + ")";
}

void character_tables(Tally& t) {
  auto t0 = Clock::now();
  for (const auto& [name, g] : table_groups()) {
    auto tab = character_table(g);
    const auto& cls = tab->classes();
    t.expect(tab->num_irreps() == tab->num_classes(), g->name() + " square table");
    unsigned long deg2 = 0;
    for (std::size_t i = 0; i < tab->num_irreps(); ++i) {
      deg2 += static_cast<unsigned long>(tab->degree(i)) * tab->degree(i);
      for (std::size_t j = 0; j < tab->num_irreps(); ++j) {
        Cyc s(0L);
        for (std::size_t c = 0; c < cls.size(); ++c)
          s += Cyc(static_cast<long>(cls[c].members.size())) * tab->row(i)[c] * tab->row(j)[c].conj();
        t.expect(s == Cyc(i == j ? static_cast<long>(g->order()) : 0L), g->name() + " row orthogonality");
      }
    }
    t.expect(deg2 == g->order(), g->name() + " sum of squared degrees");
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = 0; b < cls.size(); ++b) {
        Cyc s(0L);
        for (std::size_t i = 0; i < tab->num_irreps(); ++i) s += tab->row(i)[a] * tab->row(i)[b].conj();
        long expect = a == b ? static_cast<long>(g->order() / cls[a].members.size()) : 0;
        t.expect(s == Cyc(expect), g->name() + " column orthogonality");
      }
  }
  double dt = seconds_since(t0);
  t.expect(dt < 10.0, "character tables took " + std::to_string(dt) + " s");
}

void basis_rank(Tally& t) {
  for (const auto& [name, g] : oracle::test_groups())
    for (unsigned n = 1; n <= 2; ++n)
      for (const auto& orbit : commuting_tuples(*g, n)) {
        auto d = lambda_desc(g, orbit.representative);
        auto basis = lambda_basis(*d);
        const auto& ct = *d->centralizer_table;
        std::string where = tuple_name(*g, orbit.representative);
        t.expect(d->centralizer.elements == oracle::centralizer(*g, orbit.representative.entries),
                 where + " centralizer");
        t.expect(basis.size() == ct.num_irreps(), where + " rank");
        for (const auto& e : basis)
          for (std::size_t i = 0; i < n; ++i) {
            Rational m = e.weight[i] * d->orders[i];
            bool ok = m.get_den() == 1 && m > 0 && m <= d->orders[i];
            t.expect(ok, where + " weight range");
            if (!ok) continue;
            Elem s = orbit.representative.entries[i];
            unsigned long mi = m.get_num().get_ui();
            t.expect(central_scalar(ct, e.irrep, d->local(s), d->orders[i]) == mi, where + " central scalar");
            t.expect(ct.value(e.irrep, d->local(s)) ==
                         Cyc(static_cast<long>(ct.degree(e.irrep))) * Cyc::root(d->orders[i], static_cast<long long>(mi)),
                     where + " character value");
          }
      }
}

void tuple_counts(Tally& t) {
  auto s3 = share(symmetric_group(3));
  t.expect(commuting_tuples(*s3, 2).size() == 8, "S3 pair orbits != 8");
  for (auto g : {s3, share(dihedral_group(4)), share(quaternion_group())}) {
    auto brute = oracle::commuting_tuples(*g, 2);
    auto orbits = commuting_tuples(*g, 2);
    t.expect(orbits.size() == brute.orbits, g->name() + " orbit count");
    // checksum: sum over classes of the class number of the centralizer
    std::size_t checksum = 0;
    for (const auto& c : conjugacy_classes(*g)) {
      std::vector<Elem> one{c.representative};
      auto cent = subgroup_table(*g, centralizer(*g, one));
      checksum += conjugacy_classes(*cent.table).size();
    }
    t.expect(checksum == brute.orbits, g->name() + " class-number checksum");
    std::size_t tuples = 0;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      tuples += orbits[k].orbit_size;
      t.expect(orbits[k].representative.entries == brute.representatives[k], g->name() + " representative");
    }
    t.expect(tuples == brute.tuples, g->name() + " tuple total");
  }
  t.expect(oracle::commuting_tuples(*share(dihedral_group(4)), 2).orbits == 22, "D4 frozen count");
  t.expect(oracle::commuting_tuples(*share(quaternion_group()), 2).orbits == 22, "Q8 frozen count");
}

void faithfulness(Tally& t) {
  for (const auto& [name, g] : oracle::test_groups()) {
    auto reg = ClassFunction::regular(character_table(g));
    for (const auto& orbit : commuting_tuples(*g, 1)) {
      auto d = lambda_desc(g, orbit.representative);
      std::string where = tuple_name(*g, orbit.representative);
      t.expect(is_faithful(twisted_pair(reg, d)), where + " (V)_sigma + (V)_sigma q^-1");
      t.expect(is_faithful(with_fixed_part(reg, d)), where + " (V)_sigma + V^sigma");
      t.expect(is_faithful(real_v_sigma(reg, d)), where + " real (V)_sigma");
    }
    for (const auto& orbit : commuting_tuples(*g, 2)) {
      auto d = lambda_desc(g, orbit.representative);
      t.expect(is_faithful(twisted_pair(reg, d)), tuple_name(*g, orbit.representative) + " twisted pair");
    }
  }
  auto z4 = share(cyclic_group(4));
  auto tab = character_table(z4);
  CommTuple sigma{{z4->find("g^2")}};
  auto r = v_sigma(ClassFunction::irreducible(tab, 1), lambda_desc(z4, sigma));
  auto k = kernel(r);
  auto brute = oracle::kernel(r);
  LambdaPoint witness{z4->find("g^3"), {Rational(1, 2)}};
  t.expect(!k.faithful(), "witness is faithful");
  t.expect(k.torus_rank == 0 && k.finite_points == std::vector<LambdaPoint>{witness}, "witness kernel");
  t.expect(!brute.torus && brute.points == k.finite_points, "witness brute force");
}

void kernel_oracle(Tally& t) {
  std::mt19937 rng(20240611);
  std::size_t reps = 0;
  for (const auto& [name, g] : oracle::test_groups())
    for (unsigned n = 1; n <= 2; ++n)
      for (const auto& orbit : commuting_tuples(*g, n)) {
        auto d = lambda_desc(g, orbit.representative);
        auto r = oracle::random_rep(d, rng);
        auto k = kernel(r);
        auto brute = oracle::kernel(r);
        std::string where = tuple_name(*g, orbit.representative);
        t.expect((k.torus_rank > 0) == brute.torus, where + " torus verdict");
        t.expect(k.finite_points == brute.points, where + " kernel points");
        t.expect(k.faithful() == (!brute.torus && brute.points.empty() && !r.empty()), where + " faithful verdict");
        ++reps;
      }
  t.expect(reps >= 50, "only " + std::to_string(reps) + " random representations");
}

ClassFunction outer_sum(TablePtr product, const ClassFunction& v, const ClassFunction& w, std::size_t h_order) {
  ClassFunction f = ClassFunction::zero(product);
  for (std::size_t c = 0; c < product->num_classes(); ++c) {
    Elem x = product->classes()[c].representative;
    f.values[c] = v.at(static_cast<Elem>(x / h_order)) + w.at(static_cast<Elem>(x % h_order));
  }
  return f;
}

void sums_and_restrictions(Tally& t) {
  // (V + W)_(sigma, tau) = (V)_sigma + (W)_tau over G x H.
  std::vector<std::pair<GroupPtr, GroupPtr>> pairs{
      {share(cyclic_group(2)), share(cyclic_group(2))},
      {share(symmetric_group(3)), share(cyclic_group(2))},
      {share(cyclic_group(3)), share(cyclic_group(1))},
      {share(cyclic_group(2)), share(cyclic_group(4))},
  };
  for (const auto& [g, h] : pairs) {
    auto prod = share(direct_product(*g, *h));
    auto tg = character_table(g), th = character_table(h), tp = character_table(prod);
    std::vector<ClassFunction> vs{ClassFunction::regular(tg)}, ws{ClassFunction::regular(th)};
    for (std::size_t i = 0; i < tg->num_irreps(); ++i) vs.push_back(ClassFunction::irreducible(tg, i));
    for (std::size_t j = 0; j < th->num_irreps(); ++j) ws.push_back(ClassFunction::irreducible(th, j));
    for (Elem s = 0; s < g->order(); ++s)
      for (Elem u = 0; u < h->order(); ++u) {
        auto ds = lambda_desc(g, CommTuple{{s}});
        auto du = lambda_desc(h, CommTuple{{u}});
        auto dp = lambda_desc(prod, CommTuple{{static_cast<Elem>(s * h->order() + u)}});
        for (const auto& v : vs)
          for (const auto& w : ws)
            t.expect(external_sum(v_sigma(v, ds), v_sigma(w, du), dp) ==
                         v_sigma(outer_sum(tp, v, w, h->order()), dp),
                     prod->name() + " external sum");
      }
  }

  // phi_tau^* (V)_phi(tau) = (phi^* V)_tau.
  struct Case {
    GroupPtr h, g;
    Homomorphism phi;
  };
  auto z2 = share(cyclic_group(2)), z4 = share(cyclic_group(4)), s3 = share(symmetric_group(3));
  auto z3 = share(cyclic_group(3)), d4 = share(dihedral_group(4)), q8 = share(quaternion_group());
  auto v4 = share(direct_product(*z2, *z2));
  auto along = [](GroupPtr h, GroupPtr g, std::vector<std::string> images) {
    std::vector<Elem> imgs;
    for (const auto& l : images) imgs.push_back(g->find(l));
    return Case{h, g, Homomorphism::from_generator_images(*h, *g, imgs)};
  };
  // Z/2 x Z/2 onto <s, r^2> in D4, element (a, b) to s^a r^2b
  std::vector<Elem> klein(4);
  for (Elem x = 0; x < 4; ++x)
    klein[x] = d4->mul(d4->pow(d4->find("s"), x / 2), d4->pow(d4->find("r^2"), x % 2));
  std::vector<Case> cases{
      along(z2, z4, {"g^2"}),
      along(z2, s3, {"(1 2)"}),
      along(z3, s3, {"(1 2 3)"}),
      along(z4, d4, {"r"}),
      along(z4, q8, {"i"}),
      along(z4, z2, {"g"}),
      along(z2, z2, {"e"}),
      {s3, s3, Homomorphism::from_map(*s3, *s3, [&] {
         std::vector<Elem> id(s3->order());
         for (Elem x = 0; x < s3->order(); ++x) id[x] = x;
         return id;
       }())},
      {v4, d4, Homomorphism::from_map(*v4, *d4, klein)},
  };
  for (auto& c : cases) {
    auto tg = character_table(c.g);
    std::vector<ClassFunction> vs{ClassFunction::regular(tg)};
    for (std::size_t i = 0; i < tg->num_irreps(); ++i) vs.push_back(ClassFunction::irreducible(tg, i));
    for (unsigned n = 1; n <= 2; ++n)
      for (const auto& orbit : commuting_tuples(*c.h, n))
        for (const auto& v : vs)
          t.expect(restrict_lambda(c.h, c.g, c.phi, orbit.representative, v).equal,
                   c.h->name() + " -> " + c.g->name() + " restriction");
  }
}

void real_suite(Tally& t) {
  for (const auto& [name, g] : oracle::test_groups()) {
    auto tab = character_table(g);
    for (unsigned n = 1; n <= 2; ++n)
      for (const auto& orbit : commuting_tuples(*g, n)) {
        auto d = lambda_desc(g, orbit.representative);
        std::string where = tuple_name(*g, orbit.representative);
        // real irreducibles of C are as many as its classes taken up to inversion, {C, C^-1}
        const auto& cent = d->centralizer.elements;
        std::set<std::vector<Elem>> real_classes;
        for (Elem a : cent) {
          std::vector<Elem> cls;
          for (Elem b : cent) {
            cls.push_back(g->mul(g->mul(g->inv(b), a), b));
            cls.push_back(g->inv(cls.back()));
          }
          std::sort(cls.begin(), cls.end());
          cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
          real_classes.insert(cls);
        }
        auto rb = real_basis(*d);
        t.expect(rb.size() == real_classes.size(), where + " real basis count");
        for (const auto& e : rb) {
          unsigned long deg = 0;
          for (auto i : e.complexification) deg += d->centralizer_table->degree(i);
          unsigned long expect = d->is_trivial_tuple() ? deg : 2 * deg;
          t.expect(e.complex_dimension == expect, where + " real basis dimension");
        }
        std::vector<ClassFunction> reals{ClassFunction::regular(tab), ClassFunction::irreducible(tab, 0)};
        for (std::size_t i = 0; i < tab->num_irreps(); ++i) {
          int fs = fs_indicator(*tab, i);
          auto chi = ClassFunction::irreducible(tab, i);
          if (fs == 1) reals.push_back(chi);
          if (fs == -1) reals.push_back(2 * chi);
          if (fs == 0) reals.push_back(chi + ClassFunction::irreducible(tab, tab->dual(i)));
        }
        for (const auto& v : reals) {
          unsigned long dim = v.values[0].rational().get_num().get_ui();
          t.expect(real_v_sigma(v, d).dimension() == 2 * dim, where + " real dimension");
        }
      }
  }
}

void sfixed(Tally& t) {
  for (auto g : {share(symmetric_group(3)), share(dihedral_group(4))}) {
    auto subs = subgroups(*g);
    auto brute = oracle::subgroups(*g);
    t.expect(subs.size() == brute.size(), g->name() + " subgroup count");
    for (std::size_t k = 0; k < std::min(subs.size(), brute.size()); ++k)
      t.expect(std::find_if(subs.begin(), subs.end(), [&](const Subgroup& s) { return s.elements == brute[k]; }) !=
                   subs.end(),
               g->name() + " subgroup list");
    for (unsigned n = 1; n <= 2; ++n)
      for (const auto& orbit : commuting_tuples(*g, n)) {
        auto gamma = oracle::closure(*g, orbit.representative.entries);
        for (const auto& h : brute) {
          Subgroup sub;
          sub.elements = h;
          sub.generators = h;
          bool empty = s_fixed_predicate(*g, orbit.representative, sub) == SFixedVerdict::empty;
          t.expect(empty == oracle::conjugate_inside(*g, gamma, h), tuple_name(*g, orbit.representative) + " verdict");
        }
      }
  }
}

void golden(Tally& t, Clock::time_point start) {
  auto s3 = quasi_coefficients(share(symmetric_group(3)), 1);
  std::vector<std::size_t> ranks;
  for (const auto& r : s3.records) ranks.push_back(r.rank);
  t.expect(ranks == std::vector<std::size_t>{3, 2, 3}, "S3 ranks");
  t.expect(s3.total_rank == 8, "S3 total rank");
  t.expect(s3.total_rank == oracle::commuting_tuples(*share(symmetric_group(3)), 2).orbits, "S3 oracle");

  auto z2 = quasi_coefficients(share(cyclic_group(2)), 1);
  std::vector<std::multiset<std::string>> twists;
  for (const auto& r : z2.records) {
    std::multiset<std::string> m;
    for (const auto& w : r.twists) m.insert(to_string(w[0]));
    twists.push_back(m);
  }
  t.expect(twists == std::vector<std::multiset<std::string>>{{"1", "1"}, {"1", "1/2"}}, "Z/2 twists");
  double dt = seconds_since(start);
  t.expect(dt < 60.0, "battery took " + std::to_string(dt) + " s");
}

}  // namespace

int main() {
  const auto start = Clock::now();
  struct Criterion {
    const char* title;
    std::function<void(Tally&)> body;
  };
  std::vector<Criterion> criteria{
      {"character tables: orthogonality and degrees", character_tables},
      {"free basis rank and central scalars", basis_rank},
      {"commuting tuple counts against brute force", tuple_counts},
      {"faithful constructions and the cyclic witness", faithfulness},
      {"kernel solver against the grid oracle", kernel_oracle},
      {"external sums and restriction along homomorphisms", sums_and_restrictions},
      {"real basis counts and dimensions", real_suite},
      {"fixed point predicate on all subgroups", sfixed},
      {"coefficient table golden values", [&](Tally& t) { golden(t, start); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally tally;
    try {
      criteria[i].body(tally);
    } catch (const std::exception& e) {
      tally.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = tally.failures.empty();
    failed += !ok;
    std::printf("%s %zu %s (%zu checks)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title, tally.checks);
    for (std::size_t k = 0; k < std::min<std::size_t>(tally.failures.size(), 5); ++k)
      std::printf("    %s\n", tally.failures[k].c_str());
  }
  std::printf("%d of %zu criteria failed, %.2f s\n", failed, criteria.size(), seconds_since(start));
  return failed == 0 ? 0 : 1;
}
