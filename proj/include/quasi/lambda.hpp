#pragma once

#include <memory>
#include <span>
#include <vector>

#include "quasi/chartab.hpp"
#include "quasi/cyclotomic.hpp"
#include "quasi/group.hpp"

namespace quasi {

using WeightVec = std::vector<Rational>;

std::string format_weight(const WeightVec& w);  // "q^(1/2, 1)"

// The extension Lambda_G(sigma) = (C_G(sigma) x R^n) / <(sigma_i, -e_i)>, described through
// the centralizer, its character table and the central scalars of each sigma_i.
struct LambdaDesc {
  GroupPtr group;
  CommTuple sigma;
  Subgroup centralizer;
  SubgroupTable centralizer_group;  // C_G(sigma) re-indexed
  TablePtr centralizer_table;
  std::vector<unsigned> orders;              // l_i
  std::vector<std::vector<unsigned>> twist;  // twist[irrep][i] = m with 0 < m <= l_i

  std::size_t n() const { return sigma.size(); }
  // Index of a G-element inside the centralizer table; throws if outside C_G(sigma).
  Elem local(Elem g) const;
  bool is_trivial_tuple() const;
  // Basis weight m_{irrep,i} / l_i, in (0, 1].
  WeightVec basis_weight(std::size_t irrep) const;
};

using DescPtr = std::shared_ptr<const LambdaDesc>;

// Throws Error(non_commuting) unless the tuple pairwise commutes.
DescPtr lambda_desc(GroupPtr g, const CommTuple& sigma, std::size_t max_chartab_order = 48);

// An irreducible of C_G(sigma) extended to Lambda_G(sigma) by a torus weight.
struct TwistedIrrep {
  std::size_t irrep = 0;
  WeightVec weight;
  friend bool operator==(const TwistedIrrep&, const TwistedIrrep&) = default;
  friend bool operator<(const TwistedIrrep& a, const TwistedIrrep& b) {
    if (a.irrep != b.irrep) return a.irrep < b.irrep;
    return a.weight < b.weight;
  }
};

struct LambdaComponent {
  TwistedIrrep rep;
  unsigned long mult = 1;
  friend bool operator==(const LambdaComponent&, const LambdaComponent&) = default;
};

// A finite-dimensional Lambda_G(sigma)-representation as a weighted multiset of irreducibles.
// Components are kept sorted and merged; every weight satisfies w_i = m_{irrep,i}/l_i mod 1.
class LambdaRep {
 public:
  explicit LambdaRep(DescPtr desc) : desc_(std::move(desc)) {}

  const DescPtr& desc() const { return desc_; }
  const std::vector<LambdaComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  // Throws Error(invalid_argument) when the weight is incompatible with the irreducible.
  void add(TwistedIrrep rep, unsigned long mult = 1);
  unsigned long dimension() const;

  LambdaRep& operator+=(const LambdaRep& o);
  friend LambdaRep operator+(LambdaRep a, const LambdaRep& b) { return a += b; }
  friend bool operator==(const LambdaRep& a, const LambdaRep& b);

 private:
  DescPtr desc_;
  std::vector<LambdaComponent> components_;
};

// Same group object and tuple.
bool same_lambda(const LambdaDesc& a, const LambdaDesc& b);

// One basis element per irreducible of C_G(sigma), weights m/l in (0, 1].
std::vector<TwistedIrrep> lambda_basis(const LambdaDesc& d);

// Restriction of chi_V to C_G(sigma), with each isotypic part carrying its basis weight.
LambdaRep v_sigma(const ClassFunction& chi_v, DescPtr d);
// Shifts every weight by k.
LambdaRep q_twist(const LambdaRep& r, std::span<const long> k);
// (irrep, w) -> (conjugate irrep, -w).
LambdaRep dual(const LambdaRep& r);
// The part of chi_V on which every sigma_i acts trivially, at weight 0.
LambdaRep fixed_part_rep(const ClassFunction& chi_v, DescPtr d);

// Faithful extensions built from a representation V of G:
//   twisted_pair:    (V)_sigma + sum_i (V)_sigma (x) q_i^-1   (for n = 1: (V)_sigma + (V)_sigma (x) q^-1)
//   with_fixed_part: (V)_sigma + V^sigma
LambdaRep twisted_pair(const ClassFunction& chi_v, DescPtr d);
LambdaRep with_fixed_part(const ClassFunction& chi_v, DescPtr d);

// A point [a, t] of Lambda_G(sigma) in canonical form, t in [0, 1)^n.
struct LambdaPoint {
  Elem element = 0;  // index in G
  WeightVec t;
  friend bool operator==(const LambdaPoint&, const LambdaPoint&) = default;
  friend bool operator<(const LambdaPoint& a, const LambdaPoint& b) {
    if (a.element != b.element) return a.element < b.element;
    return a.t < b.t;
  }
};

// Kernel of the action. When torus_rank > 0 the kernel is infinite and finite_points
// lists only the kernel points with t = 0; otherwise it lists the whole kernel except the
// identity. full_group marks the empty representation, whose kernel is everything.
struct KernelDescription {
  std::size_t torus_rank = 0;
  std::vector<LambdaPoint> finite_points;
  bool full_group = false;

  bool faithful() const { return torus_rank == 0 && finite_points.empty() && !full_group; }
};

// Exact kernel via Smith normal form on the cleared weight matrix.
KernelDescription kernel(const LambdaRep& r);
bool is_faithful(const LambdaRep& r);

// Does [a, t] act trivially on r? Direct evaluation of every component's character.
bool acts_trivially(const LambdaRep& r, Elem a, const WeightVec& t);

// R_sigma and R_tau re-expressed over Lambda_{G x H}(sigma, tau) through irrep (x) triv and
// triv (x) irrep. `product` must be a desc over G x H built by direct_product, with tuple
// entries (sigma_i, tau_i).
LambdaRep external_sum(const LambdaRep& r_sigma, const LambdaRep& r_tau, DescPtr product);

// Both sides of phi_tau^* (V)_{phi(tau)} = (phi^* V)_tau.
struct RestrictionCheck {
  LambdaRep pulled_back;
  LambdaRep direct;
  bool equal = false;
};

// phi: H -> G; chi_v is a character of G.
RestrictionCheck restrict_lambda(GroupPtr h, GroupPtr g, const Homomorphism& phi, const CommTuple& tau,
                                 const ClassFunction& chi_v, std::size_t max_chartab_order = 48);

// Complexified real representation V (x) C given by a self-dual character:
// (V)_sigma + dual((V)_sigma). Throws Error(not_realizable) when chi_v is not the
// character of a real representation.
LambdaRep real_v_sigma(const ClassFunction& chi_v, DescPtr d);

// Throws Error(not_realizable) unless chi_v is self-dual with even multiplicity on every
// quaternionic irreducible.
void check_realizable(const ClassFunction& chi_v);

enum class RealType { real, complex, quaternionic };

// One real irreducible of C_G(sigma) and its basis element of RO(Lambda_G(sigma)).
struct RealBasisEntry {
  RealType type = RealType::real;
  std::vector<std::size_t> complexification;  // constituents of lambda (x) C, with repetition
  std::vector<LambdaComponent> components;     // the basis element, at character level
  unsigned long complex_dimension = 0;
};

std::vector<RealBasisEntry> real_basis(const LambdaDesc& d);

}  // namespace quasi
