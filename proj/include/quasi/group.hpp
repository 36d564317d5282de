#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quasi {

using Elem = std::uint32_t;

// A permutation of {0, ..., degree-1}; images[p] is the image of point p.
struct Permutation {
  std::vector<std::uint32_t> images;

  std::size_t degree() const { return images.size(); }
  bool is_identity() const;
  // Disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "()" for the identity.
  std::string to_cycles() const;
  // Left-to-right product: (*this * other)(p) = other(this(p)).
  Permutation then(const Permutation& other) const;

  static Permutation identity(std::size_t degree);
  // Parses "(1 2)(3 4 5)" style input. Throws Error(parse) on malformed text or repeated points.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

struct GroupLimits {
  std::size_t max_order = 10000;        // closure cap for group construction
  std::size_t max_tuple_scan = 4096;    // cap on |G|^n for commuting tuple scans
  std::size_t max_subgroup_order = 48;  // cap on |G| for subgroup lattice
  std::size_t max_chartab_order = 48;   // cap on |G| for character tables
};

// Finite group given by its full multiplication table on indices 0..order-1.
class GroupTable {
 public:
  // Closure of the given permutations under composition. Elements are indexed in
  // breadth-first order from the identity, right-multiplying by generators in order.
  static GroupTable from_permutations(std::span<const Permutation> generators, std::size_t degree,
                                      std::size_t max_order = 10000);

  // Validates a Cayley table (rows[a][b] = a*b): closure, associativity, identity, inverses.
  static GroupTable from_table(std::vector<std::vector<Elem>> rows,
                               std::vector<std::string> labels = {},
                               std::vector<Elem> generators = {});

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  unsigned elem_order(Elem a) const { return elem_order_[a]; }
  Elem pow(Elem a, long long k) const;
  Elem conjugate(Elem x, Elem b) const { return mul(mul(inv(b), x), b); }  // b^-1 x b
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  unsigned exponent() const;

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  const std::vector<Elem>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Permutation images of each element, when the group was built from permutations.
  const std::vector<Permutation>& permutations() const { return perms_; }

  // Resolves an element selector. Exact label match wins; otherwise labels are compared
  // with whitespace, '^' and '*' removed. "e" selects the identity when unused as a label.
  // Throws Error(invalid_argument) when nothing or more than one element matches.
  Elem find(std::string_view selector) const;

 private:
  GroupTable() = default;
  void finish();

  std::size_t order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<unsigned> elem_order_;
  std::vector<std::string> labels_;
  std::vector<Elem> generators_;
  std::vector<Permutation> perms_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

struct Subgroup {
  std::vector<Elem> elements;    // sorted
  std::vector<Elem> generators;  // witness generating set

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

struct CommTuple {
  std::vector<Elem> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<unsigned> orders(const GroupTable& g) const;
  friend bool operator==(const CommTuple&, const CommTuple&) = default;
  friend auto operator<=>(const CommTuple&, const CommTuple&) = default;
};

struct TupleOrbit {
  CommTuple representative;  // lexicographically least member
  std::size_t orbit_size = 0;
};

struct ConjugacyClass {
  Elem representative;        // least index in the class
  std::vector<Elem> members;  // sorted
};

// Classes ordered with the identity class first, then by representative.
std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g);

Subgroup generated_subgroup(const GroupTable& g, std::span<const Elem> generators);

// Intersection of the centralizers of all entries.
Subgroup centralizer(const GroupTable& g, std::span<const Elem> sigma);

// Orbits of simultaneous conjugation on pairwise-commuting n-tuples, ordered by representative.
// Throws Error(size_limit) when |G|^n exceeds max_scan.
std::vector<TupleOrbit> commuting_tuples(const GroupTable& g, unsigned n,
                                         std::size_t max_scan = 4096);

// All subgroups, sorted by order then by element list. Throws Error(size_limit) past max_order.
std::vector<Subgroup> subgroups(const GroupTable& g, std::size_t max_order = 48);

// True iff some b in G has b^-1 gamma b contained in h.
bool contains_conjugate(const GroupTable& g, const Subgroup& gamma, const Subgroup& h);

bool is_commuting(const GroupTable& g, std::span<const Elem> sigma);

// A subgroup re-indexed as a group in its own right.
struct SubgroupTable {
  GroupPtr table;
  std::vector<Elem> embedding;  // local index -> parent index
  std::optional<Elem> local(Elem parent_elem) const;
};

SubgroupTable subgroup_table(const GroupTable& g, const Subgroup& s);

// G x H with element (a, b) at index a * |H| + b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

// A homomorphism H -> G stored as its full image table.
class Homomorphism {
 public:
  // Extends generator images along words; throws Error(not_homomorphism) if inconsistent.
  static Homomorphism from_generator_images(const GroupTable& source, const GroupTable& target,
                                            std::span<const Elem> images);
  static Homomorphism from_map(const GroupTable& source, const GroupTable& target,
                               std::vector<Elem> map);

  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& map() const { return map_; }

 private:
  std::vector<Elem> map_;
};

}  // namespace quasi
