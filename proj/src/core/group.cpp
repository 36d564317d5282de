#include "quasi/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "quasi/error.hpp"

namespace quasi {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::size_limit: return "size limit exceeded";
    case Errc::parse: return "parse error";
    case Errc::not_homomorphism: return "not a homomorphism";
    case Errc::non_commuting: return "non-commuting tuple";
    case Errc::virtual_character: return "virtual character";
    case Errc::non_central: return "element does not act as a scalar";
    case Errc::not_realizable: return "not realizable over the reals";
    case Errc::division_by_zero: return "division by zero";
    case Errc::table_mismatch: return "character table mismatch";
    case Errc::io: return "i/o error";
    case Errc::internal: return "internal error";
  }
  return "unknown error";
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 0u);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  Permutation r;
  r.images.resize(images.size());
  for (std::size_t p = 0; p < images.size(); ++p) r.images[p] = other.images[images[p]];
  return r;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = images[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::parse, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') fail("expected a point number");
      std::size_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > degree) fail("point out of range");
        ++i;
      }
      if (v == 0) fail("points are numbered from 1");
      if (used[v - 1]) fail("point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p.images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

// ---------------------------------------------------------------------------
// GroupTable

GroupTable GroupTable::from_permutations(std::span<const Permutation> generators,
                                         std::size_t degree, std::size_t max_order) {
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw Error(Errc::invalid_argument, "generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (auto v : g.images) {
      if (v >= degree || hit[v]) throw Error(Errc::invalid_argument, "generator is not a bijection");
      hit[v] = true;
    }
  }

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<Permutation, Elem> index{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = elems[head].then(g);
      if (index.count(next)) continue;
      if (elems.size() >= max_order)
        throw Error(Errc::size_limit,
                    "group closure exceeds the order cap of " + std::to_string(max_order));
      index.emplace(next, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(next));
    }
  }

  GroupTable t;
  t.order_ = elems.size();
  t.identity_ = 0;
  t.mul_.resize(t.order_ * t.order_);
  for (std::size_t a = 0; a < t.order_; ++a)
    for (std::size_t b = 0; b < t.order_; ++b)
      t.mul_[a * t.order_ + b] = index.at(elems[a].then(elems[b]));
  for (const auto& g : generators) {
    Elem e = index.at(g);
    if (e != t.identity_ && std::find(t.generators_.begin(), t.generators_.end(), e) == t.generators_.end())
      t.generators_.push_back(e);
  }
  t.labels_.reserve(t.order_);
  for (const auto& p : elems) t.labels_.push_back(p.to_cycles());
  t.perms_ = std::move(elems);
  t.finish();
  return t;
}

GroupTable GroupTable::from_table(std::vector<std::vector<Elem>> rows,
                                  std::vector<std::string> labels, std::vector<Elem> generators) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::invalid_argument, "empty multiplication table");
  GroupTable t;
  t.order_ = n;
  t.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) throw Error(Errc::invalid_argument, "multiplication table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n) throw Error(Errc::invalid_argument, "table entry out of range");
      t.mul_[a * n + b] = rows[a][b];
    }
  }
  std::optional<Elem> id;
  for (Elem e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = t.mul(e, x) == x && t.mul(x, e) == x;
    if (ok) id = e;
  }
  if (!id) throw Error(Errc::invalid_argument, "table has no two-sided identity");
  t.identity_ = *id;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)))
          throw Error(Errc::invalid_argument, "table is not associative");

  if (labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (labels.size() != n) {
    throw Error(Errc::invalid_argument, "label count does not match table size");
  }
  t.labels_ = std::move(labels);
  t.finish();

  if (generators.empty()) {
    std::vector<bool> covered(n, false);
    covered[t.identity_] = true;
    for (Elem x = 0; x < n; ++x) {
      if (covered[x]) continue;
      generators.push_back(x);
      Subgroup s = generated_subgroup(t, generators);
      for (Elem y : s.elements) covered[y] = true;
    }
  }
  t.generators_ = std::move(generators);
  return t;
}

void GroupTable::finish() {
  inv_.assign(order_, 0);
  elem_order_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    bool found = false;
    for (Elem b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inv_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::invalid_argument, "element without inverse");
    unsigned k = 1;
    Elem x = a;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    elem_order_[a] = k;
  }
}

void GroupTable::set_labels(std::vector<std::string> labels) {
  if (labels.size() != order_) throw Error(Errc::invalid_argument, "label count mismatch");
  labels_ = std::move(labels);
}

Elem GroupTable::pow(Elem a, long long k) const {
  long long o = elem_order_[a];
  long long r = ((k % o) + o) % o;
  Elem x = identity_;
  for (long long i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

unsigned GroupTable::exponent() const {
  unsigned e = 1;
  for (auto o : elem_order_) e = std::lcm(e, o);
  return e;
}

namespace {
std::string normalize_label(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '^' && c != '*') out += c;
  return out;
}
}  // namespace

Elem GroupTable::find(std::string_view selector) const {
  for (Elem a = 0; a < order_; ++a)
    if (labels_[a] == selector) return a;
  const std::string key = normalize_label(selector);
  std::vector<Elem> hits;
  for (Elem a = 0; a < order_; ++a)
    if (normalize_label(labels_[a]) == key) hits.push_back(a);
  if (hits.empty() && key == "e") return identity_;
  if (hits.empty())
    throw Error(Errc::invalid_argument, "no element labelled '" + std::string(selector) + "'");
  if (hits.size() > 1)
    throw Error(Errc::invalid_argument, "ambiguous element label '" + std::string(selector) + "'");
  return hits.front();
}

// ---------------------------------------------------------------------------
// Subgroups, tuples, classes

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::vector<unsigned> CommTuple::orders(const GroupTable& g) const {
  std::vector<unsigned> out;
  out.reserve(entries.size());
  for (Elem e : entries) out.push_back(g.elem_order(e));
  return out;
}

Subgroup generated_subgroup(const GroupTable& g, std::span<const Elem> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> elems{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Elem s : generators) {
      Elem y = g.mul(elems[head], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  Subgroup out;
  out.elements = std::move(elems);
  for (Elem s : generators)
    if (s != g.identity() && std::find(out.generators.begin(), out.generators.end(), s) == out.generators.end())
      out.generators.push_back(s);
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ConjugacyClass> classes;
  auto add_class = [&](Elem x) {
    std::vector<Elem> members;
    for (Elem b = 0; b < g.order(); ++b) {
      Elem y = g.conjugate(x, b);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back({members.front(), std::move(members)});
  };
  add_class(g.identity());
  for (Elem x = 0; x < g.order(); ++x)
    if (!seen[x]) add_class(x);
  return classes;
}

bool is_commuting(const GroupTable& g, std::span<const Elem> sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (!g.commute(sigma[i], sigma[j])) return false;
  return true;
}

Subgroup centralizer(const GroupTable& g, std::span<const Elem> sigma) {
  Subgroup out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : sigma) ok = ok && g.commute(x, s);
    if (ok) out.elements.push_back(x);
  }
  // Greedy generating set: add elements not yet reached.
  std::vector<bool> covered(g.order(), false);
  covered[g.identity()] = true;
  for (Elem x : out.elements) {
    if (covered[x]) continue;
    out.generators.push_back(x);
    for (Elem y : generated_subgroup(g, out.generators).elements) covered[y] = true;
  }
  return out;
}

namespace {
std::size_t checked_power(std::size_t base, unsigned n, std::size_t cap) {
  std::size_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}
}  // namespace

std::vector<TupleOrbit> commuting_tuples(const GroupTable& g, unsigned n, std::size_t max_scan) {
  if (n == 0) throw Error(Errc::invalid_argument, "tuple length must be positive");
  const std::size_t N = g.order();
  const std::size_t total = checked_power(N, n, max_scan);
  if (total > max_scan)
    throw Error(Errc::size_limit, "|G|^n = " + std::to_string(N) + "^" + std::to_string(n) +
                                      " exceeds the tuple scan cap of " + std::to_string(max_scan));

  std::vector<bool> seen(total, false);
  auto encode = [&](const std::vector<Elem>& t) {
    std::size_t code = 0;
    for (Elem e : t) code = code * N + e;
    return code;
  };

  std::vector<TupleOrbit> out;
  std::vector<Elem> tuple(n, 0);
  std::vector<Elem> conj(n, 0);
  // Depth-first in increasing index order visits tuples lexicographically.
  auto visit = [&](auto&& self, unsigned depth) -> void {
    if (depth == n) {
      if (seen[encode(tuple)]) return;
      std::size_t size = 0;
      for (Elem b = 0; b < N; ++b) {
        for (unsigned i = 0; i < n; ++i) conj[i] = g.conjugate(tuple[i], b);
        std::size_t code = encode(conj);
        if (!seen[code]) {
          seen[code] = true;
          ++size;
        }
      }
      out.push_back({CommTuple{tuple}, size});
      return;
    }
    for (Elem x = 0; x < N; ++x) {
      bool ok = true;
      for (unsigned i = 0; i < depth && ok; ++i) ok = g.commute(x, tuple[i]);
      if (!ok) continue;
      tuple[depth] = x;
      self(self, depth + 1);
    }
  };
  visit(visit, 0);
  return out;
}

std::vector<Subgroup> subgroups(const GroupTable& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw Error(Errc::size_limit, "subgroup enumeration is capped at order " + std::to_string(max_order));
  std::set<std::vector<Elem>> known;
  std::vector<Subgroup> all;
  std::deque<std::size_t> queue;
  auto add = [&](Subgroup s) {
    if (known.insert(s.elements).second) {
      all.push_back(std::move(s));
      queue.push_back(all.size() - 1);
    }
  };
  Elem id = g.identity();
  add(generated_subgroup(g, std::span<const Elem>(&id, 0)));
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (Elem x = 0; x < g.order(); ++x) {
      if (all[idx].contains(x)) continue;
      std::vector<Elem> gens = all[idx].generators;
      gens.push_back(x);
      add(generated_subgroup(g, gens));
    }
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return all;
}

bool contains_conjugate(const GroupTable& g, const Subgroup& gamma, const Subgroup& h) {
  const std::vector<Elem>& test = gamma.generators.empty() ? gamma.elements : gamma.generators;
  for (Elem b = 0; b < g.order(); ++b) {
    bool inside = true;
    for (Elem x : test) {
      if (!h.contains(g.conjugate(x, b))) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

std::optional<Elem> SubgroupTable::local(Elem parent_elem) const {
  auto it = std::lower_bound(embedding.begin(), embedding.end(), parent_elem);
  if (it == embedding.end() || *it != parent_elem) return std::nullopt;
  return static_cast<Elem>(it - embedding.begin());
}

SubgroupTable subgroup_table(const GroupTable& g, const Subgroup& s) {
  const std::size_t n = s.order();
  SubgroupTable out;
  out.embedding = s.elements;
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(g.label(s.elements[a]));
    for (std::size_t b = 0; b < n; ++b) {
      auto loc = out.local(g.mul(s.elements[a], s.elements[b]));
      if (!loc) throw Error(Errc::invalid_argument, "subset is not closed under multiplication");
      rows[a][b] = *loc;
    }
  }
  std::vector<Elem> gens;
  for (Elem x : s.generators) gens.push_back(*out.local(x));
  auto table = std::make_shared<GroupTable>(GroupTable::from_table(std::move(rows), std::move(labels), std::move(gens)));
  table->set_name(g.name().empty() ? "subgroup" : "subgroup of " + g.name());
  out.table = std::move(table);
  return out;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (Elem a1 = 0; a1 < ng; ++a1)
    for (Elem b1 = 0; b1 < nh; ++b1) {
      Elem x = static_cast<Elem>(a1 * nh + b1);
      labels[x] = "(" + g.label(a1) + "," + h.label(b1) + ")";
      for (Elem a2 = 0; a2 < ng; ++a2)
        for (Elem b2 = 0; b2 < nh; ++b2)
          rows[x][a2 * nh + b2] = static_cast<Elem>(g.mul(a1, a2) * nh + h.mul(b1, b2));
    }
  std::vector<Elem> gens;
  for (Elem s : g.generators()) gens.push_back(static_cast<Elem>(s * nh + h.identity()));
  for (Elem s : h.generators()) gens.push_back(static_cast<Elem>(g.identity() * nh + s));
  if (gens.empty()) gens.push_back(static_cast<Elem>(g.identity() * nh + h.identity()));
  GroupTable t = GroupTable::from_table(std::move(rows), std::move(labels), std::move(gens));
  t.set_name(g.name() + " x " + h.name());
  return t;
}

Homomorphism Homomorphism::from_map(const GroupTable& source, const GroupTable& target,
                                    std::vector<Elem> map) {
  if (map.size() != source.order())
    throw Error(Errc::not_homomorphism, "map size does not match the source group");
  for (Elem x : map)
    if (x >= target.order()) throw Error(Errc::not_homomorphism, "image outside the target group");
  for (Elem a = 0; a < source.order(); ++a)
    for (Elem b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw Error(Errc::not_homomorphism, "map does not respect multiplication");
  Homomorphism h;
  h.map_ = std::move(map);
  return h;
}

Homomorphism Homomorphism::from_generator_images(const GroupTable& source, const GroupTable& target,
                                                 std::span<const Elem> images) {
  const auto& gens = source.generators();
  if (images.size() != gens.size())
    throw Error(Errc::not_homomorphism, "expected one image per generator of the source group");
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> map(source.order(), unset);
  map[source.identity()] = target.identity();
  std::vector<Elem> queue{source.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = source.mul(x, gens[k]);
      Elem img = target.mul(map[x], images[k]);
      if (map[y] == unset) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        throw Error(Errc::not_homomorphism, "generator images are inconsistent");
      }
    }
  }
  if (queue.size() != source.order())
    throw Error(Errc::not_homomorphism, "source generators do not generate the group");
  return from_map(source, target, std::move(map));
}

}  // namespace quasi
