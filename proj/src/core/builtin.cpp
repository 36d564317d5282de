#include "quasi/builtin.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "quasi/error.hpp"

namespace quasi {

namespace {

std::string power_label(const std::string& base, unsigned k) {
  if (k == 0) return "e";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

unsigned parse_positive(std::string_view text, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
    throw Error(Errc::invalid_argument, "bad " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

GroupTable cyclic_group(unsigned k) {
  if (k == 0) throw Error(Errc::invalid_argument, "cyclic group order must be positive");
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(k));
  std::vector<std::string> labels;
  for (unsigned a = 0; a < k; ++a) {
    labels.push_back(power_label("g", a));
    for (unsigned b = 0; b < k; ++b) rows[a][b] = (a + b) % k;
  }
  std::vector<Elem> gens;
  if (k > 1) gens.push_back(1);
  GroupTable t = GroupTable::from_table(std::move(rows), std::move(labels), std::move(gens));
  t.set_name("cyclic:" + std::to_string(k));
  return t;
}

GroupTable dihedral_group(unsigned k) {
  if (k < 1) throw Error(Errc::invalid_argument, "dihedral parameter must be positive");
  // Element s^b r^a stored at index b*k + a; r^a s = s r^-a.
  const unsigned n = 2 * k;
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (unsigned b1 = 0; b1 < 2; ++b1)
    for (unsigned a1 = 0; a1 < k; ++a1) {
      unsigned x = b1 * k + a1;
      std::string rp = a1 == 0 ? "" : (a1 == 1 ? "r" : "r^" + std::to_string(a1));
      labels[x] = b1 == 0 ? (a1 == 0 ? "e" : rp) : "s" + rp;
      for (unsigned b2 = 0; b2 < 2; ++b2)
        for (unsigned a2 = 0; a2 < k; ++a2) {
          // s^b1 r^a1 s^b2 r^a2 = s^(b1+b2) r^(±a1 + a2)
          unsigned a = b2 == 0 ? (a1 + a2) % k : (k - a1 + a2) % k;
          rows[x][b2 * k + a2] = ((b1 + b2) % 2) * k + a;
        }
    }
  std::vector<Elem> gens;
  if (k > 1) gens.push_back(1);
  gens.push_back(k);
  GroupTable t = GroupTable::from_table(std::move(rows), std::move(labels), std::move(gens));
  t.set_name("dihedral:" + std::to_string(k));
  return t;
}

GroupTable symmetric_group(unsigned k, std::size_t max_order) {
  if (k == 0) throw Error(Errc::invalid_argument, "symmetric degree must be positive");
  std::vector<Permutation> gens;
  if (k >= 2) {
    gens.push_back(Permutation::parse_cycles("(1 2)", k));
    std::string cyc = "(";
    for (unsigned i = 1; i <= k; ++i) cyc += std::to_string(i) + (i < k ? " " : ")");
    if (k > 2) gens.push_back(Permutation::parse_cycles(cyc, k));
  }
  GroupTable t = GroupTable::from_permutations(gens, k, max_order);
  t.set_name("symmetric:" + std::to_string(k));
  return t;
}

GroupTable alternating_group(unsigned k, std::size_t max_order) {
  if (k == 0) throw Error(Errc::invalid_argument, "alternating degree must be positive");
  std::vector<Permutation> gens;
  for (unsigned i = 3; i <= k; ++i)
    gens.push_back(Permutation::parse_cycles("(1 2 " + std::to_string(i) + ")", k));
  GroupTable t = GroupTable::from_permutations(gens, k, max_order);
  t.set_name("alternating:" + std::to_string(k));
  return t;
}

GroupTable quaternion_group() {
  // Unit u in {1, i, j, k} with sign; index = 2*u + (sign < 0).
  static const int unit_mul[4][4][2] = {
      // {result unit, sign}
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  std::vector<std::vector<Elem>> rows(8, std::vector<Elem>(8));
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) {
      unsigned ux = x / 2, uy = y / 2;
      int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_mul[ux][uy][1];
      rows[x][y] = 2 * unit_mul[ux][uy][0] + (sign < 0 ? 1 : 0);
    }
  GroupTable t = GroupTable::from_table(std::move(rows), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
                                        {2, 4});
  t.set_name("quaternion8");
  return t;
}

GroupTable read_group(std::istream& in, std::size_t max_order) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  if (lines.empty()) throw Error(Errc::parse, "empty group definition");
  std::istringstream head(lines[0]);
  std::string kind;
  std::size_t size = 0;
  if (!(head >> kind >> size) || size == 0)
    throw Error(Errc::parse, "expected 'perm <degree>' or 'table <n>' header");

  if (kind == "perm") {
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(Permutation::parse_cycles(lines[i], size));
    return GroupTable::from_permutations(gens, size, max_order);
  }
  if (kind == "table") {
    if (size > max_order) throw Error(Errc::size_limit, "table exceeds the order cap");
    if (lines.size() != size + 1)
      throw Error(Errc::parse, "expected " + std::to_string(size) + " table rows");
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 1; i <= size; ++i) {
      std::istringstream row(lines[i]);
      std::vector<Elem> r;
      long long v;
      while (row >> v) {
        if (v < 0) throw Error(Errc::parse, "negative table entry");
        r.push_back(static_cast<Elem>(v));
      }
      if (!row.eof()) throw Error(Errc::parse, "non-numeric table entry on row " + std::to_string(i));
      rows.push_back(std::move(r));
    }
    return GroupTable::from_table(std::move(rows));
  }
  throw Error(Errc::parse, "unknown group definition kind '" + kind + "'");
}

GroupPtr load_group(std::string_view spec, const GroupLimits& limits) {
  auto colon = spec.find(':');
  std::string_view name = spec.substr(0, colon);
  auto check = [&](GroupTable t) {
    if (t.order() > limits.max_order)
      throw Error(Errc::size_limit, "group order " + std::to_string(t.order()) + " exceeds the cap");
    return std::make_shared<const GroupTable>(std::move(t));
  };
  if (spec == "quaternion8") return check(quaternion_group());
  if (colon != std::string_view::npos) {
    std::string_view arg = spec.substr(colon + 1);
    if (name == "cyclic") return check(cyclic_group(parse_positive(arg, "cyclic order")));
    if (name == "dihedral") return check(dihedral_group(parse_positive(arg, "dihedral parameter")));
    if (name == "symmetric") return check(symmetric_group(parse_positive(arg, "degree"), limits.max_order));
    if (name == "alternating")
      return check(alternating_group(parse_positive(arg, "degree"), limits.max_order));
  }
  std::ifstream file{std::string(spec)};
  if (!file)
    throw Error(Errc::io, "'" + std::string(spec) + "' is neither a builtin group nor a readable file");
  GroupTable t = read_group(file, limits.max_order);
  t.set_name(std::string(spec));
  return check(std::move(t));
}

}  // namespace quasi
