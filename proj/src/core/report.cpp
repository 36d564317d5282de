#include "quasi/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "quasi/error.hpp"
#include "quasi/lambda.hpp"

namespace quasi {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string irrep_label(std::size_t k) { return "chi" + std::to_string(k); }

std::string tuple_text(const GroupTable& g, const std::vector<Elem>& entries) {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + g.label(entries[i]);
  return s + ")";
}

Json label_list(const GroupTable& g, const std::vector<Elem>& entries) {
  Json a = Json::array();
  for (Elem e : entries) a.push_back(g.label(e));
  return a;
}

Json weight_json(const WeightVec& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(to_string(x));
  return a;
}

std::string point_text(const GroupTable& g, const LambdaPoint& p) {
  std::string s = "(" + g.label(p.element) + "; t = (";
  for (std::size_t i = 0; i < p.t.size(); ++i) s += (i ? ", " : "") + to_string(p.t[i]);
  return s + "))";
}

std::string finish(const Json& doc) { return doc.dump(2) + "\n"; }

void component_lines(std::ostream& out, const LambdaRep& r, const std::string& indent) {
  if (r.empty()) out << indent << "(empty)\n";
  for (const auto& c : r.components())
    out << indent << "(" << irrep_label(c.rep.irrep) << ", " << format_weight(c.rep.weight) << ") x " << c.mult
        << '\n';
}

Json components_json(const LambdaRep& r) {
  Json a = Json::array();
  for (const auto& c : r.components())
    a.push_back({{"irrep", irrep_label(c.rep.irrep)}, {"weight", weight_json(c.rep.weight)}, {"mult", c.mult}});
  return a;
}

const char* real_type_name(RealType t) {
  switch (t) {
    case RealType::real: return "real";
    case RealType::complex: return "complex";
    default: return "quaternionic";
  }
}

DescPtr desc_for(GroupPtr g, std::string_view sigma, const ReportSettings& s) {
  return lambda_desc(g, parse_tuple(*g, sigma), s.limits.max_chartab_order);
}

}  // namespace

CommTuple parse_tuple(const GroupTable& g, std::string_view text) {
  CommTuple t;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (!cur.empty()) t.entries.push_back(g.find(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw Error(Errc::parse, "unbalanced parentheses in '" + std::string(text) + "'");
    if (depth == 0 && (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))) {
      flush();
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw Error(Errc::parse, "unbalanced parentheses in '" + std::string(text) + "'");
  flush();
  if (t.entries.empty()) throw Error(Errc::invalid_argument, "empty element list");
  return t;
}

ClassFunction parse_rep(TablePtr t, std::string_view text) {
  ClassFunction total = ClassFunction::zero(t);
  std::string body(text);
  std::size_t start = 0;
  bool any = false;
  while (start <= body.size()) {
    std::size_t plus = body.find('+', start);
    std::string term = trim(std::string_view(body).substr(start, plus == std::string::npos ? std::string::npos
                                                                                             : plus - start));
    start = plus == std::string::npos ? body.size() + 1 : plus + 1;
    if (term.empty()) throw Error(Errc::parse, "empty term in representation '" + body + "'");
    std::size_t i = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    long mult = i ? std::stol(term.substr(0, i)) : 1;
    std::string name = trim(term.substr(i));
    if (!name.empty() && name[0] == '*') name = trim(name.substr(1));
    ClassFunction f;
    if (name == "regular") {
      f = ClassFunction::regular(t);
    } else if (name == "trivial") {
      f = ClassFunction::irreducible(t, 0);
    } else if (name == "perm") {
      f = ClassFunction::permutation(t);
    } else if (name.size() > 3 && name.compare(0, 3, "chi") == 0 &&
               std::all_of(name.begin() + 3, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      std::size_t k = std::stoul(name.substr(3));
      if (k >= t->num_irreps())
        throw Error(Errc::invalid_argument, "no irreducible " + name + " (group has " +
                                                std::to_string(t->num_irreps()) + ")");
      f = ClassFunction::irreducible(t, k);
    } else {
      throw Error(Errc::parse, "unknown representation '" + name + "'");
    }
    total += mult * f;
    any = true;
  }
  if (!any) throw Error(Errc::parse, "empty representation");
  return total;
}

std::string report_classes(GroupPtr g, const ReportSettings& s) {
  auto classes = conjugacy_classes(*g);
  if (s.format == Format::json) {
    Json doc{{"group", g->name()}, {"order", g->order()}, {"classes", Json::array()}};
    for (const auto& c : classes)
      doc["classes"].push_back({{"representative", g->label(c.representative)},
                                {"size", c.members.size()},
                                {"element_order", g->elem_order(c.representative)},
                                {"members", label_list(*g, c.members)}});
    return finish(doc);
  }
  std::ostringstream out;
  out << g->name() << ", order " << g->order() << ", " << classes.size() << " classes\n";
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& c = classes[k];
    out << "  " << k << ": " << g->label(c.representative) << "  size " << c.members.size() << "  order "
        << g->elem_order(c.representative) << "  {";
    for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? ", " : "") << g->label(c.members[i]);
    out << "}\n";
  }
  return out.str();
}

std::string report_chartab(GroupPtr g, const ReportSettings& s) {
  TablePtr t = character_table(g, s.limits.max_chartab_order);
  const auto& classes = t->classes();
  if (s.format == Format::json) {
    Json doc{{"group", g->name()}, {"order", g->order()}, {"classes", Json::array()}, {"characters", Json::array()}};
    for (const auto& c : classes)
      doc["classes"].push_back({{"representative", g->label(c.representative)}, {"size", c.members.size()}});
    for (std::size_t i = 0; i < t->num_irreps(); ++i) {
      Json vals = Json::array();
      for (const auto& v : t->row(i)) vals.push_back(v.to_string());
      doc["characters"].push_back({{"label", irrep_label(i)},
                                   {"degree", t->degree(i)},
                                   {"indicator", fs_indicator(*t, i)},
                                   {"values", std::move(vals)}});
    }
    return finish(doc);
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"class"});
  cells.push_back({"size"});
  for (const auto& c : classes) {
    cells[0].push_back(g->label(c.representative));
    cells[1].push_back(std::to_string(c.members.size()));
  }
  for (std::size_t i = 0; i < t->num_irreps(); ++i) {
    std::vector<std::string> row{irrep_label(i)};
    for (const auto& v : t->row(i)) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(classes.size() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  out << g->name() << ", order " << g->order() << '\n';
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += row[c] + std::string(width[c] - row[c].size() + 2, ' ');
    out << trim(line) << '\n';
  }
  return out.str();
}

std::string report_gnz(GroupPtr g, unsigned n, const ReportSettings& s) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
  auto orbits = commuting_tuples(*g, n, s.limits.max_tuple_scan);
  if (s.format == Format::json) {
    Json doc{{"group", g->name()}, {"n", n}, {"orbits", Json::array()}};
    for (const auto& o : orbits)
      doc["orbits"].push_back(
          {{"sigma", label_list(*g, o.representative.entries)}, {"orbit_size", o.orbit_size}});
    doc["count"] = orbits.size();
    return finish(doc);
  }
  std::ostringstream out;
  out << orbits.size() << " orbits\n";
  for (const auto& o : orbits)
    out << "  " << tuple_text(*g, o.representative.entries) << "  size " << o.orbit_size << '\n';
  return out.str();
}

std::string report_lambda_basis(GroupPtr g, std::string_view sigma, std::optional<std::string_view> rep,
                                const ReportSettings& s) {
  DescPtr d = desc_for(g, sigma, s);
  const std::string sig = tuple_text(*g, d->sigma.entries);
  if (rep) {
    LambdaRep r = v_sigma(parse_rep(character_table(g, s.limits.max_chartab_order), *rep), d);
    if (s.format == Format::json)
      return finish(Json{{"group", g->name()},
                         {"sigma", label_list(*g, d->sigma.entries)},
                         {"rep", std::string(*rep)},
                         {"dimension", r.dimension()},
                         {"components", components_json(r)}});
    std::ostringstream out;
    out << "(V)_sigma for V = " << *rep << ", sigma = " << sig << ", dimension " << r.dimension() << '\n';
    component_lines(out, r, "  ");
    return out.str();
  }

  auto basis = lambda_basis(*d);
  auto real = real_basis(*d);
  if (s.format == Format::json) {
    Json b = Json::array();
    for (const auto& e : basis) b.push_back({{"irrep", irrep_label(e.irrep)}, {"weight", weight_json(e.weight)}});
    Json rb = Json::array();
    for (const auto& e : real) {
      Json cx = Json::array();
      for (auto k : e.complexification) cx.push_back(irrep_label(k));
      LambdaRep tmp(d);
      for (const auto& c : e.components) tmp.add(c.rep, c.mult);
      rb.push_back({{"type", real_type_name(e.type)},
                    {"complexification", std::move(cx)},
                    {"complex_dimension", e.complex_dimension},
                    {"components", components_json(tmp)}});
    }
    return finish(Json{{"group", g->name()},
                       {"sigma", label_list(*g, d->sigma.entries)},
                       {"centralizer_order", d->centralizer.order()},
                       {"rank", basis.size()},
                       {"basis", std::move(b)},
                       {"real_basis", std::move(rb)}});
  }
  std::ostringstream out;
  out << "sigma = " << sig << ", |C| = " << d->centralizer.order() << ", rank " << basis.size() << '\n';
  for (const auto& e : basis) out << "  (" << irrep_label(e.irrep) << ", " << format_weight(e.weight) << ") x 1\n";
  out << "real basis, " << real.size() << " elements\n";
  for (const auto& e : real) {
    out << "  " << real_type_name(e.type) << " [";
    for (std::size_t i = 0; i < e.complexification.size(); ++i)
      out << (i ? " + " : "") << irrep_label(e.complexification[i]);
    out << "]  complex dimension " << e.complex_dimension << '\n';
  }
  return out.str();
}

std::string report_faithful(GroupPtr g, std::string_view sigma, std::optional<std::string_view> rep,
                            const ReportSettings& s) {
  DescPtr d = desc_for(g, sigma, s);
  TablePtr gt = character_table(g, s.limits.max_chartab_order);
  const std::string rep_name = rep ? std::string(*rep) : "regular";
  ClassFunction chi = parse_rep(gt, rep_name);

  struct Entry {
    std::string name;
    std::optional<LambdaRep> rep;
    std::string note;
  };
  std::vector<Entry> entries;
  entries.push_back({"(V)_sigma", v_sigma(chi, d), ""});
  entries.push_back({"(V)_sigma + sum_i (V)_sigma q_i^-1", twisted_pair(chi, d), ""});
  entries.push_back({"(V)_sigma + V^sigma", with_fixed_part(chi, d), ""});
  try {
    entries.push_back({"real (V)_sigma", real_v_sigma(chi, d), ""});
  } catch (const Error& e) {
    if (e.code() != Errc::not_realizable) throw;
    entries.push_back({"real (V)_sigma", std::nullopt, e.what()});
  }

  if (s.format == Format::json) {
    Json doc{{"group", g->name()},
             {"sigma", label_list(*g, d->sigma.entries)},
             {"rep", rep_name},
             {"constructions", Json::array()}};
    for (const auto& e : entries) {
      Json c{{"name", e.name}};
      if (!e.rep) {
        c["realizable"] = false;
        c["reason"] = e.note;
      } else {
        auto k = kernel(*e.rep);
        Json pts = Json::array();
        for (const auto& p : k.finite_points)
          pts.push_back({{"element", g->label(p.element)}, {"t", weight_json(p.t)}});
        c["dimension"] = e.rep->dimension();
        c["components"] = components_json(*e.rep);
        c["kernel"] = std::move(pts);
        c["torus_rank"] = k.torus_rank;
        c["faithful"] = k.faithful();
      }
      doc["constructions"].push_back(std::move(c));
    }
    return finish(doc);
  }
  std::ostringstream out;
  out << "V = " << rep_name << ", sigma = " << tuple_text(*g, d->sigma.entries) << ", |C| = " << d->centralizer.order()
      << '\n';
  for (const auto& e : entries) {
    out << e.name << ":\n";
    if (!e.rep) {
      out << "  not realizable: " << e.note << '\n';
      continue;
    }
    component_lines(out, *e.rep, "  ");
    auto k = kernel(*e.rep);
    if (k.full_group) out << "  kernel: everything\n";
    for (const auto& p : k.finite_points) out << "  kernel " << point_text(*g, p) << '\n';
    out << "  torus_rank " << k.torus_rank << '\n';
    out << "  faithful " << (k.faithful() ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string report_sfixed(GroupPtr g, std::string_view sigma, std::optional<std::string_view> h,
                          const ReportSettings& s) {
  CommTuple t = parse_tuple(*g, sigma);
  if (!is_commuting(*g, t.entries)) throw Error(Errc::non_commuting, "tuple entries do not commute pairwise");
  std::vector<Subgroup> targets;
  if (h)
    targets.push_back(generated_subgroup(*g, parse_tuple(*g, *h).entries));
  else
    targets = subgroups(*g, s.limits.max_subgroup_order);

  if (h && s.format == Format::text) return std::string(verdict_name(s_fixed_predicate(*g, t, targets[0]))) + "\n";
  if (s.format == Format::json) {
    Json doc{{"group", g->name()}, {"sigma", label_list(*g, t.entries)}, {"results", Json::array()}};
    for (const auto& sub : targets)
      doc["results"].push_back({{"H", label_list(*g, sub.generators)},
                                {"order", sub.order()},
                                {"verdict", verdict_name(s_fixed_predicate(*g, t, sub))}});
    return finish(doc);
  }
  std::ostringstream out;
  for (const auto& sub : targets) {
    std::string gens = tuple_text(*g, sub.generators);
    out << "H = <" << gens.substr(1, gens.size() - 2) << ">, order " << sub.order() << ": "
        << verdict_name(s_fixed_predicate(*g, t, sub)) << '\n';
  }
  return out.str();
}

std::string report_quasi(GroupPtr g, unsigned n, const ReportSettings& s) {
  QuasiTable table = quasi_coefficients(g, n, {s.limits.max_tuple_scan, s.limits.max_chartab_order, s.threads});
  std::string body = serialize_quasi(table, s.format);
  if (s.format == Format::text) body += "tate_rank " + std::to_string(tate_rank_report(table).total) + " over Z((q))\n";
  return body;
}

}  // namespace quasi
