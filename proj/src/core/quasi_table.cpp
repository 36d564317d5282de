#include "quasi/quasi_table.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "quasi/error.hpp"

namespace quasi {

namespace {

QuasiRecord make_record(GroupPtr g, const TupleOrbit& orbit, std::size_t max_chartab) {
  DescPtr d = lambda_desc(g, orbit.representative, max_chartab);
  QuasiRecord r;
  for (Elem e : orbit.representative.entries) r.sigma.push_back(g->label(e));
  r.orbit_size = orbit.orbit_size;
  r.centralizer_order = d->centralizer.order();
  for (const auto& b : lambda_basis(*d)) r.twists.push_back(b.weight);
  r.rank = r.twists.size();
  return r;
}

std::string tuple_text(const std::vector<std::string>& labels) {
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + labels[i];
  return s + ")";
}

}  // namespace

QuasiTable quasi_coefficients(GroupPtr g, unsigned n, const QuasiLimits& limits) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
  auto orbits = commuting_tuples(*g, n, limits.max_tuple_scan);
  QuasiTable t;
  t.group = g->name();
  t.n = n;
  t.records.resize(orbits.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < orbits.size();) {
      try {
        t.records[i] = make_record(g, orbits[i], limits.max_chartab_order);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = std::clamp<unsigned>(limits.threads, 1, 64);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& r : t.records) t.total_rank += r.rank;
  return t;
}

const char* verdict_name(SFixedVerdict v) { return v == SFixedVerdict::empty ? "Empty" : "Contractible"; }

SFixedVerdict s_fixed_predicate(const GroupTable& g, const CommTuple& sigma, const Subgroup& h) {
  Subgroup gamma = generated_subgroup(g, sigma.entries);
  return contains_conjugate(g, gamma, h) ? SFixedVerdict::empty : SFixedVerdict::contractible;
}

TateRankReport tate_rank_report(const QuasiTable& t) {
  TateRankReport r;
  for (const auto& rec : t.records) {
    r.ranks.push_back(rec.rank);
    r.total += rec.rank;
  }
  return r;
}

void serialize_quasi(const QuasiTable& t, Format format, std::ostream& out) {
  if (format == Format::json) {
    nlohmann::ordered_json doc;
    doc["group"] = t.group;
    doc["n"] = t.n;
    doc["E"] = t.E;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : t.records) {
      nlohmann::ordered_json rec;
      rec["sigma"] = r.sigma;
      rec["orbit_size"] = r.orbit_size;
      rec["centralizer_order"] = r.centralizer_order;
      rec["rank"] = r.rank;
      auto twists = nlohmann::ordered_json::array();
      for (const auto& w : r.twists) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& x : w) row.push_back(to_string(x));
        twists.push_back(std::move(row));
      }
      rec["twists"] = std::move(twists);
      doc["records"].push_back(std::move(rec));
    }
    doc["total_rank"] = t.total_rank;
    out << doc.dump(2) << '\n';
  } else {
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"sigma", "orbit", "|C|", "rank", "twists"});
    for (const auto& r : t.records) {
      std::string tw;
      for (const auto& w : r.twists) tw += (tw.empty() ? "" : " ") + format_weight(w);
      rows.push_back({tuple_text(r.sigma), std::to_string(r.orbit_size), std::to_string(r.centralizer_order),
                      std::to_string(r.rank), tw});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& row : rows)
      for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
    out << "group " << t.group << ", n = " << t.n << ", E = " << t.E << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < 4; ++c) out << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
      out << row[4] << '\n';
    }
    out << "total_rank " << t.total_rank << '\n';
  }
  if (!out) throw Error(Errc::io, "failed to write quasi table");
}

std::string serialize_quasi(const QuasiTable& t, Format format) {
  std::ostringstream s;
  serialize_quasi(t, format, s);
  return s.str();
}

QuasiTable parse_quasi_json(const std::string& text) {
  try {
    auto doc = nlohmann::json::parse(text);
    QuasiTable t;
    t.group = doc.at("group").get<std::string>();
    t.n = doc.at("n").get<unsigned>();
    t.E = doc.at("E").get<std::string>();
    for (const auto& rec : doc.at("records")) {
      QuasiRecord r;
      r.sigma = rec.at("sigma").get<std::vector<std::string>>();
      r.orbit_size = rec.at("orbit_size").get<std::size_t>();
      r.centralizer_order = rec.at("centralizer_order").get<std::size_t>();
      r.rank = rec.at("rank").get<std::size_t>();
      for (const auto& row : rec.at("twists")) {
        WeightVec w;
        for (const auto& x : row) w.push_back(parse_rational(x.get<std::string>()));
        r.twists.push_back(std::move(w));
      }
      t.records.push_back(std::move(r));
    }
    t.total_rank = doc.at("total_rank").get<std::size_t>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("malformed quasi table: ") + e.what());
  }
}

}  // namespace quasi
