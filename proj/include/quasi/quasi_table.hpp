#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quasi/group.hpp"
#include "quasi/lambda.hpp"

namespace quasi {

// One factor R Lambda_G(sigma) of the coefficient ring, described by its free basis.
struct QuasiRecord {
  std::vector<std::string> sigma;  // labels of the orbit representative
  std::size_t orbit_size = 0;
  std::size_t centralizer_order = 0;
  std::size_t rank = 0;
  std::vector<WeightVec> twists;  // one per irreducible of C_G(sigma), entries in (0, 1]
  friend bool operator==(const QuasiRecord&, const QuasiRecord&) = default;
};

struct QuasiTable {
  std::string group;
  unsigned n = 1;
  std::string E = "K";
  std::vector<QuasiRecord> records;  // ordered by orbit representative
  std::size_t total_rank = 0;
  friend bool operator==(const QuasiTable&, const QuasiTable&) = default;
};

struct QuasiLimits {
  std::size_t max_tuple_scan = 4096;
  std::size_t max_chartab_order = 48;
  unsigned threads = 1;
};

QuasiTable quasi_coefficients(GroupPtr g, unsigned n, const QuasiLimits& limits = {});

enum class SFixedVerdict { empty, contractible };
const char* verdict_name(SFixedVerdict v);  // "Empty" / "Contractible"

// Empty iff some conjugate of <sigma_1, ..., sigma_n> lies in h.
SFixedVerdict s_fixed_predicate(const GroupTable& g, const CommTuple& sigma, const Subgroup& h);

struct TateRankReport {
  std::vector<std::size_t> ranks;  // per record, over Z((q))
  std::size_t total = 0;
};

TateRankReport tate_rank_report(const QuasiTable& t);

enum class Format { text, json };

// Throws Error(io) if the stream goes bad.
void serialize_quasi(const QuasiTable& t, Format format, std::ostream& out);
std::string serialize_quasi(const QuasiTable& t, Format format);
// Inverse of the json form. Throws Error(parse) on malformed documents.
QuasiTable parse_quasi_json(const std::string& text);

}  // namespace quasi
