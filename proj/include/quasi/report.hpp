#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quasi/chartab.hpp"
#include "quasi/group.hpp"
#include "quasi/quasi_table.hpp"

namespace quasi {

// Splits a tuple selector at commas or whitespace outside parentheses and resolves each
// entry with GroupTable::find. "(1 2), (3 4)" and "g g^2" are both two entries.
CommTuple parse_tuple(const GroupTable& g, std::string_view text);

// Representation selector: terms joined by '+', each `chiK`, `regular`, `trivial` or `perm`,
// optionally prefixed by a multiplicity ("2chi1", "3*regular").
ClassFunction parse_rep(TablePtr t, std::string_view text);

struct ReportSettings {
  GroupLimits limits;
  unsigned threads = 1;
  Format format = Format::text;
};

std::string report_classes(GroupPtr g, const ReportSettings& s);
std::string report_chartab(GroupPtr g, const ReportSettings& s);
std::string report_gnz(GroupPtr g, unsigned n, const ReportSettings& s);
// Without a rep: the free basis of R Lambda_G(sigma) and its real counterpart.
// With a rep V: the components of (V)_sigma.
std::string report_lambda_basis(GroupPtr g, std::string_view sigma, std::optional<std::string_view> rep,
                                const ReportSettings& s);
// Kernels of (V)_sigma and the faithful constructions; V defaults to the regular representation.
std::string report_faithful(GroupPtr g, std::string_view sigma, std::optional<std::string_view> rep,
                            const ReportSettings& s);
// Verdict for one H given by generator labels, or for every subgroup when h is empty.
std::string report_sfixed(GroupPtr g, std::string_view sigma, std::optional<std::string_view> h,
                          const ReportSettings& s);
std::string report_quasi(GroupPtr g, unsigned n, const ReportSettings& s);

}  // namespace quasi
