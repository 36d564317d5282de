#pragma once

#include <istream>
#include <string_view>

#include "quasi/group.hpp"

namespace quasi {

GroupTable cyclic_group(unsigned k);       // labels e, g, g^2, ...
GroupTable dihedral_group(unsigned k);     // order 2k; labels e, r^a, s, sr^a
GroupTable symmetric_group(unsigned k, std::size_t max_order = 10000);
GroupTable alternating_group(unsigned k, std::size_t max_order = 10000);
GroupTable quaternion_group();             // labels 1, -1, i, -i, j, -j, k, -k

// Reads either
//   perm <degree>            followed by one generator per line in cycle notation, or
//   table <n>                followed by n rows of n element indices.
// Blank lines and lines starting with '#' are ignored.
GroupTable read_group(std::istream& in, std::size_t max_order = 10000);

// A builtin name (cyclic:k, dihedral:k, symmetric:k, alternating:k, quaternion8) or a file path.
GroupPtr load_group(std::string_view spec, const GroupLimits& limits = {});

}  // namespace quasi
