#pragma once

#include <string>
#include <vector>

#include "permstruct/group.hpp"

namespace permstruct {

// constructs a group from a family name: An, Sn, Cn (degree n), D2n
// (dihedral of order 2n on n points), V4, F20, SL25, GL23, PSL27, A5xA5,
// A5wrC2; names are case-insensitive, ParseError on anything else
PermGroup named_group(const std::string &name);

// the accepted spellings, for diagnostics and shell completion
std::vector<std::string> named_group_names();

} // namespace permstruct
