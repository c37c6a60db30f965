#pragma once

#include <iosfwd>
#include <string>

#include "permstruct/group.hpp"

namespace permstruct {

// text format: first significant line is "degree <n>"; every following
// nonempty line that is not a '#' comment holds one generator in
// disjoint-cycle notation; no generator lines means the trivial group
PermGroup read_group(std::istream &in);
PermGroup read_group_file(const std::string &path);

void write_group(std::ostream &out, const PermGroup &g);
void write_group_file(const std::string &path, const PermGroup &g);

} // namespace permstruct
