#pragma once

#include <cstdint>
#include <utility>

#include "permstruct/group.hpp"

namespace permstruct {

// imprimitive wreath product on degree(bottom) * degree(top) points: one
// bottom copy per block plus the top action permuting blocks rigidly
PermGroup wreath_product(const PermGroup &bottom, const PermGroup &top);

PermGroup alternating_deg5();       // A5 on 5 points
PermGroup alternating4_on5();       // A4 fixing the last point
PermGroup cyclic5_deg5();           // C5 on 5 points

// iterated wreath tower of A5: height 1 is A5 itself, height h acts on 5^h
// points with order 60^((5^h - 1) / 4)
PermGroup tower_group(std::uint32_t height);

// coprime Hall pair (a, b) for the tower: iterated wreath of A4 copies and
// of C5 copies; |a| * |b| = |tower|, gcd(|a|, |b|) = 1
std::pair<PermGroup, PermGroup> tower_hall_pair(std::uint32_t height);

// lifts a coprime Hall pair of the top group to one of A5 wr top; the two
// inputs act on the top's points, with orders 2^x 3^y and 5^z respectively
std::pair<PermGroup, PermGroup> wreath_hall_pair(const PermGroup &top_hall23,
                                                 const PermGroup &top_hall5);

// generators of the level-j block copies inside tower_group(height):
// j in [1, height]; each block is an A5 acting on its 5^(j-1)-point
// sub-blocks rigidly
std::vector<Perm> tower_level_generators(std::uint32_t height,
                                         std::uint32_t level);

} // namespace permstruct
