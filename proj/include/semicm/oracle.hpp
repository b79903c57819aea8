#pragma once

#include "semicm/semigroup.hpp"

#include <set>

namespace semicm::oracle {

// Per-axis lambda coordinate cap, inclusive.
struct EnumerationBox {
    long bound = 1;
};

// All lambda vectors of semigroup elements with every coordinate <= bound:
// fixpoint closure of {0} under adding generator lambda vectors, truncated
// to the box. Keeps its own membership logic on purpose; it is the reference
// the main algorithms are tested against.
std::set<RatVec> enumerate_semigroup(const AffineSemigroup& S, EnumerationBox box);

// The defining filter for the Apery set applied literally to the enumeration:
// x stays iff x - e_i is not an enumerated element for every i. Throws
// BoxTooSmall when the box cannot certify that it saw all of the Apery set
// (some surviving element plus one more generator step would leave the box).
std::set<RatVec> naive_apery(const AffineSemigroup& S, EnumerationBox box);

} // namespace semicm::oracle
