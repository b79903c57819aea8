#pragma once

#include "semicm/decomposition.hpp"
#include "semicm/semigroup.hpp"

#include <optional>
#include <vector>

namespace semicm {

// The minimal Cohen-Macaulay semigroup between B and its cone, generated by
// the basis and the decomposition shifts.
struct ClosureResult {
    AffineSemigroup closure;
    std::vector<IntVec> shifts_used; // ambient h_1..h_f, including 0
};

// The saturation C(B) cap G(B), generated by the basis and the fundamental
// domain points of G(B).
struct SaturationResult {
    AffineSemigroup saturation;
};

// Outcome of one minimality probe: whether the probed semigroup is
// Cohen-Macaulay, and if so whether it contains the closure (the theorem
// says it always does).
struct MinimalityCheck {
    bool cm = false;
    std::optional<bool> contains_closure;
};

// Builds the closure from decompose(S) and asserts that it is
// Cohen-Macaulay (throws InternalInconsistency otherwise).
ClosureResult cm_closure(const AffineSemigroup& S);

// Builds the saturation from the fundamental domain of G(B).
SaturationResult saturate(const AffineSemigroup& S);

// Checks, for every point of G(B) with lambda in [0,bound]^d, that
// membership in the saturation coincides with (group and cone) membership
// in S.
bool verify_saturation(const AffineSemigroup& S, const SaturationResult& sat, long bound);

// True iff every generator of S1 is an element of S2.
bool is_subsemigroup(const AffineSemigroup& S1, const AffineSemigroup& S2);

// Equality as sets of points.
bool same_semigroup(const AffineSemigroup& S1, const AffineSemigroup& S2);

// Adjoins extra points (each must pass the group and cone membership tests,
// else PointOutsideSaturation) and reports whether the enlarged semigroup is
// Cohen-Macaulay and, if so, whether it contains the closure of S.
MinimalityCheck check_minimality(const AffineSemigroup& S, const std::vector<IntVec>& extra_points);

} // namespace semicm
