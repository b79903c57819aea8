#pragma once

#include "semicm/apery.hpp"
#include "semicm/semigroup.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace semicm {

// The graded decomposition data of K[B] over the polynomial ring on the
// basis: one (ideal, shift) summand per equivalence class.
struct Decomposition {
    std::vector<AperyClass> classes; // class j carries I_j and h_j (lambda)
    Int f = 0;                       // class count, == classes.size()
    std::vector<IntVec> shifts_ambient;

    bool operator==(const Decomposition&) const = default;
};

// Verdict of the combinatorial Cohen-Macaulay test. When the answer is no,
// witness_class points at a class with two or more elements and
// witness_elements holds two of them; when yes, shifts_ambient lists
// h_1..h_f, which generate K[B] freely over the basis ring.
struct CmReport {
    bool is_cm = false;
    std::optional<int> witness_class;
    std::optional<std::pair<RatVec, RatVec>> witness_elements;
    std::vector<IntVec> shifts_ambient;
};

// Runs the Apery pipeline and maps the shifts back to ambient coordinates.
// Checks that every shift lies in G(B) and that shifts are pairwise
// inequivalent; violations throw InternalInconsistency.
Decomposition decompose(const AffineSemigroup& S);

// K[B] is Cohen-Macaulay iff every class is a singleton, equivalently every
// ideal is the unit ideal.
CmReport is_cohen_macaulay(const AffineSemigroup& S);

// Exhaustively checks the decomposition against independent enumeration: for
// every x with lambda(x) in G(B) and 0 <= lambda_i(x) <= bound, membership
// of x in B (decided by the oracle) must coincide with the staircase test of
// the unique class x is equivalent to. Throws BoundTooSmall if some class
// has no element inside the box.
bool verify_decomposition(const AffineSemigroup& S, const Decomposition& dec, long bound);

// 2 * (largest lambda coordinate over all class elements) + 2; covers every
// staircase corner with margin.
long default_verification_bound(const Decomposition& dec);

} // namespace semicm
