#pragma once

#include "semicm/semigroup.hpp"

#include <optional>
#include <vector>

namespace semicm {

// Monomial ideal in the polynomial ring on t^{e_1}..t^{e_d}, stored as the
// antichain of minimal generator exponents. min_gens == {0} is the unit
// ideal.
struct MonomialIdeal {
    int dim = 0;
    std::vector<IntVec> min_gens;

    bool is_unit() const {
        return min_gens.size() == 1 &&
               std::all_of(min_gens[0].begin(), min_gens[0].end(),
                           [](const Int& x) { return x == 0; });
    }

    // True iff v lies in the staircase: componentwise >= some minimal
    // generator.
    bool contains_exponent(const IntVec& v) const;

    bool operator==(const MonomialIdeal&) const = default;
};

// One equivalence class of the Apery set: its members share the fractional
// part of their lambda vectors. shift is the componentwise minimum, and
// ideal is generated by the offsets element - shift.
struct AperyClass {
    std::vector<RatVec> elements; // lambda vectors, lex sorted
    RatVec shift;
    MonomialIdeal ideal;

    bool operator==(const AperyClass&) const = default;
};

// The Apery set of B with respect to A = <e_1..e_d>: all x in B with
// x - e_i outside B for every i, as lex-sorted lambda vectors. Enumerates
// sums sum_k n_k b_k with n_k below the smallest multiple taking b_k into A,
// which provably covers the whole set, then filters by d membership tests.
std::vector<RatVec> apery_set(const AffineSemigroup& S);

// Groups the Apery set by fractional part (equality of fractional parts is
// exactly difference in G(A) = Z^d), lex order on the fractional parts, the
// class of 0 first. Throws InternalInconsistency if the class count differs
// from the lattice index f.
std::vector<AperyClass> partition_classes(const AffineSemigroup& S,
                                          const std::vector<RatVec>& apery);

// f = [G(B) : Z^d], the number of equivalence classes.
Int class_count(const AffineSemigroup& S);

// Height of a monomial ideal: minimum number of variables meeting the
// support of every minimal generator. nullopt for the unit ideal.
std::optional<int> ideal_height(const MonomialIdeal& ideal);

} // namespace semicm
