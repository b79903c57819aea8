#pragma once

#include "semicm/lattice.hpp"
#include "semicm/rational.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace semicm {

// A simplicial affine semigroup B in Z^n: generators b_1..b_g together with a
// designated linearly independent subset e_1..e_d spanning the cone. All
// lambda coordinates are taken with respect to e_1..e_d. Immutable after
// build_semigroup.
struct AffineSemigroup {
    int ambient_dim = 0;
    std::vector<IntVec> generators;
    std::vector<int> basis;            // indices into generators, e_1..e_d
    std::vector<RatVec> lambda_gens;   // lambda coordinates per generator
    Int delta = 1;                     // lcm of all lambda denominators
    IntegerLattice group;              // G(B) in lambda coordinates

    int dim() const { return int(basis.size()); }
    const IntVec& basis_vector(int i) const { return generators[basis[i]]; }
    std::vector<IntVec> basis_vectors() const;
};

// Nonnegative integer coefficients writing a target as a sum of generators,
// indexed like AffineSemigroup::generators; absent when the target is not in
// the semigroup.
struct MembershipCertificate {
    std::optional<std::vector<long>> coefficients;

    bool present() const { return coefficients.has_value(); }
};

// Validates a simplicial generating configuration. With basis_hint the given
// indices are checked (independence, every generator inside the spanned
// cone); without it the basis is auto-detected from the extreme rays of the
// cone, picking per ray the generator with the smallest coordinate sum.
// Throws RankZero on an empty configuration and NotSimplicial when the cone
// is not spanned by d generators.
AffineSemigroup build_semigroup(const std::vector<IntVec>& generators,
                                const std::optional<std::vector<int>>& basis_hint = std::nullopt);

// Decides x in B by bounded depth-first search over generator subtractions,
// memoized on the exact residual lambda vector.
MembershipCertificate member(const AffineSemigroup& S, const IntVec& x);

// Same decision as member(), but one table amortized across many queries
// against the same semigroup. The referenced semigroup must outlive the
// table.
class MemberTable {
public:
    explicit MemberTable(const AffineSemigroup& S);
    ~MemberTable();
    MemberTable(MemberTable&&) noexcept;

    bool contains(const IntVec& x);
    bool contains_lambda(const RatVec& v);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// x in G(B): x lies in the Q-span of the basis and lambda(x) is in the group
// lattice.
bool group_member(const AffineSemigroup& S, const IntVec& x);

// x in C(B): x lies in the Q-span of the basis with all lambda(x) >= 0.
bool cone_member(const AffineSemigroup& S, const IntVec& x);

// Lambda coordinates of x, or nullopt if x is outside the Q-span of the basis.
std::optional<RatVec> lambda_of(const AffineSemigroup& S, const IntVec& x);

// Maps a lambda vector back to ambient coordinates; throws
// InternalInconsistency if the result is not integral.
IntVec lambda_to_ambient(const AffineSemigroup& S, const RatVec& v);

} // namespace semicm
