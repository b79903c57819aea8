#pragma once

#include "semicm/rational.hpp"

#include <vector>

namespace semicm {

// Dense integer matrix, row major.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Int(0)) {}

    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    IntVec row(int i) const {
        return IntVec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols);
    }

    static IntMat from_rows(const std::vector<IntVec>& rows);
    static IntMat identity(int d);

    bool operator==(const IntMat&) const = default;
};

// A full-rank lattice (1/delta) * rowspan(basis) inside Q^dim, in lambda
// coordinates. The basis is d x d, lower triangular, in Hermite normal form
// (positive diagonal, below-diagonal entries in [0, diagonal) of their
// column), and delta is the minimal positive denominator for the lattice.
struct IntegerLattice {
    int dim = 0;
    Int delta = 1;
    IntMat basis;

    bool operator==(const IntegerLattice&) const = default;

    static IntegerLattice standard(int d); // Z^d
};

// Rank over Q of a set of integer vectors (all of the same length).
int rational_rank(const std::vector<IntVec>& vectors);

// Unique rational lambda with sum_i lambda_i * basis[i] == point.
// Throws DependentBasis if the basis vectors are linearly dependent and
// NotInSpan if the point is outside their Q-span.
RatVec solve_lambda(const IntVec& point, const std::vector<IntVec>& basis);

// Hermite normal form of the row span of `rows` (delta-scaled integer rows),
// returned as a lattice with the denominator minimized. Throws RankDeficient
// if the rows do not have full column rank.
IntegerLattice hermite_form(const IntMat& rows, const Int& delta = Int(1));

// True iff delta * v is an integer vector in the row span of the basis.
bool lattice_member(const RatVec& v, const IntegerLattice& L);

// Index [super : sub] as a positive integer. Throws NotSublattice if
// sub is not contained in super.
Int lattice_index(const IntegerLattice& sub, const IntegerLattice& super);

// All points v of L with 0 <= v_i < 1, sorted lexicographically; there are
// exactly [L : Z^d] of them. Throws NotSuperlattice unless Z^d is contained
// in L.
std::vector<RatVec> fundamental_domain_points(const IntegerLattice& L);

} // namespace semicm
