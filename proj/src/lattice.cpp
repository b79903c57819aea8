#include "semicm/lattice.hpp"
#include "semicm/errors.hpp"

#include <algorithm>
#include <list>

namespace semicm {

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
    IntMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (int(rows[i].size()) != m.cols)
            throw ValidationError("matrix rows of unequal length");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::identity(int d) {
    IntMat m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

IntegerLattice IntegerLattice::standard(int d) {
    return IntegerLattice{d, 1, IntMat::identity(d)};
}

// ---------------------------------------------------------------------------
// Exact rational elimination.
// ---------------------------------------------------------------------------

namespace {

using QRow = std::vector<Rat>;

// Row echelon form in place; returns the rank.
int q_eliminate(std::vector<QRow>& m) {
    if (m.empty()) return 0;
    const int rows = int(m.size()), cols = int(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rat factor = m[r][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

int rational_rank(const std::vector<IntVec>& vectors) {
    std::vector<QRow> m;
    m.reserve(vectors.size());
    for (const IntVec& v : vectors) m.push_back(to_rational(v));
    return q_eliminate(m);
}

RatVec solve_lambda(const IntVec& point, const std::vector<IntVec>& basis) {
    const int d = int(basis.size());
    const int n = int(point.size());
    for (const IntVec& e : basis)
        if (int(e.size()) != n)
            throw ValidationError("basis vector dimension mismatch");
    if (rational_rank(basis) < d) throw DependentBasis("basis vectors are linearly dependent");

    // Augmented system: columns are e_1..e_d | point, one row per ambient coordinate.
    std::vector<QRow> m(n, QRow(d + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][d] = Rat(point[i]);
    }
    q_eliminate(m);

    // A pivot in the last column means the point is outside the span.
    RatVec lambda(d);
    for (int r = n - 1; r >= 0; --r) {
        int lead = -1;
        for (int c = 0; c <= d; ++c)
            if (m[r][c] != 0) { lead = c; break; }
        if (lead < 0) continue;
        if (lead == d) throw NotInSpan("point is outside the Q-span of the basis");
        Rat rhs = m[r][d];
        for (int c = lead + 1; c < d; ++c) rhs -= m[r][c] * lambda[c];
        lambda[lead] = rhs / m[r][lead];
    }
    return lambda;
}

// ---------------------------------------------------------------------------
// Hermite normal form, lower triangular.
// ---------------------------------------------------------------------------

IntegerLattice hermite_form(const IntMat& rows, const Int& delta) {
    if (delta < 1) throw ValidationError("lattice denominator must be positive");
    const int d = rows.cols;
    std::list<IntVec> active;
    for (int i = 0; i < rows.rows; ++i) active.push_back(rows.row(i));

    // Eliminate columns right to left: after step c the pivot row placed at
    // position c is the only one touching column c, and the still-active rows
    // are supported on columns 0..c-1.
    std::vector<IntVec> basis(d);
    for (int c = d - 1; c >= 0; --c) {
        for (;;) {
            auto best = active.end();
            int nonzero = 0;
            for (auto it = active.begin(); it != active.end(); ++it) {
                if ((*it)[c] == 0) continue;
                ++nonzero;
                if (best == active.end() || cmp(abs((*it)[c]), abs((*best)[c])) < 0) best = it;
            }
            if (nonzero == 0) throw RankDeficient("rows do not have full column rank");
            if (nonzero == 1) {
                if ((*best)[c] < 0)
                    for (Int& x : *best) x = -x;
                basis[c] = std::move(*best);
                active.erase(best);
                break;
            }
            for (auto it = active.begin(); it != active.end(); ++it) {
                if (it == best || (*it)[c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), (*it)[c].get_mpz_t(), (*best)[c].get_mpz_t());
                for (int j = 0; j <= c; ++j) (*it)[j] -= q * (*best)[j];
            }
        }
    }

    // Reduce below-diagonal entries into [0, diagonal) of their column,
    // highest column first so earlier reductions stay put.
    for (int i = 1; i < d; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), basis[i][j].get_mpz_t(), basis[j][j].get_mpz_t());
            if (q == 0) continue;
            for (int k = 0; k <= j; ++k) basis[i][k] -= q * basis[j][k];
        }
    }

    IntegerLattice L{d, delta, IntMat::from_rows(basis)};

    // Minimize the denominator: divide out any common factor of delta and
    // every basis entry.
    Int g = L.delta;
    for (const Int& x : L.basis.a) g = gcd(g, x);
    if (g > 1) {
        L.delta /= g;
        for (Int& x : L.basis.a) x /= g;
    }
    return L;
}

bool lattice_member(const RatVec& v, const IntegerLattice& L) {
    if (int(v.size()) != L.dim) throw ValidationError("vector dimension mismatch");
    IntVec w(L.dim);
    for (int i = 0; i < L.dim; ++i) {
        Rat scaled = Rat(L.delta) * v[i];
        if (!is_integral(scaled)) return false;
        w[i] = scaled.get_num();
    }
    // Back-substitution through the triangular basis.
    for (int c = L.dim - 1; c >= 0; --c) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[c].get_mpz_t(), L.basis.at(c, c).get_mpz_t());
        if (r != 0) return false;
        if (q != 0)
            for (int j = 0; j <= c; ++j) w[j] -= q * L.basis.at(c, j);
    }
    return true;
}

Int lattice_index(const IntegerLattice& sub, const IntegerLattice& super) {
    if (sub.dim != super.dim) throw ValidationError("lattice dimension mismatch");
    for (int i = 0; i < sub.dim; ++i) {
        RatVec row(sub.dim);
        for (int j = 0; j < sub.dim; ++j) row[j] = rat(sub.basis.at(i, j), sub.delta);
        if (!lattice_member(row, super))
            throw NotSublattice("first lattice is not contained in the second");
    }
    // Covolume ratio; the diagonal products are the scaled determinants.
    Rat ratio(1);
    for (int i = 0; i < sub.dim; ++i)
        ratio *= rat(sub.basis.at(i, i), super.basis.at(i, i));
    for (int i = 0; i < sub.dim; ++i) ratio *= rat(super.delta, sub.delta);
    if (!is_integral(ratio) || ratio <= 0)
        throw InternalInconsistency("lattice index is not a positive integer");
    return ratio.get_num();
}

std::vector<RatVec> fundamental_domain_points(const IntegerLattice& L) {
    const int d = L.dim;
    IntegerLattice zd = IntegerLattice::standard(d);
    for (int i = 0; i < d; ++i) {
        RatVec unit(d, Rat(0));
        unit[i] = 1;
        if (!lattice_member(unit, L))
            throw NotSuperlattice("lattice does not contain Z^d");
    }

    // Mixed-radix traversal: v = sum_c k_c * (basis row c)/delta with
    // 0 <= k_c < delta/basis[c][c] hits every coset of Z^d in L exactly once.
    std::vector<long> radix(d);
    for (int c = 0; c < d; ++c) {
        Int n = L.delta / L.basis.at(c, c); // exact: Z^d is contained in L
        radix[c] = n.get_si();
    }

    std::vector<RatVec> points;
    std::vector<long> k(d, 0);
    for (;;) {
        RatVec v(d, Rat(0));
        for (int c = 0; c < d; ++c) {
            if (k[c] == 0) continue;
            for (int j = 0; j <= c; ++j) v[j] += Rat(k[c]) * rat(L.basis.at(c, j), L.delta);
        }
        points.push_back(frac_vector(v));
        int c = 0;
        while (c < d && ++k[c] == radix[c]) k[c++] = 0;
        if (c == d) break;
    }
    std::sort(points.begin(), points.end());

    Int expected = lattice_index(zd, L);
    if (Int(long(points.size())) != expected)
        throw InternalInconsistency("fundamental domain enumeration mismatch");
    return points;
}

} // namespace semicm
