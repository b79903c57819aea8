#include "semicm/closure.hpp"
#include "semicm/errors.hpp"
#include "semicm/oracle.hpp"

#include <algorithm>
#include <set>

namespace semicm {

namespace {

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Rebuild with the same basis: the basis vectors go first, extra points
// follow, zero vectors and duplicates drop out.
AffineSemigroup with_basis_and_points(const AffineSemigroup& S, const std::vector<IntVec>& points) {
    std::vector<IntVec> gens = S.basis_vectors();
    const int d = int(gens.size());
    for (const IntVec& p : points)
        if (!is_zero(p)) gens.push_back(p);
    std::vector<int> hint(d);
    for (int i = 0; i < d; ++i) hint[i] = i;
    return build_semigroup(gens, hint);
}

} // namespace

ClosureResult cm_closure(const AffineSemigroup& S) {
    Decomposition dec = decompose(S);
    AffineSemigroup closure = with_basis_and_points(S, dec.shifts_ambient);
    if (!is_cohen_macaulay(closure).is_cm)
        throw InternalInconsistency("closure semigroup is not Cohen-Macaulay");
    return {std::move(closure), dec.shifts_ambient};
}

SaturationResult saturate(const AffineSemigroup& S) {
    std::vector<IntVec> points;
    for (const RatVec& w : fundamental_domain_points(S.group))
        points.push_back(lambda_to_ambient(S, w));
    return {with_basis_and_points(S, points)};
}

bool verify_saturation(const AffineSemigroup& S, const SaturationResult& sat, long bound) {
    if (bound < 1) throw ValidationError("verification bound must be >= 1");
    if (sat.saturation.basis_vectors() != S.basis_vectors())
        throw ValidationError("saturation must carry the same basis as the semigroup");
    const int d = S.dim();

    // The saturation shares S's basis, so lambda coordinates line up.
    // Batch-enumerate its elements inside the box (generator steps never
    // decrease coordinates, so the truncated fixpoint is exact) instead of
    // running one membership search per point.
    std::set<RatVec> sat_elements = oracle::enumerate_semigroup(sat.saturation, {bound});

    auto dpoints = fundamental_domain_points(S.group);
    std::vector<long> k(d, 0);
    for (;;) {
        for (const RatVec& w : dpoints) {
            RatVec v(d);
            bool in_box = true;
            for (int i = 0; i < d; ++i) {
                v[i] = w[i] + k[i];
                if (v[i] > bound) { in_box = false; break; }
            }
            if (!in_box) continue;
            IntVec x = lambda_to_ambient(S, v);
            bool belongs = sat_elements.count(v) > 0;
            bool expected = group_member(S, x) && cone_member(S, x);
            if (belongs != expected) return false;
        }
        int c = 0;
        while (c < d && ++k[c] > bound) k[c++] = 0;
        if (c == d) break;
    }
    return true;
}

bool is_subsemigroup(const AffineSemigroup& S1, const AffineSemigroup& S2) {
    if (S1.ambient_dim != S2.ambient_dim)
        throw ValidationError("ambient dimension mismatch");
    MemberTable members(S2);
    return std::all_of(S1.generators.begin(), S1.generators.end(),
                       [&](const IntVec& g) { return members.contains(g); });
}

bool same_semigroup(const AffineSemigroup& S1, const AffineSemigroup& S2) {
    return is_subsemigroup(S1, S2) && is_subsemigroup(S2, S1);
}

MinimalityCheck check_minimality(const AffineSemigroup& S, const std::vector<IntVec>& extra_points) {
    for (const IntVec& p : extra_points)
        if (!(group_member(S, p) && cone_member(S, p)))
            throw PointOutsideSaturation("extra point " + to_string(p) +
                                         " is outside the saturation");

    std::vector<IntVec> gens = S.generators;
    gens.insert(gens.end(), extra_points.begin(), extra_points.end());
    gens.erase(std::remove_if(gens.begin(), gens.end(), is_zero), gens.end());
    std::vector<int> hint;
    for (int i : S.basis)
        hint.push_back(i); // basis indices survive: S.generators is a prefix

    AffineSemigroup enlarged = build_semigroup(gens, hint);

    MinimalityCheck result;
    result.cm = is_cohen_macaulay(enlarged).is_cm;
    if (result.cm)
        result.contains_closure = is_subsemigroup(cm_closure(S).closure, enlarged);
    return result;
}

} // namespace semicm
