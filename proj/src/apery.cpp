#include "semicm/apery.hpp"
#include "semicm/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace semicm {

bool MonomialIdeal::contains_exponent(const IntVec& v) const {
    for (const IntVec& g : min_gens) {
        bool divides = true;
        for (size_t i = 0; i < g.size(); ++i)
            if (v[i] < g[i]) { divides = false; break; }
        if (divides) return true;
    }
    return false;
}

namespace {

// x - e_i not in B for every i: the defining filter for the Apery set.
// Sums of generators are in B by construction, so only the d downward tests
// are needed.
bool passes_apery_filter(const AffineSemigroup& S, MemberTable& members, const RatVec& v) {
    for (int i = 0; i < S.dim(); ++i) {
        RatVec down = v;
        down[i] -= 1;
        if (down[i] < 0) continue; // outside the cone, so outside B
        if (members.contains_lambda(down)) return false;
    }
    return true;
}

} // namespace

std::vector<RatVec> apery_set(const AffineSemigroup& S) {
    const int d = S.dim();
    MemberTable members(S);

    // Every nonzero Apery element splits as y + b_k with y again in the
    // Apery set (removing one generator of any representation cannot create
    // an A-summand without creating one for x as well). So breadth-first
    // growth from 0 by single generator steps, pruned by the defining
    // filter, visits the whole finite set and nothing else. The multiplicity
    // of b_k along any such chain stays below the smallest m with
    // m * lambda(b_k) integral, which keeps the search certified finite.
    std::set<RatVec> apery;
    std::deque<RatVec> frontier;
    apery.insert(RatVec(d, Rat(0)));
    frontier.push_back(RatVec(d, Rat(0)));
    while (!frontier.empty()) {
        RatVec v = std::move(frontier.front());
        frontier.pop_front();
        for (const RatVec& step : S.lambda_gens) {
            RatVec next(d);
            for (int i = 0; i < d; ++i) next[i] = v[i] + step[i];
            if (apery.count(next)) continue;
            if (!passes_apery_filter(S, members, next)) continue;
            apery.insert(next);
            frontier.push_back(next);
        }
    }
    return {apery.begin(), apery.end()}; // set iteration is already lex order
}

std::vector<AperyClass> partition_classes(const AffineSemigroup& S,
                                          const std::vector<RatVec>& apery) {
    std::map<RatVec, std::vector<RatVec>> by_frac;
    for (const RatVec& v : apery) by_frac[frac_vector(v)].push_back(v);

    std::vector<AperyClass> classes;
    for (auto& [frac, elements] : by_frac) {
        std::sort(elements.begin(), elements.end());
        AperyClass cls;
        cls.shift = elements[0];
        for (const RatVec& v : elements)
            for (size_t i = 0; i < v.size(); ++i) cls.shift[i] = std::min(cls.shift[i], v[i]);

        std::vector<IntVec> offsets;
        for (const RatVec& v : elements) {
            IntVec off(v.size());
            for (size_t i = 0; i < v.size(); ++i) {
                Rat diff = v[i] - cls.shift[i];
                if (!is_integral(diff) || diff < 0)
                    throw InternalInconsistency("class offset is not a natural number");
                off[i] = diff.get_num();
            }
            offsets.push_back(std::move(off));
        }
        // Minimal generators: drop every offset divisible by another.
        std::vector<IntVec> minimal;
        for (size_t a = 0; a < offsets.size(); ++a) {
            bool keep = true;
            for (size_t b = 0; b < offsets.size() && keep; ++b) {
                if (a == b) continue;
                bool divides = true;
                for (size_t i = 0; i < offsets[a].size(); ++i)
                    if (offsets[b][i] > offsets[a][i]) { divides = false; break; }
                if (divides) keep = false;
            }
            if (keep) minimal.push_back(offsets[a]);
        }
        std::sort(minimal.begin(), minimal.end());
        cls.ideal = MonomialIdeal{int(cls.shift.size()), std::move(minimal)};
        cls.elements = std::move(elements);
        classes.push_back(std::move(cls));
    }

    if (Int(long(classes.size())) != class_count(S))
        throw InternalInconsistency("class count disagrees with the lattice index");
    return classes;
}

Int class_count(const AffineSemigroup& S) {
    return lattice_index(IntegerLattice::standard(S.dim()), S.group);
}

std::optional<int> ideal_height(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) return std::nullopt;
    if (ideal.min_gens.empty()) throw ValidationError("the zero ideal has no height here");
    const int d = ideal.dim;
    std::vector<std::vector<int>> supports;
    for (const IntVec& g : ideal.min_gens) {
        std::vector<int> support;
        for (int i = 0; i < d; ++i)
            if (g[i] > 0) support.push_back(i);
        supports.push_back(std::move(support));
    }
    // Smallest variable set hitting every support; d is small, so walk the
    // subsets by popcount.
    for (int size = 1; size <= d; ++size) {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            bool covers = std::all_of(supports.begin(), supports.end(),
                                      [&](const std::vector<int>& sup) {
                                          return std::any_of(sup.begin(), sup.end(), [&](int i) {
                                              return mask & (1u << i);
                                          });
                                      });
            if (covers) return size;
        }
    }
    throw InternalInconsistency("proper monomial ideal with an empty generator support");
}

} // namespace semicm
