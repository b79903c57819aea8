#include "semicm/decomposition.hpp"
#include "semicm/errors.hpp"
#include "semicm/oracle.hpp"

#include <algorithm>
#include <set>

namespace semicm {

Decomposition decompose(const AffineSemigroup& S) {
    Decomposition dec;
    dec.classes = partition_classes(S, apery_set(S));
    dec.f = Int(long(dec.classes.size()));

    std::set<RatVec> fracs;
    for (const AperyClass& cls : dec.classes) {
        if (!lattice_member(cls.shift, S.group))
            throw InternalInconsistency("shift outside G(B)");
        if (!fracs.insert(frac_vector(cls.shift)).second)
            throw InternalInconsistency("two shifts are equivalent mod G(A)");
        dec.shifts_ambient.push_back(lambda_to_ambient(S, cls.shift));
    }
    return dec;
}

CmReport is_cohen_macaulay(const AffineSemigroup& S) {
    Decomposition dec = decompose(S);
    CmReport report;
    report.is_cm = true;
    for (size_t j = 0; j < dec.classes.size(); ++j) {
        if (dec.classes[j].elements.size() > 1) {
            report.is_cm = false;
            report.witness_class = int(j);
            report.witness_elements = {dec.classes[j].elements[0], dec.classes[j].elements[1]};
            return report;
        }
    }
    report.shifts_ambient = dec.shifts_ambient;
    return report;
}

namespace {

// Offset of v against the class shift, or nullopt when v is not equivalent
// to the shift or the offset is not integral.
std::optional<IntVec> integral_offset(const RatVec& v, const RatVec& shift) {
    IntVec off(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat diff = v[i] - shift[i];
        if (!is_integral(diff)) return std::nullopt;
        off[i] = diff.get_num();
    }
    return off;
}

} // namespace

bool verify_decomposition(const AffineSemigroup& S, const Decomposition& dec, long bound) {
    if (bound < 1) throw ValidationError("verification bound must be >= 1");
    const int d = S.dim();

    for (const AperyClass& cls : dec.classes) {
        bool witnessed = std::any_of(cls.elements.begin(), cls.elements.end(),
                                     [&](const RatVec& v) {
                                         return std::all_of(v.begin(), v.end(), [&](const Rat& q) {
                                             return q <= bound;
                                         });
                                     });
        if (!witnessed)
            throw BoundTooSmall("a class has no element inside the verification box");
    }

    std::set<RatVec> elements = oracle::enumerate_semigroup(S, {bound});

    // Walk all lambda points of G(B) in the box.
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

            bool in_B = elements.count(v) > 0;

            // Exactly one class can match: shifts have distinct fractional
            // parts and they exhaust the cosets of Z^d in G(B).
            int matches = 0;
            bool staircase = false;
            for (const AperyClass& cls : dec.classes) {
                auto off = integral_offset(v, cls.shift);
                if (!off) continue;
                ++matches;
                bool nonneg = std::all_of(off->begin(), off->end(),
                                          [](const Int& x) { return x >= 0; });
                staircase = nonneg && cls.ideal.contains_exponent(*off);
            }
            if (matches != 1 || in_B != staircase) return false;
        }
        int c = 0;
        while (c < d && ++k[c] > bound) k[c++] = 0;
        if (c == d) break;
    }
    return true;
}

long default_verification_bound(const Decomposition& dec) {
    Rat largest(0);
    for (const AperyClass& cls : dec.classes)
        for (const RatVec& v : cls.elements)
            for (const Rat& q : v) largest = std::max(largest, q);
    Rat doubled = 2 * largest;
    Int ceiling = -rat_floor(-doubled);
    return ceiling.get_si() + 2;
}

} // namespace semicm
