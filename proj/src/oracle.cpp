#include "semicm/oracle.hpp"
#include "semicm/errors.hpp"

#include <deque>

namespace semicm::oracle {

namespace {

bool inside(const RatVec& v, long bound) {
    for (const Rat& q : v)
        if (q > bound) return false;
    return true;
}

} // namespace

std::set<RatVec> enumerate_semigroup(const AffineSemigroup& S, EnumerationBox box) {
    if (box.bound < 1) throw ValidationError("enumeration bound must be >= 1");
    const int d = S.dim();
    std::set<RatVec> seen;
    std::deque<RatVec> queue;
    seen.insert(RatVec(d, Rat(0)));
    queue.push_back(RatVec(d, Rat(0)));
    while (!queue.empty()) {
        RatVec v = std::move(queue.front());
        queue.pop_front();
        for (const RatVec& step : S.lambda_gens) {
            RatVec next(d);
            for (int i = 0; i < d; ++i) next[i] = v[i] + step[i];
            if (!inside(next, box.bound)) continue;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

std::set<RatVec> naive_apery(const AffineSemigroup& S, EnumerationBox box) {
    const int d = S.dim();
    std::set<RatVec> elements = enumerate_semigroup(S, box);

    std::set<RatVec> apery;
    for (const RatVec& v : elements) {
        bool minimal = true;
        for (int i = 0; i < d && minimal; ++i) {
            RatVec down = v;
            down[i] -= 1;
            // Negative coordinate means outside the cone, so not an element;
            // otherwise down is inside the box and the set lookup is exact.
            if (down[i] >= 0 && elements.count(down)) minimal = false;
        }
        if (minimal) apery.insert(v);
    }

    // Completeness certificate: the Apery set is closed under removing one
    // generator at a time, so if every survivor plus any single generator
    // step stays inside the box, nothing can hide beyond it.
    for (const RatVec& v : apery)
        for (const RatVec& step : S.lambda_gens) {
            RatVec up(d);
            for (int i = 0; i < d; ++i) up[i] = v[i] + step[i];
            if (!inside(up, box.bound))
                throw BoxTooSmall("enumeration box cannot certify the Apery set");
        }
    return apery;
}

} // namespace semicm::oracle
