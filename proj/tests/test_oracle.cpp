#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semicm/errors.hpp"
#include "semicm/oracle.hpp"
#include "support/instances.hpp"
#include "support/vectors.hpp"

#include <algorithm>
#include <random>

using namespace semicm;
using namespace semicm::testing;
using semicm::oracle::EnumerationBox;

TEST_CASE("enumerate_semigroup on N^2") {
    auto points = oracle::enumerate_semigroup(natural(2), {2});
    CHECK(points.size() == 9);
}

TEST_CASE("enumerate_semigroup on the plane example") {
    auto points = oracle::enumerate_semigroup(example_plane(), {2});
    // Half-integer first coordinates appear only once a (3,1) or (1,2) step
    // fits under the cap.
    CHECK_FALSE(points.count(rv({{1, 2}, {0, 1}})));
    CHECK_FALSE(points.count(rv({{1, 2}, {1, 1}})));
    CHECK_FALSE(points.count(rv({{3, 2}, {0, 1}})));
    CHECK(points.count(rv({{1, 2}, {2, 1}})));
    CHECK(points.count(rv({{3, 2}, {1, 1}})));
    CHECK(points.count(rw({2, 2})));
    for (const RatVec& v : points) {
        CHECK(v[0] <= 2);
        CHECK(v[1] <= 2);
    }
}

TEST_CASE("enumerate_semigroup on <2,3>") {
    auto points = oracle::enumerate_semigroup(numerical({2, 3}), {3});
    // lambda cap 3 covers ambient values 0..6; the only gap of <2,3> is 1.
    std::set<RatVec> expected;
    for (long v : {0, 2, 3, 4, 5, 6}) expected.insert(rv({{v, 2}}));
    CHECK(points == expected);
}

TEST_CASE("naive_apery on the plane example") {
    auto apery = oracle::naive_apery(example_plane(), {6});
    CHECK(apery == std::set<RatVec>{rw({0, 0}), rv({{3, 2}, {1, 1}}), rv({{1, 2}, {2, 1}})});
}

TEST_CASE("naive_apery on N^2 and <3,4,5>") {
    CHECK(oracle::naive_apery(natural(2), {3}) == std::set<RatVec>{rw({0, 0})});

    auto apery = oracle::naive_apery(numerical({3, 4, 5}), {5});
    CHECK(apery == std::set<RatVec>{rw({0}), rv({{4, 3}}), rv({{5, 3}})});
}

TEST_CASE("naive_apery refuses a box it cannot certify") {
    // <3,13> has 26 in its Apery set (lambda 26/3); a cap of 8 sees 13/3 but
    // cannot rule out elements past the boundary.
    CHECK_THROWS_AS(oracle::naive_apery(numerical({3, 13}), {8}), BoxTooSmall);
    auto apery = oracle::naive_apery(numerical({3, 13}), {13});
    CHECK(apery == std::set<RatVec>{rw({0}), rv({{13, 3}}), rv({{26, 3}})});
}

TEST_CASE("oracle results do not depend on generator order") {
    std::vector<IntVec> gens = {iv({2, 0}), iv({0, 1}), iv({3, 1}), iv({1, 2})};
    auto reference_enum = oracle::enumerate_semigroup(example_plane(), {4});
    auto reference_apery = oracle::naive_apery(example_plane(), {6});
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(gens.begin(), gens.end(), rng);
        auto it0 = std::find(gens.begin(), gens.end(), iv({2, 0}));
        auto it1 = std::find(gens.begin(), gens.end(), iv({0, 1}));
        std::vector<int> hint = {int(it0 - gens.begin()), int(it1 - gens.begin())};
        AffineSemigroup S = build_semigroup(gens, hint);
        CHECK(oracle::enumerate_semigroup(S, {4}) == reference_enum);
        CHECK(oracle::naive_apery(S, {6}) == reference_apery);
    }
}

TEST_CASE("member agrees with the oracle on every box point") {
    std::mt19937_64 rng(77);
    std::vector<AffineSemigroup> zoo = named_instances();
    auto extra = random_instances(10, 9001);
    zoo.insert(zoo.end(), extra.begin(), extra.end());

    for (const AffineSemigroup& S : zoo) {
        const long bound = 3;
        auto elements = oracle::enumerate_semigroup(S, {bound});
        // Walk the lambda points of G(B) inside the box; each maps to an
        // ambient integer vector that member() can decide.
        auto dpoints = fundamental_domain_points(S.group);
        std::vector<long> k(S.dim(), 0);
        for (;;) {
            for (const RatVec& w : dpoints) {
                RatVec v(S.dim());
                bool ok = true;
                for (int i = 0; i < S.dim(); ++i) {
                    v[i] = w[i] + k[i];
                    if (v[i] > bound) ok = false;
                }
                if (ok) {
                    IntVec x = lambda_to_ambient(S, v);
                    CHECK(member(S, x).present() == bool(elements.count(v)));
                }
            }
            int c = 0;
            while (c < S.dim() && ++k[c] > bound) k[c++] = 0;
            if (c == S.dim()) break;
        }
    }
}
