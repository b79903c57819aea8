#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semicm/decomposition.hpp"
#include "semicm/errors.hpp"
#include "semicm/oracle.hpp"
#include "support/instances.hpp"
#include "support/vectors.hpp"

#include <set>

using namespace semicm;
using namespace semicm::testing;

TEST_CASE("decompose the plane example") {
    AffineSemigroup S = example_plane();
    Decomposition dec = decompose(S);
    REQUIRE(dec.f == 2);
    CHECK(dec.classes[0].ideal.is_unit());
    CHECK(dec.shifts_ambient[0] == iv({0, 0}));
    CHECK(dec.classes[1].ideal.min_gens == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
    CHECK(dec.shifts_ambient[1] == iv({1, 1}));
}

TEST_CASE("decompose N^d and <2,3>") {
    Decomposition flat = decompose(natural(3));
    REQUIRE(flat.f == 1);
    CHECK(flat.classes[0].ideal.is_unit());
    CHECK(flat.shifts_ambient[0] == iv({0, 0, 0}));

    Decomposition line = decompose(numerical({2, 3}));
    REQUIRE(line.f == 2);
    CHECK(line.classes[0].ideal.is_unit());
    CHECK(line.classes[1].ideal.is_unit());
    CHECK(line.shifts_ambient == std::vector<IntVec>{iv({0}), iv({3})});
}

TEST_CASE("is_cohen_macaulay verdicts") {
    CmReport bad = is_cohen_macaulay(example_plane());
    CHECK_FALSE(bad.is_cm);
    REQUIRE(bad.witness_class == 1);
    REQUIRE(bad.witness_elements.has_value());
    CHECK(bad.witness_elements->first == rv({{1, 2}, {2, 1}}));
    CHECK(bad.witness_elements->second == rv({{3, 2}, {1, 1}}));

    CmReport flat = is_cohen_macaulay(natural(2));
    CHECK(flat.is_cm);
    CHECK(flat.shifts_ambient == std::vector<IntVec>{iv({0, 0})});

    // The closure semigroup of the plane example.
    CmReport closed = is_cohen_macaulay(
        build_semigroup({iv({2, 0}), iv({0, 1}), iv({1, 1})}, std::vector<int>{0, 1}));
    CHECK(closed.is_cm);
    CHECK(closed.shifts_ambient == std::vector<IntVec>{iv({0, 0}), iv({1, 1})});
}

TEST_CASE("verify_decomposition accepts correct decompositions") {
    AffineSemigroup S = example_plane();
    CHECK(verify_decomposition(S, decompose(S), 6));

    AffineSemigroup N2 = natural(2);
    CHECK(verify_decomposition(N2, decompose(N2), 3));
}

TEST_CASE("verify_decomposition rejects swapped shifts") {
    AffineSemigroup S = example_plane();
    Decomposition dec = decompose(S);
    std::swap(dec.classes[0].shift, dec.classes[1].shift);
    CHECK_FALSE(verify_decomposition(S, dec, 6));
}

TEST_CASE("verify_decomposition rejects a widened ideal") {
    AffineSemigroup S = example_plane();
    Decomposition dec = decompose(S);
    dec.classes[1].ideal = MonomialIdeal{2, {iv({0, 0})}}; // pretend I_2 = T
    CHECK_FALSE(verify_decomposition(S, dec, 6));
}

TEST_CASE("verify_decomposition needs every class inside the box") {
    AffineSemigroup S = example_plane();
    Decomposition dec = decompose(S);
    CHECK_THROWS_AS(verify_decomposition(S, dec, 1), BoundTooSmall);
}

TEST_CASE("default bound covers the staircase corners") {
    AffineSemigroup S = example_plane();
    Decomposition dec = decompose(S);
    CHECK(default_verification_bound(dec) == 6); // elements reach lambda 2
    CHECK(verify_decomposition(S, dec, default_verification_bound(dec)));
}

TEST_CASE("shift disjointness is asserted on every decomposition") {
    std::vector<AffineSemigroup> zoo = named_instances();
    auto extra = random_instances(12, 272727);
    zoo.insert(zoo.end(), extra.begin(), extra.end());
    for (const AffineSemigroup& S : zoo) {
        Decomposition dec = decompose(S);
        std::set<RatVec> fracs;
        for (const AperyClass& cls : dec.classes)
            CHECK(fracs.insert(frac_vector(cls.shift)).second);
        CHECK(Int(long(dec.classes.size())) == dec.f);
        CHECK(verify_decomposition(S, dec, default_verification_bound(dec)));
    }
}

TEST_CASE("unimodular coordinate changes preserve the decomposition") {
    // sheared_plane is the plane example through (x,y) -> (x, x-y); lambda
    // data must match coordinate for coordinate.
    Decomposition original = decompose(example_plane());
    Decomposition sheared = decompose(sheared_plane());
    REQUIRE(sheared.f == original.f);
    for (size_t j = 0; j < original.classes.size(); ++j) {
        CHECK(sheared.classes[j].elements == original.classes[j].elements);
        CHECK(sheared.classes[j].shift == original.classes[j].shift);
        CHECK(sheared.classes[j].ideal == original.classes[j].ideal);
    }
    CHECK(sheared.shifts_ambient == std::vector<IntVec>{iv({0, 0}), iv({1, 0})});
    CHECK_FALSE(is_cohen_macaulay(sheared_plane()).is_cm);
}

TEST_CASE("negative-coordinate wedge is Cohen-Macaulay and saturated") {
    AffineSemigroup W = wedge();
    CHECK(class_count(W) == 2);
    CmReport report = is_cohen_macaulay(W);
    CHECK(report.is_cm);
    CHECK(report.shifts_ambient == std::vector<IntVec>{iv({0, 0}), iv({1, 0})});
    CHECK(verify_decomposition(W, decompose(W), 4));
}

TEST_CASE("graded consistency: every box element lands on its class exactly") {
    AffineSemigroup S = skew_plane();
    Decomposition dec = decompose(S);
    for (const RatVec& v : oracle::enumerate_semigroup(S, {4})) {
        int found = -1;
        IntVec offset;
        for (size_t j = 0; j < dec.classes.size(); ++j) {
            RatVec diff(v.size());
            bool integral = true;
            for (size_t i = 0; i < v.size(); ++i) {
                diff[i] = v[i] - dec.classes[j].shift[i];
                if (!is_integral(diff[i])) { integral = false; break; }
            }
            if (!integral) continue;
            REQUIRE(found == -1);
            found = int(j);
            offset.clear();
            for (const Rat& q : diff) offset.push_back(q.get_num());
        }
        REQUIRE(found >= 0);
        // Reconstruct x = h_j + sum offset_i e_i in ambient coordinates.
        IntVec expected = lambda_to_ambient(S, v);
        IntVec rebuilt = dec.shifts_ambient[found];
        for (int i = 0; i < S.dim(); ++i)
            for (int c = 0; c < S.ambient_dim; ++c)
                rebuilt[c] += offset[i] * S.basis_vector(i)[c];
        CHECK(rebuilt == expected);
    }
}
