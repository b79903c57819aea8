#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semicm/errors.hpp"
#include "semicm/semigroup.hpp"
#include "support/instances.hpp"
#include "support/vectors.hpp"

#include <random>

using namespace semicm;
using namespace semicm::testing;

TEST_CASE("build_semigroup auto-detects the basis of the plane example") {
    AffineSemigroup S = example_plane();
    CHECK(S.ambient_dim == 2);
    CHECK(S.dim() == 2);
    CHECK(S.basis_vectors() == std::vector<IntVec>{iv({2, 0}), iv({0, 1})});
    CHECK(S.lambda_gens[2] == rv({{3, 2}, {1, 1}}));
    CHECK(S.lambda_gens[3] == rv({{1, 2}, {2, 1}}));
    CHECK(S.delta == 2);
}

TEST_CASE("build_semigroup on unit vectors and on <2,3>") {
    AffineSemigroup N2 = natural(2);
    CHECK(N2.basis_vectors() == std::vector<IntVec>{iv({1, 0}), iv({0, 1})});
    CHECK(N2.delta == 1);

    AffineSemigroup B = numerical({2, 3});
    CHECK(B.dim() == 1);
    CHECK(B.basis_vectors() == std::vector<IntVec>{iv({2})});
    CHECK(B.lambda_gens[1] == rv({{3, 2}}));
    CHECK(B.group == hermite_form(IntMat::from_rows({iv({1})}), 2));
}

TEST_CASE("build_semigroup rejects non-simplicial input") {
    // Cone over a square: four extreme rays in rank 3.
    CHECK_THROWS_AS(build_semigroup({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 0, 1}), iv({0, 1, 1})}),
                    NotSimplicial);
    // Non-pointed: a line.
    CHECK_THROWS_AS(build_semigroup({iv({1, 0}), iv({-1, 0})}), NotSimplicial);
    // Dependent basis hint.
    CHECK_THROWS_AS(build_semigroup({iv({2, 0}), iv({4, 0}), iv({0, 1})},
                                    std::vector<int>{0, 1}),
                    NotSimplicial);
    // Hint that does not contain the cone.
    CHECK_THROWS_AS(build_semigroup({iv({1, 0}), iv({0, 1}), iv({1, 1})},
                                    std::vector<int>{1, 2}),
                    NotSimplicial);
}

TEST_CASE("build_semigroup input validation") {
    CHECK_THROWS_AS(build_semigroup({}), RankZero);
    CHECK_THROWS_AS(build_semigroup({iv({0, 0})}), ValidationError);
    CHECK_THROWS_AS(build_semigroup({iv({1, 0}), iv({1})}), ValidationError);
    CHECK_THROWS_AS(build_semigroup({iv({1, 0}), iv({0, 1})}, std::vector<int>{0, 5}),
                    ValidationError);
}

TEST_CASE("build_semigroup deduplicates and keeps input order") {
    AffineSemigroup S = build_semigroup({iv({2, 0}), iv({2, 0}), iv({0, 1})});
    CHECK(S.generators == std::vector<IntVec>{iv({2, 0}), iv({0, 1})});
}

TEST_CASE("basis hint overrides auto-detection") {
    // Auto-detection would pick (1,0) on the x-ray; the hint keeps (2,0).
    AffineSemigroup S = build_semigroup({iv({2, 0}), iv({0, 1}), iv({1, 0})},
                                        std::vector<int>{0, 1});
    CHECK(S.basis_vectors() == std::vector<IntVec>{iv({2, 0}), iv({0, 1})});
    CHECK(S.lambda_gens[2] == rv({{1, 2}, {0, 1}}));

    AffineSemigroup A = build_semigroup({iv({2, 0}), iv({0, 1}), iv({1, 0})});
    CHECK(A.basis_vectors() == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
}

TEST_CASE("member on the plane example") {
    AffineSemigroup S = example_plane();

    MembershipCertificate yes = member(S, iv({5, 3}));
    REQUIRE(yes.present());
    IntVec sum(2, Int(0));
    for (size_t k = 0; k < yes.coefficients->size(); ++k) {
        CHECK((*yes.coefficients)[k] >= 0);
        for (int j = 0; j < 2; ++j) sum[j] += (*yes.coefficients)[k] * S.generators[k][j];
    }
    CHECK(sum == iv({5, 3}));

    MembershipCertificate zero = member(S, iv({0, 0}));
    REQUIRE(zero.present());
    CHECK(*zero.coefficients == std::vector<long>{0, 0, 0, 0});

    CHECK_FALSE(member(S, iv({1, 0})).present());
    CHECK_FALSE(member(S, iv({1, 1})).present());
    CHECK_FALSE(member(S, iv({-2, 0})).present());
}

TEST_CASE("group_member and cone_member on the plane example") {
    AffineSemigroup S = example_plane();
    CHECK(group_member(S, iv({1, 0}))); // (3,1)-(2,0)-(0,1)
    for (const IntVec& g : S.generators) {
        CHECK(group_member(S, g));
        CHECK(cone_member(S, g));
    }
    CHECK(cone_member(S, iv({1, 0})));
    CHECK(cone_member(S, iv({1, 1})));
    CHECK_FALSE(cone_member(S, iv({-2, 0})));

    AffineSemigroup E = build_semigroup({iv({2, 0}), iv({0, 2})});
    CHECK_FALSE(group_member(E, iv({1, 0})));
}

TEST_CASE("membership outside the Q-span is rejected") {
    AffineSemigroup S = embedded_plane();
    CHECK_FALSE(member(S, iv({0, 0, 1})).present());
    CHECK_FALSE(group_member(S, iv({0, 0, 1})));
    CHECK_FALSE(cone_member(S, iv({0, 0, 1})));
    CHECK(member(S, iv({1, 1, 2})).present());
}

TEST_CASE("members are closed under addition and certified") {
    std::mt19937_64 rng(101);
    for (AffineSemigroup S : {example_plane(), skew_plane(), numerical({3, 4, 5})}) {
        std::vector<IntVec> samples;
        for (int t = 0; t < 12; ++t) {
            IntVec x(S.ambient_dim, Int(0));
            for (const IntVec& g : S.generators) {
                long c = long(rng() % 3);
                for (int j = 0; j < S.ambient_dim; ++j) x[j] += c * g[j];
            }
            samples.push_back(x);
        }
        for (size_t a = 0; a < samples.size(); ++a) {
            MembershipCertificate ca = member(S, samples[a]);
            REQUIRE(ca.present());
            CHECK(group_member(S, samples[a]));
            CHECK(cone_member(S, samples[a]));
            // Some multiple within delta lands in A.
            auto lambda = lambda_of(S, samples[a]);
            REQUIRE(lambda.has_value());
            bool scaled_integral = false;
            for (Int m = 1; m <= S.delta; ++m) {
                RatVec scaled = *lambda;
                for (Rat& q : scaled) q *= Rat(m);
                if (is_integral(scaled)) { scaled_integral = true; break; }
            }
            CHECK(scaled_integral);
            if (a + 1 < samples.size()) {
                IntVec s(S.ambient_dim);
                for (int j = 0; j < S.ambient_dim; ++j) s[j] = samples[a][j] + samples[a + 1][j];
                CHECK(member(S, s).present());
            }
        }
    }
}

TEST_CASE("random instances build and stay consistent") {
    for (const AffineSemigroup& S : random_instances(25, 424242)) {
        for (int i = 0; i < S.dim(); ++i) {
            RatVec unit(S.dim(), Rat(0));
            unit[i] = 1;
            CHECK(S.lambda_gens[S.basis[i]] == unit);
            CHECK(lattice_member(unit, S.group));
        }
        for (const RatVec& lambda : S.lambda_gens)
            CHECK(lattice_member(lambda, S.group));
    }
}
