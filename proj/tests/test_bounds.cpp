#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfectlike/bounds.hpp"

using namespace perfectlike;

TEST_CASE("applicability: q > 2 and n = q mod q^2") {
    CHECK(congruence_applicable(3, 3));
    CHECK(congruence_applicable(3, 12));
    CHECK(congruence_applicable(3, 39));
    CHECK(congruence_applicable(4, 4));
    CHECK_FALSE(congruence_applicable(3, 4));
    std::string why;
    CHECK_FALSE(congruence_applicable(2, 2, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("packing upper bound values") {
    CHECK(packing_upper_bound(3, 3, 1).best() == 3);
    CHECK(packing_upper_bound(3, 12, 1).best() == 19683);
    // 3^39 * ((13*3)*1... at n=39: 3^39 * 39 / 3159 = 3^35
    int128 t = 1;
    for (int i = 0; i < 35; ++i) t *= 3;
    CHECK(packing_upper_bound(3, 39, 1).best() == t);
    CHECK_FALSE(packing_upper_bound(3, 5, 1).applicable);
}

TEST_CASE("even improvement floors one lower when it matters") {
    BoundReport b = packing_upper_bound(4, 4, 4);
    REQUIRE(b.applicable);
    REQUIRE(b.even_value.has_value());
    CHECK(*b.even_value < b.value);
    CHECK(b.best() <= b.bound);
    // odd lambda: no even variant
    CHECK_FALSE(packing_upper_bound(4, 4, 3).even_value.has_value());
}

TEST_CASE("distance-2 bound") {
    CHECK(packing_upper_bound_dist2(3, 3, 3).best() == 9);
    CHECK(packing_upper_bound_dist2(4, 4, 4).best() == 64);
    CHECK(packing_upper_bound_dist2(3, 3, 1).best() == 3);
}

TEST_CASE("covering lower bound is a ceiling") {
    CHECK(covering_lower_bound(3, 3, 6).best() == 24);
    // q^n (n+1) mu / (n^2(q-1)+nq) at (3,3,1): 27*4/27 = 4
    CHECK(covering_lower_bound(3, 3, 1).best() == 4);
    // (3,12,1): ceil(3^12 * 13 / 324) = ceil(6908733/324) = 21324
    CHECK(covering_lower_bound(3, 12, 1).best() == 21324);
}

TEST_CASE("bounds are consistent with each other") {
    for (int lambda = 1; lambda <= 4; ++lambda) {
        BoundReport ub = packing_upper_bound(3, 12, lambda);
        BoundReport d2 = packing_upper_bound_dist2(3, 12, lambda);
        BoundReport sp = sphere_packing_bound(3, 12, lambda);
        // the congruence bound refines plain sphere packing
        CHECK(ub.best() <= sp.best());
        CHECK(d2.value.floor() <= sp.bound);
    }
    // duality: packing bound at lambda + covering bound at mu = ballsize - lambda
    // partitions the space budget
    int n = 3, q = 3;
    for (int lambda = 1; lambda < n * (q - 1) + 1; ++lambda) {
        int mu = n * (q - 1) + 1 - lambda;
        Rational total = packing_upper_bound(q, n, lambda).value +
                         covering_lower_bound(q, n, mu).value;
        CHECK(total == Rational(27)); // q^n
    }
}

TEST_CASE("equality annotation") {
    BoundReport b = packing_upper_bound(3, 3, 1);
    CHECK(b.equality_forbids_multiplicity);
}

TEST_CASE("singleton check") {
    CHECK(singleton_check(3, 3, 3, 3) == SingletonVerdict::MDS);
    CHECK(singleton_check(4, 4, 16, 3) == SingletonVerdict::MDS);
    CHECK(singleton_check(3, 3, 2, 3) == SingletonVerdict::Below);
    CHECK(singleton_check(3, 3, 4, 3) == SingletonVerdict::Violates);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(packing_upper_bound(3, 3, 0), parameter_error);
    CHECK_THROWS_AS(covering_lower_bound(3, 3, -1), parameter_error);
}
