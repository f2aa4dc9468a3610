#include "quatroots/classify.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "cases.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace quatroots;

namespace {
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};
}  // namespace

TEST_CASE("classify spherical versus isolated zeros") {
    const HPoly p = cases::quartic_with_sphere();

    // i lies on the sphere of zeros: conj(i) is a zero too
    const ZeroKind sph = classify_zero(p, qi, 1e-8);
    CHECK(sph.tag == ZeroTag::spherical);
    REQUIRE(sph.sphere.has_value());
    CHECK(sph.sphere->re == doctest::Approx(0.0));
    CHECK(sph.sphere->norm == doctest::Approx(1.0));

    const ZeroKind iso = classify_zero(p, cases::quartic_isolated_a(), 1e-8);
    CHECK(iso.tag == ZeroTag::isolated);
    CHECK(iso.multiplicity == 1);
    CHECK_FALSE(iso.sphere.has_value());
    CHECK(classify_zero(p, cases::quartic_isolated_b(), 1e-8).tag == ZeroTag::isolated);

    CHECK_THROWS_AS(classify_zero(p, Quaternion{0.5}, 1e-8), NotAZero);
}

TEST_CASE("real zeros are always isolated") {
    const HPoly p = from_factors(std::vector<Quaternion>{Quaternion{2}, qi});
    const ZeroKind kind = classify_zero(p, Quaternion{2}, 1e-8);
    CHECK(kind.tag == ZeroTag::isolated);
}

TEST_CASE("spherical zeros across the whole class") {
    // (x + i) * (x - i) = x^2 + 1 vanishes on the entire class of i
    const HPoly p = from_factors(std::vector<Quaternion>{qi, -qi});
    std::mt19937_64 eng(89);
    for (int t = 0; t < 20; ++t) {
        Quaternion h = oracle::random_quaternion(eng, 2.0);
        if (norm(h) < 1e-3) h += Quaternion{1.0};
        const Quaternion q = similar(h, qi);
        const ZeroKind kind = classify_zero(p, q, 1e-8);
        CHECK(kind.tag == ZeroTag::spherical);
    }
}

TEST_CASE("grouping a zero set with a sphere") {
    const HPoly p = cases::quartic_with_sphere();
    // two sphere points (a conjugate pair) and the two isolated zeros
    const std::vector<Quaternion> roots{qi, -qi, cases::quartic_isolated_b(),
                                        cases::quartic_isolated_a()};
    const auto classified = group_spheres(roots, p, 1e-8);
    REQUIRE(classified.size() == 4);

    CHECK(classified[0].kind.tag == ZeroTag::spherical);
    CHECK(classified[1].kind.tag == ZeroTag::spherical);
    // members of the cluster share one sphere key
    CHECK(classified[0].kind.sphere->re == classified[1].kind.sphere->re);
    CHECK(classified[0].kind.sphere->norm == classified[1].kind.sphere->norm);
    CHECK(classified[0].kind.sphere->norm == doctest::Approx(1.0));
    CHECK(classified[2].kind.tag == ZeroTag::isolated);
    CHECK(classified[3].kind.tag == ZeroTag::isolated);
    for (const auto& cr : classified) CHECK(cr.residual <= 1e-12);

    // annotations do not depend on the input order
    const std::vector<Quaternion> shuffled{cases::quartic_isolated_a(), -qi,
                                           cases::quartic_isolated_b(), qi};
    const auto reclassified = group_spheres(shuffled, p, 1e-8);
    CHECK(reclassified[3].kind.tag == ZeroTag::spherical);
    CHECK(reclassified[0].kind.tag == ZeroTag::isolated);
    CHECK(reclassified[3].kind.sphere->re == classified[0].kind.sphere->re);
}

TEST_CASE("grouping coincident values as a multiple zero") {
    const HPoly p = from_factors(cases::cubic_terms());
    const Quaternion d = cases::cubic_double_zero();
    const std::vector<Quaternion> roots{d, d + Quaternion{0, 1e-12, 0, 0},
                                        cases::cubic_simple_zero()};
    const auto classified = group_spheres(roots, p, 1e-8);
    CHECK(classified[0].kind.tag == ZeroTag::multiple_isolated);
    CHECK(classified[0].kind.multiplicity == 2);
    CHECK(classified[1].kind.tag == ZeroTag::multiple_isolated);
    CHECK(classified[1].kind.multiplicity == 2);
    CHECK(classified[2].kind.tag == ZeroTag::isolated);
    CHECK(classified[2].kind.multiplicity == 1);
}

TEST_CASE("grouping all-distinct zeros") {
    const HPoly p = from_factors(cases::sextic_terms());
    const auto classified = group_spheres(cases::sextic_zeros(), p, 1e-8);
    REQUIRE(classified.size() == 6);
    for (const auto& cr : classified) {
        CHECK(cr.kind.tag == ZeroTag::isolated);
        CHECK(cr.kind.multiplicity == 1);
    }
}

TEST_CASE("factor swap preserves the product") {
    auto product_of = [](const Quaternion& a, const Quaternion& b) {
        return from_factors(std::vector<Quaternion>{a, b});
    };

    const Quaternion x1{1, -1, 0, 0};
    const Quaternion x2{2, 0, -1, 0};
    const auto [y1, y2] = swap_adjacent_factors(x1, x2);
    CHECK(oracle::poly_dist(product_of(x1, x2), product_of(y1, y2)) <= 1e-12);
    // roles exchanged: the new rightmost term is congruent to the old outer one
    CHECK(same_class(y1, x2, 1e-12));
    CHECK(same_class(y2, x1, 1e-12));

    // conjugate pair: factors commute and swap unchanged
    const auto [c1, c2] = swap_adjacent_factors(qi, -qi);
    CHECK(c1 == -qi);
    CHECK(c2 == qi);
    CHECK(oracle::poly_dist(product_of(qi, -qi), product_of(c1, c2)) <= 1e-15);

    std::mt19937_64 eng(97);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = oracle::random_quaternion(eng, 3.0);
        const Quaternion b = oracle::random_quaternion(eng, 3.0);
        const auto [s1, s2] = swap_adjacent_factors(a, b);
        CHECK(oracle::poly_dist(product_of(a, b), product_of(s1, s2)) <=
              1e-11 * (1.0 + norm(a) * norm(b)));
    }
}

TEST_CASE("quadratic zero structure") {
    const Quaternion d = cases::cubic_double_zero();  // -1-k

    const QuadraticStructure rep = quadratic_zero_structure(d, d);
    CHECK(rep.kind.tag == ZeroTag::multiple_isolated);
    CHECK(rep.kind.multiplicity == 2);
    CHECK(rep.witness == d);

    // same class but not a conjugate pair: still only one zero
    const Quaternion other{-1, -1, 0, 0};  // -1-i
    const QuadraticStructure only = quadratic_zero_structure(d, other);
    CHECK(only.kind.tag == ZeroTag::multiple_isolated);
    CHECK(only.witness == d);
    // witnessed by evaluation: x1 is a zero, x2 and conj(x1) are not
    const HPoly p = from_factors(std::vector<Quaternion>{d, other});
    CHECK(norm(eval(p, d)) <= 1e-14);
    CHECK(norm(eval(p, other)) > 0.5);
    CHECK(norm(eval(p, conj(d))) > 0.5);

    const QuadraticStructure sph = quadratic_zero_structure(qi, -qi);
    CHECK(sph.kind.tag == ZeroTag::spherical);
    CHECK(sph.kind.sphere->norm == doctest::Approx(1.0));

    CHECK_THROWS_AS(quadratic_zero_structure(Quaternion{1}, Quaternion{1}),
                    PreconditionViolation);
    CHECK_THROWS_AS(quadratic_zero_structure(qi, 2.0 * qi), PreconditionViolation);
}
