#include "quatroots/polynomial.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"

using namespace quatroots;

namespace {
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};

// (x - i) * (x - j) expanded by hand: x^2 - (i+j)x + ij with ij = k.
const HPoly kProduct{qk, -(qi + qj), Quaternion{1}};
}  // namespace

TEST_CASE("zero polynomial and trimming") {
    CHECK(HPoly{}.is_zero());
    CHECK(HPoly{}.degree() == -1);
    CHECK(HPoly{Quaternion{}, Quaternion{}}.is_zero());
    const HPoly p{qi, Quaternion{1}, Quaternion{}};
    CHECK(p.degree() == 1);
    CHECK(sub(p, p).is_zero());
    CHECK(add(p, HPoly{}) == p);
}

TEST_CASE("star product of linear factors") {
    const HPoly xi{-qi, Quaternion{1}};
    const HPoly xj{-qj, Quaternion{1}};
    CHECK(star_mul(xi, xj) == kProduct);
    // reversed order gives constant term ji = -k
    CHECK(star_mul(xj, xi)[0] == -qk);
}

TEST_CASE("star product matches reference convolution") {
    std::mt19937_64 eng(23);
    for (int t = 0; t < 100; ++t) {
        const HPoly a = oracle::random_poly(eng, 4, 5.0);
        const HPoly b = oracle::random_poly(eng, 4, 5.0);
        CHECK(oracle::poly_dist(star_mul(a, b), oracle::ref_conv(a, b)) <= 1e-11);
    }
}

TEST_CASE("ring structure") {
    std::mt19937_64 eng(29);
    for (int t = 0; t < 60; ++t) {
        const HPoly a = oracle::random_poly(eng, 3, 3.0);
        const HPoly b = oracle::random_poly(eng, 3, 3.0);
        const HPoly c = oracle::random_poly(eng, 3, 3.0);
        const double s = 1.0 + coeff_scale(a) * coeff_scale(b) * coeff_scale(c);
        CHECK(oracle::poly_dist(star_mul(star_mul(a, b), c), star_mul(a, star_mul(b, c))) <=
              1e-12 * s);
        CHECK(oracle::poly_dist(star_mul(a, add(b, c)), add(star_mul(a, b), star_mul(a, c))) <=
              1e-12 * s);
        CHECK(oracle::poly_dist(star_mul(add(a, b), c), add(star_mul(a, c), star_mul(b, c))) <=
              1e-12 * s);
    }
}

TEST_CASE("real polynomials are central") {
    std::mt19937_64 eng(31);
    for (int t = 0; t < 60; ++t) {
        const HPoly p = oracle::random_poly(eng, 4, 4.0);
        std::vector<double> rc(1 + eng() % 4);
        for (double& v : rc) v = oracle::uniform(eng, -3.0, 3.0);
        const RealPoly r{std::vector<double>(rc)};
        CHECK(oracle::poly_dist(star_mul(r, p), star_mul(p, r)) <= 1e-12 * (1.0 + coeff_scale(p)));
    }
}

TEST_CASE("conjugation is an anti-homomorphism") {
    std::mt19937_64 eng(37);
    for (int t = 0; t < 60; ++t) {
        const HPoly a = oracle::random_poly(eng, 4, 4.0);
        const HPoly b = oracle::random_poly(eng, 4, 4.0);
        CHECK(oracle::poly_dist(conj_poly(star_mul(a, b)), star_mul(conj_poly(b), conj_poly(a))) <=
              1e-11);
    }
}

TEST_CASE("evaluation uses left coefficients") {
    // ((x - i) * (x - j))(i) = 2k even though (x - i)(i) = 0: evaluation of a
    // star product is not the product of evaluations.
    CHECK(oracle::dist(eval(kProduct, qi), 2.0 * qk) <= 1e-15);
    const HPoly xi{-qi, Quaternion{1}};
    CHECK(eval(xi, qi) == Quaternion{});
    // right factor vanishing does force a zero
    CHECK(oracle::dist(eval(kProduct, qj), Quaternion{}) <= 1e-15);

    std::mt19937_64 eng(41);
    for (int t = 0; t < 100; ++t) {
        const HPoly p = oracle::random_poly(eng, 5, 4.0);
        const Quaternion q = oracle::random_quaternion(eng, 3.0);
        CHECK(oracle::dist(eval(p, q), oracle::ref_eval(p, q)) <= 1e-10);
    }
}

TEST_CASE("product evaluation via congruence shift") {
    const HPoly l{-qi, Quaternion{1}};
    const HPoly r{-qj, Quaternion{1}};
    CHECK(oracle::dist(eval_left_product(l, r, qi), 2.0 * qk) <= 1e-15);
    // q a zero of the right factor: exact zero short-circuit
    CHECK(eval_left_product(l, r, qj) == Quaternion{});

    std::mt19937_64 eng(43);
    for (int t = 0; t < 100; ++t) {
        const HPoly a = oracle::random_poly(eng, 4, 3.0);
        const HPoly b = oracle::random_poly(eng, 4, 3.0);
        const Quaternion q = oracle::random_quaternion(eng, 2.0);
        const Quaternion lhs = eval_left_product(a, b, q);
        const Quaternion rhs = eval(star_mul(a, b), q);
        CHECK(oracle::dist(lhs, rhs) <= 1e-9 * std::max({1.0, norm(lhs), norm(rhs)}));
    }
}

TEST_CASE("real left factor commutes through evaluation") {
    std::mt19937_64 eng(47);
    for (int t = 0; t < 60; ++t) {
        std::vector<double> rc(2 + eng() % 3);
        for (double& v : rc) v = oracle::uniform(eng, -3.0, 3.0);
        const RealPoly l{std::vector<double>(rc)};
        const HPoly r = oracle::random_poly(eng, 3, 3.0);
        const Quaternion q = oracle::random_quaternion(eng, 2.0);
        const Quaternion whole = eval(star_mul(l, r), q);
        const Quaternion split = eval(r, q) * eval(l, q);
        CHECK(oracle::dist(whole, split) <= 1e-9 * std::max(1.0, norm(whole)));
    }
}

TEST_CASE("characteristic polynomial of a class") {
    const RealPoly c = char_poly(Quaternion{1, 1, 1, 1});
    CHECK(c == RealPoly{4.0, -2.0, 1.0});

    std::mt19937_64 eng(53);
    for (int t = 0; t < 60; ++t) {
        const Quaternion q = oracle::random_quaternion(eng, 4.0);
        const RealPoly cp = char_poly(q);
        // vanishes on the whole congruence class of q
        CHECK(norm(eval(cp, q)) <= 1e-12 * (1.0 + norm_sq(q)));
        CHECK(norm(eval(cp, conj(q))) <= 1e-12 * (1.0 + norm_sq(q)));
        Quaternion h = oracle::random_quaternion(eng, 2.0);
        if (norm(h) < 1e-3) h += Quaternion{1.0};
        CHECK(norm(eval(cp, similar(h, q))) <= 1e-9 * (1.0 + norm_sq(q)));
    }
}

TEST_CASE("p times conj(p) is real") {
    CHECK(p_times_pbar(HPoly{-qi, Quaternion{1}}) == RealPoly{1.0, 0.0, 1.0});
    CHECK(p_times_pbar(HPoly{Quaternion{-1, -1, 0, 0}, Quaternion{1}}) ==
          RealPoly{2.0, -2.0, 1.0});

    std::mt19937_64 eng(59);
    for (int t = 0; t < 60; ++t) {
        const HPoly p = oracle::random_poly(eng, 5, 4.0);
        CHECK_NOTHROW(p_times_pbar(p));
        // the product commutes with its conjugate
        CHECK(oracle::poly_dist(star_mul(p, conj_poly(p)), star_mul(conj_poly(p), p)) <=
              1e-10 * (1.0 + coeff_scale(p) * coeff_scale(p)));
    }
}

TEST_CASE("factor-term construction") {
    // terms listed rightmost-first: [i, j] builds (x - j) * (x - i)
    const std::vector<Quaternion> terms{qi, qj};
    const HPoly p = from_factors(terms);
    CHECK(p[2] == Quaternion{1});
    CHECK(p[1] == -(qi + qj));
    CHECK(p[0] == -qk);  // ji
    // the first (rightmost) term is always a zero
    CHECK(oracle::dist(eval(p, qi), Quaternion{}) <= 1e-15);
    CHECK_THROWS_AS(from_factors({}), PreconditionViolation);
}

TEST_CASE("monicize") {
    const Quaternion lead{1, 1, 0, 0};
    const HPoly p{-(lead * qj), lead};  // (1+i)x - (1+i)j
    const HPoly m = monicize(p);
    CHECK(m.leading() == Quaternion{1});
    CHECK(oracle::dist(m[0], -qj) <= 1e-15);
    CHECK(oracle::dist(eval(m, qj), Quaternion{}) <= 1e-15);
    CHECK_THROWS_AS(monicize(HPoly{}), PreconditionViolation);

    std::mt19937_64 eng(61);
    for (int t = 0; t < 60; ++t) {
        HPoly q = oracle::random_poly(eng, 4, 4.0);
        if (norm(q.leading()) < 1e-3) q = add(q, HPoly{Quaternion{}, Quaternion{1}});
        const HPoly mq = monicize(q);
        CHECK(mq.leading() == Quaternion{1});
        const Quaternion pt = oracle::random_quaternion(eng, 2.0);
        // same zero set: evaluations differ by the constant left factor
        CHECK(oracle::dist(eval(mq, pt), inverse(q.leading()) * eval(q, pt)) <=
              1e-9 * (1.0 + norm(eval(q, pt))));
    }
}

TEST_CASE("division by a real monic quadratic") {
    const HPoly cubic{Quaternion{}, Quaternion{}, Quaternion{}, Quaternion{1}};  // x^3
    const auto [q, r] = divide_by_real_quadratic(cubic, RealPoly{1.0, 0.0, 1.0});
    CHECK(q == HPoly{Quaternion{}, Quaternion{1}});
    CHECK(r == HPoly{Quaternion{}, Quaternion{-1}});

    CHECK_THROWS_AS(divide_by_real_quadratic(cubic, RealPoly{1.0, 1.0}), PreconditionViolation);
    CHECK_THROWS_AS(divide_by_real_quadratic(cubic, RealPoly{1.0, 0.0, 2.0}),
                    PreconditionViolation);

    std::mt19937_64 eng(67);
    for (int t = 0; t < 80; ++t) {
        const HPoly p = oracle::random_poly(eng, 5, 4.0);
        const Quaternion cls = oracle::random_quaternion(eng, 3.0);
        const RealPoly c = char_poly(cls);
        const auto [quot, rem] = divide_by_real_quadratic(p, c);
        CHECK(rem.degree() <= 1);
        CHECK(oracle::poly_dist(p, add(star_mul(quot, c), rem)) <=
              1e-10 * (1.0 + coeff_scale(p) * (1.0 + norm_sq(cls))));
    }
}

TEST_CASE("real polynomial evaluation at a quaternion") {
    const RealPoly r{2.0, 0.0, 1.0};  // x^2 + 2
    CHECK(oracle::dist(eval(r, qi), Quaternion{1}) <= 1e-15);
    CHECK(eval(r, 3.0) == 11.0);
    CHECK(eval(RealPoly{}, 3.0) == 0.0);
}
