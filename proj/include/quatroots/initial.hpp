#pragma once

#include <cstdint>
#include <vector>

#include "quatroots/polynomial.hpp"

namespace quatroots {

// Starting configuration for the simultaneous iteration: n points inside the
// root-norm bound, pairwise separated in congruence-class space.
struct InitPlan {
    double radius = 0.0;
    double separation = 0.0;  // guaranteed Chebyshev gap between class keys
    std::uint64_t seed = 0;
    std::vector<Quaternion> points;
};

// Cauchy bound 1 + max_k |c_k| on the non-leading coefficients of the real
// polynomial p * conj(p), whose complex roots carry the norms of the zeros
// of p. Requires p monic, degree >= 1.
double root_norm_bound(const HPoly& p);

// n starting points with norms radius*m/(n+1), m = 1..n, real parts spread
// inside each norm, and seeded pure-imaginary directions. Class keys are
// seed-independent and pairwise at least radius/(4n) apart.
std::vector<Quaternion> make_initial_points(std::size_t n, double radius, std::uint64_t seed);

// q + scale * u with u a unit pure-imaginary direction drawn deterministically
// from (seed, counter). Leaves the real part unchanged.
Quaternion perturb(const Quaternion& q, double scale, std::uint64_t seed, std::uint64_t counter);

InitPlan make_init_plan(const HPoly& p, std::uint64_t seed);

}  // namespace quatroots
