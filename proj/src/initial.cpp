#include "quatroots/initial.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace quatroots {

namespace {

double next_unit(std::mt19937_64& eng) {
    // 53 uniform bits in [0, 1); avoids distribution objects so that the
    // stream is identical across standard library implementations.
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Marsaglia rejection sampling of a uniform direction on the unit sphere,
// returned as a pure-imaginary unit quaternion.
Quaternion unit_imaginary(std::mt19937_64& eng) {
    for (;;) {
        const double u = 2.0 * next_unit(eng) - 1.0;
        const double v = 2.0 * next_unit(eng) - 1.0;
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0) continue;
        const double f = std::sqrt(1.0 - s);
        return {0.0, 2.0 * u * f, 2.0 * v * f, 1.0 - 2.0 * s};
    }
}

std::uint64_t splitmix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ull;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
    return v ^ (v >> 31);
}

}  // namespace

double root_norm_bound(const HPoly& p) {
    if (p.degree() < 1) throw PreconditionViolation("root_norm_bound: degree >= 1 required");
    if (p.leading() != Quaternion{1.0})
        throw PreconditionViolation("root_norm_bound: monic polynomial required");
    const RealPoly r = p_times_pbar(p);
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < r.coeffs().size(); ++k) m = std::max(m, std::abs(r[k]));
    return 1.0 + m;
}

std::vector<Quaternion> make_initial_points(std::size_t n, double radius, std::uint64_t seed) {
    if (n == 0 || radius <= 0.0)
        throw PreconditionViolation("make_initial_points: n >= 1 and radius > 0 required");
    std::mt19937_64 eng(seed);
    std::vector<Quaternion> pts;
    pts.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        // Distinct norms spread the class keys; the angle keeps |re| < norm so
        // the vector part never degenerates. Both are seed-independent.
        const double r = radius * static_cast<double>(m) / static_cast<double>(n + 1);
        const double angle = std::numbers::pi * static_cast<double>(m) / static_cast<double>(n + 1);
        const double real = r * std::cos(angle);
        const double vec = r * std::sin(angle);
        pts.push_back(Quaternion{real} + vec * unit_imaginary(eng));
    }
    return pts;
}

Quaternion perturb(const Quaternion& q, double scale, std::uint64_t seed, std::uint64_t counter) {
    if (scale <= 0.0) throw PreconditionViolation("perturb: scale > 0 required");
    std::mt19937_64 eng(splitmix64(seed ^ splitmix64(counter)));
    return q + scale * unit_imaginary(eng);
}

InitPlan make_init_plan(const HPoly& p, std::uint64_t seed) {
    const double radius = root_norm_bound(p);
    const std::size_t n = static_cast<std::size_t>(p.degree());
    InitPlan plan;
    plan.radius = radius;
    plan.separation = radius / (4.0 * static_cast<double>(n));
    plan.seed = seed;
    plan.points = make_initial_points(n, radius, seed);
    return plan;
}

}  // namespace quatroots
