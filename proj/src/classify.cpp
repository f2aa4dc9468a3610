#include "quatroots/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace quatroots {

namespace {

// First-order bound on the magnitude reachable when evaluating p near |q|;
// residual tolerances are taken relative to it.
double eval_scale(const HPoly& p, const Quaternion& q) {
    const double b = norm(q);
    double s = 0.0;
    double pw = 1.0;
    for (const Quaternion& c : p.coeffs()) {
        s += norm(c) * pw;
        pw *= b;
    }
    return std::max(s, 1.0);
}

}  // namespace

ZeroKind classify_zero(const HPoly& p, const Quaternion& q, double tol) {
    if (p.degree() < 1) throw PreconditionViolation("classify_zero: degree >= 1 required");
    if (!(tol > 0.0)) throw PreconditionViolation("classify_zero: tol > 0 required");
    const double scale = eval_scale(p, q);
    if (norm(eval(p, q)) > tol * scale) throw NotAZero("classify_zero: residual above tolerance");

    if (vec_norm(q) <= tol) return {ZeroTag::isolated, 1, std::nullopt};

    const bool conj_is_zero = norm(eval(p, conj(q))) <= tol * scale;

    const auto [quot, rem] = divide_by_real_quadratic(p, char_poly(q));
    const double rem_size = norm(rem[0]) + norm(rem[1]) * std::max(1.0, norm(q));
    const bool divides = rem_size <= tol * scale;

    if (conj_is_zero != divides)
        throw DiagnosticConflict("classify_zero: spherical criteria disagree");
    if (conj_is_zero) return {ZeroTag::spherical, 1, class_key(q)};
    return {ZeroTag::isolated, 1, std::nullopt};
}

std::vector<ClassifiedRoot> group_spheres(std::span<const Quaternion> roots, const HPoly& p,
                                          double tol) {
    const std::size_t n = roots.size();

    // Union-find over the same-class relation; transitive closure keeps the
    // clustering independent of input order.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (same_class(roots[a], roots[b], tol)) parent[find(a)] = find(b);

    std::vector<std::vector<std::size_t>> clusters(n);
    for (std::size_t a = 0; a < n; ++a) clusters[find(a)].push_back(a);

    std::vector<ClassifiedRoot> out(n);
    for (const auto& members : clusters) {
        if (members.empty()) continue;

        double diameter = 0.0;
        double re_sum = 0.0;
        double norm_sum = 0.0;
        for (std::size_t a : members) {
            re_sum += re(roots[a]);
            norm_sum += norm(roots[a]);
            for (std::size_t b : members) diameter = std::max(diameter, norm(roots[a] - roots[b]));
        }

        const bool coincident = members.size() >= 2 && diameter <= tol;
        const ClassKey shared{re_sum / static_cast<double>(members.size()),
                              norm_sum / static_cast<double>(members.size())};

        for (std::size_t a : members) {
            ClassifiedRoot& cr = out[a];
            cr.value = roots[a];
            cr.residual = norm(eval(p, roots[a]));
            if (coincident) {
                cr.kind = {ZeroTag::multiple_isolated, static_cast<int>(members.size()),
                           std::nullopt};
            } else {
                cr.kind = classify_zero(p, roots[a], tol);
                if (cr.kind.tag == ZeroTag::spherical) cr.kind.sphere = shared;
            }
        }
    }
    return out;
}

std::pair<Quaternion, Quaternion> swap_adjacent_factors(const Quaternion& x1,
                                                        const Quaternion& x2) {
    const Quaternion h = conj(x2) - x1;
    if (norm(h) < kInverseFloor) return {x2, x1};
    const Quaternion hi = inverse(h);
    return {hi * x2 * h, hi * x1 * h};
}

QuadraticStructure quadratic_zero_structure(const Quaternion& x1, const Quaternion& x2,
                                            double tol) {
    if (vec_norm(x1) <= tol || vec_norm(x2) <= tol)
        throw PreconditionViolation("quadratic_zero_structure: factors must be non-real");
    if (!same_class(x1, x2, tol))
        throw PreconditionViolation("quadratic_zero_structure: factors must share a class");
    if (norm(x1 - conj(x2)) <= tol)
        return {{ZeroTag::spherical, 1, class_key(x1)}, x1};
    // One congruence class, not a conjugate pair: x1 is the only zero of
    // (x - x2) * (x - x1) and counts twice.
    return {{ZeroTag::multiple_isolated, 2, std::nullopt}, x1};
}

}  // namespace quatroots
