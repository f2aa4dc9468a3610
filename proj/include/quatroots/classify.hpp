#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "quatroots/polynomial.hpp"

namespace quatroots {

enum class ZeroTag { isolated, spherical, multiple_isolated };

struct ZeroKind {
    ZeroTag tag = ZeroTag::isolated;
    int multiplicity = 1;  // > 1 only for multiple_isolated
    std::optional<ClassKey> sphere;  // set iff spherical
};

struct ClassifiedRoot {
    Quaternion value;
    ZeroKind kind;
    double residual = 0.0;
};

// Decide whether an approximate zero q of p is isolated or lies on a sphere
// of zeros. Real zeros are always isolated. Non-real q is spherical iff
// conj(q) is also a zero, equivalently iff char_poly(q) divides p; both
// criteria are checked and must agree, otherwise DiagnosticConflict.
// Throws NotAZero when q fails the residual precondition.
ZeroKind classify_zero(const HPoly& p, const Quaternion& q, double tol);

// Annotate a full set of computed roots: cluster by congruence class within
// tol, tag coincident clusters as multiple_isolated with their cluster size,
// and classify the rest pointwise. Spherical members of one cluster share a
// sphere key. Output order matches the input; the annotations are invariant
// under permuting the input.
std::vector<ClassifiedRoot> group_spheres(std::span<const Quaternion> roots, const HPoly& p,
                                          double tol);

// Exchange adjacent monic linear factors: for h = conj(x2) - x1 nonzero,
// (x - x2) * (x - x1) = (x - h^-1 x1 h) * (x - h^-1 x2 h), so the returned
// pair (h^-1 x2 h, h^-1 x1 h) rebuilds the same product with the factor
// roles exchanged. When h = 0 the factors commute and swap unchanged.
std::pair<Quaternion, Quaternion> swap_adjacent_factors(const Quaternion& x1,
                                                        const Quaternion& x2);

struct QuadraticStructure {
    ZeroKind kind;
    Quaternion witness;  // the zero the structure statement is about
};

// Zero structure of (x - x2) * (x - x1) for non-real x1, x2 in one congruence
// class: a sphere of zeros when x1 = conj(x2), otherwise x1 is the only zero
// and counts with multiplicity two.
QuadraticStructure quadratic_zero_structure(const Quaternion& x1, const Quaternion& x2,
                                            double tol = 1e-8);

}  // namespace quatroots
