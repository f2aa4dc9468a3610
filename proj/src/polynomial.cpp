#include "quatroots/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace quatroots {

RealPoly add(const RealPoly& a, const RealPoly& b) {
    std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return RealPoly(std::move(c));
}

RealPoly mul(const RealPoly& a, const RealPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a[i] * b[j];
    return RealPoly(std::move(c));
}

double eval(const RealPoly& p, double t) {
    double r = 0.0;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) r = r * t + p[k];
    return r;
}

Quaternion eval(const RealPoly& p, const Quaternion& q) {
    Quaternion r{};
    for (std::size_t k = p.coeffs().size(); k-- > 0;) r = r * q + Quaternion{p[k]};
    return r;
}

HPoly to_hpoly(const RealPoly& p) {
    std::vector<Quaternion> c(p.coeffs().begin(), p.coeffs().end());
    return HPoly(std::move(c));
}

HPoly add(const HPoly& a, const HPoly& b) {
    std::vector<Quaternion> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return HPoly(std::move(c));
}

HPoly sub(const HPoly& a, const HPoly& b) {
    std::vector<Quaternion> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return HPoly(std::move(c));
}

HPoly star_mul(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Quaternion> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a[i] * b[j];
    return HPoly(std::move(c));
}

HPoly star_mul(const RealPoly& a, const HPoly& b) { return star_mul(to_hpoly(a), b); }

HPoly star_mul(const HPoly& a, const RealPoly& b) { return star_mul(a, to_hpoly(b)); }

HPoly conj_poly(const HPoly& p) {
    std::vector<Quaternion> c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = conj(p[k]);
    return HPoly(std::move(c));
}

Quaternion eval(const HPoly& p, const Quaternion& q) {
    Quaternion r{};
    for (std::size_t k = p.coeffs().size(); k-- > 0;) r = r * q + p[k];
    return r;
}

Quaternion eval_left_product(const HPoly& l, const HPoly& r, const Quaternion& q) {
    const Quaternion h = eval(r, q);
    if (h == Quaternion{}) return {};
    return eval(l, similar(h, q)) * h;
}

RealPoly char_poly(const Quaternion& q) {
    return RealPoly{norm_sq(q), -2.0 * re(q), 1.0};
}

RealPoly p_times_pbar(const HPoly& p) {
    const HPoly prod = star_mul(p, conj_poly(p));
    double scale = 0.0;
    double residue = 0.0;
    for (const Quaternion& c : prod.coeffs()) {
        scale = std::max(scale, norm(c));
        residue = std::max(residue, vec_norm(c));
    }
    if (residue > 1e-10 * scale)
        throw RealityViolation("p * conj(p) has non-real coefficients beyond tolerance");
    std::vector<double> c(prod.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = prod[k].w;
    return RealPoly(std::move(c));
}

HPoly from_factors(std::span<const Quaternion> terms) {
    if (terms.empty()) throw PreconditionViolation("from_factors: empty term list");
    HPoly acc{-terms[0], Quaternion{1.0}};
    for (std::size_t m = 1; m < terms.size(); ++m)
        acc = star_mul(HPoly{-terms[m], Quaternion{1.0}}, acc);
    return acc;
}

HPoly monicize(const HPoly& p) {
    if (p.is_zero()) throw PreconditionViolation("monicize: zero polynomial");
    const Quaternion a = inverse(p.leading());
    std::vector<Quaternion> c(p.coeffs().size());
    for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] = a * p[k];
    c.back() = Quaternion{1.0};
    return HPoly(std::move(c));
}

std::pair<HPoly, HPoly> divide_by_real_quadratic(const HPoly& p, const RealPoly& c) {
    if (c.degree() != 2 || c[2] != 1.0)
        throw PreconditionViolation("divide_by_real_quadratic: divisor must be monic quadratic");
    if (p.degree() < 2) return {HPoly{}, p};

    std::vector<Quaternion> rem(p.coeffs().begin(), p.coeffs().end());
    std::vector<Quaternion> quot(p.coeffs().size() - 2);
    for (std::size_t k = rem.size(); k-- > 2;) {
        const Quaternion q = rem[k];
        quot[k - 2] = q;
        rem[k - 1] -= q * c[1];
        rem[k - 2] -= q * c[0];
    }
    rem.resize(2);
    return {HPoly(std::move(quot)), HPoly(std::move(rem))};
}

double coeff_scale(const HPoly& p) {
    double s = 0.0;
    for (const Quaternion& c : p.coeffs()) s = std::max(s, norm(c));
    return s;
}

double coeff_scale(const RealPoly& p) {
    double s = 0.0;
    for (double c : p.coeffs()) s = std::max(s, std::abs(c));
    return s;
}

}  // namespace quatroots
