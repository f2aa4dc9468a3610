#include "quatroots/weierstrass.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "quatroots/initial.hpp"

namespace quatroots {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct FactoredValue {
    Quaternion v;
    double scale = 1.0;  // product of per-factor magnitude bounds |q| + |t_m|
};

// Value of (x - t_last) * ... * (x - t_first) at q, terms listed
// rightmost-first, by repeated application of the product-evaluation
// identity (f * g)(q) = f(g(q) q g(q)^-1) g(q). Going through the factored
// form keeps every near-vanishing factor a direct, well-scaled subtraction;
// the expanded coefficients of the same product would evaluate it with an
// absolute error proportional to their own size, which destroys the tiny
// values this iteration divides by near conjugate-pair configurations.
FactoredValue eval_factored(std::span<const Quaternion> terms, const Quaternion& q) {
    FactoredValue out{Quaternion{1.0}, 1.0};
    for (const Quaternion& t : terms) {
        out.scale *= norm(q) + norm(t) + 1e-30;
        if (norm(out.v) < kInverseFloor) return {Quaternion{}, out.scale};
        out.v = (similar(out.v, q) - t) * out.v;
    }
    return out;
}

// Factor terms of the conjugated cofactor built from `part`: conjugation
// reverses the factor order, so the rightmost-first list of conj(product)
// is the conjugated `part` walked backwards.
std::vector<Quaternion> conj_reversed(std::span<const Quaternion> part) {
    std::vector<Quaternion> t(part.size());
    for (std::size_t m = 0; m < part.size(); ++m) t[m] = conj(part[part.size() - 1 - m]);
    return t;
}

// (conj(L_i) * p * conj(R_i))(z_i) via two product-evaluation steps, so the
// only coefficient-form evaluation is of p itself at a similarity transform
// of z_i. Returns exact zero when a right factor vanishes.
Quaternion weier_numerator(const HPoly& p, std::span<const Quaternion> z, std::size_t i) {
    const Quaternion h = eval_factored(conj_reversed(z.first(i)), z[i]).v;
    if (norm(h) < kInverseFloor) return Quaternion{};
    const Quaternion vin = eval(p, similar(h, z[i])) * h;
    if (norm(vin) < kInverseFloor) return Quaternion{};
    const Quaternion outer = eval_factored(conj_reversed(z.subspan(i + 1)), similar(vin, z[i])).v;
    return outer * vin;
}

// Correction and root recovery shared by both sweep orders. z holds the
// values the cofactors are built from; z[i] is the iterate being corrected.
std::pair<Quaternion, Quaternion> correct_one(const HPoly& p, std::span<const Quaternion> z,
                                              std::size_t i, const SolverConfig& cfg) {
    // Denominator Q_i(z_i) as a product of characteristic-polynomial values,
    // carrying a running magnitude scale for the relative degeneracy test.
    Quaternion qv{1.0};
    double q_scale = 1.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        qv = qv * eval(char_poly(z[j]), z[i]);
        q_scale *= norm_sq(z[i]) + 2.0 * std::abs(re(z[j])) * norm(z[i]) + norm_sq(z[j]) + 1e-30;
    }
    const double qn = norm(qv);
    const double threshold = cfg.class_collision_tol * q_scale;

    if (qn < threshold) {
        // A degenerate denominator is legitimate in exactly one situation:
        // the iterate's congruence class is a whole sphere of zeros, where
        // numerator and denominator vanish together and the correction stays
        // tiny. That holds precisely when the class's characteristic
        // quadratic divides the polynomial; any other coincidence of
        // congruence classes is a genuine collision.
        const HPoly rem = divide_by_real_quadratic(p, char_poly(z[i])).second;
        if (coeff_scale(rem) > 1e-6 * coeff_scale(p))
            throw ClassCollision(i, qn, threshold);
    }

    Quaternion z_new;
    if (qn < kInverseFloor) {
        z_new = z[i];  // exactly on the zero sphere: stationary
    } else {
        z_new = z[i] - weier_numerator(p, z, i) * inverse(qv);
    }

    // Root recovery zeta = h z h^-1 with h = conj(R_i)(z_new). Once z_new
    // pairs up with a predecessor's conjugate, h is a difference of nearly
    // equal quaternions: its direction is pure rounding noise, while z_new
    // itself already sits on the recovered zero's sphere. Fall back to z_new
    // instead of conjugating by noise.
    const auto [h, h_scale] = eval_factored(conj_reversed(z.first(i)), z_new);
    const Quaternion zeta_new =
        norm(h) < 1e-8 * h_scale ? z_new : similar(h, z_new);
    return {z_new, zeta_new};
}

}  // namespace

HPoly left_cofactor(std::span<const Quaternion> z, std::size_t i) {
    if (i + 1 >= z.size()) return HPoly{Quaternion{1.0}};
    return from_factors(z.subspan(i + 1));
}

HPoly right_cofactor(std::span<const Quaternion> z, std::size_t i) {
    if (i == 0) return HPoly{Quaternion{1.0}};
    return from_factors(z.first(i));
}

RealPoly char_poly_product(std::span<const Quaternion> z, std::size_t i) {
    RealPoly acc{1.0};
    for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) acc = mul(acc, char_poly(z[j]));
    return acc;
}

SweepResult step_sequential(const HPoly& p, std::span<const Quaternion> z,
                            const SolverConfig& cfg) {
    SweepResult out;
    out.z.assign(z.begin(), z.end());
    out.zeta.resize(z.size());
    for (std::size_t i = 0; i < out.z.size(); ++i) {
        // out.z mixes updated predecessors with not-yet-visited successors,
        // which is exactly what the cofactors at position i need.
        auto [zn, zetan] = correct_one(p, out.z, i, cfg);
        out.z[i] = zn;
        out.zeta[i] = zetan;
    }
    return out;
}

SweepResult step_parallel(const HPoly& p, std::span<const Quaternion> z,
                          const SolverConfig& cfg) {
    SweepResult out;
    out.z.resize(z.size());
    out.zeta.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        auto [zn, zetan] = correct_one(p, z, i, cfg);
        out.z[i] = zn;
        out.zeta[i] = zetan;
    }
    return out;
}

std::vector<double> residuals(const HPoly& p, std::span<const Quaternion> zeta) {
    std::vector<double> r(zeta.size());
    for (std::size_t i = 0; i < zeta.size(); ++i) r[i] = norm(eval(p, zeta[i]));
    return r;
}

std::vector<double> rho_estimate(std::span<const double> errors) {
    for (double e : errors)
        if (!(e > 0.0) || !(e < 1.0))
            throw DomainError("rho_estimate: errors must lie strictly inside (0, 1)");
    std::vector<double> rho;
    for (std::size_t k = 1; k < errors.size(); ++k)
        rho.push_back(std::log(errors[k]) / std::log(errors[k - 1]));
    return rho;
}

namespace {

double max_of(std::span<const double> v) {
    double m = 0.0;
    for (double e : v) m = std::max(m, e);
    return m;
}

IterationRecord make_record(int k, const HPoly& p, std::vector<Quaternion> z,
                            std::vector<Quaternion> zeta,
                            const std::vector<Quaternion>* zeta_prev) {
    IterationRecord rec;
    rec.k = k;
    rec.residuals = residuals(p, zeta);
    rec.max_residual = max_of(rec.residuals);
    rec.increments.assign(z.size(), kInf);
    if (zeta_prev)
        for (std::size_t i = 0; i < zeta.size(); ++i)
            rec.increments[i] = norm(zeta[i] - (*zeta_prev)[i]);
    rec.max_increment = max_of(rec.increments);
    rec.z = std::move(z);
    rec.zeta = std::move(zeta);
    return rec;
}

}  // namespace

SolveOutcome solve(const HPoly& p, const SolverConfig& cfg,
                   std::optional<std::vector<Quaternion>> z0) {
    if (p.degree() < 1) throw PreconditionViolation("solve: degree >= 1 required");
    if (cfg.kmax < 1 || cfg.class_collision_tol <= 0.0 || cfg.perturb_scale <= 0.0 ||
        cfg.eps_increment <= 0.0 || cfg.eps_residual <= 0.0)
        throw PreconditionViolation("solve: invalid config");

    const HPoly pm = monicize(p);
    const std::size_t n = static_cast<std::size_t>(pm.degree());

    std::vector<Quaternion> z;
    if (z0) {
        if (z0->size() != n) throw CountMismatch("solve: need one starting point per root");
        for (const Quaternion& q : *z0)
            if (!is_finite(q)) throw PreconditionViolation("solve: non-finite starting point");
        z = std::move(*z0);
    } else {
        z = make_init_plan(pm, cfg.rng_seed).points;
    }

    SolveOutcome out;
    std::vector<Quaternion> zeta = z;
    out.trace.push_back(make_record(0, pm, z, zeta, nullptr));

    int k = 0;
    int collisions = 0;
    while (k < cfg.kmax) {
        SweepResult swept;
        try {
            swept = cfg.mode == SweepMode::sequential ? step_sequential(pm, z, cfg)
                                                      : step_parallel(pm, z, cfg);
        } catch (const ClassCollision& c) {
            if (++collisions > 10)
                throw TooManyCollisions("solve: more than 10 class collisions");
            z[c.index] =
                perturb(z[c.index], cfg.perturb_scale, cfg.rng_seed,
                        static_cast<std::uint64_t>(collisions));
            continue;  // retry the sweep; k unchanged
        }
        ++k;
        IterationRecord rec = make_record(k, pm, std::move(swept.z), swept.zeta, &zeta);
        zeta = std::move(swept.zeta);
        z = rec.z;

        const double prev_inc = out.trace.back().max_increment;
        if (rec.max_increment > 0.0 && rec.max_increment < 1.0 && prev_inc > 0.0 &&
            prev_inc < 1.0)
            rec.rho = std::log(rec.max_increment) / std::log(prev_inc);

        const bool res_ok = rec.max_residual < cfg.eps_residual;
        const bool inc_ok = rec.max_increment < cfg.eps_increment;
        out.trace.push_back(std::move(rec));
        if (cfg.residual_only ? res_ok : (res_ok && inc_ok)) {
            out.converged = true;
            break;
        }
    }

    out.iterations = k;
    out.factor_terms = std::move(z);
    out.roots = std::move(zeta);
    return out;
}

}  // namespace quatroots
