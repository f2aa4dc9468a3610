#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quatroots/polynomial.hpp"

namespace quatroots {

enum class SweepMode { sequential, parallel };

struct SolverConfig {
    SweepMode mode = SweepMode::sequential;
    double eps_increment = 1e-12;
    double eps_residual = 1e-12;
    int kmax = 100;
    // Collision threshold, relative to the coefficient scale of the class
    // polynomial product; must be strictly positive.
    double class_collision_tol = 1e-12;
    double perturb_scale = 1e-3;
    std::uint64_t rng_seed = 1;
    // Stop on residuals alone. Increments stagnate near multiple zeros, where
    // the combined criterion would run to kmax.
    bool residual_only = false;
};

struct IterationRecord {
    int k = 0;
    std::vector<Quaternion> z;     // factor-term iterates
    std::vector<Quaternion> zeta;  // root approximations recovered from z
    std::vector<double> residuals;     // |p(zeta_i)|
    std::vector<double> increments;    // |zeta_i - previous zeta_i|; +inf at k = 0
    double max_increment = 0.0;
    double max_residual = 0.0;
    std::optional<std::vector<double>> per_root_error;  // vs known roots, if provided
    std::optional<double> rho;  // local convergence-order estimate
};

struct SolveOutcome {
    bool converged = false;
    int iterations = 0;
    std::vector<Quaternion> factor_terms;
    std::vector<Quaternion> roots;
    std::vector<IterationRecord> trace;
};

// Factor product above position i (0-based): (x - z_{n-1}) * ... * (x - z_{i+1}).
// Constant 1 for the last position.
HPoly left_cofactor(std::span<const Quaternion> z, std::size_t i);

// Factor product below position i: (x - z_{i-1}) * ... * (x - z_0). In the
// sequential sweep the prefix entries are the already-updated iterates.
// Constant 1 for the first position.
HPoly right_cofactor(std::span<const Quaternion> z, std::size_t i);

// Real polynomial vanishing on every other iterate's congruence class:
// the product of char_poly(z_j) over j != i. Equals the real projection of
// conj(L)*L*R*conj(R) for the cofactors above.
RealPoly char_poly_product(std::span<const Quaternion> z, std::size_t i);

struct SweepResult {
    std::vector<Quaternion> z;
    std::vector<Quaternion> zeta;
};

// One full sweep updating iterates in order, each correction using the
// already-updated predecessors:
//   z_i <- z_i - (conj(L_i) * p * conj(R_i))(z_i) * Q_i(z_i)^-1
// with the inverse multiplying on the right; left placement is wrong in H.
// Root approximations are recovered as h z_i h^-1, h = conj(R_i)(z_i).
// Throws ClassCollision when |Q_i(z_i)| falls below the relative threshold
// while the correction it divides into stays large; the degenerate-but-
// consistent limit of a conjugate pair passes through.
SweepResult step_sequential(const HPoly& p, std::span<const Quaternion> z,
                            const SolverConfig& cfg);

// Total-step variant: corrections for all i are computed from the current
// iterates only. Converges more slowly than the sequential sweep.
SweepResult step_parallel(const HPoly& p, std::span<const Quaternion> z,
                          const SolverConfig& cfg);

std::vector<double> residuals(const HPoly& p, std::span<const Quaternion> zeta);

// Local convergence orders log e_k / log e_{k-1} for an error sequence.
// Every input must lie strictly inside (0, 1).
std::vector<double> rho_estimate(std::span<const double> errors);

// Run the simultaneous iteration on p (monicized first) until both the max
// zeta increment and max residual fall under the thresholds, or kmax sweeps.
// Starting points come from the init strategy when z0 is absent. Iterates
// hitting a class collision are perturbed and the sweep retried, at most 10
// times per run.
SolveOutcome solve(const HPoly& p, const SolverConfig& cfg,
                   std::optional<std::vector<Quaternion>> z0 = std::nullopt);

}  // namespace quatroots
