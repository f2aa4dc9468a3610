#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatroots/classify.hpp"
#include "quatroots/weierstrass.hpp"

namespace quatroots {

enum class SpecForm { coefficients, factors };

// Parsed input document. Coefficient entries are ascending; factor entries
// list the factor terms with the first entry being the rightmost factor.
struct PolynomialSpec {
    SpecForm form = SpecForm::coefficients;
    std::vector<Quaternion> entries;

    friend bool operator==(const PolynomialSpec&, const PolynomialSpec&) = default;
};

// Parse {"form": "coefficients"|"factors", "entries": [[w,x,y,z], ...]}.
// Rejects constant polynomials (DegreeZero) and coefficient lists with a
// zero leading entry (ParseError); all components must be finite numbers.
PolynomialSpec parse_input(const std::string& text);
PolynomialSpec load_input(const std::string& path);

// Inverse of parse_input up to float formatting; 17 significant digits make
// the round trip exact.
std::string serialize(const PolynomialSpec& spec);

// Expand a factor-form spec (or wrap a coefficient-form one) into a polynomial.
HPoly to_poly(const PolynomialSpec& spec);

// Bare JSON array of [w,x,y,z] quadruples, or an object carrying one under
// "entries". Used for --start and --known-roots files.
std::vector<Quaternion> parse_quaternion_list(const std::string& text);
std::vector<Quaternion> load_quaternion_list(const std::string& path);

// Per-iteration error table against user-provided roots.
struct ErrorRow {
    int k = 0;
    std::vector<double> eps;
    std::optional<double> rho;
};
struct ErrorTable {
    std::vector<std::string> columns;  // excludes leading "k" and trailing "rho"
    std::vector<ErrorRow> rows;
};

// Distances of each iteration's root approximations to the known roots,
// matched greedily by distance; appends the convergence-order estimate.
// Exact for well-separated roots. Throws CountMismatch on a size mismatch.
ErrorTable table_mode(const SolveOutcome& outcome, const std::vector<Quaternion>& known);

// Class-key variant: per iteration the max real-part error and max norm
// error against the known roots' class keys, matched greedily in key space.
// This is the right lens for spherical zeros, where the points themselves
// are not determined but their class keys are.
ErrorTable table_mode_class_keys(const SolveOutcome& outcome,
                                 const std::vector<Quaternion>& known);

struct SphereSummary {
    ClassKey key;
    int count = 0;
};

struct RunOptions {
    std::optional<std::vector<Quaternion>> start;
    std::optional<std::vector<Quaternion>> known_roots;
    bool class_key_errors = false;
    double classify_tol = 1e-8;
};

struct RunReport {
    PolynomialSpec input;
    SolverConfig config;
    SolveOutcome outcome;
    // Classification is attempted only on converged runs; unconverged roots
    // are reported unclassified.
    bool classified = false;
    std::vector<ClassifiedRoot> roots;
    std::vector<SphereSummary> spheres;
    std::optional<ErrorTable> errors;
    // Wall-clock time; reported on the console and deliberately kept out of
    // the serialized report so identical runs produce identical bytes.
    double elapsed_ms = 0.0;
};

RunReport run(const PolynomialSpec& spec, const SolverConfig& cfg, const RunOptions& opts = {});

// 17 significant digits; enough to reproduce any double exactly.
std::string fmt17(double v);

std::string report_json(const RunReport& report);

// Detail rows k,i,z_w,z_x,z_y,z_z,zeta_w,zeta_x,zeta_y,zeta_z,residual,increment
// for every iteration and root, then summary rows k,max_increment,max_residual,rho.
// Unavailable values (rho, increments at k = 0) are left empty.
std::string trace_csv(const SolveOutcome& outcome);
void emit_trace(const SolveOutcome& outcome, const std::string& path);

std::string error_table_csv(const ErrorTable& table);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace quatroots
