#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quatroots/io.hpp"

namespace {

using namespace quatroots;

double parse_double(const std::string& s, const std::string& where) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty() || !std::isfinite(v))
        throw ParseError(where + ": expected a finite number, got \"" + s + "\"");
    return v;
}

Quaternion parse_quad_text(const std::string& s, const std::string& where) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw ParseError(where + ": expected \"w,x,y,z\"");
    return {parse_double(parts[0], where), parse_double(parts[1], where),
            parse_double(parts[2], where), parse_double(parts[3], where)};
}

// Inline coefficient list "w,x,y,z;w,x,y,z;..." (ascending powers).
PolynomialSpec parse_inline_coeffs(const std::string& s) {
    PolynomialSpec spec;
    spec.form = SpecForm::coefficients;
    std::string cur;
    std::vector<std::string> groups;
    for (char ch : s) {
        if (ch == ';') {
            groups.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    groups.push_back(cur);
    for (std::size_t i = 0; i < groups.size(); ++i)
        spec.entries.push_back(parse_quad_text(groups[i], "--coeffs[" + std::to_string(i) + "]"));
    if (spec.entries.back() == Quaternion{})
        throw ParseError("--coeffs: leading coefficient (last entry) must be nonzero");
    if (spec.entries.size() < 2) throw DegreeZero("--coeffs: constant polynomial");
    return spec;
}

PolynomialSpec input_spec(const std::string& input, const std::string& coeffs) {
    if (input.empty() == coeffs.empty())
        throw ParseError("provide exactly one of --input and --coeffs");
    return input.empty() ? parse_inline_coeffs(coeffs) : load_input(input);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("QUATROOTS_SEED");
    if (!env) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*env == '\0' || *end != '\0')
        throw ParseError(std::string("QUATROOTS_SEED: expected an unsigned integer, got \"") +
                         env + "\"");
    return v;
}

int run_solve(const PolynomialSpec& spec, const SolverConfig& cfg, const RunOptions& opts,
              const std::string& trace_path, const std::string& output_path) {
    const RunReport report = run(spec, cfg, opts);

    if (!trace_path.empty()) emit_trace(report.outcome, trace_path);

    const std::string json = report_json(report);
    if (output_path.empty())
        std::cout << json;
    else
        write_file(output_path, json);

    if (report.errors) std::cout << error_table_csv(*report.errors);

    if (report.outcome.converged)
        std::cerr << "converged in " << report.outcome.iterations << " iterations ("
                  << report.elapsed_ms << " ms)\n";
    else
        std::cerr << "no convergence within kmax=" << cfg.kmax << " (" << report.elapsed_ms
                  << " ms)\n";
    return report.outcome.converged ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simultaneous zeros of left polynomials over the quaternions"};
    app.require_subcommand(1);

    std::string input, coeffs, start_path, trace_path, known_path, output_path, at_text;
    std::string mode = "sequential";
    double eps1 = 1e-12;
    double eps2 = 1e-12;
    int kmax = 100;
    std::uint64_t seed = 1;
    bool class_key_errors = false;

    CLI::App* solve_cmd = app.add_subcommand("solve", "find all zeros simultaneously");
    solve_cmd->add_option("--input", input, "input polynomial JSON file");
    solve_cmd->add_option("--coeffs", coeffs, "inline coefficients w,x,y,z;... (ascending)");
    solve_cmd->add_option("--mode", mode, "sweep order")
        ->check(CLI::IsMember({"sequential", "parallel"}));
    solve_cmd->add_option("--eps1", eps1, "increment threshold");
    solve_cmd->add_option("--eps2", eps2, "residual threshold");
    solve_cmd->add_option("--kmax", kmax, "max iterations");
    solve_cmd->add_option("--seed", seed, "RNG seed (QUATROOTS_SEED overrides default)");
    solve_cmd->add_option("--start", start_path, "JSON file with starting points");
    solve_cmd->add_option("--trace", trace_path, "write per-iteration CSV trace here");
    solve_cmd->add_option("--known-roots", known_path, "JSON file with reference roots");
    solve_cmd->add_flag("--class-key-errors", class_key_errors,
                        "error table over class keys instead of values");
    solve_cmd->add_option("--output", output_path, "write the JSON report here");

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate the polynomial at a point");
    eval_cmd->add_option("--input", input, "input polynomial JSON file");
    eval_cmd->add_option("--coeffs", coeffs, "inline coefficients w,x,y,z;... (ascending)");
    eval_cmd->add_option("--at", at_text, "evaluation point w,x,y,z")->required();

    CLI::App* expand_cmd = app.add_subcommand("expand", "expand factor form to coefficients");
    expand_cmd->add_option("--input", input, "input polynomial JSON file (factor form)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            SolverConfig cfg;
            cfg.mode = mode == "parallel" ? SweepMode::parallel : SweepMode::sequential;
            cfg.eps_increment = eps1;
            cfg.eps_residual = eps2;
            cfg.kmax = kmax;
            cfg.rng_seed = solve_cmd->count("--seed") ? seed : seed_from_env(seed);

            RunOptions opts;
            if (!start_path.empty()) opts.start = load_quaternion_list(start_path);
            if (!known_path.empty()) opts.known_roots = load_quaternion_list(known_path);
            opts.class_key_errors = class_key_errors;

            return run_solve(input_spec(input, coeffs), cfg, opts, trace_path, output_path);
        }
        if (eval_cmd->parsed()) {
            const HPoly p = to_poly(input_spec(input, coeffs));
            const Quaternion v = eval(p, parse_quad_text(at_text, "--at"));
            std::cout << "[" << fmt17(v.w) << "," << fmt17(v.x) << "," << fmt17(v.y) << ","
                      << fmt17(v.z) << "]\n";
            return 0;
        }
        if (expand_cmd->parsed()) {
            if (input.empty()) throw ParseError("expand: --input required");
            const PolynomialSpec spec = load_input(input);
            if (spec.form != SpecForm::factors)
                throw ParseError("expand: input must be in factor form");
            const HPoly p = to_poly(spec);
            PolynomialSpec out;
            out.form = SpecForm::coefficients;
            out.entries.assign(p.coeffs().begin(), p.coeffs().end());
            std::cout << serialize(out);
            return 0;
        }
    } catch (const TooManyCollisions& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CountMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
