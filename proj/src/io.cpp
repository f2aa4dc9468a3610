#include "quatroots/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace quatroots {

namespace {

using nlohmann::json;

Quaternion parse_quad(const json& e, const std::string& where) {
    if (!e.is_array() || e.size() != 4)
        throw ParseError(where + " must be an array of 4 numbers [w,x,y,z]");
    double c[4];
    for (std::size_t m = 0; m < 4; ++m) {
        if (!e[m].is_number()) throw ParseError(where + " must contain numbers only");
        c[m] = e[m].get<double>();
        if (!std::isfinite(c[m])) throw ParseError(where + " must contain finite numbers");
    }
    return {c[0], c[1], c[2], c[3]};
}

std::vector<Quaternion> parse_quad_array(const json& arr, const std::string& where) {
    std::vector<Quaternion> out;
    out.reserve(arr.size());
    for (std::size_t idx = 0; idx < arr.size(); ++idx)
        out.push_back(parse_quad(arr[idx], where + "[" + std::to_string(idx) + "]"));
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

PolynomialSpec parse_input(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("top-level value must be an object");
    if (!j.contains("form") || !j["form"].is_string())
        throw ParseError("\"form\" must be \"coefficients\" or \"factors\"");
    const std::string form = j["form"].get<std::string>();

    PolynomialSpec spec;
    if (form == "coefficients")
        spec.form = SpecForm::coefficients;
    else if (form == "factors")
        spec.form = SpecForm::factors;
    else
        throw ParseError("\"form\" must be \"coefficients\" or \"factors\"");

    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty())
        throw ParseError("\"entries\" must be a non-empty array");
    spec.entries = parse_quad_array(j["entries"], "entries");

    if (spec.form == SpecForm::coefficients) {
        if (spec.entries.back() == Quaternion{})
            throw ParseError("leading coefficient (last entry) must be nonzero");
        if (spec.entries.size() < 2)
            throw DegreeZero("constant polynomial: need degree >= 1");
    }
    return spec;
}

PolynomialSpec load_input(const std::string& path) {
    try {
        return parse_input(read_file(path));
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string quad_json(const Quaternion& q) {
    return "[" + fmt17(q.w) + "," + fmt17(q.x) + "," + fmt17(q.y) + "," + fmt17(q.z) + "]";
}

std::string key_json(const ClassKey& k) {
    return "[" + fmt17(k.re) + "," + fmt17(k.norm) + "]";
}

}  // namespace

std::string serialize(const PolynomialSpec& spec) {
    std::string out = "{\n  \"form\": \"";
    out += spec.form == SpecForm::coefficients ? "coefficients" : "factors";
    out += "\",\n  \"entries\": [\n";
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        out += "    " + quad_json(spec.entries[i]);
        if (i + 1 < spec.entries.size()) out += ",";
        out += "\n";
    }
    out += "  ]\n}\n";
    return out;
}

HPoly to_poly(const PolynomialSpec& spec) {
    if (spec.form == SpecForm::factors) return from_factors(spec.entries);
    HPoly p{std::vector<Quaternion>(spec.entries.begin(), spec.entries.end())};
    if (p.degree() < 1) throw DegreeZero("constant polynomial: need degree >= 1");
    return p;
}

std::vector<Quaternion> parse_quaternion_list(const std::string& text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("entries")) j = j["entries"];
    if (!j.is_array()) throw ParseError("expected an array of [w,x,y,z] quadruples");
    return parse_quad_array(j, "entries");
}

std::vector<Quaternion> load_quaternion_list(const std::string& path) {
    try {
        return parse_quaternion_list(read_file(path));
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

// Greedy closest-pair assignment between computed values and known targets.
// Deterministic: ties break on the pair indices.
template <typename Dist>
std::vector<std::size_t> greedy_match(std::size_t n, Dist dist) {
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    pairs.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(dist(i, j), i, j);
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::size_t> match(n, n);
    std::vector<bool> used(n, false);
    std::size_t assigned = 0;
    for (const auto& [d, i, j] : pairs) {
        if (match[i] != n || used[j]) continue;
        match[i] = j;
        used[j] = true;
        if (++assigned == n) break;
    }
    return match;
}

void append_rho(std::vector<ErrorRow>& rows) {
    for (std::size_t r = 1; r < rows.size(); ++r) {
        double prev = 0.0;
        double cur = 0.0;
        for (double e : rows[r - 1].eps) prev = std::max(prev, e);
        for (double e : rows[r].eps) cur = std::max(cur, e);
        if (prev > 0.0 && prev < 1.0 && cur > 0.0 && cur < 1.0)
            rows[r].rho = std::log(cur) / std::log(prev);
    }
}

}  // namespace

ErrorTable table_mode(const SolveOutcome& outcome, const std::vector<Quaternion>& known) {
    ErrorTable table;
    for (std::size_t i = 1; i <= known.size(); ++i) table.columns.push_back("eps_" + std::to_string(i));
    for (const IterationRecord& rec : outcome.trace) {
        if (rec.zeta.size() != known.size())
            throw CountMismatch("table_mode: known roots must match the root count");
        const auto match = greedy_match(known.size(), [&](std::size_t i, std::size_t j) {
            return norm(rec.zeta[i] - known[j]);
        });
        ErrorRow row;
        row.k = rec.k;
        for (std::size_t i = 0; i < known.size(); ++i)
            row.eps.push_back(norm(rec.zeta[i] - known[match[i]]));
        table.rows.push_back(std::move(row));
    }
    append_rho(table.rows);
    return table;
}

ErrorTable table_mode_class_keys(const SolveOutcome& outcome,
                                 const std::vector<Quaternion>& known) {
    ErrorTable table;
    table.columns = {"eps_re", "eps_norm"};
    for (const IterationRecord& rec : outcome.trace) {
        if (rec.zeta.size() != known.size())
            throw CountMismatch("table_mode: known roots must match the root count");
        const auto match = greedy_match(known.size(), [&](std::size_t i, std::size_t j) {
            return class_gap(rec.zeta[i], known[j]);
        });
        double eps_re = 0.0;
        double eps_norm = 0.0;
        for (std::size_t i = 0; i < known.size(); ++i) {
            eps_re = std::max(eps_re, std::abs(re(rec.zeta[i]) - re(known[match[i]])));
            eps_norm = std::max(eps_norm, std::abs(norm(rec.zeta[i]) - norm(known[match[i]])));
        }
        table.rows.push_back({rec.k, {eps_re, eps_norm}, std::nullopt});
    }
    append_rho(table.rows);
    return table;
}

RunReport run(const PolynomialSpec& spec, const SolverConfig& cfg, const RunOptions& opts) {
    RunReport report;
    report.input = spec;
    report.config = cfg;

    const HPoly p = monicize(to_poly(spec));

    const auto t0 = std::chrono::steady_clock::now();
    report.outcome = solve(p, cfg, opts.start);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (report.outcome.converged) {
        // Multiple zeros converge linearly and coincide only to roughly their
        // own error size, so the grouping tolerance follows the terminal
        // increment when that is the coarser quantity.
        double tol = opts.classify_tol;
        const double mi = report.outcome.trace.back().max_increment;
        if (std::isfinite(mi)) tol = std::max(tol, std::min(10.0 * mi, 1e-3));
        report.roots = group_spheres(report.outcome.roots, p, tol);
        report.classified = true;
        for (const ClassifiedRoot& cr : report.roots) {
            if (cr.kind.tag != ZeroTag::spherical) continue;
            auto it = std::find_if(report.spheres.begin(), report.spheres.end(),
                                   [&](const SphereSummary& s) { return s.key == *cr.kind.sphere; });
            if (it == report.spheres.end())
                report.spheres.push_back({*cr.kind.sphere, 1});
            else
                ++it->count;
        }
    } else {
        for (std::size_t i = 0; i < report.outcome.roots.size(); ++i) {
            const Quaternion& q = report.outcome.roots[i];
            report.roots.push_back({q, ZeroKind{}, norm(eval(p, q))});
        }
    }

    if (opts.known_roots) {
        report.errors = opts.class_key_errors
                            ? table_mode_class_keys(report.outcome, *opts.known_roots)
                            : table_mode(report.outcome, *opts.known_roots);
        if (!opts.class_key_errors) {
            for (std::size_t r = 0; r < report.errors->rows.size(); ++r) {
                report.outcome.trace[r].per_root_error = report.errors->rows[r].eps;
                report.outcome.trace[r].rho = report.errors->rows[r].rho;
            }
        }
    }
    return report;
}

namespace {

const char* kind_name(ZeroTag tag) {
    switch (tag) {
        case ZeroTag::isolated: return "isolated";
        case ZeroTag::spherical: return "spherical";
        case ZeroTag::multiple_isolated: return "multiple_isolated";
    }
    return "unclassified";
}

}  // namespace

std::string report_json(const RunReport& report) {
    std::string out = "{\n";
    out += "  \"input\": {\n    \"form\": \"";
    out += report.input.form == SpecForm::coefficients ? "coefficients" : "factors";
    out += "\",\n    \"entries\": [";
    for (std::size_t i = 0; i < report.input.entries.size(); ++i) {
        if (i) out += ",";
        out += quad_json(report.input.entries[i]);
    }
    out += "]\n  },\n";

    const SolverConfig& c = report.config;
    out += "  \"config\": {\n";
    out += std::string("    \"mode\": \"") +
           (c.mode == SweepMode::sequential ? "sequential" : "parallel") + "\",\n";
    out += "    \"eps_increment\": " + fmt17(c.eps_increment) + ",\n";
    out += "    \"eps_residual\": " + fmt17(c.eps_residual) + ",\n";
    out += "    \"kmax\": " + std::to_string(c.kmax) + ",\n";
    out += "    \"class_collision_tol\": " + fmt17(c.class_collision_tol) + ",\n";
    out += "    \"perturb_scale\": " + fmt17(c.perturb_scale) + ",\n";
    out += "    \"rng_seed\": " + std::to_string(c.rng_seed) + ",\n";
    out += std::string("    \"residual_only\": ") + (c.residual_only ? "true" : "false") + "\n";
    out += "  },\n";

    out += std::string("  \"converged\": ") + (report.outcome.converged ? "true" : "false") + ",\n";
    out += "  \"iterations\": " + std::to_string(report.outcome.iterations) + ",\n";

    out += "  \"factor_terms\": [";
    for (std::size_t i = 0; i < report.outcome.factor_terms.size(); ++i) {
        if (i) out += ",";
        out += quad_json(report.outcome.factor_terms[i]);
    }
    out += "],\n";

    out += "  \"roots\": [\n";
    for (std::size_t i = 0; i < report.roots.size(); ++i) {
        const ClassifiedRoot& cr = report.roots[i];
        out += "    {\n";
        out += "      \"value\": " + quad_json(cr.value) + ",\n";
        out += "      \"class_key\": " + key_json(class_key(cr.value)) + ",\n";
        out += "      \"residual\": " + fmt17(cr.residual) + ",\n";
        if (report.classified) {
            out += std::string("      \"kind\": \"") + kind_name(cr.kind.tag) + "\",\n";
            if (cr.kind.sphere) out += "      \"sphere\": " + key_json(*cr.kind.sphere) + ",\n";
            out += "      \"multiplicity\": " + std::to_string(cr.kind.multiplicity) + "\n";
        } else {
            out += "      \"kind\": \"unclassified\"\n";
        }
        out += i + 1 < report.roots.size() ? "    },\n" : "    }\n";
    }
    out += "  ],\n";

    out += "  \"spheres\": [";
    for (std::size_t i = 0; i < report.spheres.size(); ++i) {
        if (i) out += ",";
        out += "{\"key\": " + key_json(report.spheres[i].key) +
               ", \"count\": " + std::to_string(report.spheres[i].count) + "}";
    }
    out += "]\n}\n";
    return out;
}

std::string trace_csv(const SolveOutcome& outcome) {
    std::string out = "k,i,z_w,z_x,z_y,z_z,zeta_w,zeta_x,zeta_y,zeta_z,residual,increment\n";
    auto cell = [](double v) { return std::isfinite(v) ? fmt17(v) : std::string{}; };
    for (const IterationRecord& rec : outcome.trace) {
        for (std::size_t i = 0; i < rec.z.size(); ++i) {
            out += std::to_string(rec.k) + "," + std::to_string(i + 1);
            const Quaternion& z = rec.z[i];
            const Quaternion& zeta = rec.zeta[i];
            for (double v : {z.w, z.x, z.y, z.z, zeta.w, zeta.x, zeta.y, zeta.z})
                out += "," + fmt17(v);
            out += "," + cell(rec.residuals[i]) + "," + cell(rec.increments[i]) + "\n";
        }
    }
    out += "k,max_increment,max_residual,rho\n";
    for (const IterationRecord& rec : outcome.trace) {
        out += std::to_string(rec.k) + "," + cell(rec.max_increment) + "," +
               cell(rec.max_residual) + ",";
        if (rec.rho) out += fmt17(*rec.rho);
        out += "\n";
    }
    return out;
}

void emit_trace(const SolveOutcome& outcome, const std::string& path) {
    write_file(path, trace_csv(outcome));
}

std::string error_table_csv(const ErrorTable& table) {
    std::string out = "k";
    for (const std::string& c : table.columns) out += "," + c;
    out += ",rho\n";
    for (const ErrorRow& row : table.rows) {
        out += std::to_string(row.k);
        for (double e : row.eps) out += "," + (std::isfinite(e) ? fmt17(e) : std::string{});
        out += ",";
        if (row.rho) out += fmt17(*row.rho);
        out += "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    out << content;
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace quatroots
