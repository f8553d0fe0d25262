// cog - command-line front end for the cog library.
//
// Subcommands: verify, extract, synth, sample, grid, nearest, bench.
// Vector payloads travel as json {"n", "components"} or a bare csv row;
// phase payloads as json {"n", "theta"}. "-" means stdin. Logs and
// human-oriented extras go to stderr; stdout carries only the payload.
//
// Exit codes: 0 success (and "is a cog" for verify), 1 domain-negative
// (not a cog, phase constraint violation, ambiguous projection), 2 usage
// or parse error, 3 internal invariant breach.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cog/core.hpp"
#include "cog/extract.hpp"
#include "cog/io.hpp"
#include "cog/space.hpp"
#include "cog/synth.hpp"
#include "cog/verify.hpp"

namespace {

using cog::io::format_number;

// ---------------------------------------------------------------------------
// shared plumbing

double default_tol(double fallback) {
    const char* env = std::getenv("COG_DEFAULT_TOL");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !std::isfinite(value) || value <= 0.0 || value >= 1e-2) {
        throw std::invalid_argument(std::string("COG_DEFAULT_TOL must be a decimal in (0, 1e-2), got \"") +
                                    env + "\"");
    }
    return value;
}

cog::Tolerance resolve_tolerance(bool tol_given, double tol_flag, double fallback = 1e-9) {
    const double t = tol_given ? tol_flag : default_tol(fallback);
    return cog::Tolerance(t, t);
}

cog::io::FileFormat format_from_flag(const std::string& flag) {
    if (flag == "json") return cog::io::FileFormat::json;
    if (flag == "csv") return cog::io::FileFormat::csv;
    return cog::io::FileFormat::automatic;
}

cog::RealVector load_vector(const std::string& path, const std::string& format_flag) {
    const cog::io::FileFormat fmt = format_from_flag(format_flag);
    if (path == "-") {
        return cog::io::read_vector(std::cin, fmt);
    }
    return cog::io::read_vector_file(path, fmt);
}

std::vector<double> load_phases(const std::string& path) {
    if (path == "-") {
        return cog::io::read_phases(std::cin);
    }
    return cog::io::read_phases_file(path);
}

void emit_vector(const cog::RealVector& v, bool json) {
    if (json) {
        cog::io::write_vector_json(std::cout, v);
    } else {
        cog::io::write_vector_csv(std::cout, v);
    }
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const std::size_t b = tok.find_first_not_of(" \t");
        const std::size_t e = tok.find_last_not_of(" \t");
        tokens.push_back(b == std::string::npos ? std::string() : tok.substr(b, e - b + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return tokens;
}

cog::PhaseBranch parse_branch(const std::string& token) {
    if (token == "plus") return cog::PhaseBranch::plus;
    if (token == "minus") return cog::PhaseBranch::minus;
    throw std::invalid_argument("expected \"plus\" or \"minus\", got \"" + token + "\"");
}

double parse_angle(const std::string& token) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: \"" + token + "\"");
    }
    if (consumed != token.size() || !std::isfinite(value)) {
        throw std::invalid_argument("not a finite number: \"" + token + "\"");
    }
    return value;
}

// "--free s0,phi_1,...,phi_M[,sH]": theta_0 branch, the floor((N-1)/2) free
// angles, and for even N an optional trailing theta_{N/2} branch defaulting
// to the theta_0 branch.
cog::FreePhaseParams parse_free(const std::string& text, std::size_t dim) {
    const std::vector<std::string> tokens = split_tokens(text);
    const std::size_t angles = cog::manifold_dim(dim);
    const bool even = dim % 2 == 0;
    const std::size_t base = 1 + angles;
    if (tokens.size() != base && !(even && tokens.size() == base + 1)) {
        throw std::invalid_argument(
            "--free for --n " + std::to_string(dim) + " takes a theta_0 branch plus " +
            std::to_string(angles) + " angle(s)" +
            (even ? " plus an optional theta_{N/2} branch" : "") + "; got " +
            std::to_string(tokens.size()) + " token(s)");
    }
    cog::FreePhaseParams params;
    params.dim = dim;
    params.theta0_branch = parse_branch(tokens[0]);
    for (std::size_t i = 1; i <= angles; ++i) {
        params.free_angles.push_back(parse_angle(tokens[i]));
    }
    if (even) {
        params.half_branch =
            tokens.size() == base + 1 ? parse_branch(tokens[base]) : params.theta0_branch;
    }
    return params;
}

bool in_agreement_band(const cog::VerificationReport& r) {
    const double tol = r.tolerance_used.abs_tol;
    return r.max_deviation >= tol / 2.0 && r.max_deviation <= 2.0 * tol;
}

// ---------------------------------------------------------------------------
// verify

void print_residual_array(const std::vector<double>& xs) {
    std::cout << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) std::cout << ", ";
        std::cout << format_number(xs[i]);
    }
    std::cout << ']';
}

int run_verify(const std::string& input, const std::string& format, const std::string& method,
               const cog::Tolerance& tol, bool json) {
    const cog::RealVector v = load_vector(input, format);
    std::optional<cog::VerificationReport> direct;
    std::optional<cog::VerificationReport> spectral;
    if (method != "spectral") direct = cog::is_cog_direct(v, tol);
    if (method != "direct") spectral = cog::is_cog_spectral(v, tol);

    bool verdict = direct ? direct->is_cog : spectral->is_cog;
    if (direct && spectral && direct->is_cog != spectral->is_cog) {
        if (!in_agreement_band(*direct) && !in_agreement_band(*spectral)) {
            throw cog::InvariantViolation(
                "direct and spectral verification disagree outside the agreement band (direct " +
                format_number(direct->max_deviation) + ", spectral " +
                format_number(spectral->max_deviation) + ", tolerance " +
                format_number(tol.abs_tol) + ")");
        }
        std::cerr << "note: methods disagree inside the agreement band; the direct verdict is authoritative\n";
        verdict = direct->is_cog;
    }

    const double sum = direct ? direct->component_sum : spectral->component_sum;
    if (json) {
        std::cout << "{\"n\": " << v.dim() << ", \"is_cog\": " << (verdict ? "true" : "false")
                  << ", \"method\": \"" << method << "\", \"tolerance\": " << format_number(tol.abs_tol)
                  << ", \"component_sum\": " << format_number(sum);
        if (direct) {
            std::cout << ", \"direct\": {\"max_deviation\": " << format_number(direct->max_deviation)
                      << ", \"per_shift_residuals\": ";
            print_residual_array(direct->per_shift_residuals);
            std::cout << '}';
        }
        if (spectral) {
            std::cout << ", \"spectral\": {\"max_deviation\": " << format_number(spectral->max_deviation)
                      << ", \"per_bin_moduli\": ";
            print_residual_array(spectral->per_bin_moduli);
            std::cout << '}';
        }
        std::cout << "}\n";
    } else {
        std::cout << "n: " << v.dim() << '\n'
                  << "cog: " << (verdict ? "yes" : "no") << '\n'
                  << "tolerance: " << format_number(tol.abs_tol) << '\n'
                  << "component sum: " << format_number(sum) << '\n';
        if (direct)
            std::cout << "direct max deviation: " << format_number(direct->max_deviation) << '\n';
        if (spectral)
            std::cout << "spectral max deviation: " << format_number(spectral->max_deviation) << '\n';
    }
    return verdict ? 0 : 1;
}

// ---------------------------------------------------------------------------
// extract / synth

int run_extract(const std::string& input, const std::string& format, const cog::Tolerance& tol) {
    const cog::RealVector v = load_vector(input, format);
    const cog::ExtractionResult result = cog::canonical_form(v, tol);
    cog::io::write_phases_json(std::cout, result.representation.theta());
    return 0;
}

int run_synth(const std::string& input, bool free_given, const std::string& free_spec,
              std::size_t dim, const cog::Tolerance& tol, bool json) {
    cog::CogVector v = [&] {
        if (free_given) {
            return cog::synthesize(cog::complete_phases(parse_free(free_spec, dim)));
        }
        return cog::synthesize(cog::validate_phases(load_phases(input), tol.angle_tol));
    }();
    emit_vector(v.vector(), json);
    return 0;
}

// ---------------------------------------------------------------------------
// sample / grid

cog::BranchPolicy parse_policy(const std::string& name) {
    if (name == "fixed_plus") return cog::BranchPolicy::fixed_plus;
    if (name == "fixed_minus") return cog::BranchPolicy::fixed_minus;
    return cog::BranchPolicy::random;
}

int run_sample(std::size_t n, std::uint64_t seed, std::size_t count, const std::string& branch,
               bool json) {
    const cog::BranchPolicy policy = parse_policy(branch);
    std::vector<cog::RealVector> vectors;
    vectors.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        cog::SamplerConfig cfg;
        cfg.dim = n;
        cfg.seed = seed + k;
        cfg.theta0_policy = policy;
        cfg.half_policy = policy;
        vectors.push_back(cog::sample_cog(cfg).vector.vector());
    }
    if (json) {
        std::cout << "{\"n\": " << n << ", \"seed\": " << seed << ", \"count\": " << count
                  << ", \"vectors\": [";
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            if (k != 0) std::cout << ", ";
            std::cout << '[';
            for (std::size_t i = 0; i < vectors[k].dim(); ++i) {
                if (i != 0) std::cout << ", ";
                std::cout << format_number(vectors[k][i]);
            }
            std::cout << ']';
        }
        std::cout << "]}\n";
    } else {
        for (const auto& v : vectors) {
            cog::io::write_vector_csv(std::cout, v);
        }
    }
    return 0;
}

cog::BranchSet parse_branch_set(const std::string& name) {
    if (name == "plus") return cog::BranchSet::plus;
    if (name == "minus") return cog::BranchSet::minus;
    return cog::BranchSet::both;
}

int run_grid(std::size_t n, std::size_t points, const std::string& theta0, const std::string& half,
             std::size_t cap, bool json) {
    cog::GridConfig cfg;
    cfg.dim = n;
    cfg.points_per_angle = points;
    cfg.theta0 = parse_branch_set(theta0);
    cfg.half = parse_branch_set(half);
    cfg.cap = cap;
    cog::GridEnumerator grid(cfg);
    std::cerr << "grid points: " << grid.count() << '\n';
    if (json) {
        std::cout << "{\"n\": " << n << ", \"count\": " << grid.count() << ", \"vectors\": [";
        bool first = true;
        while (auto sample = grid.next()) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << '[';
            const auto& v = sample->vector.vector();
            for (std::size_t i = 0; i < v.dim(); ++i) {
                if (i != 0) std::cout << ", ";
                std::cout << format_number(v[i]);
            }
            std::cout << ']';
        }
        std::cout << "]}\n";
    } else {
        while (auto sample = grid.next()) {
            cog::io::write_vector_csv(std::cout, sample->vector.vector());
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// nearest

int run_nearest(const std::string& input, const std::string& format, const std::string& ties,
                const cog::Tolerance& tol, bool json) {
    const cog::RealVector v = load_vector(input, format);
    const cog::TiePolicy policy =
        ties == "unit-phase" ? cog::TiePolicy::unit_phase : cog::TiePolicy::error;
    const cog::CogVector nearest = cog::nearest_cog(v, policy, tol);
    double dist2 = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const double d = nearest.vector()[i] - v[i];
        dist2 += d * d;
    }
    const double distance = std::sqrt(dist2);
    if (json) {
        std::cout << "{\"n\": " << v.dim() << ", \"components\": [";
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (i != 0) std::cout << ", ";
            std::cout << format_number(nearest.vector()[i]);
        }
        std::cout << "], \"distance\": " << format_number(distance) << "}\n";
    } else {
        cog::io::write_vector_csv(std::cout, nearest.vector());
        std::cerr << "distance: " << format_number(distance) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
    std::size_t n = 0;
    double direct_ms = 0.0;
    double spectral_ms = 0.0;
    double agreement = 1.0;
};

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

// Booleans must match outside the agreement band; inside it a mismatch is
// near-threshold noise and only reported.
void check_agreement(const cog::VerificationReport& direct, const cog::VerificationReport& spectral,
                     std::size_t n, std::size_t& mismatches) {
    if (direct.is_cog == spectral.is_cog) return;
    if (in_agreement_band(direct) || in_agreement_band(spectral)) {
        ++mismatches;
        return;
    }
    throw cog::InvariantViolation(
        "bench: methods disagree outside the agreement band at n = " + std::to_string(n) +
        " (direct " + format_number(direct.max_deviation) + ", spectral " +
        format_number(spectral.max_deviation) + ")");
}

int run_bench(const std::vector<std::size_t>& n_list, std::size_t reps, const std::string& method,
              const cog::Tolerance& tol, bool json) {
    using clock = std::chrono::steady_clock;
    const bool run_direct = method != "spectral";
    const bool run_spectral = method != "direct";
    std::vector<BenchRow> rows;
    for (const std::size_t n : n_list) {
        cog::SamplerConfig cfg;
        cfg.dim = n;
        cfg.seed = 0xC06 + n;
        cfg.theta0_policy = cog::BranchPolicy::random;
        cfg.half_policy = cog::BranchPolicy::random;
        const cog::RealVector subject = cog::sample_cog(cfg).vector.vector();

        BenchRow row;
        row.n = n;
        std::size_t mismatches = 0;
        std::vector<double> direct_times, spectral_times;
        for (std::size_t rep = 0; rep < reps; ++rep) {  // sequential: parallel reps would contaminate timing
            std::optional<cog::VerificationReport> d, s;
            if (run_direct) {
                const auto t0 = clock::now();
                d = cog::is_cog_direct(subject, tol);
                direct_times.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
            }
            if (run_spectral) {
                const auto t0 = clock::now();
                s = cog::is_cog_spectral(subject, tol);
                spectral_times.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
            }
            if (d && s) check_agreement(*d, *s, n, mismatches);
        }
        if (run_direct && run_spectral) {
            // untimed negative trial: the same subject, visibly perturbed
            std::vector<double> bent = subject.components();
            bent[0] += 0.25;
            const cog::RealVector not_a_cog{std::move(bent)};
            check_agreement(cog::is_cog_direct(not_a_cog, tol), cog::is_cog_spectral(not_a_cog, tol),
                            n, mismatches);
            row.agreement = 1.0 - static_cast<double>(mismatches) / static_cast<double>(reps + 1);
        }
        if (run_direct) row.direct_ms = median(std::move(direct_times));
        if (run_spectral) row.spectral_ms = median(std::move(spectral_times));
        rows.push_back(row);
    }

    if (json) {
        std::cout << "{\"reps\": " << reps << ", \"method\": \"" << method << "\", \"results\": [";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != 0) std::cout << ", ";
            std::cout << "{\"n\": " << rows[i].n;
            if (run_direct) std::cout << ", \"direct_ms\": " << format_number(rows[i].direct_ms);
            if (run_spectral) std::cout << ", \"spectral_ms\": " << format_number(rows[i].spectral_ms);
            if (run_direct && run_spectral)
                std::cout << ", \"agreement\": " << format_number(rows[i].agreement);
            std::cout << '}';
        }
        std::cout << "]}\n";
    } else {
        std::cout << "n\tdirect_ms\tspectral_ms\tagreement\n";
        for (const auto& row : rows) {
            std::cout << row.n << '\t' << (run_direct ? format_number(row.direct_ms) : "-") << '\t'
                      << (run_spectral ? format_number(row.spectral_ms) : "-") << '\t'
                      << (run_direct && run_spectral ? format_number(row.agreement * 100.0) + "%" : "-")
                      << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic orthonormal generators: verify, synthesize, explore"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check whether a vector is a cog");
    std::string verify_input = "-";
    std::string verify_format = "auto";
    std::string verify_method = "both";
    double verify_tol = 0.0;
    bool verify_json = false;
    verify->add_option("input", verify_input, "vector file, or - for stdin");
    verify->add_option("--format", verify_format, "input format")->check(CLI::IsMember({"json", "csv", "auto"}));
    verify->add_option("--method", verify_method, "verification method")->check(CLI::IsMember({"direct", "spectral", "both"}));
    auto* verify_tol_opt = verify->add_option("--tol", verify_tol, "absolute tolerance");
    verify->add_flag("--json", verify_json, "machine-readable report");

    // extract
    auto* extract = app.add_subcommand("extract", "recover the canonical phases of a cog");
    std::string extract_input = "-";
    std::string extract_format = "auto";
    double extract_tol = 0.0;
    bool extract_json = false;
    extract->add_option("input", extract_input, "vector file, or - for stdin");
    extract->add_option("--format", extract_format, "input format")->check(CLI::IsMember({"json", "csv", "auto"}));
    auto* extract_tol_opt = extract->add_option("--tol", extract_tol, "absolute tolerance");
    extract->add_flag("--json", extract_json, "machine-readable output (the default output is already json)");

    // synth
    auto* synth = app.add_subcommand("synth", "synthesize a cog from phases");
    std::string synth_input = "-";
    std::string synth_free;
    std::size_t synth_n = 2;
    double synth_tol = 0.0;
    bool synth_json = false;
    auto* synth_input_opt = synth->add_option("input", synth_input, "phase file, or - for stdin");
    auto* synth_free_opt =
        synth->add_option("--free", synth_free, "free parameters \"s0,phi1,...[,sH]\" instead of a phase file");
    auto* synth_n_opt = synth->add_option("--n", synth_n, "dimension (with --free)")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    auto* synth_tol_opt = synth->add_option("--tol", synth_tol, "phase constraint tolerance (radians)");
    synth->add_flag("--json", synth_json, "emit the vector as json");
    synth_free_opt->needs(synth_n_opt);
    synth_free_opt->excludes(synth_input_opt);

    // sample
    auto* sample = app.add_subcommand("sample", "draw seeded random cogs");
    std::size_t sample_n = 2;
    std::uint64_t sample_seed = 0;
    std::size_t sample_count = 1;
    std::string sample_branch = "random";
    bool sample_json = false;
    sample->add_option("--n", sample_n, "dimension")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    sample->add_option("--seed", sample_seed, "rng seed");
    sample->add_option("--count", sample_count, "number of vectors")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    sample->add_option("--branch", sample_branch, "branch policy for theta_0 and theta_{N/2}")
        ->check(CLI::IsMember({"fixed_plus", "fixed_minus", "random"}));
    sample->add_flag("--json", sample_json, "emit a json array");

    // grid
    auto* grid = app.add_subcommand("grid", "enumerate a lattice on the cog parameter space");
    std::size_t grid_n = 2;
    std::size_t grid_points = 1;
    std::string grid_theta0 = "both";
    std::string grid_half = "both";
    std::size_t grid_cap = 1'000'000;
    bool grid_json = false;
    grid->add_option("--n", grid_n, "dimension")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    grid->add_option("--points", grid_points, "lattice points per free angle")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
    grid->add_option("--theta0", grid_theta0, "theta_0 branch set")->check(CLI::IsMember({"plus", "minus", "both"}));
    grid->add_option("--half", grid_half, "theta_{N/2} branch set (even n)")->check(CLI::IsMember({"plus", "minus", "both"}));
    grid->add_option("--cap", grid_cap, "refuse grids larger than this");
    grid->add_flag("--json", grid_json, "emit a json array");

    // nearest
    auto* nearest = app.add_subcommand("nearest", "project a vector onto the cog set");
    std::string nearest_input = "-";
    std::string nearest_format = "auto";
    std::string nearest_ties = "error";
    double nearest_tol = 0.0;
    bool nearest_json = false;
    nearest->add_option("input", nearest_input, "vector file, or - for stdin");
    nearest->add_option("--format", nearest_format, "input format")->check(CLI::IsMember({"json", "csv", "auto"}));
    nearest->add_option("--ties", nearest_ties, "near-zero spectral bin policy")->check(CLI::IsMember({"error", "unit-phase"}));
    auto* nearest_tol_opt = nearest->add_option("--tol", nearest_tol, "verification tolerance for the result");
    nearest->add_flag("--json", nearest_json, "emit json with the distance");

    // bench
    auto* bench = app.add_subcommand("bench", "time the two verification methods");
    std::string bench_n_list = "64,256,1024";
    std::size_t bench_reps = 25;
    std::string bench_method = "both";
    double bench_tol = 0.0;
    bool bench_json = false;
    bench->add_option("--n-list", bench_n_list, "comma-separated dimensions");
    bench->add_option("--reps", bench_reps, "repetitions per dimension")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    bench->add_option("--method", bench_method, "methods to time")->check(CLI::IsMember({"direct", "spectral", "both"}));
    auto* bench_tol_opt = bench->add_option("--tol", bench_tol, "absolute tolerance");
    bench->add_flag("--json", bench_json, "machine-readable results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            return run_verify(verify_input, verify_format, verify_method,
                              resolve_tolerance(verify_tol_opt->count() > 0, verify_tol), verify_json);
        }
        if (app.got_subcommand(extract)) {
            (void)extract_json;
            return run_extract(extract_input, extract_format,
                               resolve_tolerance(extract_tol_opt->count() > 0, extract_tol));
        }
        if (app.got_subcommand(synth)) {
            // phase files carry rounded decimals; the default matches validate_phases
            return run_synth(synth_input, synth_free_opt->count() > 0, synth_free, synth_n,
                             resolve_tolerance(synth_tol_opt->count() > 0, synth_tol, 1e-5), synth_json);
        }
        if (app.got_subcommand(sample)) {
            return run_sample(sample_n, sample_seed, sample_count, sample_branch, sample_json);
        }
        if (app.got_subcommand(grid)) {
            return run_grid(grid_n, grid_points, grid_theta0, grid_half, grid_cap, grid_json);
        }
        if (app.got_subcommand(nearest)) {
            return run_nearest(nearest_input, nearest_format, nearest_ties,
                               resolve_tolerance(nearest_tol_opt->count() > 0, nearest_tol), nearest_json);
        }
        if (app.got_subcommand(bench)) {
            std::vector<std::size_t> n_list;
            for (const std::string& tok : split_tokens(bench_n_list)) {
                std::size_t consumed = 0;
                unsigned long long n = 0;
                try {
                    n = std::stoull(tok, &consumed);
                } catch (const std::exception&) {
                    throw std::invalid_argument("--n-list: not an integer: \"" + tok + "\"");
                }
                if (consumed != tok.size() || n < 2) {
                    throw std::invalid_argument("--n-list entries must be integers >= 2, got \"" + tok + "\"");
                }
                n_list.push_back(static_cast<std::size_t>(n));
            }
            return run_bench(n_list, bench_reps, bench_method,
                             resolve_tolerance(bench_tol_opt->count() > 0, bench_tol), bench_json);
        }
    } catch (const cog::io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cog::NotACogError& e) {
        std::cerr << "error: " << e.what() << '\n';
        const auto& r = e.report();
        std::cerr << "max deviation: " << format_number(r.max_deviation)
                  << " (tolerance " << format_number(r.tolerance_used.abs_tol) << ")\n"
                  << "component sum: " << format_number(r.component_sum) << '\n';
        return 1;
    } catch (const cog::PhaseConstraintError& e) {
        std::cerr << "error: phase constraint violated: " << e.what() << '\n';
        return 1;
    } catch (const cog::AmbiguousProjectionError& e) {
        std::cerr << "error: " << e.what() << '\n'
                  << "hint: rerun with --ties unit-phase to pin ambiguous bins\n";
        return 1;
    } catch (const cog::GridTooLargeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
