// Command-line front end: builds, verifies and analyses highest-weight
// representations of sl(2) and its q- and pq-deformations.
//
// Exit codes: 0 success, 1 usage error, 2 degenerate or ill-conditioned
// parameters, 3 verification residual above tolerance / declared root
// missing / locus solve failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "qdeform/serialize.hpp"

namespace {

using namespace qdeform;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitCheckFailed = 3;

double default_tolerance() {
    if (const char* env = std::getenv("QDEFORM_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) return v;
        throw std::invalid_argument("QDEFORM_TOL must be a positive number");
    }
    return 1e-10;
}

void write_output(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << payload;
}

struct CommonOptions {
    std::string variant = "classical";
    std::string j_text = "0";
    std::string p_text = "1";
    std::string q_text = "1";
    std::string output_path;
    std::string format;  // per-subcommand default: csv for scan, json otherwise
    double tol = 1e-10;
};

void require_format(const std::string& requested, const std::string& supported) {
    if (!requested.empty() && requested != supported) {
        throw std::invalid_argument("this subcommand emits " + supported + " only");
    }
}

Params parse_params(const CommonOptions& opts) {
    return Params{parse_complex(opts.q_text), parse_complex(opts.p_text)};
}

RhsConvention convention_for(const RepMatrices& rep, const std::string& v1_orientation,
                             const std::string& v2_bracket) {
    RhsConvention conv;
    const bool need_v1 =
        rep.variant == DeformationVariant::TwoParamV1 && v1_orientation == "auto";
    const bool need_v2 =
        rep.variant == DeformationVariant::TwoParamV2 && v2_bracket == "auto";
    if (need_v1 || need_v2) {
        conv = resolve_convention(rep.j, rep.params, rep.truncation_depth);
    }
    if (v1_orientation != "auto") {
        conv.v1_exponent_orientation = v1_orientation_from_string(v1_orientation);
    }
    if (v2_bracket != "auto") {
        conv.v2_bracket_argument = v2_bracket_arg_from_string(v2_bracket);
    }
    return conv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Highest-weight representations of sl(2) and its q/pq deformations"};
    app.require_subcommand(1);

    CommonOptions opts;
    try {
        opts.tol = default_tolerance();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    // bracket
    auto* bracket_cmd = app.add_subcommand("bracket", "Evaluate a deformed number");
    std::string x_text = "1";
    bracket_cmd->add_option("--variant", opts.variant, "classical|q|v1|v2");
    bracket_cmd->add_option("--x", x_text, "argument X, complex 'a+bi'");
    bracket_cmd->add_option("--p", opts.p_text, "parameter p");
    bracket_cmd->add_option("--q", opts.q_text, "parameter q");
    bracket_cmd->add_option("--format", opts.format, "output format (json)");
    bracket_cmd->add_option("--output", opts.output_path, "output file (default stdout)");

    // build
    auto* build_cmd = app.add_subcommand("build", "Build truncated ladder matrices");
    int trunc_n = 64;
    build_cmd->add_option("--variant", opts.variant, "classical|q|v1|v2");
    build_cmd->add_option("--j", opts.j_text, "highest weight, e.g. 3/2 or 1.5");
    build_cmd->add_option("--p", opts.p_text, "parameter p");
    build_cmd->add_option("--q", opts.q_text, "parameter q");
    build_cmd->add_option("--N", trunc_n, "truncation depth (default 64)");
    build_cmd->add_option("--format", opts.format, "output format (json)");
    build_cmd->add_option("--output", opts.output_path, "output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check the defining relations");
    std::string v1_orientation = "auto";
    std::string v2_bracket = "auto";
    verify_cmd->add_option("--variant", opts.variant, "classical|q|v1|v2");
    verify_cmd->add_option("--j", opts.j_text, "highest weight");
    verify_cmd->add_option("--p", opts.p_text, "parameter p");
    verify_cmd->add_option("--q", opts.q_text, "parameter q");
    verify_cmd->add_option("--N", trunc_n, "truncation depth (default 64)");
    verify_cmd->add_option("--v1-orientation", v1_orientation, "auto|p_over_q|q_over_p");
    verify_cmd->add_option("--v2-bracket", v2_bracket, "auto|h|two_h");
    verify_cmd->add_option("--tol", opts.tol, "pass/fail residual tolerance");
    verify_cmd->add_option("--format", opts.format, "output format (json)");
    verify_cmd->add_option("--output", opts.output_path, "output file (default stdout)");

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "Scan the truncation function for integer roots");
    int n_max = 200;
    std::string roots_variant = "v2";
    roots_cmd->add_option("--variant", roots_variant, "must be v2");
    roots_cmd->add_option("--j", opts.j_text, "highest weight");
    roots_cmd->add_option("--p", opts.p_text, "parameter p");
    roots_cmd->add_option("--q", opts.q_text, "parameter q");
    roots_cmd->add_option("--n-max", n_max, "scan upper bound (default 200)");
    roots_cmd->add_option("--tol", opts.tol, "relative root tolerance");
    roots_cmd->add_option("--format", opts.format, "output format (json)");
    roots_cmd->add_option("--output", opts.output_path, "output file (default stdout)");

    // locus
    auto* locus_cmd = app.add_subcommand("locus", "Solve for p making f(target_n) vanish");
    int target_n = 1;
    double q_real = 1.0;
    double p_lo = 0.5;
    double p_hi = 2.0;
    int max_iter = 100;
    locus_cmd->add_option("--target-n", target_n, "depth whose coupling should vanish")
        ->required();
    locus_cmd->add_option("--j", opts.j_text, "highest weight");
    locus_cmd->add_option("--q", q_real, "fixed real q > 0")->required();
    locus_cmd->add_option("--p-lo", p_lo, "bracket lower end")->required();
    locus_cmd->add_option("--p-hi", p_hi, "bracket upper end")->required();
    locus_cmd->add_option("--tol", opts.tol, "|f| tolerance");
    locus_cmd->add_option("--max-iter", max_iter, "iteration cap (default 100)");
    locus_cmd->add_option("--format", opts.format, "output format (json)");
    locus_cmd->add_option("--output", opts.output_path, "output file (default stdout)");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Grid scan over (p, q), CSV output");
    ScanGrid grid;
    grid.p_lo = 0.5;
    grid.p_hi = 2.0;
    grid.p_steps = 16;
    grid.q_lo = 0.5;
    grid.q_hi = 2.0;
    grid.q_steps = 16;
    std::string quantity = "root_count";
    int threads = 1;
    scan_cmd->add_option("--j", opts.j_text, "highest weight");
    scan_cmd->add_option("--quantity", quantity,
                         "root_count|min_abs_f_at_integers|radicand_violations");
    scan_cmd->add_option("--p-lo", grid.p_lo, "p range start");
    scan_cmd->add_option("--p-hi", grid.p_hi, "p range end");
    scan_cmd->add_option("--p-steps", grid.p_steps, "p grid points (>= 2)");
    scan_cmd->add_option("--q-lo", grid.q_lo, "q range start");
    scan_cmd->add_option("--q-hi", grid.q_hi, "q range end");
    scan_cmd->add_option("--q-steps", grid.q_steps, "q grid points (>= 2)");
    scan_cmd->add_option("--n-max", n_max, "f scan depth (default 200)");
    scan_cmd->add_option("--N", trunc_n, "radicand scan depth (default 64)");
    scan_cmd->add_option("--tol", opts.tol, "root tolerance");
    scan_cmd->add_option("--threads", threads, "worker threads (output is thread-invariant)");
    scan_cmd->add_option("--format", opts.format, "output format (csv)");
    scan_cmd->add_option("--output", opts.output_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bracket_cmd->parsed()) {
            require_format(opts.format, "json");
            const DeformationVariant variant = variant_from_string(opts.variant);
            const Complex x = parse_complex(x_text);
            const Params params = parse_params(opts);
            Complex value;
            switch (variant) {
                case DeformationVariant::Classical:
                    value = x;
                    break;
                case DeformationVariant::OneParamQ:
                    value = q_bracket(x, params.q);
                    break;
                case DeformationVariant::TwoParamV1:
                case DeformationVariant::TwoParamV2:
                    value = pq_bracket(x, params.p, params.q);
                    break;
            }
            write_output(bracket_value_json(value), opts.output_path);
            return kExitOk;
        }
        if (build_cmd->parsed()) {
            require_format(opts.format, "json");
            const auto variant = variant_from_string(opts.variant);
            const auto j = highest_weight_from_two_j(parse_half_integer_doubled(opts.j_text));
            const RepMatrices rep = build_rep(variant, j, parse_params(opts), trunc_n);
            write_output(to_json(rep), opts.output_path);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            require_format(opts.format, "json");
            const auto variant = variant_from_string(opts.variant);
            const auto j = highest_weight_from_two_j(parse_half_integer_doubled(opts.j_text));
            const RepMatrices rep = build_rep(variant, j, parse_params(opts), trunc_n);
            const RhsConvention conv = convention_for(rep, v1_orientation, v2_bracket);
            const VerificationReport report = verify_relations(rep, conv);
            write_output(to_json(report), opts.output_path);
            const double worst = std::max(
                {report.residual_H_Eplus, report.residual_H_Eminus, report.residual_ladder});
            return worst <= opts.tol ? kExitOk : kExitCheckFailed;
        }
        if (roots_cmd->parsed()) {
            require_format(opts.format, "json");
            if (roots_variant != "v2") {
                std::cerr << "error: the truncation criterion applies to variant v2 only\n";
                return kExitUsage;
            }
            const auto j = highest_weight_from_two_j(parse_half_integer_doubled(opts.j_text));
            const RootScanResult scan = integer_roots(j, parse_params(opts), n_max, opts.tol);
            write_output(to_json(scan), opts.output_path);
            return kExitOk;
        }
        if (locus_cmd->parsed()) {
            require_format(opts.format, "json");
            const auto j = highest_weight_from_two_j(parse_half_integer_doubled(opts.j_text));
            const LocusSolution sol =
                locus_solve(target_n, j, q_real, {p_lo, p_hi}, opts.tol, max_iter);
            write_output(to_json(sol), opts.output_path);
            return kExitOk;
        }
        if (scan_cmd->parsed()) {
            require_format(opts.format, "csv");
            const auto j = highest_weight_from_two_j(parse_half_integer_doubled(opts.j_text));
            grid.quantity = scan_quantity_from_string(quantity);
            const std::string csv = run_scan_csv(grid, j, n_max, trunc_n, opts.tol, threads);
            write_output(csv, opts.output_path);
            return kExitOk;
        }
    } catch (const DegenerateParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const IllConditionedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const NotARootError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const NoSignChangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const MaxIterationsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const UnresolvedConventionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
