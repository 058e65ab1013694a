#include "qdeform/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qdeform {

using nlohmann::json;

std::string to_string(DeformationVariant v) {
    switch (v) {
        case DeformationVariant::Classical: return "classical";
        case DeformationVariant::OneParamQ: return "q";
        case DeformationVariant::TwoParamV1: return "v1";
        case DeformationVariant::TwoParamV2: return "v2";
    }
    throw std::logic_error("unknown variant");
}

DeformationVariant variant_from_string(const std::string& s) {
    if (s == "classical") return DeformationVariant::Classical;
    if (s == "q") return DeformationVariant::OneParamQ;
    if (s == "v1") return DeformationVariant::TwoParamV1;
    if (s == "v2") return DeformationVariant::TwoParamV2;
    throw std::invalid_argument("unknown variant '" + s + "' (expected classical|q|v1|v2)");
}

std::string to_string(V1Orientation o) {
    return o == V1Orientation::POverQ ? "p_over_q" : "q_over_p";
}

V1Orientation v1_orientation_from_string(const std::string& s) {
    if (s == "p_over_q") return V1Orientation::POverQ;
    if (s == "q_over_p") return V1Orientation::QOverP;
    throw std::invalid_argument("unknown V1 orientation '" + s + "'");
}

std::string to_string(V2BracketArg a) { return a == V2BracketArg::H ? "h" : "two_h"; }

V2BracketArg v2_bracket_arg_from_string(const std::string& s) {
    if (s == "h") return V2BracketArg::H;
    if (s == "two_h") return V2BracketArg::TwoH;
    throw std::invalid_argument("unknown V2 bracket argument '" + s + "'");
}

std::string to_string(ScanQuantity q) {
    switch (q) {
        case ScanQuantity::RootCount: return "root_count";
        case ScanQuantity::MinAbsFAtIntegers: return "min_abs_f_at_integers";
        case ScanQuantity::RadicandViolations: return "radicand_violations";
    }
    throw std::logic_error("unknown scan quantity");
}

ScanQuantity scan_quantity_from_string(const std::string& s) {
    if (s == "root_count") return ScanQuantity::RootCount;
    if (s == "min_abs_f_at_integers") return ScanQuantity::MinAbsFAtIntegers;
    if (s == "radicand_violations") return ScanQuantity::RadicandViolations;
    throw std::invalid_argument("unknown scan quantity '" + s + "'");
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// --- text parsing -----------------------------------------------------------

namespace {

double parse_full_double(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + s.size()) {
        throw std::invalid_argument("malformed number '" + s + "'");
    }
    return v;
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

Complex parse_complex(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    if (s.back() != 'i' && s.back() != 'I') {
        return Complex{parse_full_double(s), 0.0};
    }
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last +/- that starts the imaginary term (not a leading
    // sign, not an exponent sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re_part;
    std::string im_part;
    if (split == std::string::npos) {
        im_part = body;
    } else {
        re_part = body.substr(0, split);
        im_part = body.substr(split);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    else if (im_part == "-") im_part = "-1";
    const double im = parse_full_double(im_part);
    const double re = re_part.empty() ? 0.0 : parse_full_double(re_part);
    return Complex{re, im};
}

int parse_half_integer_doubled(const std::string& text) {
    const std::string s = strip(text);
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num_s = s.substr(0, slash);
        const std::string den_s = s.substr(slash + 1);
        char* end = nullptr;
        const long num = std::strtol(num_s.c_str(), &end, 10);
        if (num_s.empty() || end != num_s.c_str() + num_s.size()) {
            throw std::invalid_argument("malformed fraction '" + s + "'");
        }
        const long den = std::strtol(den_s.c_str(), &end, 10);
        if (den_s.empty() || end != den_s.c_str() + den_s.size()) {
            throw std::invalid_argument("malformed fraction '" + s + "'");
        }
        if (den == 1) return static_cast<int>(2 * num);
        if (den == 2) return static_cast<int>(num);
        throw std::invalid_argument("'" + s + "' is not a half-integer (denominator must be 1 or 2)");
    }
    const double v = parse_full_double(s);
    const double doubled = 2.0 * v;
    if (!std::isfinite(doubled) || doubled != std::nearbyint(doubled)) {
        throw std::invalid_argument("'" + s + "' is not a half-integer");
    }
    return static_cast<int>(doubled);
}

// --- JSON emission ----------------------------------------------------------

namespace {

void append_complex(std::string& out, const Complex& z) {
    out += '[';
    out += fmt_double(z.real());
    out += ',';
    out += fmt_double(z.imag());
    out += ']';
}

void append_complex_vector(std::string& out, const std::vector<Complex>& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ',';
        append_complex(out, v[i]);
    }
    out += ']';
}

void append_matrix(std::string& out, const Eigen::MatrixXcd& m) {
    out += '[';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r != 0) out += ',';
        out += '[';
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c != 0) out += ',';
            append_complex(out, m(r, c));
        }
        out += ']';
    }
    out += ']';
}

void append_params(std::string& out, const Params& params) {
    out += "{\"p\": ";
    append_complex(out, params.p);
    out += ", \"q\": ";
    append_complex(out, params.q);
    out += '}';
}

void append_convention(std::string& out, const RhsConvention& conv) {
    out += "{\"v1_exponent_orientation\": \"";
    out += to_string(conv.v1_exponent_orientation);
    out += "\", \"v2_bracket_argument\": \"";
    out += to_string(conv.v2_bracket_argument);
    out += "\"}";
}

void append_depth_value_pairs(std::string& out,
                              const std::vector<std::pair<int, Complex>>& pairs) {
    out += '[';
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i != 0) out += ',';
        out += '[';
        out += std::to_string(pairs[i].first);
        out += ',';
        append_complex(out, pairs[i].second);
        out += ']';
    }
    out += ']';
}

void append_int_vector(std::string& out, const std::vector<int>& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(v[i]);
    }
    out += ']';
}

}  // namespace

std::string to_json(const RepMatrices& rep) {
    std::string out = "{\n";
    out += "  \"variant\": \"" + to_string(rep.variant) + "\",\n";
    out += "  \"two_j\": " + std::to_string(rep.j.two_j) + ",\n";
    out += "  \"params\": ";
    append_params(out, rep.params);
    out += ",\n";
    out += "  \"truncation_depth\": " + std::to_string(rep.truncation_depth) + ",\n";
    out += "  \"closed_at\": " + (rep.closed_at ? std::to_string(*rep.closed_at) : "null") + ",\n";
    out += "  \"bond_radicands\": ";
    append_complex_vector(out, rep.bond_radicands);
    out += ",\n  \"H\": ";
    append_matrix(out, rep.H);
    out += ",\n  \"Eplus\": ";
    append_matrix(out, rep.Eplus);
    out += ",\n  \"Eminus\": ";
    append_matrix(out, rep.Eminus);
    out += "\n}\n";
    return out;
}

std::string to_json(const VerificationReport& report) {
    std::string out = "{\n";
    out += "  \"residual_H_Eplus\": " + fmt_double(report.residual_H_Eplus) + ",\n";
    out += "  \"residual_H_Eminus\": " + fmt_double(report.residual_H_Eminus) + ",\n";
    out += "  \"residual_ladder\": " + fmt_double(report.residual_ladder) + ",\n";
    out += "  \"rhs_convention_used\": ";
    append_convention(out, report.rhs_convention_used);
    out += ",\n";
    out += "  \"boundary_rows_excluded\": " + std::to_string(report.boundary_rows_excluded) + ",\n";
    out += std::string("  \"hermiticity_applicable\": ") +
           (report.hermiticity_applicable ? "true" : "false") + ",\n";
    out += "  \"radicand_violations\": ";
    append_depth_value_pairs(out, report.radicand_violations);
    out += ",\n  \"convention_residuals\": [";
    for (std::size_t i = 0; i < report.convention_residuals.size(); ++i) {
        if (i != 0) out += ',';
        out += "\n    {\"v1_exponent_orientation\": \"" +
               to_string(report.convention_residuals[i].convention.v1_exponent_orientation) +
               "\", \"v2_bracket_argument\": \"" +
               to_string(report.convention_residuals[i].convention.v2_bracket_argument) +
               "\", \"residual_ladder\": " +
               fmt_double(report.convention_residuals[i].residual_ladder) + "}";
    }
    if (!report.convention_residuals.empty()) out += "\n  ";
    out += "]\n}\n";
    return out;
}

std::string to_json(const RootScanResult& scan) {
    std::string out = "{\n";
    out += "  \"two_j\": " + std::to_string(scan.j.two_j) + ",\n";
    out += "  \"params\": ";
    append_params(out, scan.params);
    out += ",\n";
    out += "  \"n_max\": " + std::to_string(scan.n_max) + ",\n";
    out += "  \"tol\": " + fmt_double(scan.tol) + ",\n";
    out += "  \"roots\": ";
    append_int_vector(out, scan.roots);
    out += ",\n  \"subrep_dims\": ";
    append_int_vector(out, scan.subrep_dims);
    out += ",\n  \"f_values\": ";
    append_depth_value_pairs(out, scan.f_values);
    out += "\n}\n";
    return out;
}

std::string to_json(const LocusSolution& sol) {
    std::string out = "{\n";
    out += "  \"target_n\": " + std::to_string(sol.target_n) + ",\n";
    out += "  \"two_j\": " + std::to_string(sol.j.two_j) + ",\n";
    out += "  \"q\": " + fmt_double(sol.q) + ",\n";
    out += "  \"p\": " + fmt_double(sol.p) + ",\n";
    out += "  \"residual\": " + fmt_double(sol.residual) + ",\n";
    out += "  \"iterations\": " + std::to_string(sol.iterations) + "\n}\n";
    return out;
}

std::string bracket_value_json(const Complex& value) {
    std::string out = "{\"value\": ";
    append_complex(out, value);
    out += "}\n";
    return out;
}

// --- JSON parsing -----------------------------------------------------------

namespace {

Complex complex_from(const json& node) {
    if (!node.is_array() || node.size() != 2) {
        throw std::invalid_argument("expected [re, im] pair");
    }
    return Complex{node[0].get<double>(), node[1].get<double>()};
}

Params params_from(const json& node) {
    Params params;
    params.p = complex_from(node.at("p"));
    params.q = complex_from(node.at("q"));
    return params;
}

Eigen::MatrixXcd matrix_from(const json& node) {
    if (!node.is_array()) throw std::invalid_argument("expected matrix");
    const auto rows = static_cast<Eigen::Index>(node.size());
    Eigen::MatrixXcd m(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json& row = node[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) {
            throw std::invalid_argument("expected square matrix");
        }
        for (Eigen::Index c = 0; c < rows; ++c) {
            m(r, c) = complex_from(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

std::vector<std::pair<int, Complex>> depth_value_pairs_from(const json& node) {
    std::vector<std::pair<int, Complex>> out;
    for (const json& item : node) {
        out.emplace_back(item.at(0).get<int>(), complex_from(item.at(1)));
    }
    return out;
}

RhsConvention convention_from(const json& node) {
    RhsConvention conv;
    conv.v1_exponent_orientation =
        v1_orientation_from_string(node.at("v1_exponent_orientation").get<std::string>());
    conv.v2_bracket_argument =
        v2_bracket_arg_from_string(node.at("v2_bracket_argument").get<std::string>());
    return conv;
}

}  // namespace

RepMatrices rep_matrices_from_json(const std::string& text) {
    const json doc = json::parse(text);
    RepMatrices rep;
    rep.variant = variant_from_string(doc.at("variant").get<std::string>());
    rep.j = highest_weight_from_two_j(doc.at("two_j").get<int>());
    rep.params = params_from(doc.at("params"));
    rep.truncation_depth = doc.at("truncation_depth").get<int>();
    if (!doc.at("closed_at").is_null()) rep.closed_at = doc.at("closed_at").get<int>();
    for (const json& item : doc.at("bond_radicands")) {
        rep.bond_radicands.push_back(complex_from(item));
    }
    rep.H = matrix_from(doc.at("H"));
    rep.Eplus = matrix_from(doc.at("Eplus"));
    rep.Eminus = matrix_from(doc.at("Eminus"));
    return rep;
}

VerificationReport verification_report_from_json(const std::string& text) {
    const json doc = json::parse(text);
    VerificationReport report;
    report.residual_H_Eplus = doc.at("residual_H_Eplus").get<double>();
    report.residual_H_Eminus = doc.at("residual_H_Eminus").get<double>();
    report.residual_ladder = doc.at("residual_ladder").get<double>();
    report.rhs_convention_used = convention_from(doc.at("rhs_convention_used"));
    report.boundary_rows_excluded = doc.at("boundary_rows_excluded").get<int>();
    report.hermiticity_applicable = doc.at("hermiticity_applicable").get<bool>();
    report.radicand_violations = depth_value_pairs_from(doc.at("radicand_violations"));
    for (const json& item : doc.at("convention_residuals")) {
        ConventionResidual cr;
        cr.convention = convention_from(item);
        cr.residual_ladder = item.at("residual_ladder").get<double>();
        report.convention_residuals.push_back(cr);
    }
    return report;
}

RootScanResult root_scan_from_json(const std::string& text) {
    const json doc = json::parse(text);
    RootScanResult scan;
    scan.j = highest_weight_from_two_j(doc.at("two_j").get<int>());
    scan.params = params_from(doc.at("params"));
    scan.n_max = doc.at("n_max").get<int>();
    scan.tol = doc.at("tol").get<double>();
    scan.roots = doc.at("roots").get<std::vector<int>>();
    scan.subrep_dims = doc.at("subrep_dims").get<std::vector<int>>();
    scan.f_values = depth_value_pairs_from(doc.at("f_values"));
    return scan;
}

LocusSolution locus_solution_from_json(const std::string& text) {
    const json doc = json::parse(text);
    LocusSolution sol;
    sol.target_n = doc.at("target_n").get<int>();
    sol.j = highest_weight_from_two_j(doc.at("two_j").get<int>());
    sol.q = doc.at("q").get<double>();
    sol.p = doc.at("p").get<double>();
    sol.residual = doc.at("residual").get<double>();
    sol.iterations = doc.at("iterations").get<int>();
    return sol;
}

Complex bracket_value_from_json(const std::string& text) {
    return complex_from(json::parse(text).at("value"));
}

bool operator==(const RepMatrices& a, const RepMatrices& b) {
    return a.variant == b.variant && a.params.p == b.params.p && a.params.q == b.params.q &&
           a.j == b.j && a.truncation_depth == b.truncation_depth && a.closed_at == b.closed_at &&
           a.bond_radicands == b.bond_radicands && a.H == b.H && a.Eplus == b.Eplus &&
           a.Eminus == b.Eminus;
}

// --- parameter-space scan -----------------------------------------------------

namespace {

double scan_cell(ScanQuantity quantity, HighestWeight j, double p, double q, int n_max, int N,
                 double tol) {
    const Params params{Complex{q, 0.0}, Complex{p, 0.0}};
    switch (quantity) {
        case ScanQuantity::RootCount:
            return static_cast<double>(integer_roots(j, params, n_max, tol).roots.size());
        case ScanQuantity::MinAbsFAtIntegers: {
            double best = std::numeric_limits<double>::infinity();
            for (int n = 1; n <= n_max; ++n) {
                const auto [t1, t2] = f_terms(static_cast<double>(n), j, params.p, params.q);
                const double rel =
                    std::abs(t1 - t2) / std::max({std::abs(t1), std::abs(t2), 1.0});
                best = std::min(best, rel);
            }
            return best;
        }
        case ScanQuantity::RadicandViolations: {
            int count = 0;
            for (int k = 1; k <= N; ++k) {
                const Complex r = bond_radicand(DeformationVariant::TwoParamV2, j, k, params);
                if (r == Complex{0.0, 0.0}) break;  // module closed, nothing below
                if (r.imag() != 0.0 || r.real() < 0.0) ++count;
            }
            return static_cast<double>(count);
        }
    }
    throw std::logic_error("unknown scan quantity");
}

}  // namespace

std::string run_scan_csv(const ScanGrid& grid, HighestWeight j, int n_max, int N, double tol,
                         int threads) {
    if (grid.p_steps < 2 || grid.q_steps < 2) {
        throw std::invalid_argument("scan: steps must be >= 2");
    }
    if (!(grid.p_lo < grid.p_hi) || !(grid.q_lo < grid.q_hi)) {
        throw std::invalid_argument("scan: ranges must satisfy lo < hi");
    }
    const int total = grid.p_steps * grid.q_steps;
    std::vector<double> cells(static_cast<std::size_t>(total));

    const auto value_at = [&](int index) {
        const int pi = index / grid.q_steps;
        const int qi = index % grid.q_steps;
        const double p =
            grid.p_lo + static_cast<double>(pi) * (grid.p_hi - grid.p_lo) /
                            static_cast<double>(grid.p_steps - 1);
        const double q =
            grid.q_lo + static_cast<double>(qi) * (grid.q_hi - grid.q_lo) /
                            static_cast<double>(grid.q_steps - 1);
        try {
            return scan_cell(grid.quantity, j, p, q, n_max, N, tol);
        } catch (const Error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    const int workers = std::max(1, std::min(threads, total));
    if (workers == 1) {
        for (int i = 0; i < total; ++i) cells[static_cast<std::size_t>(i)] = value_at(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (int i = w; i < total; i += workers) {
                    cells[static_cast<std::size_t>(i)] = value_at(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    std::string out = "p,q," + to_string(grid.quantity) + "\n";
    for (int i = 0; i < total; ++i) {
        const int pi = i / grid.q_steps;
        const int qi = i % grid.q_steps;
        const double p =
            grid.p_lo + static_cast<double>(pi) * (grid.p_hi - grid.p_lo) /
                            static_cast<double>(grid.p_steps - 1);
        const double q =
            grid.q_lo + static_cast<double>(qi) * (grid.q_hi - grid.q_lo) /
                            static_cast<double>(grid.q_steps - 1);
        out += fmt_double(p);
        out += ',';
        out += fmt_double(q);
        out += ',';
        out += fmt_double(cells[static_cast<std::size_t>(i)]);
        out += '\n';
    }
    return out;
}

}  // namespace qdeform
