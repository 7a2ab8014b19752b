// pfcert: compute and check annihilating operators of one-parameter
// hypersurface families, with exact-form certificates, local exponent
// reports, series annihilation, and numeric chain checks on the Legendre
// family.  Emits deterministic JSON documents; exit codes are part of the
// contract (see usage text).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pf/chart.hpp"
#include "pf/errors.hpp"
#include "pf/expr_parser.hpp"
#include "pf/family.hpp"
#include "pf/frobenius.hpp"
#include "pf/jacobian.hpp"
#include "pf/localize.hpp"
#include "pf/mu.hpp"
#include "pf/periods.hpp"
#include "pf/picard_fuchs.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pf;

constexpr const char* kToolVersion = "1.0.0";

struct Config {
    std::string command;
    std::string family_file;
    int max_order = -1;  // negative = automatic cap
    int terms = 30;
    int chart = -1;  // negative = default (last chart for compute, all for verify)
    int digits = 30;
    std::string grid;  // empty = command default
    std::string output;
    std::string compare_reference;
};

ordered_json config_block(const Config& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    j["family_file"] = cfg.family_file;
    j["max_order"] = cfg.max_order < 0 ? ordered_json("auto") : ordered_json(cfg.max_order);
    j["terms"] = cfg.terms;
    if (cfg.chart < 0)
        j["chart"] = cfg.command == "verify" ? ordered_json("all") : ordered_json("default");
    else
        j["chart"] = cfg.chart;
    j["digits"] = cfg.digits;
    j["grid"] = cfg.grid.empty() ? ordered_json("default") : ordered_json(cfg.grid);
    j["compare_reference"] =
        cfg.compare_reference.empty() ? ordered_json(nullptr) : ordered_json(cfg.compare_reference);
    return j;
}

ordered_json family_block(const FamilySpec& spec) {
    ordered_json j;
    j["name"] = spec.name;
    j["ambient_dim"] = spec.n;
    j["degree"] = spec.degree();
    j["variables"] = spec.variables;
    j["parameter"] = spec.parameter;
    j["polynomial"] = spec.f.to_string(spec.variables, spec.parameter);
    j["constant"] = spec.constant_family;
    return j;
}

ordered_json operator_block(const DiffOperator& op, const std::string& param) {
    ordered_json j;
    j["basis"] = op.basis() == OpBasis::Theta ? "theta" : "ddt";
    j["order"] = op.order();
    ordered_json coeffs = ordered_json::array();
    for (const ParamRat& c : op.coeffs()) coeffs.push_back(c.to_string(param));
    j["coefficients"] = coeffs;
    j["display"] = op.to_string(param);
    return j;
}

ordered_json certificate_block(const Certificate& cert, const FamilySpec& spec) {
    ordered_json arr = ordered_json::array();
    for (const CertTerm& term : cert.terms) {
        ordered_json t;
        t["k"] = term.k;
        t["scalar"] = term.scalar.to_string(spec.parameter);
        ordered_json w = ordered_json::array();
        for (const MultiPoly& a : term.witness)
            w.push_back(a.to_string(spec.variables, spec.parameter));
        t["witness"] = w;
        arr.push_back(t);
    }
    return arr;
}

// Exit-code boundary: any failure to load the description file (syntax,
// structure, homogeneity) is a parse failure (exit 2); family rejections
// after loading (singular fiber, unsupported shape) stay exit 3.
FamilySpec cli_load_family(const std::string& path) {
    try {
        return load_family_file(path);
    } catch (const FamilyError& e) {
        throw ParseError(e.what());
    }
}

// ---------------------------------------------------------------------------
// Oracle series selection from the family's oracle hint.

std::optional<PeriodSeries> oracle_series(const FamilySpec& spec, int terms) {
    std::istringstream in(spec.oracle);
    std::string kind;
    in >> kind;
    if (kind == "gauss") {
        std::string a, b, c;
        in >> a >> b >> c;
        if (c.empty()) throw FamilyError("oracle 'gauss' needs three rational arguments");
        return gauss_hypergeometric(parse_rational(a), parse_rational(b), parse_rational(c),
                                    terms);
    }
    if (kind == "diagonal") return diagonal_family_germ(spec.n, terms);
    if (kind.empty()) return std::nullopt;
    throw FamilyError("unknown oracle kind '" + kind + "'");
}

ordered_json annihilation_block(const DiffOperator& op, const FamilySpec& spec, int terms,
                                bool* failed) {
    ordered_json j;
    std::optional<PeriodSeries> series = oracle_series(spec, terms);
    if (!series) {
        j["status"] = "no-oracle";
        j["truncation"] = terms;
        return j;
    }
    AnnihilationCheck chk = annihilation_check(op, *series);
    j["status"] = chk.annihilated ? "annihilated" : "failed";
    j["truncation"] = terms;
    j["window_end"] = pf::to_string(chk.window_end);
    if (!chk.annihilated) {
        j["first_failure"] = pf::to_string(chk.first_failure);
        *failed = true;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Reference-operator comparison.

DiffOperator load_reference_operator(const std::string& path, const std::string& param) {
    std::ifstream in(path);
    if (!in) throw FamilyError("cannot open reference operator file: " + path);
    ordered_json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("reference operator: ") + e.what());
    }
    const ordered_json& opj = doc.contains("operator") ? doc["operator"] : doc;
    if (!opj.contains("basis") || !opj.contains("coefficients"))
        throw ParseError("reference operator needs 'basis' and 'coefficients'");
    std::string basis = opj["basis"].get<std::string>();
    if (basis != "theta" && basis != "ddt")
        throw ParseError("reference operator basis must be 'theta' or 'ddt'");
    std::vector<ParamRat> coeffs;
    for (const auto& c : opj["coefficients"])
        coeffs.push_back(parse_ratfunc(c.get<std::string>(), param));
    return DiffOperator(basis == "theta" ? OpBasis::Theta : OpBasis::Ddt, coeffs);
}

ordered_json comparison_block(const DiffOperator& computed, const std::string& ref_path,
                              const std::string& param) {
    DiffOperator ref = load_reference_operator(ref_path, param);
    DiffOperator mine =
        ref.basis() == OpBasis::Theta ? to_theta_form(computed) : from_theta_form(computed);
    if (computed.basis() == ref.basis()) mine = computed;

    ordered_json j;
    j["reference"] = ref_path;
    j["basis"] = ref.basis() == OpBasis::Theta ? "theta" : "ddt";

    // Mismatch table: scale the computed operator so the leading
    // coefficients agree in the reference basis; the remaining rows then
    // show the genuine coefficient-wise divergence.
    auto diff_report = [&](const DiffOperator& scaled, const ordered_json& scaling) {
        j["paper_operator_match"] = "mismatch";
        j["computed_scaled_by"] = scaling;
        ordered_json diff = ordered_json::array();
        int top = std::max(scaled.order(), ref.order());
        for (int k = 0; k <= top; ++k) {
            ParamRat a = k <= scaled.order() ? scaled.coeff(k) : ParamRat(0);
            ParamRat b = k <= ref.order() ? ref.coeff(k) : ParamRat(0);
            ordered_json row;
            row["power"] = k;
            row["computed"] = a.to_string(param);
            row["reference"] = b.to_string(param);
            row["equal"] = (a - b).is_zero();
            diff.push_back(row);
        }
        j["diff"] = diff;
    };

    if (mine.order() != ref.order()) {
        diff_report(mine, nullptr);
        return j;
    }

    bool equal = true;
    for (int k = 0; k <= ref.order(); ++k)
        if (!(mine.coeff(k) - ref.coeff(k)).is_zero()) equal = false;
    if (equal) {
        j["paper_operator_match"] = "equal";
        return j;
    }

    // computed = ratio * reference for one fixed rational-function ratio?
    // Leading coefficients of same-order operators are both nonzero, so the
    // candidate ratio comes from the top coefficient.
    const int r = ref.order();
    ParamRat ratio = mine.coeff(r) / ref.coeff(r);
    bool proportional = true;
    for (int k = 0; k <= r; ++k)
        if (!(mine.coeff(k) - ratio * ref.coeff(k)).is_zero()) proportional = false;
    if (proportional) {
        j["paper_operator_match"] = "proportional";
        j["ratio"] = ratio.to_string(param);
        return j;
    }
    ParamRat inv = ParamRat(1) / ratio;
    DiffOperator scaled = mine.scaled(inv);
    diff_report(scaled, ordered_json(inv.to_string(param)));
    return j;
}

// ---------------------------------------------------------------------------
// Commands.

struct CommandResult {
    ordered_json doc;
    int exit_code = 0;
};

CommandResult run_compute(const Config& cfg) {
    FamilySpec spec = cli_load_family(cfg.family_file);
    JacobianData jd(spec);
    PicardFuchsResult pf_res = picard_fuchs(spec, jd, cfg.max_order);

    int chart = cfg.chart < 0 ? spec.n : cfg.chart;
    if (chart > spec.n) throw FamilyError("chart index exceeds the coordinate count");
    VerifyResult ver = verify_certificate(pf_res.op, spec, pf_res.cert, chart);

    CommandResult out;
    out.doc["meta"] = {{"tool", "pfcert"}, {"version", kToolVersion}};
    out.doc["config"] = config_block(cfg);
    out.doc["family"] = family_block(spec);
    out.doc["operator"] = operator_block(pf_res.op, spec.parameter);
    out.doc["operator"]["space_dimension"] = pf_res.space_dim;
    out.doc["certificate"] = certificate_block(pf_res.cert, spec);

    bool ann_failed = false;
    ordered_json checks;
    checks["certificate_verified"] = ver.ok;
    checks["certificate_chart"] = chart;
    checks["series_annihilation"] = annihilation_block(pf_res.op, spec, cfg.terms, &ann_failed);
    out.doc["checks"] = checks;

    if (!cfg.compare_reference.empty())
        out.doc["comparison"] = comparison_block(pf_res.op, cfg.compare_reference, spec.parameter);

    if (!ver.ok || ann_failed) out.exit_code = 5;
    return out;
}

CommandResult run_verify(const Config& cfg) {
    FamilySpec spec = cli_load_family(cfg.family_file);
    JacobianData jd(spec);
    PicardFuchsResult pf_res = picard_fuchs(spec, jd, cfg.max_order);

    std::vector<int> charts;
    if (cfg.chart >= 0) {
        if (cfg.chart > spec.n) throw FamilyError("chart index exceeds the coordinate count");
        charts.push_back(cfg.chart);
    } else {
        for (int c = 0; c <= spec.n; ++c) charts.push_back(c);
    }

    CommandResult out;
    out.doc["meta"] = {{"tool", "pfcert"}, {"version", kToolVersion}};
    out.doc["config"] = config_block(cfg);
    out.doc["family"] = family_block(spec);
    out.doc["operator"] = operator_block(pf_res.op, spec.parameter);
    out.doc["certificate"] = certificate_block(pf_res.cert, spec);

    bool all_ok = true;
    ordered_json per_chart = ordered_json::array();
    for (int c : charts) {
        VerifyResult ver = verify_certificate(pf_res.op, spec, pf_res.cert, c);
        ordered_json row;
        row["chart"] = c;
        row["ok"] = ver.ok;
        per_chart.push_back(row);
        all_ok = all_ok && ver.ok;
    }
    ordered_json checks;
    checks["certificate_verified"] = all_ok;
    checks["charts"] = per_chart;
    out.doc["checks"] = checks;
    if (!all_ok) out.exit_code = 5;
    return out;
}

ordered_json exponents_json(const SingularPointInfo& info) {
    ordered_json j;
    j["point"] = info.point.to_string();
    j["regular_singular"] = info.regular_singular;
    j["indicial"] = info.indicial.to_string("r");
    ordered_json ex = ordered_json::array();
    for (const auto& [root, mult] : info.exponents) {
        ordered_json row;
        row["exponent"] = pf::to_string(root);
        row["multiplicity"] = mult;
        ex.push_back(row);
    }
    j["exponents"] = ex;
    j["exponents_complete"] = info.exponents_complete;
    return j;
}

CommandResult run_indicial(const Config& cfg) {
    FamilySpec spec = cli_load_family(cfg.family_file);
    JacobianData jd(spec);
    PicardFuchsResult pf_res = picard_fuchs(spec, jd, cfg.max_order);

    SingularPoints sing = singular_points(pf_res.op);

    CommandResult out;
    out.doc["meta"] = {{"tool", "pfcert"}, {"version", kToolVersion}};
    out.doc["config"] = config_block(cfg);
    out.doc["family"] = family_block(spec);
    out.doc["operator"] = operator_block(pf_res.op, spec.parameter);

    ordered_json points = ordered_json::array();
    for (const SingularPointInfo& info : sing.points) points.push_back(exponents_json(info));
    ordered_json ind;
    ind["points"] = points;
    ind["roots_complete"] = sing.roots_complete;
    ordered_json unresolved = ordered_json::array();
    for (const ParamPoly& f : sing.unresolved_factors) unresolved.push_back(f.to_string("t"));
    ind["unresolved_factors"] = unresolved;

    // Frobenius fundamental system at the first finite singular point (or
    // 0 when the operator is regular everywhere finite).
    LocalPoint base = LocalPoint::finite(BigRational(0));
    for (const SingularPointInfo& info : sing.points)
        if (!info.point.at_infinity) {
            base = info.point;
            break;
        }
    FrobeniusSystem sys = frobenius_solutions(pf_res.op, base, cfg.terms);
    ordered_json frob;
    frob["point"] = base.to_string();
    frob["solutions"] = static_cast<int>(sys.solutions.size());
    frob["complete"] = sys.complete;
    ordered_json depths = ordered_json::array();
    for (const FrobeniusSolution& sol : sys.solutions) {
        ordered_json row;
        row["exponent"] = pf::to_string(sol.exponent);
        row["log_depth"] = sol.log_depth;
        depths.push_back(row);
    }
    frob["basis"] = depths;
    ind["frobenius"] = frob;
    out.doc["indicial"] = ind;
    return out;
}

CommandResult run_series(const Config& cfg) {
    FamilySpec spec = cli_load_family(cfg.family_file);
    JacobianData jd(spec);
    PicardFuchsResult pf_res = picard_fuchs(spec, jd, cfg.max_order);

    CommandResult out;
    out.doc["meta"] = {{"tool", "pfcert"}, {"version", kToolVersion}};
    out.doc["config"] = config_block(cfg);
    out.doc["family"] = family_block(spec);
    out.doc["operator"] = operator_block(pf_res.op, spec.parameter);

    std::optional<PeriodSeries> series = oracle_series(spec, cfg.terms);
    if (series) {
        ordered_json s;
        s["point"] = series->point.to_string();
        s["lead_exponent"] = pf::to_string(series->lead_exp);
        ordered_json coeffs = ordered_json::array();
        for (const BigRational& c : series->c) coeffs.push_back(pf::to_string(c));
        s["coefficients"] = coeffs;
        s["display"] = series->to_string();
        out.doc["series"] = s;
    } else {
        out.doc["series"] = nullptr;
    }

    bool ann_failed = false;
    ordered_json checks;
    checks["series_annihilation"] = annihilation_block(pf_res.op, spec, cfg.terms, &ann_failed);
    out.doc["checks"] = checks;
    if (ann_failed) out.exit_code = 5;
    return out;
}

// Parses --grid: either "lo:hi:count" or a comma-separated list of values;
// entries may be decimal ("0.35") or rational ("7/20") literals.
std::vector<Real> parse_grid(const std::string& text) {
    std::vector<Real> out;
    auto parse_value = [](const std::string& tok) -> Real {
        if (tok.find('/') != std::string::npos) return real_from_rational(parse_rational(tok));
        try {
            return Real(tok);
        } catch (const std::exception&) {
            throw ParseError("invalid grid value '" + tok + "'");
        }
    };
    if (text.find(':') != std::string::npos) {
        std::istringstream in(text);
        std::string lo, hi, count;
        std::getline(in, lo, ':');
        std::getline(in, hi, ':');
        std::getline(in, count, ':');
        int n = 0;
        try {
            n = std::stoi(count);
        } catch (const std::exception&) {
            throw ParseError("invalid grid spec '" + text + "' (want lo:hi:count)");
        }
        if (n < 2) throw ParseError("grid spec needs at least two points");
        Real a = parse_value(lo), b = parse_value(hi);
        for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
        return out;
    }
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_value(tok));
    }
    if (out.empty()) throw ParseError("empty grid spec");
    return out;
}

// The ten admissible default comparison points (all inside the 30-term
// series convergence budget at 1e-9).
std::vector<BigRational> default_period_points() {
    return {BigRational(1, 10), BigRational(3, 20), BigRational(1, 5),  BigRational(1, 4),
            BigRational(3, 10), BigRational(7, 20), BigRational(2, 5),  BigRational(9, 20),
            BigRational(1, 2),  BigRational(11, 20)};
}

CommandResult run_numeric(const Config& cfg) {
    FamilySpec spec = cli_load_family(cfg.family_file);
    if (spec.n != 2 || spec.degree() != 3 || spec.oracle.rfind("gauss", 0) != 0)
        throw UnsupportedError(
            "numeric chain checks are implemented for the Legendre cubic family only");
    JacobianData jd(spec);
    PicardFuchsResult pf_res = picard_fuchs(spec, jd, cfg.max_order);

    NumericOptions nopts;
    nopts.digits = cfg.digits;
    PrecisionScope scope(cfg.digits);

    CommandResult out;
    out.doc["meta"] = {{"tool", "pfcert"}, {"version", kToolVersion}};
    out.doc["config"] = config_block(cfg);
    out.doc["family"] = family_block(spec);
    out.doc["operator"] = operator_block(pf_res.op, spec.parameter);

    bool all_pass = true;
    const int print_digits = std::min(cfg.digits, 20);

    // 1. Quadrature periods against the truncated series oracle.
    std::vector<Real> grid;
    if (!cfg.grid.empty()) {
        grid = parse_grid(cfg.grid);
    } else {
        for (const BigRational& q : default_period_points())
            grid.push_back(real_from_rational(q));
    }
    std::optional<PeriodSeries> oracle = oracle_series(spec, cfg.terms);
    ordered_json periods;
    periods["cycle"] = "around-zero-t";
    periods["series_terms"] = cfg.terms;
    periods["tolerance"] = "1e-9";
    ordered_json rows = ordered_json::array();
    Real max_diff(0);
    for (const Real& t : grid) {
        Complex quad = period_full(Complex(t), Cycle::AroundZeroT, nopts);
        ordered_json row;
        row["t"] = pf::to_string(t, print_digits);
        row["quadrature"] = pf::to_string(quad, print_digits);
        if (oracle) {
            Real acc(0);
            for (int k = oracle->length() - 1; k >= 0; --k)
                acc = acc * t + real_from_rational(oracle->c[k]);
            Real ref = real_pi() * acc;
            Real diff = abs(quad - Complex(ref));
            row["series"] = pf::to_string(ref, print_digits);
            row["abs_diff"] = pf::to_string(diff, 3);
            max_diff = std::max(max_diff, diff);
        }
        rows.push_back(row);
    }
    periods["points"] = rows;
    periods["max_abs_diff"] = pf::to_string(max_diff, 3);
    bool periods_pass = oracle && max_diff < Real(1e-9);
    periods["pass"] = periods_pass;
    all_pass = all_pass && periods_pass;

    // 2. Torsion-boundary chains: D(nu) must vanish numerically.
    const double h = 0.002;
    const double torsion_tol = 1e-6;
    std::vector<Real> tpoints = {Real(3) / 10, Real(1) / 2, Real(7) / 10};
    ordered_json torsion;
    torsion["step"] = h;
    torsion["tolerance"] = torsion_tol;
    ordered_json chains = ordered_json::array();
    bool torsion_pass = true;
    for (const ChainSpec& chain : {chain_zero_to_t(), chain_zero_to_one(), chain_closed_cycle()}) {
        TorsionChainReport rep = mu_torsion_check(pf_res.op, chain, tpoints, h, torsion_tol, nopts);
        ordered_json row;
        row["chain"] = rep.chain;
        ordered_json pts = ordered_json::array();
        for (const Real& t : rep.points) pts.push_back(pf::to_string(t, 6));
        row["points"] = pts;
        row["max_abs_dnu"] = pf::to_string(rep.max_abs_dnu, 3);
        row["max_fd_error"] = pf::to_string(rep.max_fd_error, 3);
        row["pass"] = rep.pass;
        chains.push_back(row);
        torsion_pass = torsion_pass && rep.pass;
    }
    torsion["chains"] = chains;
    torsion["pass"] = torsion_pass;
    all_pass = all_pass && torsion_pass;

    // 3. Constant-x section on its quadratic cover: rational inhomogeneity.
    SectionCheckOptions sopts;
    SectionReport rep = mu_section_check(pf_res.op, sopts, nopts);
    ordered_json section;
    section["x"] = "2";
    section["cover"] = "t = 2 - 2*s^2";
    section["s_window"] = {sopts.s_lo, sopts.s_hi};
    section["samples"] = sopts.samples;
    section["step_t"] = sopts.h_t;
    ordered_json fit;
    fit["found"] = rep.scan.found;
    fit["num_degree"] = rep.scan.fit.num_degree;
    fit["den_degree"] = rep.scan.fit.den_degree;
    fit["residual"] = rep.scan.fit.residual < 0 ? ordered_json("rank-deficient")
                                                : ordered_json(pf::to_string(rep.scan.fit.residual, 3));
    ordered_json numc = ordered_json::array();
    for (const Complex& c : rep.scan.fit.num_coeffs) numc.push_back(pf::to_string(c, print_digits));
    ordered_json denc = ordered_json::array();
    for (const Complex& c : rep.scan.fit.den_coeffs) denc.push_back(pf::to_string(c, print_digits));
    fit["numerator"] = numc;
    fit["denominator"] = denc;
    ordered_json nearest = ordered_json::array();
    for (const NearestRational& nr : rep.scan.fit.nearest) {
        ordered_json row;
        row["rational"] = pf::to_string(nr.value);
        row["error"] = pf::to_string(nr.error, 3);
        nearest.push_back(row);
    }
    fit["nearest_rationals"] = nearest;
    fit["max_nearest_error"] = pf::to_string(rep.max_nearest_error, 3);
    section["fit"] = fit;
    section["rational"] = rep.rational;
    section["coefficients_rational"] = rep.coefficients_rational;
    ordered_json controls;
    controls["input"] = "exp(s)";
    controls["constant_residual"] = pf::to_string(rep.control_constant.residual, 3);
    controls["linear_residual"] = pf::to_string(rep.control_linear.residual, 3);
    bool controls_pass =
        rep.control_constant.residual > Real(1e-2) && rep.control_linear.residual > Real(1e-2);
    controls["pass"] = controls_pass;
    section["controls"] = controls;
    bool section_pass = rep.rational && rep.coefficients_rational && controls_pass;
    section["pass"] = section_pass;
    all_pass = all_pass && section_pass;

    ordered_json numeric;
    numeric["digits"] = cfg.digits;
    numeric["periods"] = periods;
    numeric["torsion_chains"] = torsion;
    numeric["section"] = section;
    numeric["pass"] = all_pass;
    out.doc["numeric"] = numeric;
    if (!all_pass) out.exit_code = 5;
    return out;
}

void emit(const ordered_json& doc, const std::string& output) {
    std::string text = doc.dump(2);
    text.push_back('\n');
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw Error("cannot open output file: " + output);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Annihilating operators of one-parameter hypersurface families:\n"
                 "exact operator + certificate computation, certificate verification,\n"
                 "local exponents, series annihilation, and numeric chain checks.\n"
                 "Exit codes: 0 ok, 2 parse error, 3 family rejected, 4 order bound\n"
                 "exceeded, 5 verification failed, 6 numeric admissibility/convergence."};
    app.require_subcommand(1);

    Config cfg;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("family", cfg.family_file, "family description file")->required();
        cmd->add_option("--max-order", cfg.max_order,
                        "operator order cap (default: reduced-space dimension)");
        cmd->add_option("--output", cfg.output, "write the document to a file instead of stdout");
    };

    CLI::App* compute = app.add_subcommand(
        "compute", "operator + certificate + annihilation document");
    add_common(compute);
    compute->add_option("--terms", cfg.terms, "series truncation length");
    compute->add_option("--chart", cfg.chart, "verification chart (default: last coordinate)");
    compute->add_option("--compare-paper-operator", cfg.compare_reference,
                        "JSON file with a reference operator to compare against");

    CLI::App* verify = app.add_subcommand("verify", "verify the certificate chart by chart");
    add_common(verify);
    verify->add_option("--chart", cfg.chart, "single chart (default: all charts)");

    CLI::App* indicial = app.add_subcommand(
        "indicial", "singular points, local exponents, Frobenius basis");
    add_common(indicial);
    indicial->add_option("--terms", cfg.terms, "Frobenius series truncation");

    CLI::App* series = app.add_subcommand("series", "oracle series and annihilation check");
    add_common(series);
    series->add_option("--terms", cfg.terms, "series truncation length");

    CLI::App* numeric = app.add_subcommand(
        "numeric", "numeric period and chain checks (Legendre family)");
    add_common(numeric);
    numeric->add_option("--terms", cfg.terms, "series truncation for the period oracle");
    numeric->add_option("--digits", cfg.digits, "working decimal precision");
    numeric->add_option("--grid", cfg.grid,
                        "period comparison points: 'lo:hi:count' or comma-separated values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        CommandResult res;
        if (compute->parsed()) {
            cfg.command = "compute";
            res = run_compute(cfg);
        } else if (verify->parsed()) {
            cfg.command = "verify";
            res = run_verify(cfg);
        } else if (indicial->parsed()) {
            cfg.command = "indicial";
            res = run_indicial(cfg);
        } else if (series->parsed()) {
            cfg.command = "series";
            res = run_series(cfg);
        } else {
            cfg.command = "numeric";
            res = run_numeric(cfg);
        }
        emit(res.doc, cfg.output);
        return res.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "pfcert: parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "pfcert: unsupported family: " << e.what() << "\n";
        return 3;
    } catch (const FamilyError& e) {
        std::cerr << "pfcert: family rejected: " << e.what() << "\n";
        return 3;
    } catch (const NoOperatorError& e) {
        std::cerr << "pfcert: order bound exceeded: " << e.what() << "\n";
        return 4;
    } catch (const CertificateError& e) {
        std::cerr << "pfcert: certificate error: " << e.what() << "\n";
        return 5;
    } catch (const NumericCheckError& e) {
        std::cerr << "pfcert: numeric check: " << e.what() << "\n";
        return 6;
    } catch (const Error& e) {
        std::cerr << "pfcert: " << e.what() << "\n";
        return 1;
    }
}
