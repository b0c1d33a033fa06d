#include "wdk/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace wdk::cli {

using nlohmann::json;

namespace {

double parse_double_token(const std::string& s) {
    std::size_t idx = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &idx);
    } catch (const std::exception&) {
        throw DomainError("cannot parse number: '" + s + "'");
    }
    if (idx != s.size())
        throw DomainError("cannot parse number: '" + s + "'");
    return v;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

Complex parse_complex(const std::string& token) {
    const std::string s = strip_spaces(token);
    if (s.empty())
        throw DomainError("empty complex token");
    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        if (body.empty() || body == "+") return Complex(0.0, 1.0);
        if (body == "-") return Complex(0.0, -1.0);
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            const char c = body[k];
            if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos)
            return Complex(0.0, parse_double_token(body));
        const std::string re = body.substr(0, split);
        std::string im = body.substr(split);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return Complex(parse_double_token(re), parse_double_token(im));
    }
    return Complex(parse_double_token(s), 0.0);
}

CVec parse_complex_list(const std::string& text) {
    CVec out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(parse_complex(token));
    if (out.empty())
        throw DomainError("empty coefficient/point list");
    return out;
}

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json p_to_json(const PExponent& p) {
    if (p.is_inf()) return json("inf");
    return json(p.p());
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::certified_converged: return "certified_converged";
        case SolveStatus::converged_uncertified: return "converged_uncertified";
        case SolveStatus::max_iter_reached: return "max_iter_reached";
        case SolveStatus::degenerate: return "degenerate";
    }
    return "unknown";
}

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::a_priori: return "a_priori";
        case BoundKind::a_post_1: return "a_post_1";
        case BoundKind::a_post_2: return "a_post_2";
        case BoundKind::step_decay_1: return "step_decay_1";
        case BoundKind::step_decay_2: return "step_decay_2";
    }
    return "unknown";
}

const char* theorem_name(LocalTheorem t) {
    switch (t) {
        case LocalTheorem::local1: return "local1";
        case LocalTheorem::local1_h: return "local1_h";
        case LocalTheorem::local2: return "local2";
        case LocalTheorem::local3: return "local3";
    }
    return "unknown";
}

json cvec_to_json(const CVec& v) {
    json arr = json::array();
    for (const Complex& z : v) arr.push_back(complex_to_json(z));
    return arr;
}

json certificate_to_json(const Certificate& cert) {
    return json{{"e0", cert.e0},      {"lambda", cert.lambda}, {"theta", cert.theta},
                {"rho", cert.rho},    {"passed", cert.passed},
                {"quadratic", cert.quadratic}};
}

}  // namespace

std::string emit_json(const SolveReport& report) {
    json j;
    j["status"] = status_name(report.status);
    j["degree"] = report.certificate.n;
    j["p"] = p_to_json(report.certificate.p);
    j["certificate"] = certificate_to_json(report.certificate);
    j["roots"] = cvec_to_json(report.roots);
    if (report.disks) {
        json disks = json::array();
        for (const InclusionDisk& d : report.disks->disks)
            disks.push_back(json{{"center", complex_to_json(d.center)}, {"radius", d.radius}});
        j["disks"] = std::move(disks);
    }
    j["iterations"] = report.iterations;
    {
        json trace;
        trace["first_step"] = report.trace.first_step;
        trace["e_values"] = report.trace.e_values;
        json iters = json::array();
        for (const CVec& x : report.trace.iterates) iters.push_back(cvec_to_json(x));
        trace["iterates"] = std::move(iters);
        json corrs = json::array();
        for (const CVec& w : report.trace.corrections) corrs.push_back(cvec_to_json(w));
        trace["corrections"] = std::move(corrs);
        j["trace"] = std::move(trace);
    }
    {
        json bounds = json::array();
        for (const BoundVec& bv : report.trace.bound_history)
            bounds.push_back(
                json{{"kind", bound_kind_name(bv.kind)}, {"k", bv.k}, {"values", bv.values}});
        j["bounds"] = std::move(bounds);
    }
    return j.dump(2);
}

std::string emit_json(const LocalCheckReport& report) {
    json j;
    j["theorem"] = theorem_name(report.theorem);
    j["condition_value"] = report.condition_value;
    j["threshold"] = report.threshold;
    j["satisfied"] = report.satisfied;
    j["quadratic"] = report.quadratic;
    j["lambda"] = report.lambda;
    j["theta"] = report.theta ? json(*report.theta) : json(nullptr);
    if (report.han_ok) j["han_ok"] = *report.han_ok;
    if (report.wang_zhao_ok) j["wang_zhao_ok"] = *report.wang_zhao_ok;
    j["per_step_ok"] = report.per_step_ok;
    return j.dump(2);
}

namespace {

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot open output file: " + path);
    out << content << '\n';
}

void print_complex(std::ostream& out, const Complex& z) {
    out << std::setprecision(17) << z.real() << (z.imag() < 0 ? " - " : " + ")
        << std::abs(z.imag()) << "i";
}

void print_solve_report(std::ostream& out, const SolveReport& report,
                        const PExponent& p) {
    out << std::setprecision(17);
    const Certificate& cert = report.certificate;
    out << "degree " << cert.n << " polynomial, p = ";
    if (p.is_inf())
        out << "inf";
    else
        out << p.p();
    out << "\n";
    out << "certificate: E(x0) = " << cert.e0 << ", lambda = " << cert.lambda
        << ", theta = " << cert.theta << ", "
        << (cert.passed ? (cert.quadratic ? "passed (quadratic)" : "passed (linear)")
                        : "FAILED")
        << "\n";
    if (cert.passed)
        out << "confinement radius |rho|_p = " << p_norm(cert.rho, p) << "\n";
    out << "status: " << status_name(report.status) << " after " << report.iterations
        << " iterations\n";
    out << "roots:\n";
    for (const Complex& z : report.roots) {
        out << "  ";
        print_complex(out, z);
        out << "\n";
    }
    if (report.disks) {
        out << "inclusion disks (each contains exactly one zero):\n";
        for (const InclusionDisk& d : report.disks->disks) {
            out << "  center ";
            print_complex(out, d.center);
            out << ", radius " << d.radius << "\n";
        }
    }
}

void print_local_report(std::ostream& out, const LocalCheckReport& report) {
    out << std::setprecision(17);
    out << "theorem: " << theorem_name(report.theorem) << "\n";
    out << "condition value = " << report.condition_value
        << ", threshold = " << report.threshold << " -> "
        << (report.satisfied ? "satisfied" : "NOT satisfied")
        << (report.quadratic ? " (quadratic)" : "") << "\n";
    out << "lambda = " << report.lambda;
    if (report.theta) out << ", theta = " << *report.theta;
    out << "\n";
    if (report.han_ok) out << "han threshold ok: " << (*report.han_ok ? "yes" : "no") << "\n";
    if (report.wang_zhao_ok)
        out << "wang-zhao threshold ok: " << (*report.wang_zhao_ok ? "yes" : "no") << "\n";
    int ok = 0;
    for (bool b : report.per_step_ok) ok += b ? 1 : 0;
    out << "per-step estimates: " << ok << "/" << report.per_step_ok.size() << " ok\n";
}

Polynomial load_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid JSON input: ") + e.what());
    }
    if (!j.contains("coefficients") || !j["coefficients"].is_array())
        throw DomainError("input JSON needs a 'coefficients' array");
    CVec coeffs;
    for (const json& entry : j["coefficients"]) {
        if (entry.is_array() && entry.size() == 2)
            coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        else if (entry.is_number())
            coeffs.emplace_back(entry.get<double>(), 0.0);
        else
            throw DomainError("coefficient entries must be [re, im] pairs or numbers");
    }
    return Polynomial(std::move(coeffs));
}

TraceRetention trace_default_from_env() {
    if (const char* env = std::getenv("WDK_TRACE")) {
        const std::string v(env);
        if (v == "tail") return TraceRetention::tail;
        if (v == "full") return TraceRetention::full;
    }
    return TraceRetention::full;
}

struct SolveArgs {
    std::string coeffs;
    std::string input;
    std::string p = "inf";
    double tol = 1e-12;
    int max_iter = 100;
    std::string mode = "one_point";
    std::string x0;
    std::string json_path;
    std::string trace;
    bool require_certificate = false;
};

struct ValidateArgs {
    std::string roots;
    std::string x0;
    std::string theorem;
    std::string p = "inf";
    double h = 0.5;
    bool h_given = false;
    std::string c = "quadratic";
    double sigma = 0.5;
    int steps = 20;
    std::string json_path;
};

struct RadiiArgs {
    int n = 2;
    std::string p = "inf";
    double h = 0.0;
    bool h_given = false;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    SolveOptions opts;
    std::optional<Polynomial> f;
    CVec x0;
    try {
        if (args.coeffs.empty() == args.input.empty())
            throw DomainError("exactly one of --coeffs or --input is required");
        f = args.coeffs.empty() ? load_polynomial_file(args.input)
                                : Polynomial(parse_complex_list(args.coeffs));
        if (f->degree() < 2)
            throw DomainError("polynomial degree must be >= 2");
        opts.p = PExponent::parse(args.p);
        opts.tol = args.tol;
        opts.max_iter = args.max_iter;
        if (args.mode == "one_point")
            opts.mode = IterationMode::one_point;
        else if (args.mode == "two_point")
            opts.mode = IterationMode::two_point;
        else
            throw DomainError("mode must be one_point or two_point");
        opts.require_certificate = args.require_certificate;
        opts.trace = args.trace.empty()
                         ? trace_default_from_env()
                         : (args.trace == "tail" ? TraceRetention::tail
                                                 : TraceRetention::full);
        x0 = args.x0.empty() ? initial_guess(*f) : parse_complex_list(args.x0);
        if (x0.size() != static_cast<std::size_t>(f->degree()))
            throw DomainError("x0 must have exactly degree-many components");
        min_pairwise_distances(x0);  // user x0 must be pairwise distinct
    } catch (const Error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }

    SolveReport report;
    try {
        report = solve(*f, x0, opts);
    } catch (const NotCertifiableError& e) {
        err << "not certifiable: " << e.what() << "\n";
        return kExitNotConverged;
    }
    print_solve_report(out, report, opts.p);
    if (!args.json_path.empty()) write_text_file(args.json_path, emit_json(report));
    switch (report.status) {
        case SolveStatus::certified_converged: return kExitCertified;
        case SolveStatus::converged_uncertified: return kExitUncertified;
        default: return kExitNotConverged;
    }
}

int run_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
    LocalCheckReport report;
    try {
        const RootVector roots = parse_complex_list(args.roots);
        if (roots.size() < 2)
            throw DomainError("at least two roots are required");
        const CVec x0 = parse_complex_list(args.x0);
        const PExponent p = PExponent::parse(args.p);
        const Polynomial f = from_roots(roots);
        if (args.theorem == "local1")
            report = check_local1(f, roots, x0, p, std::nullopt, args.steps);
        else if (args.theorem == "local1_h")
            report = check_local1(f, roots, x0, p, args.h, args.steps);
        else if (args.theorem == "local2")
            report = check_local2(f, roots, x0, p, args.steps);
        else if (args.theorem == "local3")
            report = check_local3(f, roots, x0, p,
                                  args.c == "rational" ? CFunction::rational
                                                       : CFunction::quadratic,
                                  args.sigma, args.steps);
        else
            throw DomainError("theorem must be local1, local1_h, local2 or local3");
    } catch (const Error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    print_local_report(out, report);
    if (!args.json_path.empty()) write_text_file(args.json_path, emit_json(report));
    if (!report.satisfied) return kExitNotConverged;
    for (bool ok : report.per_step_ok)
        if (!ok) return kExitUncertified;
    return kExitCertified;
}

int run_radii(const RadiiArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const PExponent p = PExponent::parse(args.p);
        const GaugeParams gp(args.n, p);
        out << std::setprecision(17);
        out << "n = " << args.n << ", p = " << args.p << "\n";
        out << "local1     " << radius_local1(gp).value << "\n";
        if (args.h_given)
            out << "local1_h   " << radius_local1_h(gp, args.h) << " (h = " << args.h
                << ")\n";
        out << "local2     " << radius_local2(gp).value << "\n";
        out << "semilocal  " << radius_semi(gp).value << "\n";
        out << "semilocal simple threshold " << corollary813_threshold(gp) << "\n";
    } catch (const Error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitCertified;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"certified simultaneous polynomial root finding (Weierstrass iteration)"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep --h free for the math option

    SolveArgs sa;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve for all roots with certification");
    solve_cmd->set_help_flag("--help", "print help");
    solve_cmd->add_option("--coeffs", sa.coeffs, "coefficients, highest degree first");
    solve_cmd->add_option("--input", sa.input, "JSON file with a 'coefficients' array");
    solve_cmd->add_option("--p", sa.p, "norm exponent: 1, 2, a decimal >= 1, or inf");
    solve_cmd->add_option("--tol", sa.tol, "stopping tolerance");
    solve_cmd->add_option("--max-iter", sa.max_iter, "iteration budget");
    solve_cmd->add_option("--mode", sa.mode, "one_point or two_point");
    solve_cmd->add_option("--x0", sa.x0, "initial approximations (default: circle)");
    solve_cmd->add_option("--json", sa.json_path, "write the JSON report here");
    solve_cmd->add_option("--trace", sa.trace, "trace retention: full or tail");
    solve_cmd->add_flag("--require-certificate", sa.require_certificate,
                        "fail instead of iterating uncertified");

    ValidateArgs va;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check a local convergence theorem against known roots");
    validate_cmd->set_help_flag("--help", "print help");
    validate_cmd->add_option("--roots", va.roots, "true roots")->required();
    validate_cmd->add_option("--x0", va.x0, "initial approximations")->required();
    validate_cmd->add_option("--theorem", va.theorem, "local1, local1_h, local2 or local3")
        ->required();
    validate_cmd->add_option("--p", va.p, "norm exponent");
    validate_cmd->add_option("--h", va.h, "contraction target in (0,1) for local1_h")
        ->check(CLI::Range(0.0, 1.0));
    validate_cmd->add_option("--c", va.c, "c-function for local3: quadratic or rational");
    validate_cmd->add_option("--sigma", va.sigma, "sigma in (0,1) for local3");
    validate_cmd->add_option("--steps", va.steps, "iterations to verify");
    validate_cmd->add_option("--json", va.json_path, "write the JSON report here");

    RadiiArgs ra;
    CLI::App* radii_cmd = app.add_subcommand("radii", "print the convergence radii for (n, p)");
    radii_cmd->set_help_flag("--help", "print help");
    radii_cmd->add_option("--n", ra.n, "polynomial degree")->required();
    radii_cmd->add_option("--p", ra.p, "norm exponent");
    CLI::Option* h_opt = radii_cmd->add_option("--h", ra.h, "also print the h-radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : kExitInputError;
    }
    ra.h_given = h_opt->count() > 0;

    if (solve_cmd->parsed()) return run_solve(sa, out, err);
    if (validate_cmd->parsed()) return run_validate(va, out, err);
    if (radii_cmd->parsed()) return run_radii(ra, out, err);
    err << "no command given\n";
    return kExitInputError;
}

}  // namespace wdk::cli
