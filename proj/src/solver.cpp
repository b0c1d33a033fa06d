#include "wdk/solver.hpp"

#include <algorithm>
#include <cmath>

namespace wdk {

namespace {

double inf_norm(const RVec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
}

void trim_to_tail(IterationTrace& trace) {
    const std::size_t n = trace.iterates.size();
    if (n <= 2) return;
    const std::size_t drop = n - 2;
    trace.iterates.erase(trace.iterates.begin(), trace.iterates.begin() + drop);
    trace.corrections.erase(trace.corrections.begin(), trace.corrections.begin() + drop);
    trace.e_values.erase(trace.e_values.begin(), trace.e_values.begin() + drop);
    trace.first_step = static_cast<int>(drop);
    std::erase_if(trace.bound_history, [&](const BoundVec& bv) {
        return bv.k < trace.first_step;
    });
}

}  // namespace

CVec initial_guess(const Polynomial& f) {
    const int n = f.degree();
    if (n < 2)
        throw DomainError("initial_guess: degree must be >= 2");
    const CVec& coeffs = f.coefficients();
    const Complex a0 = coeffs[0];
    const Complex center = -coeffs[1] / (static_cast<double>(n) * a0);
    double radius = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double mag = std::abs(coeffs[static_cast<std::size_t>(k)] / a0);
        radius = std::max(radius, std::pow(mag, 1.0 / static_cast<double>(k)));
    }
    radius += 1.0;
    CVec guess(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    for (int j = 0; j < n; ++j) {
        const double angle = 2.0 * pi * j / n + pi / (2.0 * n);
        guess[static_cast<std::size_t>(j)] =
            center + radius * Complex(std::cos(angle), std::sin(angle));
    }
    return guess;
}

SolveReport solve(const Polynomial& f, const CVec& x0, const SolveOptions& opts) {
    if (!(opts.tol > 0.0))
        throw DomainError("solve: tol must be > 0");
    if (opts.max_iter < 1)
        throw DomainError("solve: max_iter must be >= 1");
    const GaugeParams gp(f.degree(), opts.p);

    SolveReport report;
    CVec x = x0;
    CVec w = correction(f, x0);  // throws on duplicate components in x0
    double e = e_semilocal_from(w, x, opts.p);
    report.certificate = certificate_from_correction(w, x, gp);
    if (opts.require_certificate && !report.certificate.passed)
        throw NotCertifiableError("solve: initial conditions fail and a certificate was required");

    IterationTrace& trace = report.trace;
    trace.iterates.push_back(x);
    trace.corrections.push_back(w);
    trace.e_values.push_back(e);

    bool converged = false;
    for (int k = 0;; ++k) {
        // stopping test at x^k
        bool bound_defined = false;
        if (e < gp.inv_b()) {
            const double beta = beta_semi(e, gp);
            if (beta < 1.0) {
                bound_defined = true;
                BoundVec bv{BoundKind::a_post_1, k, abs_vec(w)};
                for (double& v : bv.values) v /= 1.0 - beta;
                const double bound_norm = inf_norm(bv.values);
                trace.bound_history.push_back(std::move(bv));
                if (bound_norm <= opts.tol) {
                    converged = true;
                    report.iterations = k;
                    break;
                }
            }
        }
        if (!bound_defined && inf_norm(abs_vec(w)) <= opts.tol) {
            // uncertified fallback: the raw correction is already below tol
            converged = true;
            report.iterations = k;
            break;
        }
        if (k == opts.max_iter) {
            report.status = SolveStatus::max_iter_reached;
            report.iterations = k;
            break;
        }

        CVec xn(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) xn[i] = x[i] - w[i];
        CVec wn;
        try {
            wn = opts.mode == IterationMode::one_point ? correction(f, xn)
                                                       : two_point_correction(x, xn);
        } catch (const Error&) {
            // lost distinct components (or degenerate two-point geometry);
            // possible only on the uncertified path
            report.status = SolveStatus::degenerate;
            report.iterations = k;
            break;
        }
        const double en = e_semilocal_from(wn, xn, opts.p);
        trace.iterates.push_back(xn);
        trace.corrections.push_back(wn);
        trace.e_values.push_back(en);
        x = std::move(xn);
        w = std::move(wn);
        e = en;
    }

    report.roots = x;
    if (converged) {
        if (e < gp.inv_b() && phi_semi(e, gp) < 1.0)
            report.disks = inclusion_disks_from_correction(w, x, gp);
        report.status = report.certificate.passed && report.disks
                            ? SolveStatus::certified_converged
                            : SolveStatus::converged_uncertified;
    }
    if (opts.trace == TraceRetention::tail) trim_to_tail(trace);
    return report;
}

bool verify_trace(const IterationTrace& trace, const RootVector& roots,
                  const Certificate& cert) {
    const GaugeParams gp(cert.n, cert.p);
    double scale = 0.0;
    for (const Complex& r : roots) scale = std::max(scale, std::abs(r));
    const double slack = 1e-13 * (1.0 + scale);

    std::vector<RVec> err(trace.iterates.size());
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
        RVec e(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i)
            e[i] = std::abs(trace.iterates[k][i] - roots[i]);
        err[k] = std::move(e);
    }

    for (const BoundVec& bv : trace.bound_history) {
        long idx = bv.k - trace.first_step;
        if (bv.kind == BoundKind::a_post_2) idx += 1;
        else if (bv.kind != BoundKind::a_post_1 && bv.kind != BoundKind::a_priori)
            continue;  // scalar step-decay coefficients are checked elsewhere
        if (idx < 0 || idx >= static_cast<long>(err.size())) continue;
        const RVec& e = err[static_cast<std::size_t>(idx)];
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > bv.values[i] + slack) return false;
    }

    if (cert.passed) {
        constexpr double e_slack = 1e-13;
        for (std::size_t k = 0; k + 1 < trace.e_values.size(); ++k) {
            const double ek = trace.e_values[k];
            if (!(ek < gp.inv_b())) return false;
            if (trace.e_values[k + 1] > varphi_semi(ek, gp) + e_slack) return false;
        }
    }
    return true;
}

}  // namespace wdk
