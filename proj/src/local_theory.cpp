#include "wdk/local_theory.hpp"

#include <cmath>
#include <limits>

#include "wdk/weierstrass.hpp"

namespace wdk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double root_scale_slack(const RootVector& roots) {
    double scale = 0.0;
    for (const Complex& r : roots) scale = std::max(scale, std::abs(r));
    return 1e-13 * (1.0 + scale);
}

RVec error_vec(const CVec& x, const RootVector& roots) {
    RVec e(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) e[i] = std::abs(x[i] - roots[i]);
    return e;
}

bool dominated(const RVec& lhs, const RVec& rhs, double slack) {
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] > rhs[i] + slack) return false;
    return true;
}

// Runs `steps` Weierstrass iterations from x0 and checks, per step,
//   ||x^(k+1) - roots|| <= factor1(k) ||x^k - roots||       component-wise
//   ||x^k - roots||     <= factor0(k) ||x^0 - roots||       component-wise
// plus an optional extra per-step predicate. Iteration failures (lost
// distinctness) mark the remaining steps as failed.
template <typename Factor1, typename Factor0, typename Extra>
std::vector<bool> run_estimate_checks(const Polynomial& f, const RootVector& roots,
                                      const CVec& x0, int steps, Factor1 factor1,
                                      Factor0 factor0, Extra extra) {
    std::vector<bool> ok;
    ok.reserve(static_cast<std::size_t>(steps));
    const double slack = root_scale_slack(roots);
    const RVec err0 = error_vec(x0, roots);
    CVec x = x0;
    RVec err_prev = err0;
    for (int k = 0; k < steps; ++k) {
        CVec xn;
        try {
            xn = step(f, x).output;
            min_pairwise_distances(xn);
        } catch (const Error&) {
            for (int r = k; r < steps; ++r) ok.push_back(false);
            return ok;
        }
        const RVec err_next = error_vec(xn, roots);

        RVec rhs1 = err_prev;
        for (double& v : rhs1) v *= factor1(k);
        RVec rhs0 = err0;
        for (double& v : rhs0) v *= factor0(k + 1);

        bool step_ok = dominated(err_next, rhs1, slack) && dominated(err_next, rhs0, slack);
        if (step_ok && !extra(k, xn, err_next, slack)) step_ok = false;
        ok.push_back(step_ok);

        x = std::move(xn);
        err_prev = err_next;
    }
    return ok;
}

auto no_extra = [](int, const CVec&, const RVec&, double) { return true; };

}  // namespace

double e_local1(const CVec& x, const RootVector& roots, const PExponent& p) {
    if (x.size() != roots.size())
        throw DomainError("e_local1: length mismatch");
    CVec diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - roots[i];
    return p_norm(vec_quotient(diff, min_pairwise_distances(roots)), p);
}

double e_local2(const CVec& x, const RootVector& roots, const PExponent& p) {
    if (x.size() != roots.size())
        throw DomainError("e_local2: length mismatch");
    CVec diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - roots[i];
    return p_norm(vec_quotient(diff, min_pairwise_distances(x)), p);
}

LocalCheckReport check_local1(const Polynomial& f, const RootVector& roots,
                              const CVec& x0, const PExponent& p,
                              std::optional<double> h, int steps) {
    const GaugeParams gp(f.degree(), p);
    LocalCheckReport report;
    report.theorem = h ? LocalTheorem::local1_h : LocalTheorem::local1;
    report.condition_value = e_local1(x0, roots, p);
    if (h) {
        report.threshold = radius_local1_h(gp, *h);
        report.satisfied = report.condition_value <= report.threshold;
        report.lambda = *h;
    } else {
        report.threshold = radius_local1(gp).value;
        report.satisfied = report.condition_value < report.threshold;  // strict
        report.lambda = report.condition_value < gp.inv_b()
                            ? phi_local1(report.condition_value, gp)
                            : kInf;
    }
    report.quadratic = report.satisfied;
    const double lambda = report.lambda;
    report.per_step_ok = run_estimate_checks(
        f, roots, x0, steps,
        [&](int k) { return std::pow(lambda, std::exp2(static_cast<double>(k))); },
        [&](int k) { return std::pow(lambda, std::exp2(static_cast<double>(k)) - 1.0); },
        no_extra);
    return report;
}

double dochev_radius(const RootVector& roots, const PExponent& p, double h) {
    const GaugeParams gp(static_cast<int>(roots.size()), p);
    return radius_local1_h(gp, h) * separation(roots);
}

double km_threshold(const RootVector& roots, const PExponent& p) {
    const GaugeParams gp(static_cast<int>(roots.size()), p);
    return radius_local1(gp).value * separation(roots);
}

double yakoubsohn_threshold(const Polynomial& f, const RootVector& roots,
                            const PExponent& p, double h) {
    const GaugeParams gp(f.degree(), p);
    return radius_local1_h(gp, h) / (2.0 * smale_gamma(f, roots));
}

LocalCheckReport check_local2(const Polynomial& f, const RootVector& roots,
                              const CVec& x0, const PExponent& p, int steps) {
    const GaugeParams gp(f.degree(), p);
    LocalCheckReport report;
    report.theorem = LocalTheorem::local2;
    const double e0 = e_local2(x0, roots, p);
    report.condition_value = h_local2(e0, gp);
    report.threshold = 2.0;
    report.satisfied = report.condition_value <= 2.0;
    report.quadratic = report.condition_value < 2.0;
    const double psi = psi_local2(e0, gp);
    report.lambda = psi > 0.0 ? beta_local2(e0, gp) / psi : kInf;
    report.theta = psi;
    report.han_ok = e0 <= lower_bound_local2(gp);
    {
        const double u = std::pow(2.0, 1.0 / static_cast<double>(gp.n - 1)) - 1.0;
        const double wz = u / (2.0 * gp.b() * u + 1.0 / gp.c());
        report.wang_zhao_ok = e0 <= wz;
    }
    const double lambda = report.lambda;
    const double theta = *report.theta;
    report.per_step_ok = run_estimate_checks(
        f, roots, x0, steps,
        [&](int k) { return theta * std::pow(lambda, std::exp2(static_cast<double>(k))); },
        [&](int k) {
            return std::pow(theta, static_cast<double>(k)) *
                   std::pow(lambda, std::exp2(static_cast<double>(k)) - 1.0);
        },
        no_extra);
    return report;
}

LocalCheckReport check_local3(const Polynomial& f, const RootVector& roots,
                              const CVec& x0, const PExponent& p, CFunction c_tag,
                              double sigma, int steps) {
    const GaugeParams gp(f.degree(), p);
    if (!sigma_feasible(sigma, gp, c_tag))
        throw PreconditionError("check_local3: sigma is infeasible for the chosen c");
    LocalCheckReport report;
    report.theorem = LocalTheorem::local3;
    report.condition_value = e_local2(x0, roots, p);
    report.threshold = c_function(c_tag, sigma, gp);
    report.satisfied = report.condition_value <= report.threshold;
    report.quadratic = report.satisfied;
    report.lambda = sigma;

    double max_d0 = 0.0;
    for (double d : min_pairwise_distances(x0)) max_d0 = std::max(max_d0, d);
    const bool check_sup = c_tag == CFunction::quadratic;
    report.per_step_ok = run_estimate_checks(
        f, roots, x0, steps,
        [&](int k) { return std::pow(sigma, std::exp2(static_cast<double>(k))); },
        [&](int k) { return std::pow(sigma, std::exp2(static_cast<double>(k)) - 1.0); },
        [&](int k, const CVec&, const RVec& err, double slack) {
            if (!check_sup) return true;
            const double cap =
                std::pow(sigma, std::exp2(static_cast<double>(k + 1))) * max_d0;
            for (double e : err)
                if (e > cap + slack) return false;
            return true;
        });
    return report;
}

}  // namespace wdk
