#include "wdk/gauge.hpp"

#include <cmath>

namespace wdk {

namespace {

constexpr double kBracketEps = 1e-15;
constexpr double kBisectTol = 1e-14;
constexpr int kBisectMaxIter = 200;

// Bisection for a continuous increasing function on (lo, hi) with
// fn(lo) < target < fn(hi). Runs to kBisectTol on t or until the bracket
// stops shrinking, so results are bit-stable across runs.
template <typename Fn>
double bisect_increasing(Fn fn, double lo, double hi, double target) {
    for (int i = 0; i < kBisectMaxIter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (fn(mid) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= kBisectTol) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

GaugeParams::GaugeParams(int degree, PExponent exponent) : n(degree), p(exponent) {
    if (degree < 2)
        throw DomainError("gauge parameters require degree n >= 2");
    b_ = std::pow(2.0, p.inv_q());
    inv_b_ = std::pow(2.0, -p.inv_q());
    a_ = std::pow(static_cast<double>(n - 1), p.inv_q());
    c_ = std::pow(static_cast<double>(n - 1), p.inv_p());
}

double geom_sum(int nterms, double t) {
    if (nterms < 0)
        throw DomainError("geom_sum: nterms must be >= 0");
    double sum = 0.0;
    double pow_t = 1.0;
    for (int k = 0; k < nterms; ++k) {
        sum += pow_t;
        pow_t *= t;
    }
    return sum;
}

static void require_in_b_domain(double t, const GaugeParams& gp, const char* what) {
    if (!(t >= 0.0) || !(t < gp.inv_b()))
        throw DomainError(std::string(what) + ": t must lie in [0, 2^(-1/q))");
}

double phi_local1(double t, const GaugeParams& gp) {
    require_in_b_domain(t, gp, "phi_local1");
    const double base = 1.0 + t / (gp.c() * (1.0 - gp.b() * t));
    return std::pow(base, gp.n - 1) - 1.0;
}

double varphi_local1(double t, const GaugeParams& gp) {
    return t * phi_local1(t, gp);
}

Radius radius_local1(const GaugeParams& gp) {
    const double u = std::pow(2.0, 1.0 / static_cast<double>(gp.n - 1)) - 1.0;
    const double value = u / (gp.b() * u + 1.0 / gp.c());
    return Radius{value, RadiusKind::local1, gp, std::nullopt};
}

double radius_local1_h(const GaugeParams& gp, double h) {
    if (!(h > 0.0) || !(h < 1.0))
        throw DomainError("radius_local1_h: h must lie in (0,1)");
    const double u = std::pow(1.0 + h, 1.0 / static_cast<double>(gp.n - 1)) - 1.0;
    return u / (gp.b() * u + 1.0 / gp.c());
}

double h_local2(double t, const GaugeParams& gp) {
    if (!(t >= 0.0))
        throw DomainError("h_local2: t must be >= 0");
    return (1.0 + gp.b() * t) * std::pow(1.0 + t / gp.c(), gp.n - 1);
}

double psi_local2(double t, const GaugeParams& gp) {
    if (!(t >= 0.0))
        throw DomainError("psi_local2: t must be >= 0");
    return 1.0 - gp.b() * t * std::pow(1.0 + t / gp.c(), gp.n - 1);
}

double beta_local2(double t, const GaugeParams& gp) {
    if (!(t >= 0.0))
        throw DomainError("beta_local2: t must be >= 0");
    return std::pow(1.0 + t / gp.c(), gp.n - 1) - 1.0;
}

double phi_local2(double t, const GaugeParams& gp) {
    const double psi = psi_local2(t, gp);
    if (!(psi > 0.0))
        throw DomainError("phi_local2: psi(t) must be positive");
    return beta_local2(t, gp) / psi;
}

Radius radius_local2(const GaugeParams& gp) {
    // h is increasing with h(0) = 1 and h(2^(-1/q)) > 2, so the bracket is valid.
    const double hi = gp.inv_b() - kBracketEps;
    const double value =
        bisect_increasing([&](double t) { return h_local2(t, gp); }, 0.0, hi, 2.0);
    return Radius{value, RadiusKind::local2, gp, std::nullopt};
}

double lower_bound_local2(const GaugeParams& gp) {
    const double n = static_cast<double>(gp.n);
    return n * (std::pow(2.0, 1.0 / n) - 1.0) / (gp.a() + gp.b());
}

double c_quadratic(double t, const GaugeParams& gp) {
    if (!(t >= 0.0) || !(t < 1.0))
        throw DomainError("c_quadratic: t must lie in [0,1)");
    return (2.0 * t - t * t) / (2.0 * gp.a());
}

double c_rational(double t, const GaugeParams& gp) {
    if (!(t >= 0.0) || !(t < 1.0))
        throw DomainError("c_rational: t must lie in [0,1)");
    return 2.0 * t / (gp.a() * (t + 2.0));
}

double c_function(CFunction which, double t, const GaugeParams& gp) {
    return which == CFunction::quadratic ? c_quadratic(t, gp) : c_rational(t, gp);
}

bool sigma_feasible(double sigma, const GaugeParams& gp, CFunction which) {
    if (!(sigma > 0.0) || !(sigma < 1.0))
        throw DomainError("sigma_feasible: sigma must lie in (0,1)");
    constexpr double step = 1e-4;
    const auto holds_at = [&](double t) {
        const double ct = c_function(which, t, gp);
        const double lhs = t * ct;
        const double rhs =
            c_function(which, t * t, gp) * (1.0 - gp.b() * (1.0 + t) * ct);
        return lhs <= rhs;
    };
    for (double t = 0.0; t < sigma; t += step) {
        if (!holds_at(t)) return false;
    }
    return holds_at(sigma);
}

static double semi_core(double t, const GaugeParams& gp, const char* what) {
    // common factor (1 + t/((n-1)^(1/p)(1 - 2^(1/q) t)))^(n-1) / (1 - t)
    require_in_b_domain(t, gp, what);
    if (!(t < 1.0))
        throw DomainError(std::string(what) + ": t must be < 1");
    const double base = 1.0 + t / (gp.c() * (1.0 - gp.b() * t));
    return std::pow(base, gp.n - 1) / (1.0 - t);
}

double phi_semi(double t, const GaugeParams& gp) {
    return gp.a() * t / (1.0 - gp.b() * t) * semi_core(t, gp, "phi_semi");
}

double beta_semi(double t, const GaugeParams& gp) {
    return gp.a() * t * semi_core(t, gp, "beta_semi");
}

double psi_semi(double t, const GaugeParams& gp) {
    require_in_b_domain(t, gp, "psi_semi");
    return 1.0 - gp.b() * t;
}

double varphi_semi(double t, const GaugeParams& gp) {
    return t * phi_semi(t, gp);
}

Radius radius_semi(const GaugeParams& gp) {
    // phi_semi is increasing from 0 and blows up at 2^(-1/q).
    const double hi = gp.inv_b() - kBracketEps;
    const double value =
        bisect_increasing([&](double t) { return phi_semi(t, gp); }, 0.0, hi, 1.0);
    return Radius{value, RadiusKind::semilocal, gp, std::nullopt};
}

double corollary813_threshold(const GaugeParams& gp) {
    return 1.0 / (2.0 * gp.a() + 2.0);
}

}  // namespace wdk
