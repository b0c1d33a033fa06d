#pragma once

#include <optional>

#include "wdk/core_math.hpp"

namespace wdk {

/// Degree n and Holder exponent p shared by every control function below,
/// with the recurring powers precomputed.
struct GaugeParams {
    GaugeParams(int degree, PExponent exponent);

    int n;
    PExponent p;

    double b() const { return b_; }          // 2^(1/q)
    double inv_b() const { return inv_b_; }  // 2^(-1/q)
    double a() const { return a_; }          // (n-1)^(1/q)
    double c() const { return c_; }          // (n-1)^(1/p)

  private:
    double b_, inv_b_, a_, c_;
};

enum class RadiusKind { local1, local1_h, local2, semilocal };

/// A convergence radius together with the family it solves for. The value
/// satisfies its defining equation (fixed point, h(R)=2 or phi(R)=1) to
/// bisection accuracy.
struct Radius {
    double value;
    RadiusKind kind;
    GaugeParams params;
    std::optional<double> h;
};

/// Partial geometric sum 1 + t + ... + t^(nterms-1); zero when nterms = 0.
double geom_sum(int nterms, double t);

// --- first local family ----------------------------------------------------

/// (1 + t / ((n-1)^(1/p) (1 - 2^(1/q) t)))^(n-1) - 1 on [0, 2^(-1/q)).
double phi_local1(double t, const GaugeParams& gp);

/// t * phi_local1(t); quasi-homogeneous of degree 2.
double varphi_local1(double t, const GaugeParams& gp);

/// Closed-form radius of quadratic convergence; phi_local1(R) = 1.
Radius radius_local1(const GaugeParams& gp);

/// Closed-form radius with contraction target h in (0,1); phi_local1(R) = h.
double radius_local1_h(const GaugeParams& gp, double h);

// --- second local family ---------------------------------------------------

/// h(t) = (1 + 2^(1/q) t)(1 + t/(n-1)^(1/p))^(n-1), increasing, h(0) = 1.
double h_local2(double t, const GaugeParams& gp);

/// psi(t) = 1 - 2^(1/q) t (1 + t/(n-1)^(1/p))^(n-1).
double psi_local2(double t, const GaugeParams& gp);

/// beta(t) = (1 + t/(n-1)^(1/p))^(n-1) - 1.
double beta_local2(double t, const GaugeParams& gp);

/// phi(t) = beta(t)/psi(t); requires psi(t) > 0.
double phi_local2(double t, const GaugeParams& gp);

/// Unique positive solution of h(t) = 2, found by bisection.
Radius radius_local2(const GaugeParams& gp);

/// Closed-form lower bound n(2^(1/n) - 1)/((n-1)^(1/q) + 2^(1/q)) for the
/// radius above; attained exactly when n = 2, p = 1.
double lower_bound_local2(const GaugeParams& gp);

// --- sigma-scaled family ---------------------------------------------------

enum class CFunction { quadratic, rational };

/// c(t) = (2t - t^2) / (2 (n-1)^(1/q)) on [0,1).
double c_quadratic(double t, const GaugeParams& gp);

/// c(t) = 2t / ((n-1)^(1/q) (t + 2)) on [0,1).
double c_rational(double t, const GaugeParams& gp);

double c_function(CFunction which, double t, const GaugeParams& gp);

/// Checks t c(t) <= c(t^2) (1 - 2^(1/q) (1+t) c(t)) on a dense grid of
/// [0, sigma] (step 1e-4, endpoint included). Requires 0 < sigma < 1.
bool sigma_feasible(double sigma, const GaugeParams& gp, CFunction which);

// --- semilocal family ------------------------------------------------------

/// phi(t) = (n-1)^(1/q) t / ((1-t)(1 - 2^(1/q) t)) *
///          (1 + t / ((n-1)^(1/p)(1 - 2^(1/q) t)))^(n-1)
double phi_semi(double t, const GaugeParams& gp);

/// beta(t) = phi(t) * psi(t).
double beta_semi(double t, const GaugeParams& gp);

/// psi(t) = 1 - 2^(1/q) t.
double psi_semi(double t, const GaugeParams& gp);

/// varphi(t) = t * phi(t); quasi-homogeneous of degree 2.
double varphi_semi(double t, const GaugeParams& gp);

/// Unique solution of phi_semi(t) = 1 in (0, 2^(-1/q)): the radius of the
/// quadratic-convergence domain of the semilocal test. Found by bisection.
Radius radius_semi(const GaugeParams& gp);

/// 1 / (2 (n-1)^(1/q) + 2): a simple sufficient threshold below radius_semi.
double corollary813_threshold(const GaugeParams& gp);

}  // namespace wdk
