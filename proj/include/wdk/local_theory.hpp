#pragma once

#include "wdk/gauge.hpp"
#include "wdk/polynomial.hpp"

namespace wdk {

enum class LocalTheorem { local1, local1_h, local2, local3 };

/// Outcome of validating one of the local convergence theorems against a
/// known root-vector: the initial condition versus its threshold, the decay
/// factors, and a per-iteration record of whether the theorem's error
/// estimates held (checked with absolute slack 1e-13 * (1 + max |root|)).
struct LocalCheckReport {
    LocalTheorem theorem;
    double condition_value = 0.0;
    double threshold = 0.0;
    bool satisfied = false;
    bool quadratic = false;
    double lambda = 0.0;
    std::optional<double> theta;
    std::optional<bool> han_ok;        // informational, local2 only
    std::optional<bool> wang_zhao_ok;  // informational, local2 only
    std::vector<bool> per_step_ok;
};

/// E(x) = ||(x - roots)/d(roots)||_p: displacement relative to the root
/// separations.
double e_local1(const CVec& x, const RootVector& roots, const PExponent& p);

/// E(x) = ||(x - roots)/d(x)||_p: displacement relative to the approximation
/// separations.
double e_local2(const CVec& x, const RootVector& roots, const PExponent& p);

/// First local theorem: E1(x0) < R(n,p) (strict), or E1(x0) <= R(n,p,h) when a
/// contraction target h in (0,1) is supplied. Runs `steps` iterations and
/// verifies both quadratic error estimates with factor lambda = phi_local1(E1)
/// (or h).
LocalCheckReport check_local1(const Polynomial& f, const RootVector& roots,
                              const CVec& x0, const PExponent& p,
                              std::optional<double> h = std::nullopt, int steps = 20);

/// ||x0 - roots||_p threshold R(n,p,h) * sep(f).
double dochev_radius(const RootVector& roots, const PExponent& p, double h);

/// ||x0 - roots||_p threshold R(n,p) * sep(f).
double km_threshold(const RootVector& roots, const PExponent& p);

/// E1 threshold R(n,p,h) / (2 gamma(f)).
double yakoubsohn_threshold(const Polynomial& f, const RootVector& roots,
                            const PExponent& p, double h);

/// Second local theorem: h(E2(x0)) <= 2, estimates with theta lambda^(2^k);
/// quadratic when the inequality is strict. Also reports the Han and
/// Wang-Zhao sufficient thresholds on E2 as informational flags.
LocalCheckReport check_local2(const Polynomial& f, const RootVector& roots,
                              const CVec& x0, const PExponent& p, int steps = 20);

/// Third local theorem: E2(x0) <= c(sigma) for a feasible sigma, estimates
/// with factor sigma^(2^k). For the quadratic c the sup-norm bound
/// ||x^k - roots||_inf <= sigma^(2^k) max_i d_i(x0) is verified as well.
/// Throws PreconditionError when sigma is infeasible for the chosen c.
LocalCheckReport check_local3(const Polynomial& f, const RootVector& roots,
                              const CVec& x0, const PExponent& p, CFunction c_tag,
                              double sigma, int steps = 20);

}  // namespace wdk
