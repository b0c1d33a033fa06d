#pragma once

#include <utility>

#include "wdk/gauge.hpp"
#include "wdk/weierstrass.hpp"

namespace wdk {

/// Result of the semilocal initial-condition check at a starting vector x0.
/// passed means the convergence guarantee holds (E(x0) < 2^(-1/q) and
/// lambda = phi_semi(E(x0)) <= 1); quadratic additionally needs lambda < 1.
/// rho bounds ||x^k - x0|| component-wise for the whole iteration: every
/// iterate stays in the closed ball around x0 with this cone radius.
struct Certificate {
    double e0 = 0.0;     // E(x0)
    double lambda = 0.0; // phi_semi(E(x0)); +inf when E(x0) is out of domain
    double theta = 0.0;  // psi_semi(E(x0))
    RVec rho;            // |W_i(x0)| / (1 - beta_semi(E(x0))); +inf components when beta >= 1
    bool passed = false;
    bool quadratic = false;
    int n = 0;
    PExponent p = PExponent::inf();
};

enum class BoundKind { a_priori, a_post_1, a_post_2, step_decay_1, step_decay_2 };

/// A component-wise error bound attached to iteration index k.
struct BoundVec {
    BoundKind kind;
    int k;
    RVec values;
};

struct InclusionDisk {
    Complex center;
    double radius;
};

/// n pairwise disjoint closed disks, each containing exactly one zero.
struct InclusionDiskSet {
    std::vector<InclusionDisk> disks;
};

/// Evaluates the semilocal conditions at x0 and assembles the certificate.
Certificate check_semilocal(const Polynomial& f, const CVec& x0, const PExponent& p);

/// Internal entry point reusing a precomputed correction W(x0).
Certificate certificate_from_correction(const CVec& w0, const CVec& x0,
                                        const GaugeParams& gp);

/// ||x^k - roots|| <= theta^k lambda^(2^k - 1) / (1 - theta lambda^(2^k)) * ||x^1 - x^0||,
/// computable from step-0 data alone. first_step = abs_vec(x1 - x0).
BoundVec a_priori_bound(const Certificate& cert, const RVec& first_step, int k);

/// ||x^k - roots|| <= ||x^(k+1) - x^k|| / (1 - beta_semi(E(x^k))).
BoundVec a_posteriori_1(const Polynomial& f, const CVec& xk, const CVec& xk1,
                        const PExponent& p, int k = 0);

/// ||x^(k+1) - roots|| <= theta_k lambda_k / (1 - theta_k lambda_k^2) * ||x^(k+1) - x^k||
/// with lambda_k = phi_semi(E(x^k)), theta_k = psi_semi(E(x^k)).
BoundVec a_posteriori_2(const Polynomial& f, const CVec& xk, const CVec& xk1,
                        const PExponent& p, int k = 0);

/// The scalar decay coefficients (theta lambda^(2^k), theta^k lambda^(2^k - 1))
/// bounding ||x^(k+2) - x^(k+1)|| against ||x^(k+1) - x^k|| and
/// ||x^(k+1) - x^k|| against ||x^1 - x^0||.
std::pair<double, double> step_decay_bounds(const Certificate& cert, int k);

/// Disks centered at the components of xk with radii |W_i(xk)|/(1 - beta_semi(E)).
/// Requires phi_semi(E(xk)) < 1 strictly (throws NotCertifiableError otherwise);
/// the returned disks are verified pairwise disjoint and each contains exactly
/// one zero of f.
InclusionDiskSet inclusion_disks(const Polynomial& f, const CVec& xk, const PExponent& p);

/// Same from a precomputed correction.
InclusionDiskSet inclusion_disks_from_correction(const CVec& w, const CVec& xk,
                                                 const GaugeParams& gp);

}  // namespace wdk
