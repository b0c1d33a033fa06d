#pragma once

#include <optional>

#include "wdk/polynomial.hpp"

namespace wdk {

/// One Weierstrass update: output = input - correction, component-wise.
struct WeierstrassStep {
    CVec input;
    CVec correction;
    CVec output;
    std::optional<double> e_value;  // E(input), when a norm exponent was given
};

/// Weierstrass correction W_i(x) = f(x_i) / (a0 prod_{j!=i} (x_i - x_j)).
/// x must have pairwise distinct components. The denominator product is
/// accumulated in ascending j so results are reproducible bit-for-bit.
CVec correction(const Polynomial& f, const CVec& x);

/// One iteration step T(x) = x - W(x). The output is not required to have
/// distinct components; callers that iterate must check.
WeierstrassStep step(const Polynomial& f, const CVec& x);

/// Same, also recording e_value = e_semilocal(f, x, p).
WeierstrassStep step(const Polynomial& f, const CVec& x, const PExponent& p);

/// W(x_curr) computed from the two last iterates alone, without evaluating f.
/// Requires x_curr = x_prev - W(x_prev) and nonvanishing mixed differences
/// x_curr_i - x_prev_j (j != i); throws DegenerateGeometryError otherwise.
CVec two_point_correction(const CVec& x_prev, const CVec& x_curr);

/// The next iterate after x_curr in two-point form; equals
/// step(f, x_curr).output up to rounding but uses no polynomial evaluations.
CVec two_point_step(const Polynomial& f, const CVec& x_prev, const CVec& x_curr);

/// E(x) = || W(x)/d(x) ||_p, the computable initial-condition functional of
/// the semilocal test.
double e_semilocal(const Polynomial& f, const CVec& x, const PExponent& p);

/// Same from a precomputed correction (avoids re-evaluating W).
double e_semilocal_from(const CVec& w, const CVec& x, const PExponent& p);

/// Residual of the local error identity
///   T_i(x) - roots_i = (1 - prod_{j!=i}(1 + u_j)) (x_i - roots_i),
///   u_j = (x_j - roots_j) / (x_i - x_j);
/// theoretically zero for any root-vector of f. i is a 0-based index.
Complex identity_residual_local1(const Polynomial& f, const RootVector& roots,
                                 const CVec& x, int i);

}  // namespace wdk
