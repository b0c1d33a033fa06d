#pragma once

#include "wdk/certify.hpp"

namespace wdk {

enum class IterationMode { one_point, two_point };
enum class TraceRetention { full, tail };

struct SolveOptions {
    PExponent p = PExponent::inf();
    double tol = 1e-12;          // stopping tolerance on the inf-norm of the
                                 // first a posteriori bound
    int max_iter = 100;
    IterationMode mode = IterationMode::one_point;
    bool require_certificate = false;  // refuse to iterate when the check fails
    TraceRetention trace = TraceRetention::full;
};

/// Per-step record of the iteration: iterates[k] = x^k, corrections[k] = W(x^k),
/// e_values[k] = E(x^k), all aligned. With tail retention only the last two
/// steps are kept and first_step says which index iterates[0] corresponds to.
struct IterationTrace {
    std::vector<CVec> iterates;
    std::vector<CVec> corrections;
    std::vector<double> e_values;
    std::vector<BoundVec> bound_history;
    int first_step = 0;
};

enum class SolveStatus { certified_converged, converged_uncertified, max_iter_reached, degenerate };

struct SolveReport {
    SolveStatus status;
    Certificate certificate;
    CVec roots;
    std::optional<InclusionDiskSet> disks;
    IterationTrace trace;
    int iterations = 0;
};

/// n equally spaced points on a circle around the coefficient centroid
/// -a1/(n a0), radius 1 + max_k |a_k/a0|^(1/k), rotated by pi/(2n) to break
/// symmetry; pairwise distinct by construction.
CVec initial_guess(const Polynomial& f);

/// Runs the guarded Weierstrass iteration from x0. The semilocal certificate
/// is evaluated at x0; each step records the iterate, correction, E-value and
/// (when defined) the first a posteriori bound, which also drives stopping.
/// With two_point mode the polynomial is evaluated only once, at x0.
SolveReport solve(const Polynomial& f, const CVec& x0, const SolveOptions& opts);

/// Test oracle: checks that every recorded bound dominates the true error
/// (component-wise, with absolute slack 1e-13 * (1 + max |root|)) and that the
/// recorded E-values decay under varphi_semi when the certificate passed.
bool verify_trace(const IterationTrace& trace, const RootVector& roots,
                  const Certificate& cert);

}  // namespace wdk
