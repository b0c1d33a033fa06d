#include "wdk/weierstrass.hpp"

#include <cmath>

namespace wdk {

namespace {

void check_solver_polynomial(const Polynomial& f, const CVec& x) {
    if (f.degree() < 2)
        throw DomainError("the iteration needs a polynomial of degree >= 2");
    if (static_cast<std::size_t>(f.degree()) != x.size())
        throw DomainError("approximation vector length must equal the degree");
}

}  // namespace

CVec correction(const Polynomial& f, const CVec& x) {
    check_solver_polynomial(f, x);
    min_pairwise_distances(x);  // throws on duplicates
    const std::size_t n = x.size();
    const Complex a0 = f.leading();
    CVec w(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex denom = a0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= x[i] - x[j];
        }
        w[i] = f.eval(x[i]) / denom;
    }
    return w;
}

WeierstrassStep step(const Polynomial& f, const CVec& x) {
    WeierstrassStep s;
    s.input = x;
    s.correction = correction(f, x);
    s.output.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s.output[i] = x[i] - s.correction[i];
    return s;
}

WeierstrassStep step(const Polynomial& f, const CVec& x, const PExponent& p) {
    WeierstrassStep s = step(f, x);
    s.e_value = e_semilocal_from(s.correction, x, p);
    return s;
}

CVec two_point_correction(const CVec& x_prev, const CVec& x_curr) {
    if (x_prev.size() != x_curr.size())
        throw DomainError("two_point_correction: iterate length mismatch");
    min_pairwise_distances(x_curr);
    const std::size_t n = x_curr.size();
    CVec w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex factor = x_curr[i] - x_prev[i];
        if (factor == Complex(0.0, 0.0)) {
            // zero correction at component i carries over exactly
            w[i] = Complex(0.0, 0.0);
            continue;
        }
        Complex sum(0.0, 0.0);
        Complex prod(1.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Complex mixed = x_curr[i] - x_prev[j];
            if (mixed == Complex(0.0, 0.0))
                throw DegenerateGeometryError("two_point_correction: vanishing mixed difference");
            sum += (x_prev[j] - x_curr[j]) / mixed;
            prod *= mixed / (x_curr[i] - x_curr[j]);
        }
        w[i] = factor * sum * prod;
    }
    return w;
}

CVec two_point_step(const Polynomial& f, const CVec& x_prev, const CVec& x_curr) {
    check_solver_polynomial(f, x_curr);
    const CVec w = two_point_correction(x_prev, x_curr);
    CVec next(x_curr.size());
    for (std::size_t i = 0; i < x_curr.size(); ++i) next[i] = x_curr[i] - w[i];
    return next;
}

double e_semilocal(const Polynomial& f, const CVec& x, const PExponent& p) {
    return e_semilocal_from(correction(f, x), x, p);
}

double e_semilocal_from(const CVec& w, const CVec& x, const PExponent& p) {
    return p_norm(vec_quotient(w, min_pairwise_distances(x)), p);
}

Complex identity_residual_local1(const Polynomial& f, const RootVector& roots,
                                 const CVec& x, int i) {
    check_solver_polynomial(f, x);
    if (roots.size() != x.size())
        throw DomainError("identity_residual_local1: root count mismatch");
    if (i < 0 || static_cast<std::size_t>(i) >= x.size())
        throw DomainError("identity_residual_local1: index out of range");
    const std::size_t n = x.size();
    const std::size_t ii = static_cast<std::size_t>(i);

    const WeierstrassStep s = step(f, x);
    const Complex lhs = s.output[ii] - roots[ii];

    Complex prod(1.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == ii) continue;
        const Complex u_j = (x[j] - roots[j]) / (x[ii] - x[j]);
        prod *= Complex(1.0, 0.0) + u_j;
    }
    const Complex rhs = (Complex(1.0, 0.0) - prod) * (x[ii] - roots[ii]);
    return lhs - rhs;
}

}  // namespace wdk
