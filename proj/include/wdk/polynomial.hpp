#pragma once

#include "wdk/core_math.hpp"

namespace wdk {

/// A root-vector: the zeros of a polynomial listed in a fixed order, so that
/// f(z) = a0 * prod (z - roots[i]).
using RootVector = CVec;

/// Dense complex polynomial, coefficients stored highest degree first, so the
/// leading coefficient sits at index 0. The zero polynomial is represented by
/// the single coefficient 0 (is_zero() == true); any other representation has
/// a nonzero leading coefficient.
class Polynomial {
  public:
    explicit Polynomial(CVec coefficients);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const CVec& coefficients() const { return coefficients_; }
    Complex leading() const { return coefficients_.front(); }
    bool is_zero() const;

    /// Horner evaluation at z.
    Complex eval(Complex z) const;

    /// k-th formal derivative; k = 0 returns *this, k > degree() the zero
    /// polynomial.
    Polynomial derivative(int k = 1) const;

    /// Same polynomial scaled to leading coefficient 1.
    Polynomial monic() const;

  private:
    CVec coefficients_;
};

/// Expands a0 * prod (z - roots[i]) into coefficient form. The roots need not
/// be distinct here; a0 must be nonzero.
Polynomial from_roots(const RootVector& roots, Complex a0 = Complex(1.0, 0.0));

/// Residual of the Lagrange-interpolation identity
///   f(z) = sum_i W_i(x) prod_{j!=i}(z - x_j) + prod_j(z - x_j)
/// for monic f and pairwise distinct x; theoretically zero. A non-monic f is
/// normalized internally (the correction W is scale-invariant).
Complex lagrange_residual(const Polynomial& f, const CVec& x, Complex z);

/// Minimum pairwise distance between the zeros.
double separation(const RootVector& roots);

/// max_{k>=2} |f^(k)(z) / (k! f'(z))|^(1/(k-1)); throws CriticalPointError
/// when f'(z) = 0.
double smale_gamma_at(const Polynomial& f, Complex z);

/// max over the roots of smale_gamma_at; every root must be simple.
double smale_gamma(const Polynomial& f, const RootVector& roots);

}  // namespace wdk
