#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "wdk/errors.hpp"

namespace wdk {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;   // complex n-vector
using RVec = std::vector<double>;    // nonnegative real n-vector

/// Holder exponent p together with its cached conjugate q (1/p + 1/q = 1).
/// Conventions: q = inf for p = 1 and q = 1 for p = inf.
class PExponent {
  public:
    static PExponent one() { return PExponent(1.0); }
    static PExponent two() { return PExponent(2.0); }
    static PExponent inf();

    /// Any finite p >= 1. Throws DomainError for p < 1 or non-finite p.
    static PExponent finite(double p);

    /// Accepts "inf" (any case, or "infinity") or a decimal >= 1.
    static PExponent parse(std::string_view text);

    bool is_inf() const { return inv_p_ == 0.0; }
    double p() const { return p_; }        // +inf when p = inf
    double q() const { return q_; }        // +inf when q = inf
    double inv_p() const { return inv_p_; }  // 1/p, with 1/inf = 0
    double inv_q() const { return inv_q_; }  // 1/q, with 1/inf = 0

    friend bool operator==(const PExponent& a, const PExponent& b) {
        return a.p_ == b.p_ || (a.is_inf() && b.is_inf());
    }

  private:
    explicit PExponent(double p);
    double p_;
    double q_;
    double inv_p_;
    double inv_q_;
};

/// Conjugate exponent of p under the conventions above (inf passed/returned as
/// std::numeric_limits<double>::infinity()). Throws DomainError for p < 1.
double conjugate_exponent(double p);

/// (sum |v_i|^p)^(1/p), or max_i |v_i| for p = inf.
double p_norm(const RVec& v, const PExponent& p);
double p_norm(const CVec& v, const PExponent& p);

/// Component-wise modulus (|x_1|, ..., |x_n|).
RVec abs_vec(const CVec& x);

/// (|x_1|/y_1, ..., |x_n|/y_n); every y_i must be strictly positive.
RVec vec_quotient(const CVec& x, const RVec& y);

/// d_i(x) = min_{j != i} |x_i - x_j|. Throws DistinctnessError on duplicates.
RVec min_pairwise_distances(const CVec& x);

/// Coordinate-wise partial order: a_i <= b_i for every i.
bool componentwise_leq(const RVec& a, const RVec& b);

/// Power mean ((1/n) sum |x_i|^r)^(1/r) with the limit values at r = 0 (geometric
/// mean) and r = +/-inf (max/min). For r <= 0 all components must be nonzero.
double power_mean(const RVec& x, double r);
double power_mean(const CVec& x, double r);

}  // namespace wdk
